use std::cmp::Ordering;

use num_traits::{One, Signed};

use super::modulus::{roots_in_circle_or_line, RootSet};
use crate::error::{Error, Result};
use crate::exactpoly::{is_irreducible, AlgebraicReal, IntPoly, SturmSequence};

/// Exact classification of the largest real root of an irreducible
/// polynomial and of its conjugates.
#[derive(Clone, Debug)]
pub struct Classification {
    pub minpoly: IntPoly,
    pub is_unit: bool,
    pub is_perron: bool,
    pub is_bi_perron: bool,
    pub is_salem: bool,
    pub is_reciprocal: bool,
    pub has_minus_inverse_conjugate: bool,
    pub conjugates_in_s1_union_r: bool,
    pub totally_real: bool,
    /// Largest real root, when there is a real root.
    pub leading_root: Option<AlgebraicReal>,
}

/// `t^n p(1/t) = ±p`.
pub fn is_reciprocal(p: &IntPoly) -> bool {
    p.reversed().eq_up_to_sign(p) && p.constant_term() != num_bigint::BigInt::from(0)
}

/// `t^n p(-1/t) = ±p`, i.e. `-1/z` is a root whenever `z` is.
pub fn has_minus_inverse_symmetry(p: &IntPoly) -> bool {
    let q = p.negated_variable().reversed();
    q.deg() == p.deg() && q.eq_up_to_sign(p)
}

/// Moduli of the non-leading conjugates relative to `lambda` and `1/lambda`.
struct ConjugateModuli {
    /// some conjugate other than `lambda` has modulus `>= lambda`
    reaches_lambda: bool,
    /// conjugates with modulus `< 1/lambda`
    below_inverse: usize,
    /// real conjugates equal to `1/lambda` / `-1/lambda`
    plus_inverse: bool,
    minus_inverse: bool,
    /// non-real conjugates with modulus exactly `1/lambda`
    nonreal_at_inverse: usize,
}

fn conjugate_moduli(p: &IntPoly, lambda: &AlgebraicReal) -> Result<ConjugateModuli> {
    let set = RootSet::new(p)?;
    let inv = lambda.recip()?;
    let neg_inv = inv.neg();
    let mut out = ConjugateModuli {
        reaches_lambda: false,
        below_inverse: 0,
        plus_inverse: false,
        minus_inverse: false,
        nonreal_at_inverse: 0,
    };
    for r in &set.real {
        if r.cmp_exact(lambda) == Ordering::Equal {
            continue;
        }
        if r.cmp_exact(&inv) == Ordering::Equal {
            out.plus_inverse = true;
            continue;
        }
        if r.cmp_exact(&neg_inv) == Ordering::Equal {
            out.minus_inverse = true;
            continue;
        }
        let a = r.abs();
        if a.cmp_exact(lambda) != Ordering::Less {
            out.reaches_lambda = true;
        }
        if a.cmp_exact(&inv) == Ordering::Less {
            out.below_inverse += 1;
        }
    }
    for d in &set.complex {
        if set.cmp_disk_modulus(d, lambda)? != Ordering::Less {
            out.reaches_lambda = true;
        }
        match set.cmp_disk_modulus(d, &inv)? {
            Ordering::Less => out.below_inverse += 1,
            Ordering::Equal => out.nonreal_at_inverse += 1,
            Ordering::Greater => {}
        }
    }
    Ok(out)
}

/// Classify the largest real root of the irreducible polynomial `p`.
pub fn classify(p: &IntPoly) -> Result<Classification> {
    if p.is_constant() {
        return Err(Error::InvalidArgument("polynomial must have degree at least one".into()));
    }
    let p = p.primitive_part();
    if !is_irreducible(&p) {
        return Err(Error::Reducible(p.to_text()));
    }
    let n = p.deg();
    let is_unit = p.is_monic() && p.constant_term().abs().is_one();
    let is_reciprocal = is_reciprocal(&p);
    let has_minus_inverse_conjugate = has_minus_inverse_symmetry(&p);
    let real_count = SturmSequence::new(&p).count_real();
    let totally_real = real_count == n;
    let conjugates_in_s1_union_r = roots_in_circle_or_line(&p)?;
    let leading_root = AlgebraicReal::largest_real_root(&p);

    let one = AlgebraicReal::from_integer(1);
    let mut is_perron = false;
    let mut is_bi_perron = false;
    if let Some(lambda) = leading_root.as_ref().filter(|l| l.cmp_exact(&one) == Ordering::Greater) {
        let m = conjugate_moduli(&p, lambda)?;
        is_perron = p.is_monic() && !m.reaches_lambda;
        let at_inverse = usize::from(m.plus_inverse) + usize::from(m.minus_inverse);
        is_bi_perron = is_unit
            && !m.reaches_lambda
            && m.below_inverse == 0
            && m.nonreal_at_inverse == 0
            && at_inverse <= 1;
    }
    let is_salem = is_reciprocal
        && is_bi_perron
        && n >= 4
        && real_count == 2
        && conjugates_in_s1_union_r;

    Ok(Classification {
        minpoly: p,
        is_unit,
        is_perron,
        is_bi_perron,
        is_salem,
        is_reciprocal,
        has_minus_inverse_conjugate,
        conjugates_in_s1_union_r,
        totally_real,
        leading_root,
    })
}

/// The largest real root, required to exceed one.
pub fn leading_root_above_one(p: &IntPoly) -> Result<AlgebraicReal> {
    let one = AlgebraicReal::from_integer(1);
    AlgebraicReal::largest_real_root(p)
        .filter(|l| l.cmp_exact(&one) == Ordering::Greater)
        .ok_or_else(|| Error::Precondition(format!("{} has no real root above 1", p.to_text())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly::poly;

    #[test]
    fn golden_ratio() {
        let c = classify(&poly(&[1, -1, -1])).unwrap();
        assert!(c.is_unit && c.is_perron && c.is_bi_perron);
        assert!(c.has_minus_inverse_conjugate && c.conjugates_in_s1_union_r && c.totally_real);
        assert!(!c.is_reciprocal && !c.is_salem);
    }

    #[test]
    fn kenyon_quartic() {
        let c = classify(&poly(&[1, -4, -2, 4, -1])).unwrap();
        assert!(c.is_bi_perron && c.totally_real);
        assert!(!c.is_reciprocal && !c.has_minus_inverse_conjugate);
    }

    #[test]
    fn plastic_number() {
        let c = classify(&poly(&[1, 0, -1, -1])).unwrap();
        assert!(c.is_bi_perron && c.is_perron);
        assert!(!c.conjugates_in_s1_union_r && !c.totally_real);
    }

    #[test]
    fn lehmer() {
        let c = classify(&poly(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])).unwrap();
        assert!(c.is_salem && c.is_bi_perron && c.conjugates_in_s1_union_r && c.is_reciprocal);
        assert_eq!(c.leading_root.unwrap().decimal(5), "1.17628");
    }

    #[test]
    fn not_bi_perron_cases() {
        // sqrt(2): -sqrt(2) has the same modulus
        let c = classify(&poly(&[1, 0, -2])).unwrap();
        assert!(!c.is_perron && !c.is_bi_perron);
        // 3 is Perron but not a unit
        let c = classify(&poly(&[1, -3])).unwrap();
        assert!(c.is_perron && !c.is_bi_perron && !c.is_unit);
        // t^2 - 3t + 1: phi^2 with conjugate phi^-2 = 1/lambda, bi-Perron but not Salem
        let c = classify(&poly(&[1, -3, 1])).unwrap();
        assert!(c.is_bi_perron && c.is_reciprocal && !c.is_salem);
        assert!(matches!(classify(&poly(&[1, 0, -1])), Err(Error::Reducible(_))));
    }

    #[test]
    fn small_conjugate_breaks_bi_perron() {
        // roots ~3.651, -0.726, 0.377; 1/3.651 ~ 0.274
        assert!(classify(&poly(&[1, -4, 1, 1])).unwrap().is_bi_perron);
        // roots ~3.247, 1.555, 0.198; 0.198 < 1/3.247
        let c = classify(&poly(&[1, -5, 6, -1])).unwrap();
        assert!(c.is_perron && c.is_unit && !c.is_bi_perron);
    }
}
