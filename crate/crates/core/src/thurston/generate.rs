//! Bi-Perron units just above the lower bound for a given `epsilon`, grown
//! from totally real seeds with all roots in `[-2 + eps, 2 + 2 eps)`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;

use crate::algnum::classify;
use crate::error::{Error, Result};
use crate::exactpoly::{is_irreducible, untrace_transform, AlgebraicReal, IntPoly, SturmSequence};

#[derive(Clone, Debug)]
pub struct SmallBiPerron {
    /// Totally real seed `g(s)`.
    pub seed: IntPoly,
    pub minpoly: IntPoly,
    pub value: AlgebraicReal,
}

#[derive(Clone, Debug)]
pub struct SmallBiPerronBatch {
    pub epsilon: BigRational,
    /// Largest root of `b B^2 - 2 (a + b) B + b` for `epsilon = a / b`.
    pub bound: AlgebraicReal,
    pub max_degree: usize,
    pub max_height: i64,
    pub seeds_examined: usize,
    /// In seed order: degree, then height, then coefficients.
    pub found: Vec<SmallBiPerron>,
}

impl SmallBiPerronBatch {
    /// Nothing was found; larger degree or height bounds may help.
    pub fn bounds_limited(&self) -> bool {
        self.found.is_empty()
    }

    pub fn minimum(&self) -> Option<&SmallBiPerron> {
        self.found.iter().min_by(|a, b| a.value.cmp_exact(&b.value))
    }
}

/// `x0 < B` holds exactly for every value produced.
pub fn epsilon_bound(epsilon: &BigRational) -> Result<AlgebraicReal> {
    if !epsilon.is_positive() {
        return Err(Error::InvalidArgument("epsilon must be positive".into()));
    }
    let (a, b) = (epsilon.numer().clone(), epsilon.denom().clone());
    let q = IntPoly::from_descending([b.clone(), BigInt::from(-2) * (a + &b), b]);
    Ok(AlgebraicReal::largest_real_root(&q).expect("discriminant is positive"))
}

/// Monic seeds of degree `d` and height exactly `h`, coefficients below the
/// leading one in lexicographic order.
fn seeds(d: usize, h: i64) -> Vec<IntPoly> {
    let mut out = Vec::new();
    let mut c = vec![-h; d];
    loop {
        if c.iter().any(|x| x.abs() == h) {
            out.push(IntPoly::from_descending(std::iter::once(1).chain(c.iter().copied())));
        }
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if c[i] < h {
                c[i] += 1;
                for x in &mut c[i + 1..] {
                    *x = -h;
                }
                break;
            }
        }
    }
}

struct Window {
    lo: BigRational,
    hi: BigRational,
    two: BigRational,
}

impl Window {
    fn admits(&self, g: &IntPoly) -> bool {
        let d = g.deg();
        // cheap necessary conditions before any Sturm sequence
        if g.sign_at(&self.hi) <= 0 {
            return false;
        }
        let at_lo = g.sign_at(&self.lo);
        if at_lo != 0 && (at_lo > 0) != (d % 2 == 0) {
            return false;
        }
        let e1 = BigRational::from_integer(-g.coeff(d - 1));
        let n = BigRational::from_integer(d.into());
        if e1 < &n * &self.lo || e1 >= &n * &self.hi {
            return false;
        }
        let sturm = SturmSequence::new(g);
        sturm.count_real() == d
            && sturm.count_closed(&self.lo, &self.hi) == d
            && sturm.count_half_open(&self.two, &self.hi) > 0
            && is_irreducible(g)
    }
}

fn examine(g: &IntPoly, bound: &AlgebraicReal) -> Result<Option<SmallBiPerron>> {
    let p = untrace_transform(g);
    let x0 = match AlgebraicReal::largest_real_root(&p) {
        Some(x) => x.minimal(),
        None => return Ok(None),
    };
    let c = classify(x0.poly())?;
    if !c.is_bi_perron || !c.conjugates_in_s1_union_r {
        return Ok(None);
    }
    if AlgebraicReal::real_roots(x0.poly()).iter().any(|r| r.sign() <= 0) {
        return Ok(None);
    }
    if x0.cmp_exact(bound) != Ordering::Less {
        return Ok(None);
    }
    Ok(Some(SmallBiPerron {
        seed: g.clone(),
        minpoly: c.minpoly,
        value: x0,
    }))
}

pub fn generate_small_biperron(epsilon: &BigRational, max_degree: usize, max_height: i64) -> Result<SmallBiPerronBatch> {
    let bound = epsilon_bound(epsilon)?;
    if max_degree == 0 || max_height <= 0 {
        return Err(Error::InvalidArgument("degree and height bounds must be positive".into()));
    }
    let two = BigRational::from_integer(2.into());
    let window = Window {
        lo: -&two + epsilon,
        hi: &two + epsilon * &two,
        two,
    };
    let mut found = Vec::new();
    let mut seeds_examined = 0;
    for d in 1..=max_degree {
        let batch: Vec<IntPoly> = (1..=max_height).flat_map(|h| seeds(d, h)).collect();
        seeds_examined += batch.len();
        let hits: Vec<Option<SmallBiPerron>> = batch
            .par_iter()
            .map(|g| if window.admits(g) { examine(g, &bound) } else { Ok(None) })
            .collect::<Result<_>>()?;
        found.extend(hits.into_iter().flatten());
    }
    Ok(SmallBiPerronBatch {
        epsilon: epsilon.clone(),
        bound,
        max_degree,
        max_height,
        seeds_examined,
        found,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly::poly;
    use crate::exactpoly::rational::rat;

    #[test]
    fn seed_enumeration() {
        assert_eq!(seeds(1, 1), vec![poly(&[1, -1]), poly(&[1, 1])]);
        assert_eq!(seeds(2, 1).len(), 8);
        assert_eq!(seeds(2, 2).len(), 16);
    }

    #[test]
    fn half_epsilon() {
        let b = generate_small_biperron(&rat(1, 2), 2, 3).unwrap();
        assert_eq!(b.bound.minpoly(), poly(&[1, -3, 1]));
        let target = poly(&[1, -2, 1, -2, 1]);
        let hit = b.found.iter().find(|f| f.minpoly == target).expect("present");
        assert_eq!(hit.value.decimal(4), "1.8832");
        assert!(b.found.iter().all(|f| f.value.cmp_exact(&b.bound) == Ordering::Less));
    }

    #[test]
    fn large_epsilon_contains_golden_square() {
        let b = generate_small_biperron(&rat(2, 1), 1, 5).unwrap();
        let seeds: Vec<_> = b.found.iter().map(|f| f.seed.clone()).collect();
        assert_eq!(seeds, vec![poly(&[1, -3]), poly(&[1, -4]), poly(&[1, -5])]);
        assert_eq!(b.found[0].minpoly, poly(&[1, -3, 1]));
    }
}
