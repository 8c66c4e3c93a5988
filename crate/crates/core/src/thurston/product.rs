use std::cmp::Ordering;

use num_rational::BigRational;

use crate::coxeter::paired_product;
use crate::error::{Error, Result};
use crate::exactpoly::{AlgebraicReal, FieldElem, NumberField, RatInterval};

#[derive(Clone, Debug)]
pub enum ThurstonOutcome {
    /// `r > 2`: the eigenvalue of larger modulus is `-stretch`.
    PseudoAnosov { stretch: AlgebraicReal },
    /// `r <= 2`: eigenvalues on the unit circle, no stretch factor.
    NonPseudoAnosov { reason: String },
}

/// `(1 r; 0 1)(1 0; -r 1)` over `Q(r)`.
#[derive(Clone, Debug)]
pub struct ThurstonProduct {
    pub r: AlgebraicReal,
    pub field: NumberField,
    pub matrix: [[FieldElem; 2]; 2],
    pub trace: FieldElem,
    pub determinant: FieldElem,
    pub outcome: ThurstonOutcome,
}

impl ThurstonProduct {
    pub fn stretch(&self) -> Option<&AlgebraicReal> {
        match &self.outcome {
            ThurstonOutcome::PseudoAnosov { stretch } => Some(stretch),
            ThurstonOutcome::NonPseudoAnosov { .. } => None,
        }
    }

    pub fn is_pseudo_anosov(&self) -> bool {
        self.stretch().is_some()
    }

    /// Named identities: unit determinant, trace `2 - r^2`, and for `r > 2`
    /// `stretch + 1/stretch = r^2 - 2`.
    pub fn checks(&self) -> Result<Vec<(String, bool)>> {
        let k = &self.field;
        let r2 = k.mul(&k.gen(), &k.gen());
        let mut out = vec![
            ("det = 1".to_string(), self.determinant == k.one()),
            ("trace = 2 - r^2".to_string(), self.trace == k.sub(&k.from_int(2), &r2)),
        ];
        if let Some(s) = self.stretch() {
            let u = k.to_real(&k.sub(&r2, &k.from_int(2)))?;
            out.push((
                "stretch + 1/stretch = r^2 - 2".to_string(),
                s.plus_inverse()?.cmp_exact(&u) == Ordering::Equal,
            ));
        }
        Ok(out)
    }
}

fn mat_mul(k: &NumberField, a: &[[FieldElem; 2]; 2], b: &[[FieldElem; 2]; 2]) -> [[FieldElem; 2]; 2] {
    let e = |i: usize, j: usize| k.add(&k.mul(&a[i][0], &b[0][j]), &k.mul(&a[i][1], &b[1][j]));
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

pub fn thurston_product(r: &AlgebraicReal) -> Result<ThurstonProduct> {
    if r.sign() <= 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    let k = NumberField::new(r);
    let (zero, one, g) = (FieldElem::zero(), k.one(), k.gen());
    let a = [[one.clone(), g.clone()], [zero.clone(), one.clone()]];
    let b = [[one.clone(), zero], [k.neg(&g), one]];
    let matrix = mat_mul(&k, &a, &b);
    let trace = k.add(&matrix[0][0], &matrix[1][1]);
    let determinant = k.sub(&k.mul(&matrix[0][0], &matrix[1][1]), &k.mul(&matrix[0][1], &matrix[1][0]));

    let outcome = if k.cmp(&g, &k.from_int(2)) != Ordering::Greater {
        ThurstonOutcome::NonPseudoAnosov {
            reason: "r <= 2: |trace| <= 2, eigenvalues lie on the unit circle".into(),
        }
    } else {
        // stretch is the larger root of x^2 - (r^2 - 2) x + 1
        let u = k.sub(&k.mul(&g, &g), &k.from_int(2));
        let candidates = paired_product(k.modulus())?.squarefree_part();
        let half = BigRational::new(1.into(), 2.into());
        let four = BigRational::from_integer(4.into());
        let stretch = AlgebraicReal::from_enclosure(&candidates, |bits| {
            let ui: RatInterval = k.enclosure(&u, bits + 8);
            let disc = ui.pow(2).add_scalar(&-four.clone()).sqrt(bits + 8);
            Ok(ui.add(&disc).scale(&half))
        })?
        .minimal();
        ThurstonOutcome::PseudoAnosov { stretch }
    };
    Ok(ThurstonProduct {
        r: r.minimal(),
        field: k,
        matrix,
        trace,
        determinant,
        outcome,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly::poly;
    use crate::exactpoly::rational::int;

    #[test]
    fn r_three() {
        let t = thurston_product(&AlgebraicReal::from_integer(3)).unwrap();
        assert_eq!(t.trace.as_rational(), Some(int(-7)));
        let m: Vec<_> = t.matrix.iter().flatten().map(|x| x.as_rational().unwrap()).collect();
        assert_eq!(m, vec![int(-8), int(3), int(-3), int(1)]);
        assert_eq!(t.stretch().unwrap().minpoly(), poly(&[1, -7, 1]));
        assert!(t.checks().unwrap().iter().all(|(_, ok)| *ok));
    }

    #[test]
    fn r_sqrt5() {
        let r = AlgebraicReal::largest_real_root(&poly(&[1, 0, -5])).unwrap();
        let t = thurston_product(&r).unwrap();
        assert_eq!(t.trace.as_rational(), Some(int(-3)));
        assert_eq!(t.stretch().unwrap().minpoly(), poly(&[1, -3, 1]));
        assert!(t.checks().unwrap().iter().all(|(_, ok)| *ok));
    }

    #[test]
    fn boundary_is_not_pseudo_anosov() {
        let t = thurston_product(&AlgebraicReal::from_integer(2)).unwrap();
        assert!(!t.is_pseudo_anosov());
        assert_eq!(t.trace.as_rational(), Some(int(-2)));
        assert!(thurston_product(&AlgebraicReal::from_integer(0)).is_err());
    }
}
