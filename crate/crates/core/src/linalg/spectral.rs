use crate::algnum::max_root_modulus;
use crate::error::{Error, Result};
use crate::exactpoly::{AlgebraicReal, FieldElem, NumberField, RatInterval};

use super::matrix::RatMatrix;

/// Largest modulus of an eigenvalue, exactly.
pub fn spectral_radius(m: &RatMatrix) -> Result<AlgebraicReal> {
    if m.rows() == 0 {
        return Err(Error::InvalidArgument("empty matrix".into()));
    }
    max_root_modulus(&m.charpoly())
}

/// Whether `mu` is an eigenvalue: its minimal polynomial divides the
/// characteristic polynomial.
pub fn is_eigenvalue(m: &RatMatrix, mu: &AlgebraicReal) -> bool {
    mu.minpoly().divides(&m.charpoly())
}

/// Multiplicity of `mu` as a root of the characteristic polynomial.
pub fn algebraic_multiplicity(m: &RatMatrix, mu: &AlgebraicReal) -> usize {
    let g = mu.minpoly();
    let mut p = m.charpoly();
    let mut k = 0;
    while !p.is_constant() && g.divides(&p) {
        p = p.exact_div(&g);
        k += 1;
    }
    k
}

/// Exact eigenvector over `Q(mu)` with its coordinate signs.
#[derive(Clone, Debug)]
pub struct EigenvectorCertificate {
    pub field: NumberField,
    /// Coordinates, scaled so the first nonzero one is positive.
    pub vector: Vec<FieldElem>,
    pub signs: Vec<i32>,
    /// Every coordinate is strictly positive.
    pub positive: bool,
}

impl EigenvectorCertificate {
    pub fn enclosures(&self, bits: u32) -> Vec<RatInterval> {
        self.vector.iter().map(|x| self.field.enclosure(x, bits)).collect()
    }
}

/// Null vector of `m - mu I` for a simple real eigenvalue `mu`, with exact
/// coordinate signs.
pub fn certified_positive_eigenvector(m: &RatMatrix, mu: &AlgebraicReal) -> Result<EigenvectorCertificate> {
    if !m.is_square() || m.rows() == 0 {
        return Err(Error::InvalidArgument("eigenvectors need a nonempty square matrix".into()));
    }
    match algebraic_multiplicity(m, mu) {
        0 => {
            return Err(Error::Precondition(format!(
                "{} is not an eigenvalue",
                mu.minpoly().to_text()
            )))
        }
        1 => {}
        _ => return Err(Error::EigenvalueNotSimple),
    }
    let k = NumberField::new(mu);
    let n = m.rows();
    let gen = k.gen();
    let mut a: Vec<Vec<FieldElem>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let e = k.from_rational(m.get(i, j).clone());
                    if i == j {
                        k.sub(&e, &gen)
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect();
    // reduced row echelon form over Q(mu)
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = k.inv(&a[row][col])?;
        for j in col..n {
            a[row][j] = k.mul(&a[row][j], &inv);
        }
        for r in 0..n {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in col..n {
                    let t = k.mul(&f, &a[row][j]);
                    a[r][j] = k.sub(&a[r][j], &t);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if pivots.len() != n - 1 {
        return Err(Error::Invariant(format!(
            "kernel of dimension {} for a simple eigenvalue",
            n - pivots.len()
        )));
    }
    let free = (0..n).find(|c| !pivots.contains(c)).expect("one free column");
    let mut v = vec![FieldElem::zero(); n];
    v[free] = k.one();
    for (r, &c) in pivots.iter().enumerate() {
        v[c] = k.neg(&a[r][free]);
    }
    let first = v.iter().map(|x| k.sign(x)).find(|&s| s != 0).expect("nonzero vector");
    if first < 0 {
        v = v.iter().map(|x| k.neg(x)).collect();
    }
    verify_eigenvector(m, &k, &v)?;
    let signs: Vec<i32> = v.iter().map(|x| k.sign(x)).collect();
    let positive = signs.iter().all(|&s| s > 0);
    Ok(EigenvectorCertificate {
        field: k,
        vector: v,
        signs,
        positive,
    })
}

fn verify_eigenvector(m: &RatMatrix, k: &NumberField, v: &[FieldElem]) -> Result<()> {
    let gen = k.gen();
    for (i, vi) in v.iter().enumerate() {
        let mut acc = FieldElem::zero();
        for (j, vj) in v.iter().enumerate() {
            acc = k.add(&acc, &k.scale(vj, m.get(i, j)));
        }
        if acc != k.mul(&gen, vi) {
            return Err(Error::Invariant("eigenvector check failed".into()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly::poly;

    #[test]
    fn spectral_radius_examples() {
        let m = RatMatrix::from_i64(&[&[5, 1], &[1, 2]]);
        let rho = spectral_radius(&m).unwrap();
        assert_eq!(rho.minpoly(), poly(&[1, -7, 9]));
        assert!(is_eigenvalue(&m, &rho));
        let z = spectral_radius(&RatMatrix::zeros(3, 3)).unwrap();
        assert_eq!(z.sign(), 0);
    }

    #[test]
    fn positive_eigenvector() {
        let m = RatMatrix::from_i64(&[&[2, 1], &[1, -1]]);
        let rho = spectral_radius(&m).unwrap();
        let c = certified_positive_eigenvector(&m, &rho).unwrap();
        assert!(c.positive);
        // the other eigenvalue has a sign-changing eigenvector
        let low = AlgebraicReal::real_roots(&m.charpoly()).remove(0);
        let c = certified_positive_eigenvector(&m, &low).unwrap();
        assert!(!c.positive);
        assert_eq!(c.signs, vec![1, -1]);
    }

    #[test]
    fn repeated_eigenvalue_is_rejected() {
        let m = RatMatrix::identity(2);
        let one = AlgebraicReal::from_integer(1);
        assert!(matches!(certified_positive_eigenvector(&m, &one), Err(Error::EigenvalueNotSimple)));
        let two = AlgebraicReal::from_integer(2);
        assert!(matches!(certified_positive_eigenvector(&m, &two), Err(Error::Precondition(_))));
    }
}
