//! Fraction-free determinants and resultant elimination.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::IntPoly;
use crate::error::{Error, Result};

/// Integral domain with exact division, enough for Bareiss elimination.
pub trait ExactRing: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Division known to be exact.
    fn exact_div(&self, o: &Self) -> Self;
}

impl ExactRing for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % o)));
        self / o
    }
}

impl ExactRing for IntPoly {
    fn zero() -> Self {
        IntPoly::zero()
    }
    fn one() -> Self {
        IntPoly::one()
    }
    fn is_zero(&self) -> bool {
        IntPoly::is_zero(self)
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Self {
        IntPoly::exact_div(self, o)
    }
}

/// Bareiss fraction-free determinant of a square matrix.
pub fn bareiss_det<T: ExactRing>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.exact_div(&prev);
            }
            m[i][k] = T::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Polynomial in `z` whose coefficients are integer polynomials in `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariatePoly {
    /// Ascending in `z`.
    z_coeffs: Vec<IntPoly>,
}

impl BivariatePoly {
    pub fn from_z_coeffs(mut z_coeffs: Vec<IntPoly>) -> Self {
        while z_coeffs.last().is_some_and(|c| c.is_zero()) {
            z_coeffs.pop();
        }
        BivariatePoly { z_coeffs }
    }

    /// Build from `(z power, s power, coefficient)` terms.
    pub fn from_terms(terms: &[(usize, usize, i64)]) -> Self {
        let zmax = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let mut z_coeffs = vec![IntPoly::zero(); zmax + 1];
        for &(zp, sp, c) in terms {
            z_coeffs[zp] = &z_coeffs[zp] + &IntPoly::monomial(c, sp);
        }
        Self::from_z_coeffs(z_coeffs)
    }

    /// A univariate polynomial in `z` with no `s` dependence.
    pub fn constant_in_s(p: &IntPoly) -> Self {
        Self::from_z_coeffs(
            p.coeffs_ascending()
                .iter()
                .map(|c| IntPoly::constant(c.clone()))
                .collect(),
        )
    }

    pub fn z_degree(&self) -> Option<usize> {
        self.z_coeffs.len().checked_sub(1)
    }

    pub fn z_coeffs(&self) -> &[IntPoly] {
        &self.z_coeffs
    }
}

/// `Res_z(p(z), q(z, s))` as an integer polynomial in `s`, computed as the
/// Bareiss determinant of the Sylvester matrix over `Z[s]`.
pub fn resultant_eliminate(p: &IntPoly, q: &BivariatePoly) -> Result<IntPoly> {
    let m = p
        .degree()
        .ok_or_else(|| Error::InvalidArgument("resultant with the zero polynomial".into()))?;
    let n = match q.z_degree() {
        Some(n) if n > 0 => n,
        _ => {
            return Err(Error::InvalidArgument(
                "second resultant argument needs positive degree in z".into(),
            ))
        }
    };
    let size = m + n;
    let mut syl = vec![vec![IntPoly::zero(); size]; size];
    let p_desc: Vec<IntPoly> = p
        .coeffs_descending()
        .into_iter()
        .map(IntPoly::constant)
        .collect();
    let q_desc: Vec<IntPoly> = q.z_coeffs.iter().rev().cloned().collect();
    for row in 0..n {
        for (j, c) in p_desc.iter().enumerate() {
            syl[row][row + j] = c.clone();
        }
    }
    for row in 0..m {
        for (j, c) in q_desc.iter().enumerate() {
            syl[n + row][row + j] = c.clone();
        }
    }
    Ok(bareiss_det(syl))
}

/// Integer resultant of two univariate polynomials.
pub fn resultant(p: &IntPoly, q: &IntPoly) -> Result<BigInt> {
    if q.deg() == 0 {
        let c = q.leading_coeff();
        return Ok(num_traits::pow(c, p.deg()));
    }
    let r = resultant_eliminate(p, &BivariatePoly::constant_in_s(q))?;
    Ok(r.constant_term())
}

/// Polynomial whose roots are the `k`-th powers of the roots of `p`:
/// `Res_z(p(z), s - z^k)`, primitive with positive leading coefficient.
pub fn power_polynomial(p: &IntPoly, k: usize) -> Result<IntPoly> {
    if k == 0 {
        return Err(Error::InvalidArgument("power must be positive".into()));
    }
    let q = BivariatePoly::from_terms(&[(0, 1, 1), (k, 0, -1)]);
    Ok(resultant_eliminate(p, &q)?.primitive_part())
}

/// Polynomial whose roots are all products `z_i z_j` (ordered pairs, `i = j`
/// included) of roots of `p`: `Res_w(p(w), w^n p(x/w))`.
pub fn pair_product_polynomial(p: &IntPoly) -> Result<IntPoly> {
    let n = p.deg();
    let terms: Vec<IntPoly> = (0..=n)
        .map(|wpow| {
            // coefficient of w^wpow is c_{n-wpow} x^{n-wpow}
            IntPoly::monomial(p.coeff(n - wpow), n - wpow)
        })
        .collect();
    let q = BivariatePoly::from_z_coeffs(terms);
    Ok(resultant_eliminate(p, &q)?.primitive_part())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly::poly;

    fn det_i(rows: &[&[i64]]) -> BigInt {
        bareiss_det(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn bareiss_small() {
        assert_eq!(det_i(&[&[2, 1], &[1, -1]]), BigInt::from(-3));
        assert_eq!(det_i(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]), BigInt::from(-2));
        assert_eq!(det_i(&[&[1, 2], &[2, 4]]), BigInt::from(0));
    }

    #[test]
    fn golden_ratio_trace_resultant() {
        // Res_z(z^2 - z - 1, z^2 - s z + 1) = ±(s^2 - 5)
        let q = BivariatePoly::from_terms(&[(2, 0, 1), (1, 1, -1), (0, 0, 1)]);
        let r = resultant_eliminate(&poly(&[1, -1, -1]), &q).unwrap();
        assert!(r.eq_up_to_sign(&poly(&[1, 0, -5])));
    }

    #[test]
    fn linear_trace_resultant() {
        let q = BivariatePoly::from_terms(&[(2, 0, 1), (1, 1, -1), (0, 0, 1)]);
        let r = resultant_eliminate(&poly(&[1, -2]), &q).unwrap();
        assert!(r.eq_up_to_sign(&poly(&[2, -5])));
    }

    #[test]
    fn squares_of_roots() {
        // roots of t^2-3t+1 squared satisfy s^2-7s+1
        let q = BivariatePoly::from_terms(&[(0, 1, 1), (2, 0, -1)]);
        let r = resultant_eliminate(&poly(&[1, -3, 1]), &q).unwrap();
        assert!(r.eq_up_to_sign(&poly(&[1, -7, 1])));
        assert_eq!(power_polynomial(&poly(&[1, -1, -1]), 2).unwrap(), poly(&[1, -3, 1]));
    }

    #[test]
    fn pair_products() {
        // roots ±1: products 1, -1, -1, 1
        let r = pair_product_polynomial(&poly(&[1, 0, -1])).unwrap();
        assert_eq!(r, poly(&[1, 0, -2, 0, 1]));
    }

    #[test]
    fn integer_resultant() {
        // Res(t-1, t-2) = -1 with the lc(p)^n prod q(alpha) convention
        assert_eq!(resultant(&poly(&[1, -1]), &poly(&[1, -2])).unwrap(), BigInt::from(-1));
    }
}
