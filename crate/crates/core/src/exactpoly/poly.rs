use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending order internally; every text format
/// and the public constructors named `*_descending` use descending order, the
/// way polynomials are written by hand. The zero polynomial has no stored
/// coefficients and the leading stored coefficient is never zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `t`.
    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_ascending(vec![c.into()])
    }

    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::from_ascending(coeffs)
    }

    pub fn from_ascending(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_descending<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        I::IntoIter: DoubleEndedIterator,
        T: Into<BigInt>,
    {
        Self::from_ascending(coeffs.into_iter().rev().map(Into::into).collect())
    }

    pub fn coeffs_ascending(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeffs_descending(&self) -> Vec<BigInt> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention `deg 0 = 0`; only for callers that have
    /// already excluded the zero polynomial.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_one()
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().is_negative() {
            c = -c;
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::from_ascending(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from(c.clone()))
    }

    /// Sign of `p(x)` as -1, 0 or 1.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        // den > 0, so den^n p(num/den) has the sign of p(x).
        sign_of(&self.homogeneous_eval(x.numer(), x.denom()))
    }

    /// `sum c_i a^i b^(n-i)`.
    pub fn homogeneous_eval(&self, a: &BigInt, b: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut bpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c * &bpow;
            bpow *= b;
        }
        acc
    }

    pub fn sign_at_pos_inf(&self) -> i32 {
        sign_of(&self.leading_coeff())
    }

    pub fn sign_at_neg_inf(&self) -> i32 {
        let s = sign_of(&self.leading_coeff());
        if self.deg() % 2 == 0 {
            s
        } else {
            -s
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `p(q(t))`.
    pub fn compose(&self, q: &IntPoly) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * q) + &Self::constant(c.clone()))
    }

    /// `t^deg p * p(1/t)`: the reversed coefficient sequence.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::from_ascending(coeffs)
    }

    /// `p(-t)`.
    pub fn negated_variable(&self) -> Self {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Pseudo-division: returns `(q, r)` with
    /// `lc(d)^(deg self - deg d + 1) * self = q * d + r` and `deg r < deg d`.
    pub fn pseudo_div_rem(&self, d: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let n = match self.degree() {
            Some(n) if n >= dd => n,
            _ => return Ok((Self::zero(), self.clone())),
        };
        let lc = d.leading_coeff();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); n - dd + 1];
        for k in (0..=(n - dd)).rev() {
            let top = r[k + dd].clone();
            for qi in q.iter_mut() {
                *qi *= &lc;
            }
            q[k] = top.clone();
            for ri in r.iter_mut() {
                *ri *= &lc;
            }
            if !top.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &top * dc;
                }
            }
        }
        Ok((Self::from_ascending(q), Self::from_ascending(r)))
    }

    /// Pseudo-remainder only.
    pub fn pseudo_rem(&self, d: &IntPoly) -> Result<IntPoly> {
        Ok(self.pseudo_div_rem(d)?.1)
    }

    /// Exact division over the integers; `None` when `d` does not divide
    /// `self` in `Z[t]`.
    pub fn checked_div(&self, d: &IntPoly) -> Result<Option<IntPoly>> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Some(Self::zero()));
        }
        let n = self.deg();
        if n < dd {
            return Ok(None);
        }
        let lc = d.leading_coeff();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); n - dd + 1];
        for k in (0..=(n - dd)).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let (quot, rem) = top.div_rem(&lc);
            if !rem.is_zero() {
                return Ok(None);
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &quot * dc;
            }
            q[k] = quot;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return Ok(None);
        }
        Ok(Some(Self::from_ascending(q)))
    }

    /// Exact division that is known to succeed (a divisor produced by a gcd
    /// or a factorization).
    pub fn exact_div(&self, d: &IntPoly) -> IntPoly {
        match self.checked_div(d) {
            Ok(Some(q)) => q,
            _ => panic!("exact_div: {d} does not divide {self}"),
        }
    }

    pub fn divides(&self, other: &IntPoly) -> bool {
        matches!(other.checked_div(self), Ok(Some(_)))
    }

    /// Primitive gcd with positive leading coefficient, via the primitive
    /// polynomial remainder sequence.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.deg() < b.deg() || a.is_zero() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    pub fn squarefree_part(&self) -> IntPoly {
        if self.is_constant() {
            return self.primitive_part();
        }
        let p = self.primitive_part();
        let g = p.gcd(&p.derivative());
        p.exact_div(&g).primitive_part()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).is_constant()
    }

    /// Yun's squarefree decomposition: primitive pairwise coprime factors with
    /// multiplicities whose product is the primitive part of `self` (up to sign).
    pub fn squarefree_decomposition(&self) -> Vec<(IntPoly, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let a = self.primitive_part();
        let b = a.derivative();
        let mut c = a.gcd(&b);
        let mut w = a.exact_div(&c).primitive_part();
        let mut i = 1;
        while !c.is_constant() {
            let y = w.gcd(&c);
            let z = w.exact_div(&y).primitive_part();
            if !z.is_constant() {
                out.push((z, i));
            }
            i += 1;
            c = c.exact_div(&y).primitive_part();
            w = y;
        }
        if !w.is_constant() {
            out.push((w, i));
        }
        out
    }

    /// Comma-separated descending coefficients, e.g. `1,-4,-2,4,-1`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .rev()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse(s: &str) -> Result<IntPoly> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let coeffs = s
            .split(',')
            .map(|tok| {
                BigInt::from_str(tok.trim())
                    .map_err(|_| Error::Parse(format!("bad coefficient `{}`", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_descending(coeffs))
    }

    /// Coefficient height `max |c_i|`.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Same polynomial up to sign.
    pub fn eq_up_to_sign(&self, other: &IntPoly) -> bool {
        self == other || *self == -other
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i32 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

impl FromStr for IntPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IntPoly::parse(s)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = !mag.is_one() || i == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_ascending((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_ascending((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_ascending(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

/// Shorthand for tests and examples: descending `i64` coefficients.
pub fn poly(desc: &[i64]) -> IntPoly {
    IntPoly::from_descending(desc.iter().copied())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let p = IntPoly::parse("1,-4,-2,4,-1").unwrap();
        assert_eq!(p.deg(), 4);
        assert_eq!(p.to_text(), "1,-4,-2,4,-1");
        assert_eq!(p.to_string(), "t^4 - 4t^3 - 2t^2 + 4t - 1");
        assert!(IntPoly::parse("1,,2").is_err());
        assert_eq!(IntPoly::parse("0,0,3").unwrap(), poly(&[3]));
    }

    #[test]
    fn gcd_and_division() {
        let a = &poly(&[1, -1]) * &poly(&[1, 1]);
        let b = &poly(&[1, -1]) * &poly(&[2, 3]);
        assert_eq!(a.gcd(&b), poly(&[1, -1]));
        assert_eq!(a.exact_div(&poly(&[1, 1])), poly(&[1, -1]));
        assert_eq!(poly(&[2, 1]).checked_div(&poly(&[2, 0])).unwrap(), None);
        let (q, r) = poly(&[1, 0, 1]).pseudo_div_rem(&poly(&[2, 1])).unwrap();
        assert_eq!(&(&q * &poly(&[2, 1])) + &r, poly(&[4, 0, 4]));
    }

    #[test]
    fn squarefree_decomposition_multiplicities() {
        let p = &(&poly(&[1, -1]) * &poly(&[1, -1])) * &(&poly(&[1, 0, 1]).pow(3) * &poly(&[1, 2]));
        let d = p.squarefree_decomposition();
        assert_eq!(d, vec![(poly(&[1, 2]), 1), (poly(&[1, -1]), 2), (poly(&[1, 0, 1]), 3)]);
        assert_eq!(p.squarefree_part(), &(&poly(&[1, -1]) * &poly(&[1, 0, 1])) * &poly(&[1, 2]));
    }

    #[test]
    fn transforms() {
        let p = poly(&[2, 3, 5]);
        assert_eq!(p.reversed(), poly(&[5, 3, 2]));
        assert_eq!(p.negated_variable(), poly(&[2, -3, 5]));
        assert_eq!(p.compose(&poly(&[1, 1])), poly(&[2, 7, 10]));
        assert_eq!(p.homogeneous_eval(&BigInt::from(1), &BigInt::from(2)), BigInt::from(28));
        assert_eq!(p.sign_at(&BigRational::new((-1).into(), 2.into())), 1);
    }
}
