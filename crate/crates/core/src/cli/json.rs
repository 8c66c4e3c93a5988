//! JSON encodings shared by every subcommand.
//!
//! Exact quantities are strings so big integers survive any JSON reader.
//! Algebraic numbers get a canonical dyadic isolating interval, which makes
//! output independent of how the number was computed.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactpoly::rational::{parse_rational, to_decimal, to_text};
use crate::exactpoly::{AlgebraicReal, IntPoly, SturmSequence};
use crate::linalg::{IntMatrix, Matrix, RatMatrix, SymRatMatrix};

pub const DECIMAL_DIGITS: usize = 12;

pub fn poly(p: &IntPoly) -> Value {
    Value::String(p.to_text())
}

pub fn rational(x: &BigRational) -> Value {
    Value::String(to_text(x))
}

/// `[m / 2^b, (m + 1) / 2^b]` with `m = floor(x 2^b)` decided exactly, `b`
/// the first of `bits, bits + 8, ...` for which the interval isolates `x`.
pub fn canonical_interval(a: &AlgebraicReal, bits: u32) -> (BigRational, BigRational) {
    if let Some(q) = a.as_rational() {
        return (q.clone(), q);
    }
    let sturm = SturmSequence::new(a.poly());
    let mut b = bits.max(8);
    loop {
        let scale = BigRational::from_integer(BigInt::one() << b);
        let lo = a.enclosure(b + 8).lo;
        let mut m = (&lo * &scale).floor();
        if a.cmp_rational(&((&m + BigRational::one()) / &scale)).is_ge() {
            m += BigRational::one();
        }
        let (l, h) = (&m / &scale, (&m + BigRational::one()) / &scale);
        if sturm.count_closed(&l, &h) == 1 {
            return (l, h);
        }
        b += 8;
    }
}

pub fn algebraic(a: &AlgebraicReal, bits: u32) -> Value {
    let a = a.minimal();
    let (lo, hi) = canonical_interval(&a, bits);
    let (dlo, dhi) = canonical_interval(&a, (DECIMAL_DIGITS as u32 * 4).max(bits));
    let mid = (dlo + dhi) / BigRational::from_integer(2.into());
    json!({
        "minpoly": poly(a.poly()),
        "interval": [rational(&lo), rational(&hi)],
        "decimal": to_decimal(&mid, DECIMAL_DIGITS),
    })
}

pub fn int_matrix(m: &IntMatrix) -> Value {
    Value::Array(
        m.to_rows()
            .into_iter()
            .map(|r| Value::Array(r.iter().map(|x| Value::String(x.to_string())).collect()))
            .collect(),
    )
}

pub fn rat_matrix(m: &RatMatrix) -> Value {
    Value::Array(
        m.to_rows()
            .into_iter()
            .map(|r| Value::Array(r.iter().map(rational).collect()))
            .collect(),
    )
}

pub fn parse_poly_value(v: &Value) -> Result<IntPoly> {
    let s = v.as_str().ok_or_else(|| Error::Parse("expected a polynomial string".into()))?;
    IntPoly::parse(s)
}

pub fn parse_rat_matrix_value(v: &Value) -> Result<RatMatrix> {
    let bad = || Error::Parse("expected a matrix of rational strings".into());
    let rows = v.as_array().ok_or_else(bad)?;
    let rows: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|x| parse_rational(x.as_str().ok_or_else(bad)?))
                .collect()
        })
        .collect::<Result<_>>()?;
    Matrix::from_rows(rows)
}

/// `"2,1;1,-1"`: rows separated by `;`, rational entries.
pub fn parse_matrix_text(s: &str) -> Result<SymRatMatrix> {
    let rows: Vec<Vec<BigRational>> = s
        .split(';')
        .map(|r| r.split(',').map(|x| parse_rational(x.trim())).collect())
        .collect::<Result<_>>()?;
    SymRatMatrix::new(Matrix::from_rows(rows)?)
}

pub fn parse_rational_value(v: &Value) -> Result<BigRational> {
    parse_rational(v.as_str().ok_or_else(|| Error::Parse("expected a rational string".into()))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly::poly as p;

    #[test]
    fn canonical_intervals_do_not_depend_on_history() {
        let a = AlgebraicReal::largest_real_root(&p(&[1, -1, -1])).unwrap();
        let b = a.refined(200);
        assert_eq!(algebraic(&a, 64), algebraic(&b, 64));
        let v = algebraic(&a, 64);
        assert_eq!(v["decimal"], "1.618033988750");
        assert_eq!(v["minpoly"], "1,-1,-1");
        assert_eq!(algebraic(&AlgebraicReal::from_integer(3), 64)["interval"], json!(["3", "3"]));
    }

    #[test]
    fn matrix_text() {
        let q = parse_matrix_text("2,1;1,-1").unwrap();
        assert_eq!(q.dim(), 2);
        assert!(parse_matrix_text("2,1;0,-1").is_err());
        assert_eq!(parse_rat_matrix_value(&rat_matrix(&q)).unwrap(), *q.matrix());
    }
}
