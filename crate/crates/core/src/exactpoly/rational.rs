//! Small helpers around `BigRational`: parsing, decimal rendering, and
//! rigorous square-root brackets.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Parses `a`, `-a`, or `a/b`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(int(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

pub fn to_text(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Decimal rendering with `digits` digits after the point, rounded half away
/// from zero.
pub fn to_decimal(x: &BigRational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = x * int(scale.clone());
    let neg = scaled.is_negative();
    let mag = scaled.abs();
    let two = BigInt::from(2);
    let (q, r) = mag.numer().div_rem(mag.denom());
    let rounded = if &r * &two >= *mag.denom() { q + 1 } else { q };
    let (ip, fp) = rounded.div_rem(&scale);
    let mut s = String::new();
    if neg && !rounded.is_zero() {
        s.push('-');
    }
    s.push_str(&ip.to_string());
    if digits > 0 {
        s.push('.');
        let f = fp.to_string();
        for _ in f.len()..digits {
            s.push('0');
        }
        s.push_str(&f);
    }
    s
}

pub fn to_f64(x: &BigRational) -> f64 {
    let (n, d) = (x.numer(), x.denom());
    if n.is_zero() {
        return 0.0;
    }
    let sn = (n.bits() as i64 - 64).max(0);
    let sd = (d.bits() as i64 - 64).max(0);
    let nf = (n >> sn as usize).to_f64().unwrap_or(0.0);
    let df = (d >> sd as usize).to_f64().unwrap_or(1.0);
    nf / df * 2f64.powi((sn - sd).clamp(-4000, 4000) as i32)
}

/// Rational with denominator `2^bits` nearest to `x` (ties away from zero).
pub fn round_dyadic(x: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits;
    let scaled = x * int(scale.clone());
    BigRational::new(round_half_away(&scaled), scale)
}

pub fn round_half_away(x: &BigRational) -> BigInt {
    let neg = x.is_negative();
    let a = x.abs();
    let (q, r) = a.numer().div_rem(a.denom());
    let q = if r * 2 >= *a.denom() { q + 1 } else { q };
    if neg {
        -q
    } else {
        q
    }
}

pub fn floor(x: &BigRational) -> BigInt {
    x.floor().to_integer()
}

pub fn ceil(x: &BigRational) -> BigInt {
    x.ceil().to_integer()
}

fn isqrt(n: &BigInt) -> BigInt {
    let u: BigUint = n.to_biguint().expect("nonnegative");
    BigInt::from(u.sqrt())
}

/// Rational `s` with `s <= sqrt(x)` and `sqrt(x) - s < 2^-bits` (x >= 0).
pub fn sqrt_lower(x: &BigRational, bits: u32) -> BigRational {
    if !x.is_positive() {
        return BigRational::zero();
    }
    // sqrt(n/d) = sqrt(n d) / d; scale by 4^bits to get `bits` fractional bits.
    let scale = BigInt::one() << (2 * bits as usize);
    let nd = x.numer() * x.denom() * scale;
    let root = isqrt(&nd);
    BigRational::new(root, x.denom() << bits as usize)
}

/// Rational `s` with `s >= sqrt(x)` and `s - sqrt(x) < 2^-bits`-ish (x >= 0).
pub fn sqrt_upper(x: &BigRational, bits: u32) -> BigRational {
    if !x.is_positive() {
        return BigRational::zero();
    }
    let scale = BigInt::one() << (2 * bits as usize);
    let nd = x.numer() * x.denom() * scale;
    let root = isqrt(&nd);
    let root = if &root * &root == nd { root } else { root + 1 };
    BigRational::new(root, x.denom() << bits as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal(&rat(1, 3), 4), "0.3333");
        assert_eq!(to_decimal(&rat(2, 3), 4), "0.6667");
        assert_eq!(to_decimal(&rat(-5, 2), 0), "-3");
        assert_eq!(to_decimal(&rat(-1, 1000), 2), "0.00");
    }

    #[test]
    fn sqrt_brackets() {
        let two = int(2);
        let lo = sqrt_lower(&two, 40);
        let hi = sqrt_upper(&two, 40);
        assert!(&lo * &lo <= two && &hi * &hi >= two);
        assert!(&hi - &lo <= rat(1, 1 << 30));
        let nine = rat(9, 4);
        assert_eq!(sqrt_lower(&nine, 8), rat(3, 2));
        assert_eq!(sqrt_upper(&nine, 8), rat(3, 2));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
