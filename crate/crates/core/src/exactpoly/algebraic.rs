use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::factor::irreducible_factors;
use super::interval::RatInterval;
use super::poly::IntPoly;
use super::rational::{int, to_decimal, to_f64};
use super::resultant::power_polynomial;
use super::sturm::{bisect_isolating, isolate_real_roots, SturmSequence};
use super::trace::trace_transform;
use crate::error::{Error, Result};

/// Largest precision used when an enclosure must be tightened.
pub const MAX_BITS: u32 = 4096;

/// A real algebraic number: a squarefree primitive polynomial together with an
/// open interval `(lo, hi)` holding exactly one of its roots. Endpoints are
/// never roots.
#[derive(Clone)]
pub struct AlgebraicReal {
    poly: IntPoly,
    interval: RatInterval,
}

impl AlgebraicReal {
    /// Checks squarefreeness and that `(lo, hi)` holds exactly one root.
    pub fn new(poly: IntPoly, interval: RatInterval) -> Result<Self> {
        if poly.is_constant() {
            return Err(Error::InvalidArgument("constant polynomial has no roots".into()));
        }
        let poly = poly.primitive_part();
        if !poly.is_squarefree() {
            return Err(Error::InvalidArgument(format!("{poly} is not squarefree")));
        }
        let count = SturmSequence::new(&poly).count_open(&interval.lo, &interval.hi)?;
        if count != 1 {
            return Err(Error::InvalidArgument(format!(
                "interval {interval:?} holds {count} roots of {poly}"
            )));
        }
        Ok(AlgebraicReal { poly, interval })
    }

    pub(crate) fn new_unchecked(poly: IntPoly, interval: RatInterval) -> Self {
        AlgebraicReal { poly, interval }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        let poly = IntPoly::from_ascending(vec![-q.numer().clone(), q.denom().clone()]).primitive_part();
        let one = BigRational::one();
        AlgebraicReal {
            poly,
            interval: RatInterval::new(q - &one, q + &one),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(&int(n))
    }

    /// Real roots of `p` (distinct, ascending).
    pub fn real_roots(p: &IntPoly) -> Vec<AlgebraicReal> {
        if p.is_constant() {
            return Vec::new();
        }
        let q = p.squarefree_part();
        isolate_real_roots(&q)
            .into_iter()
            .map(|iv| AlgebraicReal::new_unchecked(q.clone(), iv))
            .collect()
    }

    /// Largest real root of `p`, if any.
    pub fn largest_real_root(p: &IntPoly) -> Option<AlgebraicReal> {
        Self::real_roots(p).pop()
    }

    /// The unique root of squarefree-part(`p`) inside enclosures produced by
    /// `enclose(bits)` for increasing `bits`. The enclosures must be closed
    /// intervals that contain the wanted root and shrink to it.
    pub fn from_enclosure(
        p: &IntPoly,
        mut enclose: impl FnMut(u32) -> Result<RatInterval>,
    ) -> Result<Self> {
        let q = p.squarefree_part();
        let s = SturmSequence::new(&q);
        let mut bits = 16;
        while bits <= MAX_BITS {
            let e = enclose(bits)?;
            let count = s.count_closed(&e.lo, &e.hi);
            if count == 0 {
                return Err(Error::Invariant(format!(
                    "enclosure {e:?} misses every root of {q}"
                )));
            }
            if count == 1 {
                return Ok(Self::isolate_in_closed(q, &s, e));
            }
            bits *= 2;
        }
        Err(Error::PrecisionExhausted(MAX_BITS))
    }

    /// Turn a closed interval with exactly one root into an open isolating one.
    fn isolate_in_closed(q: IntPoly, s: &SturmSequence, e: RatInterval) -> Self {
        let mut lo = e.lo.clone();
        let mut hi = e.hi.clone();
        for endpoint_is_lo in [true, false] {
            let x = if endpoint_is_lo { lo.clone() } else { hi.clone() };
            if q.sign_at(&x) != 0 {
                continue;
            }
            // the root is exactly `x`; open a small window around it
            let mut d = if e.width().is_zero() {
                BigRational::one()
            } else {
                e.width()
            };
            loop {
                let a = &x - &d;
                let b = &x + &d;
                if q.sign_at(&a) != 0 && q.sign_at(&b) != 0 && s.count_half_open(&a, &b) == 1 {
                    lo = a;
                    hi = b;
                    break;
                }
                d /= int(2);
            }
            return AlgebraicReal::new_unchecked(q, RatInterval::new(lo, hi));
        }
        AlgebraicReal::new_unchecked(q, RatInterval::new(lo, hi))
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn interval(&self) -> &RatInterval {
        &self.interval
    }

    /// Halve the isolating interval.
    pub fn refine(&mut self) {
        self.interval = bisect_isolating(&self.poly, &self.interval);
    }

    /// Refine until the interval is narrower than `2^-bits`.
    pub fn refine_to_bits(&mut self, bits: u32) {
        let target = BigRational::new(BigInt::one(), BigInt::one() << bits);
        while self.interval.width() >= target {
            self.refine();
        }
    }

    pub fn refined(&self, bits: u32) -> Self {
        let mut r = self.clone();
        r.refine_to_bits(bits);
        r
    }

    /// Closed enclosure of width below `2^-bits`.
    pub fn enclosure(&self, bits: u32) -> RatInterval {
        self.refined(bits).interval
    }

    /// Whether the number is rational, returning it when so.
    pub fn as_rational(&self) -> Option<BigRational> {
        for g in irreducible_factors(&self.poly) {
            if g.deg() == 1 {
                let r = BigRational::new(-g.coeff(0), g.coeff(1));
                if self.interval.lo < r && r < self.interval.hi {
                    return Some(r);
                }
            }
        }
        None
    }

    /// The same number with its irreducible minimal polynomial.
    pub fn minimal(&self) -> Self {
        if self.poly.deg() == 1 {
            return self.clone();
        }
        for g in irreducible_factors(&self.poly) {
            let s = SturmSequence::new(&g);
            if s.count_half_open(&self.interval.lo, &self.interval.hi) == 1 {
                return AlgebraicReal::new_unchecked(g, self.interval.clone());
            }
        }
        unreachable!("isolated root belongs to some irreducible factor")
    }

    /// Irreducible minimal polynomial.
    pub fn minpoly(&self) -> IntPoly {
        self.minimal().poly
    }

    pub fn degree(&self) -> usize {
        self.minpoly().deg()
    }

    pub fn sign(&self) -> i32 {
        let zero = BigRational::zero();
        match self.cmp_rational(&zero) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, q: &BigRational) -> Ordering {
        if self.interval.lo < *q && *q < self.interval.hi && self.poly.sign_at(q) == 0 {
            return Ordering::Equal;
        }
        let mut a = self.clone();
        loop {
            if a.interval.hi <= *q {
                return Ordering::Less;
            }
            if a.interval.lo >= *q {
                return Ordering::Greater;
            }
            a.refine();
        }
    }

    /// Exact comparison: equality is detected through a common factor with a
    /// root in both intervals, otherwise intervals are refined apart.
    pub fn cmp_exact(&self, other: &AlgebraicReal) -> Ordering {
        let lo = self.interval.lo.clone().max(other.interval.lo.clone());
        let hi = self.interval.hi.clone().min(other.interval.hi.clone());
        if lo < hi {
            let g = self.poly.gcd(&other.poly);
            if !g.is_constant() && SturmSequence::new(&g).count_half_open(&lo, &hi) > 0 {
                return Ordering::Equal;
            }
        }
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if a.interval.hi <= b.interval.lo {
                return Ordering::Less;
            }
            if b.interval.hi <= a.interval.lo {
                return Ordering::Greater;
            }
            if a.interval.width() >= b.interval.width() {
                a.refine();
            } else {
                b.refine();
            }
        }
    }

    pub fn neg(&self) -> Self {
        AlgebraicReal::new_unchecked(
            self.poly.negated_variable().primitive_part(),
            self.interval.neg(),
        )
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn recip(&self) -> Result<Self> {
        if self.sign() == 0 {
            return Err(Error::DivisionByZero);
        }
        let mut a = self.clone();
        while a.interval.contains_zero() {
            a.refine();
        }
        let iv = a.interval.recip().expect("interval excludes zero");
        Ok(AlgebraicReal::new_unchecked(
            a.poly.reversed().primitive_part(),
            iv,
        ))
    }

    /// `self^k` for `k >= 1`.
    pub fn pow(&self, k: u32) -> Result<Self> {
        if k == 1 {
            return Ok(self.clone());
        }
        let p = power_polynomial(&self.poly, k as usize)?;
        Self::from_enclosure(&p, |bits| Ok(self.enclosure(bits).pow(k)))
    }

    /// `self + 1/self`.
    pub fn plus_inverse(&self) -> Result<Self> {
        if self.sign() == 0 {
            return Err(Error::DivisionByZero);
        }
        let base = if self.poly.constant_term().is_zero() {
            self.minimal()
        } else {
            self.clone()
        };
        let p = trace_transform(&base.poly)?;
        Self::from_enclosure(&p, |bits| {
            let mut e = self.enclosure(bits);
            while e.contains_zero() {
                e = self.enclosure(2 * bits);
            }
            Ok(e.add(&e.recip().unwrap()))
        })
    }

    /// Nonnegative square root of a nonnegative number.
    pub fn sqrt(&self) -> Result<Self> {
        if self.sign() < 0 {
            return Err(Error::InvalidArgument("square root of a negative number".into()));
        }
        let p = self.poly.compose(&IntPoly::from_descending([1, 0, 0]));
        let p = if self.sign() == 0 {
            IntPoly::x()
        } else {
            p
        };
        Self::from_enclosure(&p, |bits| {
            let e = self.enclosure(2 * bits);
            let e = RatInterval::new(e.lo.max(BigRational::zero()), e.hi);
            Ok(e.sqrt(bits + 4))
        })
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.enclosure(60).midpoint())
    }

    /// Decimal string with `digits` digits after the point.
    pub fn decimal(&self, digits: usize) -> String {
        let bits = (digits as f64 * 3.33) as u32 + 12;
        to_decimal(&self.enclosure(bits).midpoint(), digits)
    }
}

impl PartialEq for AlgebraicReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_exact(other) == Ordering::Equal
    }
}

impl Eq for AlgebraicReal {}

impl PartialOrd for AlgebraicReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

impl fmt::Debug for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root of {} in {:?} (~{})", self.poly, self.interval, self.decimal(8))
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.decimal(12))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly::poly;
    use crate::exactpoly::rational::rat;

    fn phi() -> AlgebraicReal {
        AlgebraicReal::largest_real_root(&poly(&[1, -1, -1])).unwrap()
    }

    #[test]
    fn golden_ratio_arithmetic() {
        let p = phi();
        assert_eq!(p.decimal(6), "1.618034");
        let sq = p.pow(2).unwrap();
        assert_eq!(sq.minpoly(), poly(&[1, -3, 1]));
        let tr = p.plus_inverse().unwrap();
        assert_eq!(tr.minpoly(), poly(&[1, 0, -5]));
        let inv = p.recip().unwrap();
        assert_eq!(inv.decimal(6), "0.618034");
        assert_eq!(p.pow(4).unwrap().plus_inverse().unwrap().minpoly(), poly(&[1, -7]));
    }

    #[test]
    fn exact_equality_and_order() {
        // sqrt(5) as a root of s^2-5 and of (s^2-5)(s-1)
        let a = AlgebraicReal::largest_real_root(&poly(&[1, 0, -5])).unwrap();
        let b = AlgebraicReal::largest_real_root(&poly(&[1, -1, -5, 5])).unwrap();
        assert_eq!(a.cmp_exact(&b), Ordering::Equal);
        let c = AlgebraicReal::from_rational(&rat(9, 4));
        assert_eq!(c.cmp_exact(&a), Ordering::Greater);
        assert_eq!(a.cmp_rational(&rat(9, 4)), Ordering::Less);
        assert_eq!(AlgebraicReal::from_integer(3).cmp_rational(&int(3)), Ordering::Equal);
    }

    #[test]
    fn sqrt_and_minimal() {
        let five = AlgebraicReal::from_integer(5);
        let r = five.sqrt().unwrap();
        assert_eq!(r.minpoly(), poly(&[1, 0, -5]));
        let nine = AlgebraicReal::from_integer(9).sqrt().unwrap();
        assert_eq!(nine.as_rational(), Some(int(3)));
        assert_eq!(AlgebraicReal::from_integer(0).sqrt().unwrap().sign(), 0);
    }

    #[test]
    fn enclosure_with_rational_endpoint_root() {
        let p = poly(&[1, -3]);
        let a = AlgebraicReal::from_enclosure(&p, |_| Ok(RatInterval::new(int(3), int(4)))).unwrap();
        assert_eq!(a.cmp_rational(&int(3)), Ordering::Equal);
    }
}
