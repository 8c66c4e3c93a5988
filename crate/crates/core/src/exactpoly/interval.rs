use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::IntPoly;
use super::rational::{sqrt_lower, sqrt_upper, to_text};

/// Closed interval with exact rational endpoints, used for rigorous
/// enclosure arithmetic. `IsolatingInterval` reuses this type with the extra
/// guarantee that the open interval holds exactly one root.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi, "inverted interval");
        RatInterval { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        RatInterval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn intersects(&self, other: &RatInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn add(&self, o: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    pub fn sub(&self, o: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }

    pub fn neg(&self) -> RatInterval {
        RatInterval::new(-&self.hi, -&self.lo)
    }

    pub fn mul(&self, o: &RatInterval) -> RatInterval {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        RatInterval::new(lo, hi)
    }

    pub fn scale(&self, k: &BigRational) -> RatInterval {
        let a = &self.lo * k;
        let b = &self.hi * k;
        if a <= b {
            RatInterval::new(a, b)
        } else {
            RatInterval::new(b, a)
        }
    }

    pub fn add_scalar(&self, k: &BigRational) -> RatInterval {
        RatInterval::new(&self.lo + k, &self.hi + k)
    }

    /// Reciprocal; `None` when the interval contains zero.
    pub fn recip(&self) -> Option<RatInterval> {
        if self.contains_zero() {
            return None;
        }
        Some(RatInterval::new(self.hi.recip(), self.lo.recip()))
    }

    pub fn pow(&self, k: u32) -> RatInterval {
        let mut out = RatInterval::point(BigRational::from_integer(1.into()));
        for _ in 0..k {
            out = out.mul(self);
        }
        if k % 2 == 0 && self.contains_zero() {
            out.lo = BigRational::zero();
        }
        out
    }

    /// Enclosure of `sqrt` over the nonnegative part of the interval.
    pub fn sqrt(&self, bits: u32) -> RatInterval {
        let lo = if self.lo.is_positive() {
            sqrt_lower(&self.lo, bits)
        } else {
            BigRational::zero()
        };
        RatInterval::new(lo, sqrt_upper(&self.hi, bits))
    }

    pub fn abs(&self) -> RatInterval {
        if self.contains_zero() {
            let m = self.lo.abs().max(self.hi.abs());
            RatInterval::new(BigRational::zero(), m)
        } else if self.lo.is_positive() {
            self.clone()
        } else {
            self.neg()
        }
    }

    /// Horner enclosure of `p` over the interval.
    pub fn eval_poly(&self, p: &IntPoly) -> RatInterval {
        let mut acc = RatInterval::point(BigRational::zero());
        for c in p.coeffs_ascending().iter().rev() {
            acc = acc
                .mul(self)
                .add_scalar(&BigRational::from_integer(c.clone()));
        }
        acc
    }
}

impl fmt::Debug for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", to_text(&self.lo), to_text(&self.hi))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly::poly;
    use crate::exactpoly::rational::{int, rat};

    #[test]
    fn arithmetic_encloses() {
        let a = RatInterval::new(rat(-1, 2), int(2));
        let b = RatInterval::new(int(1), int(3));
        assert_eq!(a.mul(&b), RatInterval::new(rat(-3, 2), int(6)));
        assert_eq!(a.pow(2), RatInterval::new(int(0), int(4)));
        assert!(a.recip().is_none());
        assert_eq!(b.recip().unwrap(), RatInterval::new(rat(1, 3), int(1)));
        let p = poly(&[1, 0, -2]);
        let e = b.eval_poly(&p);
        assert!(e.contains(&int(-1)) && e.contains(&int(7)));
    }
}
