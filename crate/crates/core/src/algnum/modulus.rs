//! Exact comparisons between root moduli and real algebraic numbers.

use std::cmp::Ordering;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactpoly::complex::{isolate_nonreal_roots, modulus_squared, refine_disk, ComplexDisk};
use crate::exactpoly::{pair_product_polynomial, trace_transform, AlgebraicReal, IntPoly, SturmSequence};

/// Roots of one squarefree polynomial, split into exact real roots and
/// certified disks, with lazily built helpers for exact modulus ties.
pub struct RootSet {
    poly: IntPoly,
    pub real: Vec<AlgebraicReal>,
    pub complex: Vec<ComplexDisk>,
    pair_products: OnceLock<IntPoly>,
}

const START_BITS: u32 = 64;
const NUMERIC_BITS_CAP: u32 = 512;

impl RootSet {
    /// `p` must be squarefree and nonzero.
    pub fn new(p: &IntPoly) -> Result<Self> {
        let poly = p.primitive_part();
        Ok(RootSet {
            real: AlgebraicReal::real_roots(&poly),
            complex: isolate_nonreal_roots(&poly, START_BITS)?,
            poly,
            pair_products: OnceLock::new(),
        })
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    fn pair_products(&self) -> Result<&IntPoly> {
        if let Some(p) = self.pair_products.get() {
            return Ok(p);
        }
        let p = pair_product_polynomial(&self.poly)?;
        Ok(self.pair_products.get_or_init(|| p))
    }

    /// Exact comparison of `|z|` with a positive real `target`, for the
    /// non-real root in `disk`.
    pub fn cmp_disk_modulus(&self, disk: &ComplexDisk, target: &AlgebraicReal) -> Result<Ordering> {
        let mut d = disk.clone();
        let mut bits = START_BITS;
        loop {
            let m = d.modulus_bounds(bits);
            let t = target.enclosure(bits);
            if m.hi < t.lo {
                return Ok(Ordering::Less);
            }
            if m.lo > t.hi {
                return Ok(Ordering::Greater);
            }
            if bits >= NUMERIC_BITS_CAP {
                break;
            }
            bits *= 2;
            d = refine_disk(&self.poly, &d, bits)?;
        }
        let m2 = modulus_squared(&self.poly, self.pair_products()?, &d)?;
        let t2 = target.pow(2)?;
        Ok(m2.cmp_exact(&t2))
    }

    /// Exact `|z|^2` for a non-real root.
    pub fn disk_modulus_squared(&self, disk: &ComplexDisk) -> Result<AlgebraicReal> {
        modulus_squared(&self.poly, self.pair_products()?, disk)
    }
}

/// Whether every root of `p` lies on the unit circle or the real line,
/// decided by total reality of the squarefree trace polynomial. Roots at zero
/// count as real.
pub fn roots_in_circle_or_line(p: &IntPoly) -> Result<bool> {
    let mut q = p.squarefree_part();
    while !q.is_zero() && q.constant_term().is_zero() {
        q = q.exact_div(&IntPoly::x());
    }
    if q.is_constant() {
        return Ok(true);
    }
    let tr = trace_transform(&q)?.squarefree_part();
    Ok(SturmSequence::new(&tr).count_real() == tr.deg())
}

/// Largest root modulus of a nonzero polynomial, as an exact real algebraic
/// number.
pub fn max_root_modulus(p: &IntPoly) -> Result<AlgebraicReal> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("zero polynomial".into()));
    }
    if p.is_constant() {
        return Err(Error::InvalidArgument("constant polynomial has no roots".into()));
    }
    let q = p.squarefree_part();
    let real_max = AlgebraicReal::real_roots(&q)
        .into_iter()
        .map(|r| r.abs())
        .max_by(|a, b| a.cmp_exact(b));
    let has_nonreal = SturmSequence::new(&q).count_real() < q.deg();
    if !has_nonreal {
        return Ok(real_max.expect("real roots exist").minimal());
    }
    if roots_in_circle_or_line(&q)? {
        // non-real roots are unimodular
        let one = AlgebraicReal::from_integer(1);
        return Ok(match real_max {
            Some(r) if r.cmp_exact(&one) == Ordering::Greater => r.minimal(),
            _ => one,
        });
    }
    let set = RootSet::new(&q)?;
    let mut best = real_max.unwrap_or_else(|| AlgebraicReal::from_integer(0));
    for disk in set.complex.iter().filter(|d| d.is_upper()) {
        let bigger = if best.sign() == 0 {
            true
        } else {
            set.cmp_disk_modulus(disk, &best)? == Ordering::Greater
        };
        if bigger {
            best = set.disk_modulus_squared(disk)?.sqrt()?;
        }
    }
    Ok(best.minimal())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly::poly;

    #[test]
    fn max_modulus_examples() {
        assert_eq!(max_root_modulus(&poly(&[1, 0, -5])).unwrap().minpoly(), poly(&[1, 0, -5]));
        let plastic = max_root_modulus(&poly(&[1, 0, -1, -1])).unwrap();
        assert_eq!(plastic.minpoly(), poly(&[1, 0, -1, -1]));
        // t^2 + 4 has roots of modulus 2
        assert_eq!(max_root_modulus(&poly(&[1, 0, 4])).unwrap().minpoly(), poly(&[1, -2]));
        // t^2 + t + 1: all unimodular
        assert_eq!(max_root_modulus(&poly(&[1, 1, 1])).unwrap().minpoly(), poly(&[1, -1]));
        // (t^2 + 9)(t - 2): complex pair dominates
        let p = &poly(&[1, 0, 9]) * &poly(&[1, -2]);
        assert_eq!(max_root_modulus(&p).unwrap().minpoly(), poly(&[1, -3]));
    }

    #[test]
    fn circle_or_line() {
        assert!(roots_in_circle_or_line(&poly(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])).unwrap());
        assert!(!roots_in_circle_or_line(&poly(&[1, 0, -1, -1])).unwrap());
        assert!(roots_in_circle_or_line(&poly(&[1, 0, 0])).unwrap());
    }
}
