//! Certified isolation of all complex roots.
//!
//! Real roots come from Sturm bisection. Non-real roots are approximated
//! (Aberth iteration, first in `f64`, then in exact dyadic arithmetic) and
//! certified with Weierstrass inclusion disks: with approximations `z_i` of all
//! roots of a squarefree polynomial of degree `n`, every connected component of
//! the union of the disks `D(z_i, n |W_i|)`, `W_i = q(z_i) / (lc prod_{j != i}
//! (z_i - z_j))`, holds as many roots as disks. A disk disjoint from all others
//! and from the real axis therefore holds exactly one non-real root.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::algebraic::{AlgebraicReal, MAX_BITS};
use super::interval::RatInterval;
use super::poly::IntPoly;
use super::rational::{int, round_dyadic, sqrt_lower, sqrt_upper, to_decimal, to_f64};
use super::sturm::SturmSequence;
use crate::error::{Error, Result};

/// Complex number with rational parts.
#[derive(Clone, PartialEq, Eq)]
pub struct ComplexRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl ComplexRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        ComplexRational { re, im }
    }

    pub fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    fn from_f64(z: Complex64) -> Self {
        let conv = |x: f64| BigRational::from_float(x).unwrap_or_else(BigRational::zero);
        Self::new(conv(z.re), conv(z.im))
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        let d = o.norm_sq();
        if d.is_zero() {
            return None;
        }
        Some(Self::new(
            (&self.re * &o.re + &self.im * &o.im) / &d,
            (&self.im * &o.re - &self.re * &o.im) / &d,
        ))
    }

    fn round(&self, bits: u32) -> Self {
        Self::new(round_dyadic(&self.re, bits), round_dyadic(&self.im, bits))
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(to_f64(&self.re), to_f64(&self.im))
    }
}

impl fmt::Debug for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i", to_decimal(&self.re, 10), to_decimal(&self.im, 10))
    }
}

/// `(q(z), q'(z))` by Horner.
fn eval_with_derivative(q: &IntPoly, z: &ComplexRational) -> (ComplexRational, ComplexRational) {
    let mut v = ComplexRational::zero();
    let mut d = ComplexRational::zero();
    for c in q.coeffs_ascending().iter().rev() {
        d = d.mul(z).add(&v);
        v = v.mul(z);
        v.re += int(c.clone());
    }
    (v, d)
}

fn eval(q: &IntPoly, z: &ComplexRational) -> ComplexRational {
    let mut v = ComplexRational::zero();
    for c in q.coeffs_ascending().iter().rev() {
        v = v.mul(z);
        v.re += int(c.clone());
    }
    v
}

/// Aberth iteration in double precision from points on a circle.
fn aberth_f64(q: &IntPoly) -> Vec<Complex64> {
    let n = q.deg();
    let c: Vec<f64> = q.coeffs_ascending().iter().map(|x| x.to_f64().unwrap_or(0.0)).collect();
    let lc = c[n];
    let radius = (0..n)
        .map(|i| (c[i] / lc).abs().powf(1.0 / (n - i) as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3);
    let center = -c[n - 1] / (n as f64 * lc);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let a = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            Complex64::new(center, 0.0) + Complex64::from_polar(radius, a)
        })
        .collect();
    let horner = |x: Complex64| {
        let mut v = Complex64::new(0.0, 0.0);
        let mut d = Complex64::new(0.0, 0.0);
        for &ci in c.iter().rev() {
            d = d * x + v;
            v = v * x + ci;
        }
        (v, d)
    };
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (v, d) = horner(z[i]);
            if v == Complex64::new(0.0, 0.0) {
                continue;
            }
            let ratio = v / d;
            let s: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| 1.0 / (z[i] - z[j]))
                .sum();
            let w = ratio / (1.0 - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / z[i].norm().max(1.0));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// One Aberth sweep in exact arithmetic rounded to `bits`; returns the largest
/// correction norm squared.
fn aberth_exact_step(q: &IntPoly, z: &mut [ComplexRational], bits: u32) -> BigRational {
    let n = z.len();
    let mut worst = BigRational::zero();
    let one = ComplexRational::new(BigRational::one(), BigRational::zero());
    for i in 0..n {
        let (v, d) = eval_with_derivative(q, &z[i]);
        if v.re.is_zero() && v.im.is_zero() {
            continue;
        }
        let ratio = match v.div(&d) {
            Some(r) => r,
            None => continue,
        };
        let mut s = ComplexRational::zero();
        for j in 0..n {
            if j != i {
                if let Some(t) = one.div(&z[i].sub(&z[j])) {
                    s = s.add(&t);
                }
            }
        }
        let denom = one.sub(&ratio.mul(&s));
        let w = match ratio.div(&denom) {
            Some(w) => w.round(bits + 8),
            None => continue,
        };
        let nw = w.norm_sq();
        if nw > worst {
            worst = nw;
        }
        z[i] = z[i].sub(&w).round(bits);
    }
    worst
}

/// A closed disk with rational center and rational radius.
#[derive(Clone, Debug)]
pub struct ComplexDisk {
    pub center: ComplexRational,
    pub radius: BigRational,
}

impl ComplexDisk {
    /// Enclosure of `|z|` over the disk.
    pub fn modulus_bounds(&self, bits: u32) -> RatInterval {
        let c2 = self.center.norm_sq();
        let lo = sqrt_lower(&c2, bits) - &self.radius;
        let hi = sqrt_upper(&c2, bits) + &self.radius;
        RatInterval::new(lo.max(BigRational::zero()), hi)
    }

    /// Enclosure of `|z|^2` over the disk.
    pub fn modulus_sq_bounds(&self, bits: u32) -> RatInterval {
        self.modulus_bounds(bits).pow(2)
    }

    pub fn is_upper(&self) -> bool {
        self.center.im.is_positive()
    }
}

/// Disks, one per non-real root of a squarefree polynomial, each certified to
/// hold exactly one root and to avoid the real axis. Disks are returned in
/// conjugate pairs (upper first), ordered by real part of the center.
pub fn isolate_nonreal_roots(q: &IntPoly, bits: u32) -> Result<Vec<ComplexDisk>> {
    let n = q.deg();
    let real_count = SturmSequence::new(q).count_real();
    let nonreal = n - real_count;
    if nonreal == 0 {
        return Ok(Vec::new());
    }
    let mut approx: Vec<ComplexRational> = aberth_f64(q)
        .into_iter()
        .map(|z| {
            if z.is_finite() {
                ComplexRational::from_f64(z)
            } else {
                ComplexRational::from_f64(Complex64::new(0.5, 0.5))
            }
        })
        .collect();
    let mut bits = bits.max(64);
    loop {
        let tol = BigRational::new(BigInt::one(), BigInt::one() << (2 * bits - 8));
        for _ in 0..60 {
            if aberth_exact_step(q, &mut approx, bits) < tol {
                break;
            }
        }
        if let Some(disks) = certify(q, &approx, nonreal, bits) {
            return Ok(disks);
        }
        if bits >= MAX_BITS {
            return Err(Error::PrecisionExhausted(MAX_BITS));
        }
        bits = (2 * bits).min(MAX_BITS);
    }
}

fn certify(
    q: &IntPoly,
    z: &[ComplexRational],
    nonreal: usize,
    bits: u32,
) -> Option<Vec<ComplexDisk>> {
    let n = z.len();
    let lc2 = int(q.leading_coeff() * q.leading_coeff());
    let n2 = int(BigInt::from(n * n));
    let mut radii = Vec::with_capacity(n);
    for i in 0..n {
        let mut prod = lc2.clone();
        for j in 0..n {
            if j != i {
                let d = z[i].sub(&z[j]).norm_sq();
                if d.is_zero() {
                    return None;
                }
                prod *= d;
            }
        }
        let r2 = &n2 * eval(q, &z[i]).norm_sq() / prod;
        radii.push(round_up(&sqrt_upper(&r2, bits + 16), bits + 8));
    }
    let mut disks = Vec::new();
    for i in 0..n {
        if z[i].im.abs() <= radii[i] {
            continue;
        }
        let isolated = (0..n).filter(|&j| j != i).all(|j| {
            let sum = &radii[i] + &radii[j];
            z[i].sub(&z[j]).norm_sq() > &sum * &sum
        });
        if isolated {
            disks.push(ComplexDisk {
                center: z[i].clone(),
                radius: radii[i].clone(),
            });
        }
    }
    if disks.len() != nonreal {
        return None;
    }
    disks.sort_by(|a, b| {
        a.center
            .re
            .cmp(&b.center.re)
            .then_with(|| b.center.im.cmp(&a.center.im))
    });
    Some(disks)
}

/// Smallest dyadic with `bits` fractional bits that is at least `x`.
fn round_up(x: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits;
    let n = (x * int(scale.clone())).ceil().to_integer();
    BigRational::new(n, scale)
}

/// One isolated root (real or non-real) with its multiplicity in the input.
#[derive(Clone, Debug)]
pub enum RootRegion {
    Real {
        root: AlgebraicReal,
        multiplicity: usize,
    },
    Complex {
        disk: ComplexDisk,
        /// Squarefree factor of the input that has this root.
        factor: IntPoly,
        multiplicity: usize,
    },
}

impl RootRegion {
    pub fn multiplicity(&self) -> usize {
        match self {
            RootRegion::Real { multiplicity, .. } | RootRegion::Complex { multiplicity, .. } => {
                *multiplicity
            }
        }
    }

    pub fn is_real(&self) -> bool {
        matches!(self, RootRegion::Real { .. })
    }

    /// Certified bounds on the root modulus.
    pub fn modulus_bounds(&self, bits: u32) -> RatInterval {
        match self {
            RootRegion::Real { root, .. } => root.enclosure(bits).abs(),
            RootRegion::Complex { disk, .. } => disk.modulus_bounds(bits),
        }
    }

    pub fn approx(&self) -> Complex64 {
        match self {
            RootRegion::Real { root, .. } => Complex64::new(root.to_f64(), 0.0),
            RootRegion::Complex { disk, .. } => disk.center.to_c64(),
        }
    }
}

/// All roots of `p` in disjoint certified regions, with multiplicities summing
/// to the degree. Real regions come first in increasing order.
pub fn isolate_roots(p: &IntPoly, bits: u32) -> Result<Vec<RootRegion>> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("zero polynomial".into()));
    }
    let mut real = Vec::new();
    let mut complex = Vec::new();
    for (factor, multiplicity) in p.squarefree_decomposition() {
        for root in AlgebraicReal::real_roots(&factor) {
            real.push(RootRegion::Real { root, multiplicity });
        }
        for disk in isolate_nonreal_roots(&factor, bits)? {
            complex.push(RootRegion::Complex {
                disk,
                factor: factor.clone(),
                multiplicity,
            });
        }
    }
    real.sort_by(|a, b| match (a, b) {
        (RootRegion::Real { root: x, .. }, RootRegion::Real { root: y, .. }) => x.cmp_exact(y),
        _ => unreachable!(),
    });
    real.extend(complex);
    Ok(real)
}

/// `|z|^2` for the root in `disk` as an exact real algebraic number, using
/// that it is a root of the pair-product polynomial of `factor`.
pub fn modulus_squared(
    factor: &IntPoly,
    pair_products: &IntPoly,
    disk: &ComplexDisk,
) -> Result<AlgebraicReal> {
    let mut bits = 64;
    let mut d = disk.clone();
    AlgebraicReal::from_enclosure(pair_products, |want| {
        while bits < want + 16 {
            bits *= 2;
            d = refine_disk(factor, &d, bits)?;
        }
        Ok(d.modulus_sq_bounds(bits))
    })
}

/// Re-isolate the root inside `disk` at higher precision.
pub fn refine_disk(factor: &IntPoly, disk: &ComplexDisk, bits: u32) -> Result<ComplexDisk> {
    let disks = isolate_nonreal_roots(factor, bits)?;
    let target = disk.center.clone();
    disks
        .into_iter()
        .filter(|c| {
            let sum = &c.radius + &disk.radius;
            c.center.sub(&target).norm_sq() <= &sum * &sum
        })
        .min_by(|a, b| a.radius.cmp(&b.radius))
        .ok_or_else(|| Error::Invariant("refined disk lost its root".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly::poly;
    use crate::exactpoly::rational::rat;

    #[test]
    fn plastic_number_pair() {
        let p = poly(&[1, 0, -1, -1]);
        let regions = isolate_roots(&p, 64).unwrap();
        assert_eq!(regions.len(), 3);
        assert!(regions[0].is_real());
        let m = regions[1].modulus_bounds(64);
        // modulus is rho^{-1/2} ~ 0.8688
        assert!(m.lo > rat(8688, 10000) && m.hi < rat(8689, 10000), "{m:?}");
        let r = regions[0].modulus_bounds(64);
        assert!(r.lo > rat(13247, 10000) && r.hi < rat(13248, 10000));
    }

    #[test]
    fn unit_circle_pair() {
        let regions = isolate_roots(&poly(&[1, 0, 1]), 64).unwrap();
        assert_eq!(regions.len(), 2);
        for r in &regions {
            let m = r.modulus_bounds(64);
            assert!(m.contains(&int(1)));
            assert!(m.width() < rat(1, 1 << 30));
        }
    }

    #[test]
    fn multiplicities_sum_to_degree() {
        let p = &poly(&[1, 0, 1]).pow(2) * &poly(&[1, -1, -1]);
        let regions = isolate_roots(&p, 64).unwrap();
        let total: usize = regions.iter().map(|r| r.multiplicity()).sum();
        assert_eq!(total, 6);
    }

    #[test]
    fn lehmer_polynomial() {
        let p = poly(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let regions = isolate_roots(&p, 64).unwrap();
        assert_eq!(regions.len(), 10);
        let unimodular = regions
            .iter()
            .filter(|r| r.modulus_bounds(64).contains(&int(1)))
            .count();
        assert_eq!(unimodular, 8);
    }

    #[test]
    fn exact_modulus_squared() {
        // t^3 - t - 1: |z|^2 = 1/rho for the complex pair
        let p = poly(&[1, 0, -1, -1]);
        let pp = crate::exactpoly::resultant::pair_product_polynomial(&p).unwrap();
        let disks = isolate_nonreal_roots(&p, 64).unwrap();
        let m2 = modulus_squared(&p, &pp, &disks[0]).unwrap();
        let rho = AlgebraicReal::largest_real_root(&p).unwrap();
        assert_eq!(m2.cmp_exact(&rho.recip().unwrap()), std::cmp::Ordering::Equal);
    }
}
