use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::interval::RatInterval;
use super::poly::{sign_of, IntPoly};
use super::rational::{int, to_text};
use crate::error::{Error, Result};

/// Sturm sequence of an integer polynomial, built from primitive
/// negated pseudo-remainders (each term is a positive multiple of the
/// classical term, so sign variations are unchanged).
#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<IntPoly>,
}

impl SturmSequence {
    pub fn new(p: &IntPoly) -> Self {
        let mut seq = Vec::new();
        if p.is_zero() {
            return SturmSequence { seq };
        }
        seq.push(p.clone());
        let d = p.derivative();
        if d.is_zero() {
            return SturmSequence { seq };
        }
        seq.push(d);
        loop {
            let n = seq.len();
            let (a, b) = (&seq[n - 2], &seq[n - 1]);
            if b.is_constant() {
                break;
            }
            let r = a.pseudo_rem(b).expect("nonzero divisor");
            if r.is_zero() {
                break;
            }
            // prem = lc(b)^delta * rem; delta = deg a - deg b + 1
            let delta = a.deg() - b.deg() + 1;
            let lc_sign = sign_of(&b.leading_coeff());
            let factor_sign = if lc_sign < 0 && delta % 2 == 1 { -1 } else { 1 };
            let content = r.content();
            let mut next = IntPoly::from_ascending(
                r.coeffs_ascending().iter().map(|c| c / &content).collect(),
            );
            // next term is -rem, so negate unless the pseudo factor already flipped it
            if factor_sign > 0 {
                next = -next;
            }
            seq.push(next);
        }
        SturmSequence { seq }
    }

    pub fn poly(&self) -> &IntPoly {
        &self.seq[0]
    }

    fn count_variations(signs: impl Iterator<Item = i32>) -> usize {
        let mut last = 0;
        let mut v = 0;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::count_variations(self.seq.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::count_variations(self.seq.iter().map(|p| p.sign_at_pos_inf()))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::count_variations(self.seq.iter().map(|p| p.sign_at_neg_inf()))
    }

    /// Distinct real roots.
    pub fn count_real(&self) -> usize {
        if self.seq.is_empty() {
            return 0;
        }
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }

    /// Distinct roots in the half-open interval `(lo, hi]`.
    pub fn count_half_open(&self, lo: &BigRational, hi: &BigRational) -> usize {
        if self.seq.is_empty() || lo >= hi {
            return 0;
        }
        self.variations_at(lo).saturating_sub(self.variations_at(hi))
    }

    /// Distinct roots in the open interval `(lo, hi)`; endpoints must not be
    /// roots.
    pub fn count_open(&self, lo: &BigRational, hi: &BigRational) -> Result<usize> {
        for e in [lo, hi] {
            if self.poly().sign_at(e) == 0 {
                return Err(Error::EndpointIsRoot(to_text(e)));
            }
        }
        Ok(self.count_half_open(lo, hi))
    }

    /// Distinct roots in the closed interval `[lo, hi]`.
    pub fn count_closed(&self, lo: &BigRational, hi: &BigRational) -> usize {
        let at_lo = usize::from(self.poly().sign_at(lo) == 0);
        if lo == hi {
            return at_lo;
        }
        self.count_half_open(lo, hi) + at_lo
    }

    /// Distinct roots in `(-inf, x)` (`x` excluded).
    pub fn count_below(&self, x: &BigRational) -> usize {
        let at = usize::from(self.poly().sign_at(x) == 0);
        (self.variations_at_neg_inf() - self.variations_at(x)) - at
    }

    /// Distinct roots in `(x, +inf)`.
    pub fn count_above(&self, x: &BigRational) -> usize {
        self.variations_at(x) - self.variations_at_pos_inf()
    }
}

/// Number of distinct real roots of `p` in `(lo, hi)`; `None` stands for the
/// corresponding infinity.
pub fn sturm_real_root_count(
    p: &IntPoly,
    lo: Option<&BigRational>,
    hi: Option<&BigRational>,
) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("zero polynomial has infinitely many roots".into()));
    }
    let s = SturmSequence::new(p);
    for e in [lo, hi].into_iter().flatten() {
        if p.sign_at(e) == 0 {
            return Err(Error::EndpointIsRoot(to_text(e)));
        }
    }
    if let (Some(a), Some(b)) = (lo, hi) {
        if a >= b {
            return Err(Error::InvalidArgument("empty interval".into()));
        }
    }
    let va = match lo {
        Some(a) => s.variations_at(a),
        None => s.variations_at_neg_inf(),
    };
    let vb = match hi {
        Some(b) => s.variations_at(b),
        None => s.variations_at_pos_inf(),
    };
    Ok(va - vb)
}

/// Integer `B` with every complex root of `p` strictly inside `|z| < B`.
pub fn root_bound(p: &IntPoly) -> BigInt {
    let lc = p.leading_coeff().abs();
    let n = p.deg();
    let max = (0..n)
        .map(|i| p.coeff(i).abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    // Cauchy: |z| < 1 + max|c_i|/|c_n|
    max / lc + 2
}

/// A point in `(lo, hi)` near the middle that is not a root of `p`.
pub(crate) fn split_point(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> BigRational {
    let w = hi - lo;
    let mut mid = (lo + hi) / int(2);
    let mut k = 3u32;
    while p.sign_at(&mid) == 0 {
        mid = (lo + hi) / int(2) + &w / int(BigInt::from(1) << k);
        k += 1;
    }
    mid
}

/// Isolating intervals for the real roots of a squarefree polynomial, in
/// increasing order. Endpoints are never roots and each open interval holds
/// exactly one root.
pub fn isolate_real_roots(p: &IntPoly) -> Vec<RatInterval> {
    if p.is_constant() {
        return Vec::new();
    }
    let s = SturmSequence::new(p);
    let b = int(root_bound(p));
    let lo = -b.clone();
    let hi = b;
    let vlo = s.variations_at(&lo);
    let vhi = s.variations_at(&hi);
    let mut out = Vec::new();
    let mut stack = vec![(lo, vlo, hi, vhi)];
    while let Some((lo, vlo, hi, vhi)) = stack.pop() {
        let count = vlo - vhi;
        if count == 0 {
            continue;
        }
        if count == 1 {
            out.push(RatInterval::new(lo, hi));
            continue;
        }
        let mid = split_point(p, &lo, &hi);
        let vmid = s.variations_at(&mid);
        // push right first so the left half is processed first
        stack.push((mid.clone(), vmid, hi, vhi));
        stack.push((lo, vlo, mid, vmid));
    }
    out
}

/// Halve an isolating interval of a simple root of squarefree `p`.
pub fn bisect_isolating(p: &IntPoly, iv: &RatInterval) -> RatInterval {
    let mid = iv.midpoint();
    let sm = p.sign_at(&mid);
    if sm == 0 {
        let q = iv.width() / int(4);
        return RatInterval::new(&mid - &q, &mid + &q);
    }
    let slo = p.sign_at(&iv.lo);
    if slo != 0 && slo != sm {
        RatInterval::new(iv.lo.clone(), mid)
    } else {
        RatInterval::new(mid, iv.hi.clone())
    }
}
