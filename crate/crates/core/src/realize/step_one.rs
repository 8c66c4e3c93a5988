//! Search for a symmetric matrix with prescribed characteristic polynomial
//! and a positive top eigenvector.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactpoly::{AlgebraicReal, IntPoly, SturmSequence};
use crate::linalg::{certified_positive_eigenvector, EigenvectorCertificate, IntMatrix, RatMatrix, SymRatMatrix};

/// Bounds for the Step 1 search and the positivity search that follows it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StepOneConfig {
    pub max_dimension: usize,
    /// Bound on `|entry|` for the integer search.
    pub max_entry: i64,
    /// Allowed padding exponents `e` in `f (t - 1)^e`.
    pub allow_e: Vec<usize>,
    pub cayley_attempts: usize,
    pub k_max: u32,
}

impl Default for StepOneConfig {
    fn default() -> Self {
        StepOneConfig {
            max_dimension: 5,
            max_entry: 3,
            allow_e: vec![0, 1, 2],
            cayley_attempts: 200,
            k_max: 12,
        }
    }
}

impl StepOneConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_dimension == 0 || self.max_entry <= 0 || self.k_max == 0 {
            return Err(Error::InvalidArgument("search bounds must be positive".into()));
        }
        if self.allow_e.is_empty() || self.allow_e.iter().any(|&e| e > 2) {
            return Err(Error::InvalidArgument("allow_e must be a nonempty subset of {0, 1, 2}".into()));
        }
        Ok(())
    }
}

/// How the Step 1 matrix was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepOneSource {
    IntegerSearch,
    Cayley,
    Supplied,
}

impl StepOneSource {
    pub fn parse(name: &str) -> Option<Self> {
        [StepOneSource::IntegerSearch, StepOneSource::Cayley, StepOneSource::Supplied]
            .into_iter()
            .find(|s| s.name() == name)
    }

    pub fn name(self) -> &'static str {
        match self {
            StepOneSource::IntegerSearch => "integer-search",
            StepOneSource::Cayley => "cayley",
            StepOneSource::Supplied => "supplied",
        }
    }
}

#[derive(Clone, Debug)]
pub struct StepOne {
    pub q: SymRatMatrix,
    pub e: usize,
    pub source: StepOneSource,
    /// Top eigenvalue `mu`, the largest root of `f`.
    pub mu: AlgebraicReal,
    pub eigenvector: EigenvectorCertificate,
}

/// Largest root of `f`, which must be squarefree, totally real, and exceed 2.
pub fn top_root(f: &IntPoly) -> Result<AlgebraicReal> {
    let f = f.primitive_part();
    if f.is_constant() {
        return Err(Error::InvalidArgument("f must have positive degree".into()));
    }
    if !f.is_squarefree() {
        return Err(Error::Precondition(format!("{} is not squarefree", f.to_text())));
    }
    if SturmSequence::new(&f).count_real() != f.deg() {
        return Err(Error::Precondition(format!("{} is not totally real", f.to_text())));
    }
    let mu = AlgebraicReal::largest_real_root(&f).expect("totally real");
    if mu.cmp_rational(&BigRational::from_integer(2.into())) != Ordering::Greater {
        return Err(Error::Precondition(format!("largest root of {} is not above 2", f.to_text())));
    }
    Ok(mu)
}

fn padded_target(f: &IntPoly, e: usize) -> IntPoly {
    &f.primitive_part() * &IntPoly::from_descending([1, -1]).pow(e)
}

/// Check a supplied matrix against the Step 1 contract and certify its top
/// eigenvector.
pub fn accept_supplied_q(f: &IntPoly, q: &SymRatMatrix) -> Result<StepOne> {
    accept_q(f, q, StepOneSource::Supplied)
}

/// As [`accept_supplied_q`], keeping a previously recorded provenance.
pub fn accept_q(f: &IntPoly, q: &SymRatMatrix, source: StepOneSource) -> Result<StepOne> {
    let mu = top_root(f)?;
    let n = f.deg();
    if q.dim() < n || q.dim() > n + 2 {
        return Err(Error::Precondition("supplied matrix has the wrong size".into()));
    }
    let e = q.dim() - n;
    let target = padded_target(f, e);
    let cp = q.charpoly();
    if cp != target {
        return Err(Error::Precondition(format!(
            "supplied matrix has characteristic polynomial {}, expected {}",
            cp.to_text(),
            target.to_text()
        )));
    }
    let eigenvector = certified_positive_eigenvector(q, &mu)?;
    if !eigenvector.positive {
        return Err(Error::Precondition("supplied matrix has no positive top eigenvector".into()));
    }
    Ok(StepOne {
        q: q.clone(),
        e,
        source,
        mu,
        eigenvector,
    })
}

/// Outcome of scanning one branch of the integer search.
#[derive(Default)]
struct BranchHits {
    positive: Option<(IntMatrix, EigenvectorCertificate)>,
    /// Matching matrices whose top eigenvector is not positive, in order.
    others: Vec<IntMatrix>,
}

const CAYLEY_BASES: usize = 4;

struct Search<'a> {
    d: usize,
    bound: i64,
    target: &'a IntPoly,
    mu: &'a AlgebraicReal,
    trace: i64,
    /// `sum of eigenvalues squared`
    p2: i64,
    /// Power sums `tr(Q^k)` of the target for `k = 1..=d`.
    power_sums: Vec<i128>,
}

impl Search<'_> {
    fn off_positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.d {
            for j in i + 1..self.d {
                out.push((i, j));
            }
        }
        out
    }

    fn values(&self) -> impl Iterator<Item = i64> {
        (-self.bound..=self.bound).rev()
    }

    /// Scan every completion of the fixed off-diagonal prefix.
    fn scan(&self, prefix: &[i64], hits: &mut BranchHits) {
        let positions = self.off_positions();
        let mut off = prefix.to_vec();
        self.scan_off(&positions, &mut off, hits);
    }

    fn scan_off(&self, positions: &[(usize, usize)], off: &mut Vec<i64>, hits: &mut BranchHits) {
        if hits.positive.is_some() {
            return;
        }
        let s: i64 = off.iter().map(|x| x * x).sum();
        // the diagonal contributes at least trace^2 / d to the sum of squares
        let diag_min = (self.trace * self.trace + self.d as i64 - 1) / self.d as i64;
        if 2 * s + diag_min > self.p2 {
            return;
        }
        if off.len() == positions.len() {
            let remaining = self.p2 - 2 * s;
            let mut diag = Vec::with_capacity(self.d);
            self.scan_diag(positions, off, &mut diag, remaining, hits);
            return;
        }
        for v in self.values().collect::<Vec<_>>() {
            off.push(v);
            self.scan_off(positions, off, hits);
            off.pop();
            if hits.positive.is_some() {
                return;
            }
        }
    }

    fn scan_diag(
        &self,
        positions: &[(usize, usize)],
        off: &[i64],
        diag: &mut Vec<i64>,
        remaining: i64,
        hits: &mut BranchHits,
    ) {
        let used: i64 = diag.iter().map(|x| x * x).sum();
        if used > remaining {
            return;
        }
        if diag.len() + 1 == self.d {
            let last = self.trace - diag.iter().sum::<i64>();
            if last.abs() > self.bound || used + last * last != remaining {
                return;
            }
            diag.push(last);
            self.test(positions, off, diag, hits);
            diag.pop();
            return;
        }
        for v in self.values().collect::<Vec<_>>() {
            diag.push(v);
            self.scan_diag(positions, off, diag, remaining, hits);
            diag.pop();
            if hits.positive.is_some() {
                return;
            }
        }
    }

    /// Newton's identities: equal power sums up to `d` mean equal
    /// characteristic polynomials, and machine integers suffice at this size.
    fn power_sums_match(&self, positions: &[(usize, usize)], off: &[i64], diag: &[i64]) -> bool {
        let d = self.d;
        let mut q = vec![vec![0i128; d]; d];
        for (i, &v) in diag.iter().enumerate() {
            q[i][i] = v as i128;
        }
        for (&(i, j), &v) in positions.iter().zip(off) {
            q[i][j] = v as i128;
            q[j][i] = v as i128;
        }
        let mut pow = q.clone();
        for k in 2..=d {
            let mut next = vec![vec![0i128; d]; d];
            for i in 0..d {
                for j in 0..d {
                    next[i][j] = (0..d).map(|l| pow[i][l] * q[l][j]).sum();
                }
            }
            pow = next;
            let tr: i128 = (0..d).map(|i| pow[i][i]).sum();
            if tr != self.power_sums[k - 1] {
                return false;
            }
        }
        true
    }

    fn test(&self, positions: &[(usize, usize)], off: &[i64], diag: &[i64], hits: &mut BranchHits) {
        if !self.power_sums_match(positions, off, diag) {
            return;
        }
        let mut m = IntMatrix::zeros(self.d, self.d);
        for (i, &v) in diag.iter().enumerate() {
            m.set(i, i, BigInt::from(v));
        }
        for (&(i, j), &v) in positions.iter().zip(off) {
            m.set(i, j, BigInt::from(v));
            m.set(j, i, BigInt::from(v));
        }
        if m.charpoly() != *self.target {
            return;
        }
        match certified_positive_eigenvector(&m.to_rat(), self.mu) {
            Ok(c) if c.positive => hits.positive = Some((m, c)),
            Ok(_) => {
                if hits.others.len() < CAYLEY_BASES {
                    hits.others.push(m);
                }
            }
            Err(_) => {}
        }
    }
}

/// `p_k = sum of k-th powers of the roots` of a monic polynomial, `k = 1..=deg`,
/// or `None` on overflow.
fn newton_power_sums(p: &IntPoly) -> Option<Vec<i128>> {
    let d = p.deg();
    // c[i] is the coefficient of t^(d - i)
    let c: Vec<i128> = (0..=d).map(|i| i128::try_from(p.coeff(d - i)).ok()).collect::<Option<_>>()?;
    let mut ps: Vec<i128> = Vec::with_capacity(d);
    for k in 1..=d {
        let mut acc = (k as i128).checked_mul(c[k])?.checked_neg()?;
        for i in 1..k {
            acc = acc.checked_sub(c[i].checked_mul(ps[k - i - 1])?)?;
        }
        ps.push(acc);
    }
    Some(ps)
}

/// Rational skew-symmetric seeds in a fixed order: entries from a value list,
/// grouped by the largest value index used.
pub fn cayley_seeds(d: usize) -> impl Iterator<Item = RatMatrix> {
    let values: Vec<BigRational> = [(1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2), (3, 1), (-3, 1), (1, 3), (-1, 3)]
        .iter()
        .map(|&(a, b)| BigRational::new(a.into(), b.into()))
        .collect();
    let m = d * (d - 1) / 2;
    let levels = values.len();
    (1..=levels).flat_map(move |level| {
        let values = values.clone();
        // index 0 is zero, index i is values[i - 1]
        let total = (level + 1).pow(m as u32);
        (0..total).filter_map(move |mut code| {
            let mut idx = Vec::with_capacity(m);
            for _ in 0..m {
                idx.push(code % (level + 1));
                code /= level + 1;
            }
            idx.reverse();
            if !idx.contains(&level) {
                return None;
            }
            let mut s = RatMatrix::zeros(d, d);
            let mut p = 0;
            for i in 0..d {
                for j in i + 1..d {
                    if idx[p] > 0 {
                        let v = values[idx[p] - 1].clone();
                        s.set(j, i, -v.clone());
                        s.set(i, j, v);
                    }
                    p += 1;
                }
            }
            Some(s)
        })
    })
}

/// `U^T q U` for the Cayley transform `U = (I - S)(I + S)^-1` of a
/// skew-symmetric `S`.
pub fn cayley_orthogonal_conjugate(q: &SymRatMatrix, s: &RatMatrix) -> Result<SymRatMatrix> {
    if s.transpose() != s.scale(&-BigRational::one()) {
        return Err(Error::InvalidArgument("Cayley seed must be skew-symmetric".into()));
    }
    let id = RatMatrix::identity(q.dim());
    let u = id.sub(s).mul(&id.add(s).inverse()?);
    SymRatMatrix::new(u.transpose().mul(q).mul(&u))
}

/// Step 1 with Step 2 folded in: a symmetric matrix with characteristic
/// polynomial `f (t - 1)^e` whose top eigenvector is certified positive.
pub fn find_symmetric_q(f: &IntPoly, cfg: &StepOneConfig) -> Result<StepOne> {
    cfg.validate()?;
    let f = f.primitive_part();
    let mu = top_root(&f)?;
    let n = f.deg();
    let mut fallback: Vec<(usize, IntMatrix)> = Vec::new();
    for &e in &cfg.allow_e {
        let d = n + e;
        if d > cfg.max_dimension {
            continue;
        }
        let target = padded_target(&f, e);
        if !target.is_monic() {
            break;
        }
        let (Some(trace), Some(e2)) = (
            i64::try_from(-target.coeff(d - 1)).ok(),
            i64::try_from(if d >= 2 { target.coeff(d - 2) } else { BigInt::zero() }).ok(),
        ) else {
            continue;
        };
        let Some(power_sums) = newton_power_sums(&target) else {
            continue;
        };
        let search = Search {
            d,
            bound: cfg.max_entry,
            target: &target,
            mu: &mu,
            trace,
            p2: trace * trace - 2 * e2,
            power_sums,
        };
        let branches: Vec<Vec<i64>> = if d >= 2 {
            search.values().map(|v| vec![v]).collect()
        } else {
            vec![Vec::new()]
        };
        let results: Vec<BranchHits> = branches
            .par_iter()
            .map(|prefix| {
                let mut hits = BranchHits::default();
                search.scan(prefix, &mut hits);
                hits
            })
            .collect();
        for hits in &results {
            if let Some((m, c)) = &hits.positive {
                return Ok(StepOne {
                    q: SymRatMatrix::new(m.to_rat())?,
                    e,
                    source: StepOneSource::IntegerSearch,
                    mu,
                    eigenvector: c.clone(),
                });
            }
        }
        for hits in results {
            for m in hits.others {
                if fallback.len() < CAYLEY_BASES {
                    fallback.push((e, m));
                }
            }
        }
    }
    let mut attempts = 0;
    for (e, base) in &fallback {
        let q = SymRatMatrix::new(base.to_rat())?;
        for s in cayley_seeds(q.dim()) {
            if attempts >= cfg.cayley_attempts {
                break;
            }
            attempts += 1;
            let Ok(conj) = cayley_orthogonal_conjugate(&q, &s) else {
                continue;
            };
            let c = certified_positive_eigenvector(&conj, &mu)?;
            if c.positive {
                return Ok(StepOne {
                    q: conj,
                    e: *e,
                    source: StepOneSource::Cayley,
                    mu,
                    eigenvector: c,
                });
            }
        }
    }
    Err(Error::inconclusive(
        "find_symmetric_q",
        format!(
            "no symmetric matrix with characteristic polynomial {} (t-1)^e, dimension <= {}, |entries| <= {} and positive top eigenvector; {} matching bases, {} Cayley attempts; enlarge StepOneConfig",
            f.to_text(),
            cfg.max_dimension,
            cfg.max_entry,
            fallback.len(),
            attempts
        ),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly::poly;

    #[test]
    fn power_sums() {
        assert_eq!(newton_power_sums(&poly(&[1, -3, 1])), Some(vec![3, 7]));
        assert_eq!(newton_power_sums(&poly(&[1, 0, -5])), Some(vec![0, 10]));
    }

    #[test]
    fn known_examples() {
        let cfg = StepOneConfig::default();
        let s = find_symmetric_q(&poly(&[1, -3]), &cfg).unwrap();
        assert_eq!(*s.q.matrix(), RatMatrix::from_i64(&[&[3]]));
        assert_eq!(s.e, 0);
        let s = find_symmetric_q(&poly(&[1, -1, -3]), &cfg).unwrap();
        assert_eq!(*s.q.matrix(), RatMatrix::from_i64(&[&[2, 1], &[1, -1]]));
        let s = find_symmetric_q(&poly(&[1, 0, -5]), &cfg).unwrap();
        assert_eq!(*s.q.matrix(), RatMatrix::from_i64(&[&[1, 2], &[2, -1]]));
        assert!(s.eigenvector.positive);
    }

    #[test]
    fn preconditions() {
        let cfg = StepOneConfig::default();
        // s^2 + 1 is not totally real; s - 2 has top root 2
        assert!(matches!(find_symmetric_q(&poly(&[1, 0, 1]), &cfg), Err(Error::Precondition(_))));
        assert!(matches!(find_symmetric_q(&poly(&[1, -2]), &cfg), Err(Error::Precondition(_))));
    }

    #[test]
    fn cayley_keeps_spectrum_and_can_fix_positivity() {
        let q = SymRatMatrix::from_i64(&[&[1, 0], &[0, 2]]).unwrap();
        let zero = RatMatrix::zeros(2, 2);
        assert_eq!(cayley_orthogonal_conjugate(&q, &zero).unwrap(), q);
        let s = RatMatrix::from_i64(&[&[0, 1], &[-1, 0]]);
        let c = cayley_orthogonal_conjugate(&q, &s).unwrap();
        assert_eq!(c.charpoly(), poly(&[1, -3, 2]));
        let two = AlgebraicReal::from_integer(2);
        assert!(!certified_positive_eigenvector(&q, &two).unwrap().positive);
        let found = cayley_seeds(2)
            .filter_map(|s| cayley_orthogonal_conjugate(&q, &s).ok())
            .find(|c| certified_positive_eigenvector(c, &two).unwrap().positive);
        assert!(found.is_some());
    }
}
