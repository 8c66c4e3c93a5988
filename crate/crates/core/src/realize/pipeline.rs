use num_rational::BigRational;
use num_traits::{One, Signed};

use super::step_one::{StepOne, StepOneSource};
use crate::error::{Error, Result};
use crate::exactpoly::{untrace_transform, AlgebraicReal, IntPoly, NumberField};
use crate::linalg::{RatMatrix, SymRatMatrix};

/// `M = [[Q, -I], [I, 0]]`.
pub fn build_m(q: &SymRatMatrix) -> RatMatrix {
    let n = q.dim();
    let id = RatMatrix::identity(n);
    RatMatrix::from_blocks(q, &id.scale(&-BigRational::one()), &id, &RatMatrix::zeros(n, n))
}

/// `M^-1 = [[0, I], [-I, Q]]`.
pub fn inverse_m(q: &SymRatMatrix) -> RatMatrix {
    let n = q.dim();
    let id = RatMatrix::identity(n);
    RatMatrix::from_blocks(&RatMatrix::zeros(n, n), &id, &id.scale(&-BigRational::one()), q)
}

/// `Q_k` from `Q_0 = 2I`, `Q_1 = Q`, `Q_{k+1} = Q Q_k - Q_{k-1}`.
pub fn block_qk(q: &SymRatMatrix, k: u32) -> SymRatMatrix {
    let mut prev = RatMatrix::identity(q.dim()).scale(&BigRational::from_integer(2.into()));
    let mut cur = q.matrix().clone();
    if k == 0 {
        return SymRatMatrix::new(prev).expect("scalar matrix");
    }
    for _ in 1..k {
        let next = q.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    SymRatMatrix::new(cur).expect("polynomial in a symmetric matrix")
}

/// `Q_k` read off the diagonal blocks of `M^k + M^-k`, checking that the
/// result really is block diagonal with two equal blocks.
pub fn block_qk_by_powers(q: &SymRatMatrix, k: u32) -> Result<SymRatMatrix> {
    let n = q.dim();
    let s = build_m(q).pow(k).add(&inverse_m(q).pow(k));
    let a = s.block(0, n, 0, n);
    let zero = RatMatrix::zeros(n, n);
    if s.block(n, 2 * n, n, 2 * n) != a || s.block(0, n, n, 2 * n) != zero || s.block(n, 2 * n, 0, n) != zero {
        return Err(Error::Invariant(format!("M^{k} + M^-{k} is not block diagonal with equal blocks")));
    }
    SymRatMatrix::new(a)
}

/// Minimal polynomial of `D_k(mu) = z^k + z^-k` where `mu = z + 1/z`,
/// computed in `Q(mu)` through the Dickson recurrence.
pub fn dickson_minpoly(mu: &AlgebraicReal, k: u32) -> Result<IntPoly> {
    let field = NumberField::new(mu);
    let mut prev = field.from_int(2);
    let mut cur = field.gen();
    for _ in 1..k {
        let next = field.sub(&field.mul(&field.gen(), &cur), &prev);
        prev = cur;
        cur = next;
    }
    let value = if k == 0 { prev } else { cur };
    Ok(field.to_real(&value)?.minpoly())
}

fn is_positive_integral(m: &RatMatrix) -> bool {
    m.entries().all(|x| x.is_integer() && x.is_positive())
}

/// Smallest `k <= k_max` with `Q_k` entrywise positive and integral.
pub fn find_realizing_k(q: &SymRatMatrix, k_max: u32) -> Result<(u32, SymRatMatrix)> {
    let mut prev = RatMatrix::identity(q.dim()).scale(&BigRational::from_integer(2.into()));
    let mut cur = q.matrix().clone();
    for k in 1..=k_max {
        if is_positive_integral(&cur) {
            return Ok((k, SymRatMatrix::new(cur)?));
        }
        let next = q.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    Err(Error::inconclusive(
        "find_realizing_k",
        format!(
            "no Q_k with k <= {k_max} is positive and integral; {}",
            growth_diagnostic(q)
        ),
    ))
}

/// Advisory floating-point ratio `|mu_2| / mu` governing how fast `Q_k`
/// aligns with its top eigenvector.
fn growth_diagnostic(q: &SymRatMatrix) -> String {
    let roots = crate::exactpoly::isolate_roots(&q.charpoly(), 64);
    let Ok(roots) = roots else {
        return "eigenvalue ratio unavailable".into();
    };
    let mut mods: Vec<f64> = roots.iter().map(|r| r.approx().norm()).collect();
    mods.sort_by(|a, b| b.total_cmp(a));
    match mods.as_slice() {
        [top, second, ..] => format!(
            "second eigenvalue ratio |mu_2|/mu = {:.6}; ratio 1 means Q_k never aligns with the top eigenvector",
            second / top
        ),
        _ => "single eigenvalue".into(),
    }
}

/// Steps 1 through 6 for one totally real `f`.
#[derive(Clone, Debug)]
pub struct PipelineTrace {
    pub f: IntPoly,
    pub used_square: bool,
    pub q: SymRatMatrix,
    pub e: usize,
    pub source: StepOneSource,
    pub m: RatMatrix,
    pub k: u32,
    pub q_k: SymRatMatrix,
    pub step_one: StepOne,
    /// Named identities checked while building the trace.
    pub checks: Vec<(String, bool)>,
}

/// Run Steps 3 to 6 on an accepted Step 1 matrix.
pub fn run_pipeline(f: &IntPoly, used_square: bool, step_one: StepOne, k_max: u32) -> Result<PipelineTrace> {
    let q = step_one.q.clone();
    let e = step_one.e;
    let m = build_m(&q);
    let mut checks = Vec::new();

    let det_ok = m.det() == BigRational::one();
    checks.push(("det(M) = 1".to_string(), det_ok));
    let expected = &untrace_transform(f) * &IntPoly::from_descending([1, -1, 1]).pow(e);
    let cp_ok = m.charpoly() == expected.primitive_part();
    checks.push(("charpoly(M) = t^n f(t + 1/t) (t^2 - t + 1)^e".to_string(), cp_ok));
    let mut recurrence_ok = true;
    for j in 1..=4 {
        recurrence_ok &= block_qk_by_powers(&q, j)? == block_qk(&q, j);
    }
    checks.push(("Q_k recurrence matches M^k + M^-k for k <= 4".to_string(), recurrence_ok));
    if !(det_ok && cp_ok && recurrence_ok) {
        return Err(Error::Invariant(format!("pipeline identities failed: {checks:?}")));
    }

    let (k, q_k) = find_realizing_k(&q, k_max)?;
    let rho = crate::linalg::spectral_radius(&q_k)?;
    let two_path = rho.minpoly() == dickson_minpoly(&step_one.mu, k)?;
    checks.push(("minpoly(rho(Q_k)) = minpoly(D_k(mu))".to_string(), two_path));
    if !two_path {
        return Err(Error::Invariant("spectral radius of Q_k disagrees with the Dickson value".into()));
    }
    Ok(PipelineTrace {
        f: f.primitive_part(),
        used_square,
        q,
        e,
        source: step_one.source,
        m,
        k,
        q_k,
        step_one,
        checks,
    })
}

/// Integer matrix of `Q_k`, which `find_realizing_k` guarantees is integral.
pub fn integral(q: &SymRatMatrix) -> crate::linalg::IntMatrix {
    q.to_int().expect("Q_k is integral")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly::poly;
    use crate::realize::step_one::{find_symmetric_q, StepOneConfig};

    #[test]
    fn m_for_scalar_three() {
        let q = SymRatMatrix::from_i64(&[&[3]]).unwrap();
        assert_eq!(build_m(&q), RatMatrix::from_i64(&[&[3, -1], &[1, 0]]));
        assert_eq!(build_m(&q).charpoly(), poly(&[1, -3, 1]));
        let q2 = SymRatMatrix::from_i64(&[&[2]]).unwrap();
        assert_eq!(build_m(&q2).charpoly(), poly(&[1, -1]).pow(2));
        assert_eq!(build_m(&q).mul(&inverse_m(&q)), RatMatrix::identity(2));
    }

    #[test]
    fn salem_quartic_blocks() {
        let q = SymRatMatrix::from_i64(&[&[2, 1], &[1, -1]]).unwrap();
        assert_eq!(build_m(&q).charpoly(), poly(&[1, -1, -1, -1, 1]));
        assert_eq!(*block_qk(&q, 2).matrix(), RatMatrix::from_i64(&[&[3, 1], &[1, 0]]));
        assert_eq!(*block_qk(&q, 3).matrix(), RatMatrix::from_i64(&[&[5, 1], &[1, 2]]));
        for k in 1..=4 {
            assert_eq!(block_qk_by_powers(&q, k).unwrap(), block_qk(&q, k));
        }
        let (k, qk) = find_realizing_k(&q, 8).unwrap();
        assert_eq!(k, 3);
        assert_eq!(*qk.matrix(), RatMatrix::from_i64(&[&[5, 1], &[1, 2]]));
    }

    #[test]
    fn full_trace_for_salem_quartic() {
        let f = poly(&[1, -1, -3]);
        let s1 = find_symmetric_q(&f, &StepOneConfig::default()).unwrap();
        let t = run_pipeline(&f, false, s1, 8).unwrap();
        assert_eq!(t.k, 3);
        assert!(t.checks.iter().all(|(_, ok)| *ok));
    }

    #[test]
    fn never_positive_reports_growth() {
        let q = SymRatMatrix::from_i64(&[&[1, 2], &[2, -1]]).unwrap();
        match find_realizing_k(&q, 10) {
            Err(Error::Inconclusive { step, detail }) => {
                assert_eq!(step, "find_realizing_k");
                assert!(detail.contains("1.000000"), "{detail}");
            }
            other => panic!("expected inconclusive, got {other:?}"),
        }
    }
}
