//! End-to-end certificates: bi-Perron units as Coxeter radii of bipartite
//! graphs and as stretch factors of Thurston products.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::One;

use super::product::{thurston_product, ThurstonProduct};
use crate::algnum::{classify, leading_power, max_root_modulus, power_trace, roots_in_circle_or_line, Classification};
use crate::coxeter::{certify_coxeter_eigenvector, coxeter_transform, CoxeterTransform};
use crate::error::{Error, Result};
use crate::exactpoly::{
    irreducible_factors, is_irreducible, power_polynomial, trace_transform_squarefree, AlgebraicReal, FieldElem,
    IntPoly, NumberField,
};
use crate::linalg::{certified_positive_eigenvector, spectral_radius, BipartiteGraph, Graph};
use crate::realize::hoffman::{blowup_class, certify_equitable, CHARPOLY_VERTEX_LIMIT};
use crate::realize::{
    find_symmetric_q, hoffman_bipartite, integral, run_pipeline, PipelineTrace, StepOne, StepOneConfig,
};

/// The totally real polynomial handed to Step 1 for a bi-Perron input.
#[derive(Clone, Debug)]
pub struct BiPerronTarget {
    pub input: IntPoly,
    pub classification: Classification,
    /// 2 when `-1/lambda` is a conjugate, otherwise 1.
    pub j: u32,
    /// Minimal polynomial of `lambda^j + lambda^-j`.
    pub f: IntPoly,
}

#[derive(Clone, Debug)]
pub struct RealizationCertificate {
    pub target: BiPerronTarget,
    pub pipeline: PipelineTrace,
    pub graph: BipartiteGraph,
    /// `lambda^(2jk)`, the Coxeter spectral radius of `graph`.
    pub coxeter_radius: AlgebraicReal,
    pub thurston: ThurstonProduct,
    pub power_realized: u32,
    pub checks: Vec<(String, bool)>,
}

impl RealizationCertificate {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

pub fn biperron_target(p: &IntPoly) -> Result<BiPerronTarget> {
    let classification = classify(p)?;
    if !classification.is_bi_perron {
        return Err(Error::Precondition(format!("{} is not bi-Perron", classification.minpoly.to_text())));
    }
    if !classification.conjugates_in_s1_union_r {
        return Err(Error::Precondition(format!(
            "{} has conjugates off the unit circle and the real line",
            classification.minpoly.to_text()
        )));
    }
    let j = if classification.has_minus_inverse_conjugate { 2 } else { 1 };
    let f = power_trace(&classification.minpoly, j)?.minpoly();
    Ok(BiPerronTarget {
        input: classification.minpoly.clone(),
        classification,
        j,
        f,
    })
}

/// Search for the Step 1 matrix, then run the whole construction.
pub fn realize_biperron(p: &IntPoly, cfg: &StepOneConfig) -> Result<RealizationCertificate> {
    let target = biperron_target(p)?;
    let step_one = find_symmetric_q(&target.f, cfg)?;
    realize_from_step_one(target, step_one, cfg.k_max)
}

pub fn realize_from_step_one(target: BiPerronTarget, step_one: StepOne, k_max: u32) -> Result<RealizationCertificate> {
    let p = target.input.clone();
    let j = target.j;
    let pipeline = run_pipeline(&target.f, j == 2, step_one, k_max)?;
    let mut checks = pipeline.checks.clone();
    let k = pipeline.k;

    let r = spectral_radius(&pipeline.q_k)?;
    let expected_r = power_trace(&p, j * k)?;
    checks.push((
        "rho(Q_k) = lambda^(jk) + lambda^(-jk)".into(),
        r.minpoly() == expected_r.minpoly() && r.cmp_exact(&expected_r) == Ordering::Equal,
    ));

    let graph = hoffman_bipartite(&integral(&pipeline.q_k))
        .map_err(|e| Error::inconclusive("hoffman_bipartite", e.to_string()))?;
    let power_realized = 2 * j * k;
    let expected = leading_power(&p, power_realized)?;
    let coxeter_radius = if graph.n() <= CHARPOLY_VERTEX_LIMIT {
        let radius = coxeter_transform(&graph).spectral_radius()?;
        checks.push((
            format!("Coxeter spectral radius = lambda^{power_realized}"),
            radius.cmp_exact(&expected) == Ordering::Equal,
        ));
        radius
    } else {
        let ok = certify_large_graph(&graph, &pipeline, &r, &leading_power(&p, j * k)?).is_ok();
        checks.push((format!("Coxeter eigenvector for lambda^{power_realized}, radius by Perron-Frobenius"), ok));
        expected.clone()
    };

    let thurston = thurston_product(&r)?;
    checks.extend(thurston.checks()?);
    checks.push((
        format!("Thurston stretch = lambda^{power_realized}"),
        thurston.stretch().is_some_and(|s| s.cmp_exact(&expected) == Ordering::Equal),
    ));

    let cert = RealizationCertificate {
        target,
        pipeline,
        graph,
        coxeter_radius: coxeter_radius.minimal(),
        thurston,
        power_realized,
        checks,
    };
    if !cert.all_checks_pass() {
        return Err(Error::Invariant(format!("certificate checks failed: {:?}", cert.checks)));
    }
    Ok(cert)
}

/// Exact eigenvector certificate for graphs too large for characteristic
/// polynomials: the Perron vector of `Q_k` lifted to the blow-up, checked
/// over `Q(nu)` with `nu = lambda^(jk)`.
fn certify_large_graph(g: &BipartiteGraph, tr: &PipelineTrace, r: &AlgebraicReal, nu: &AlgebraicReal) -> Result<()> {
    let m = integral(&tr.q_k);
    certify_equitable(&m, g)?;
    let k = NumberField::new(nu);
    let alpha = k.add(&k.gen(), &k.inv(&k.gen())?);
    let perron = certified_positive_eigenvector(&m.to_rat(), r)?;
    let u: Vec<FieldElem> = perron.vector.iter().map(|x| k.embed(x, &alpha)).collect();
    let class = blowup_class(g, m.rows()).ok_or_else(|| Error::Invariant("not a blow-up".into()))?;
    let v: Vec<FieldElem> = (0..g.n()).map(|x| u[class(x)].clone()).collect();
    certify_coxeter_eigenvector(g, &k, &k.gen(), &v)
}

/// A tree whose Coxeter transformation has `lambda^2` as an eigenvalue.
#[derive(Clone, Debug)]
pub struct TreeRealization {
    pub input: IntPoly,
    /// Minimal polynomial of `lambda + 1/lambda`, an adjacency eigenvalue.
    pub mu_minpoly: IntPoly,
    pub tree: Graph,
    pub coxeter: CoxeterTransform,
    /// Minimal polynomial of `lambda^2`.
    pub lambda_sq_minpoly: IntPoly,
    pub eigenvalue_verified: bool,
}

pub fn realize_conjugate_tree(p: &IntPoly, max_vertices: usize) -> Result<TreeRealization> {
    let p = p.primitive_part();
    if p.is_constant() || !is_irreducible(&p) {
        return Err(Error::Reducible(p.to_text()));
    }
    if !roots_in_circle_or_line(&p)? {
        return Err(Error::Precondition(format!(
            "{} has roots off the unit circle and the real line",
            p.to_text()
        )));
    }
    if max_root_modulus(&p)?.cmp_rational(&BigRational::one()) != Ordering::Greater {
        return Err(Error::Precondition(format!("{} has no root of modulus above 1", p.to_text())));
    }
    let mu_minpoly = trace_transform_squarefree(&p)?;
    let tree = crate::realize::find_tree_with_eigenvalue(&mu_minpoly, max_vertices)?;
    let coxeter = coxeter_transform(&tree.bipartition()?);
    let cox = coxeter.charpoly();
    let factors = irreducible_factors(&power_polynomial(&p, 2)?);
    let eigenvalue_verified = !factors.is_empty() && factors.iter().all(|f| f.divides(&cox));
    if !eigenvalue_verified {
        return Err(Error::Invariant("tree Coxeter polynomial misses lambda^2".into()));
    }
    Ok(TreeRealization {
        input: p,
        mu_minpoly,
        tree,
        coxeter,
        lambda_sq_minpoly: factors[0].clone(),
        eigenvalue_verified,
    })
}
