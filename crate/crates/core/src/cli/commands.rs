//! Subcommand bodies. Each one is a function of its canonical input and
//! config JSON alone, so `verify` can replay an envelope without the
//! original command line.

use std::cmp::Ordering;

use serde_json::{json, Value};

use super::cache::{Cache, CacheStatus};
use super::envelope::hash_value;
use super::json::{algebraic, int_matrix, parse_poly_value, parse_rat_matrix_value, parse_rational_value, poly, rat_matrix, rational};
use crate::algnum::{classify, leading_power, trace_field_report, Classification};
use crate::coxeter::{coxeter_transform, verify_spectra_relation, RESIDUAL_TOLERANCE};
use crate::error::{Error, Result};
use crate::exactpoly::{power_polynomial, trace_transform_squarefree, AlgebraicReal, IntPoly, SturmSequence};
use crate::linalg::{connected_bipartite_graphs, trees, BipartiteGraph, SymRatMatrix};
use crate::realize::{accept_q, accept_supplied_q, find_symmetric_q, StepOne, StepOneConfig, StepOneSource};
use crate::thurston::{
    biperron_target, generate_small_biperron, realize_conjugate_tree, realize_from_step_one, thurston_product,
    ThurstonOutcome, ThurstonProduct,
};

pub type Checks = Vec<(String, bool)>;

/// Side channels for one execution: the Step 1 cache and warnings.
pub struct Context<'a> {
    pub cache: &'a Cache,
    pub warnings: Vec<String>,
    pub step_one_cache: CacheStatus,
    /// Replay a recorded Step 1 matrix instead of searching.
    pub step_one_override: Option<(SymRatMatrix, StepOneSource)>,
}

impl<'a> Context<'a> {
    pub fn new(cache: &'a Cache) -> Self {
        Context {
            cache,
            warnings: Vec::new(),
            step_one_cache: CacheStatus::NotUsed,
            step_one_override: None,
        }
    }
}

fn field<'v>(v: &'v Value, key: &str) -> Result<&'v Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("missing field `{key}`")))
}

fn uint(v: &Value, key: &str) -> Result<u64> {
    field(v, key)?
        .as_u64()
        .ok_or_else(|| Error::Parse(format!("field `{key}` must be a non-negative integer")))
}

fn bits(config: &Value) -> Result<u32> {
    Ok(uint(config, "precision_bits")? as u32)
}

fn opt_algebraic(a: Option<&AlgebraicReal>, b: u32) -> Value {
    a.map_or(Value::Null, |x| algebraic(x, b))
}

pub fn execute(command: &str, input: &Value, config: &Value, ctx: &mut Context) -> Result<(Value, Checks)> {
    match command {
        "classify" => classify_cmd(input, config),
        "tracefield" => tracefield_cmd(input, config),
        "powermin" => powermin_cmd(input, config),
        "realize" => realize_cmd(input, config, ctx),
        "coxeter" => coxeter_cmd(input, config),
        "thurston" => thurston_cmd(input, config),
        "tree-realize" => tree_cmd(input, config),
        "generate" => generate_cmd(input, config),
        "atlas" => atlas_cmd(input, config),
        other => Err(Error::InvalidArgument(format!("unknown command `{other}`"))),
    }
}

pub fn classification_json(c: &Classification, b: u32) -> Value {
    json!({
        "minpoly": poly(&c.minpoly),
        "is_unit": c.is_unit,
        "perron": c.is_perron,
        "bi_perron": c.is_bi_perron,
        "salem": c.is_salem,
        "reciprocal": c.is_reciprocal,
        "minus_inverse": c.has_minus_inverse_conjugate,
        "conjugates_in_s1_union_r": c.conjugates_in_s1_union_r,
        "totally_real": c.totally_real,
        "leading_root": opt_algebraic(c.leading_root.as_ref(), b),
    })
}

fn classify_cmd(input: &Value, config: &Value) -> Result<(Value, Checks)> {
    let p = parse_poly_value(field(input, "poly")?)?;
    let c = classify(&p)?;
    // the locus test is independent of the complex root isolation
    let t = trace_transform_squarefree(&c.minpoly)?;
    let via_trace = SturmSequence::new(&t).count_real() == t.deg();
    let checks = vec![
        ("S^1 u R test agrees with total reality of the trace polynomial".into(), via_trace == c.conjugates_in_s1_union_r),
        ("salem implies bi-Perron and reciprocal".into(), !c.is_salem || (c.is_bi_perron && c.is_reciprocal)),
        ("minus-inverse conjugate implies even degree".into(), !c.has_minus_inverse_conjugate || c.minpoly.deg() % 2 == 0),
    ];
    Ok((classification_json(&c, bits(config)?), checks))
}

fn tracefield_cmd(input: &Value, config: &Value) -> Result<(Value, Checks)> {
    let p = parse_poly_value(field(input, "poly")?)?;
    let r = trace_field_report(&p, uint(config, "k_max")? as u32)?;
    let degrees: serde_json::Map<String, Value> = r.degrees.iter().map(|(k, d)| (k.to_string(), json!(d))).collect();
    let result = json!({
        "minpoly": poly(&p.primitive_part()),
        "k_range": r.k_range,
        "degree": r.degree,
        "degrees": degrees,
        "parity_case": r.parity_case.name(),
    });
    Ok((result, r.identities))
}

fn powermin_cmd(input: &Value, config: &Value) -> Result<(Value, Checks)> {
    let p = parse_poly_value(field(input, "poly")?)?;
    let k = uint(config, "k")? as u32;
    let v = leading_power(&p, k)?;
    let all_powers = power_polynomial(&p.primitive_part(), k as usize)?;
    let checks = vec![
        ("degree preserved".into(), v.minpoly().deg() == p.deg()),
        ("minpoly divides the k-th power polynomial".into(), v.minpoly().divides(&all_powers)),
    ];
    let result = json!({ "k": k, "minpoly": poly(&v.minpoly()), "value": algebraic(&v, bits(config)?) });
    Ok((result, checks))
}

fn step_config(config: &Value) -> Result<StepOneConfig> {
    let allow_e = field(config, "allow_e")?
        .as_array()
        .ok_or_else(|| Error::Parse("`allow_e` must be an array".into()))?
        .iter()
        .map(|x| x.as_u64().map(|e| e as usize).ok_or_else(|| Error::Parse("bad `allow_e` entry".into())))
        .collect::<Result<Vec<_>>>()?;
    let cfg = StepOneConfig {
        max_dimension: uint(config, "max_dim")? as usize,
        max_entry: uint(config, "max_entry")? as i64,
        allow_e,
        cayley_attempts: uint(config, "cayley_attempts")? as usize,
        k_max: uint(config, "k_max")? as u32,
    };
    cfg.validate()?;
    Ok(cfg)
}

fn step_one_payload(s: &StepOne) -> Value {
    json!({ "q": rat_matrix(s.q.matrix()), "source": s.source.name() })
}

fn step_one_from_payload(f: &IntPoly, v: &Value) -> Result<StepOne> {
    let q = SymRatMatrix::new(parse_rat_matrix_value(field(v, "q")?)?)?;
    let source = field(v, "source")?
        .as_str()
        .and_then(StepOneSource::parse)
        .ok_or_else(|| Error::Parse("unknown Step 1 source".into()))?;
    accept_q(f, &q, source)
}

/// Step 1, from an override, a supplied matrix, the cache, or a search.
fn step_one(f: &IntPoly, input: &Value, cfg: &StepOneConfig, ctx: &mut Context) -> Result<StepOne> {
    if let Some((q, source)) = &ctx.step_one_override {
        return accept_q(f, q, *source);
    }
    if let Some(q) = input.get("q_matrix").filter(|v| !v.is_null()) {
        return accept_supplied_q(f, &SymRatMatrix::new(parse_rat_matrix_value(q)?)?);
    }
    let key = format!(
        "step-one-{}",
        hash_value(&json!({
            "f": poly(f),
            "max_dim": cfg.max_dimension,
            "max_entry": cfg.max_entry,
            "allow_e": cfg.allow_e,
            "cayley_attempts": cfg.cayley_attempts,
            "k_max": cfg.k_max,
        }))
    );
    let (hit, status) = ctx.cache.get(&key);
    ctx.step_one_cache = status;
    if let Some(v) = hit {
        match step_one_from_payload(f, &v) {
            Ok(s) => return Ok(s),
            Err(_) => ctx.step_one_cache = CacheStatus::Corrupt,
        }
    }
    if ctx.step_one_cache == CacheStatus::Corrupt {
        ctx.warnings.push(format!("cached Step 1 entry {key} failed verification; searching again"));
    }
    let s = find_symmetric_q(f, cfg)?;
    if let Some(w) = ctx.cache.put(&key, &step_one_payload(&s)) {
        ctx.warnings.push(w);
    }
    Ok(s)
}

pub fn thurston_json(t: &ThurstonProduct, b: u32) -> Value {
    let k = &t.field;
    let text = |x: &crate::exactpoly::FieldElem| Value::String(x.to_text("r"));
    let (outcome, reason) = match &t.outcome {
        ThurstonOutcome::PseudoAnosov { .. } => ("pseudo-anosov", Value::Null),
        ThurstonOutcome::NonPseudoAnosov { reason } => ("non-pseudo-anosov", Value::String(reason.clone())),
    };
    json!({
        "r": algebraic(&t.r, b),
        "field_modulus": poly(k.modulus()),
        "matrix": t.matrix.iter().map(|row| row.iter().map(text).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "trace": text(&t.trace),
        "determinant": text(&t.determinant),
        "outcome": outcome,
        "reason": reason,
        "stretch": opt_algebraic(t.stretch(), b),
        "leading_eigenvalue": opt_algebraic(t.stretch().map(|s| s.neg()).as_ref(), b),
    })
}

fn realize_cmd(input: &Value, config: &Value, ctx: &mut Context) -> Result<(Value, Checks)> {
    let p = parse_poly_value(field(input, "poly")?)?;
    let b = bits(config)?;
    let cfg = step_config(config)?;
    let max_vertices = uint(config, "max_vertices")? as usize;
    let target = biperron_target(&p)?;
    let s = step_one(&target.f, input, &cfg, ctx)?;
    let cert = realize_from_step_one(target, s, cfg.k_max)?;
    if cert.graph.n() > max_vertices {
        return Err(Error::inconclusive(
            "hoffman_bipartite",
            format!("graph has {} vertices, above --max-vertices {max_vertices}", cert.graph.n()),
        ));
    }
    let tr = &cert.pipeline;
    let ev = &tr.step_one.eigenvector;
    let result = json!({
        "input": poly(&cert.target.input),
        "classification": classification_json(&cert.target.classification, b),
        "used_square": tr.used_square,
        "j": cert.target.j,
        "f": poly(&tr.f),
        "q": rat_matrix(tr.q.matrix()),
        "e": tr.e,
        "source": tr.source.name(),
        "mu": algebraic(&tr.step_one.mu, b),
        "eigenvector": ev.vector.iter().map(|x| x.to_text("mu")).collect::<Vec<_>>(),
        "m": rat_matrix(&tr.m),
        "k": tr.k,
        "q_k": rat_matrix(tr.q_k.matrix()),
        "graph": cert.graph.to_json(),
        "graph_vertices": cert.graph.n(),
        "coxeter_radius": algebraic(&cert.coxeter_radius, b),
        "thurston": thurston_json(&cert.thurston, b),
        "power_realized": cert.power_realized,
    });
    Ok((result, cert.checks))
}

pub fn graph_from_value(v: &Value) -> Result<BipartiteGraph> {
    BipartiteGraph::from_json(v)
}

fn coxeter_cmd(input: &Value, config: &Value) -> Result<(Value, Checks)> {
    let g = graph_from_value(field(input, "graph")?)?;
    let b = bits(config)?;
    let ct = coxeter_transform(&g);
    let radius = ct.spectral_radius()?.minimal();
    let rel = verify_spectra_relation(&g)?;
    let adjacency = g.graph().charpoly();
    let one = AlgebraicReal::from_integer(1);
    let above_two = crate::linalg::spectral_radius(&g.graph().adjacency().to_rat())?
        .cmp_rational(&num_rational::BigRational::from_integer(2.into()))
        == Ordering::Greater;
    let checks = vec![
        ("prod (x^2 - (alpha^2 - 2) x + 1) = charpoly(C)^2".into(), rel.exact_identity),
        (format!("paired spectra residual < {RESIDUAL_TOLERANCE:e}"), rel.max_residual < RESIDUAL_TOLERANCE),
        ("radius > 1 iff adjacency radius > 2".into(), (radius.cmp_exact(&one) == Ordering::Greater) == above_two),
    ];
    let radius_json = algebraic(&radius, b);
    let result = json!({
        "graph": g.to_json(),
        "adjacency_charpoly": poly(&adjacency),
        "coxeter_matrix": int_matrix(&ct.matrix),
        "coxeter_charpoly": poly(&ct.charpoly()),
        "spectral_radius_minpoly": poly(radius.poly()),
        "spectral_radius_decimal": radius_json["decimal"].clone(),
        "spectral_radius": radius_json,
        "relation_verified": rel.verified,
        "max_residual": format!("{:.3e}", rel.max_residual),
    });
    Ok((result, checks))
}

fn thurston_cmd(input: &Value, config: &Value) -> Result<(Value, Checks)> {
    let g = parse_poly_value(field(input, "r_minpoly")?)?;
    let r = AlgebraicReal::largest_real_root(&g)
        .ok_or_else(|| Error::Precondition(format!("{} has no real root", g.to_text())))?;
    let t = thurston_product(&r)?;
    let checks = t.checks()?;
    Ok((thurston_json(&t, bits(config)?), checks))
}

fn tree_cmd(input: &Value, config: &Value) -> Result<(Value, Checks)> {
    let p = parse_poly_value(field(input, "poly")?)?;
    let t = realize_conjugate_tree(&p, uint(config, "max_vertices")? as usize)?;
    let adjacency = t.tree.charpoly();
    let cox = t.coxeter.charpoly();
    let checks = vec![
        ("result is a tree".into(), t.tree.is_tree()),
        ("mu minpoly divides the adjacency charpoly".into(), t.mu_minpoly.divides(&adjacency)),
        ("lambda^2 minpoly divides the Coxeter charpoly".into(), t.lambda_sq_minpoly.divides(&cox)),
    ];
    let result = json!({
        "input": poly(&t.input),
        "mu_minpoly": poly(&t.mu_minpoly),
        "tree": t.coxeter.graph.to_json(),
        "tree_vertices": t.tree.n(),
        "adjacency_charpoly": poly(&adjacency),
        "coxeter_charpoly": poly(&cox),
        "lambda_sq_minpoly": poly(&t.lambda_sq_minpoly),
        "eigenvalue_verified": t.eigenvalue_verified,
    });
    Ok((result, checks))
}

fn generate_cmd(input: &Value, config: &Value) -> Result<(Value, Checks)> {
    let eps = parse_rational_value(field(input, "epsilon")?)?;
    let b = bits(config)?;
    let batch = generate_small_biperron(&eps, uint(config, "max_degree")? as usize, uint(config, "max_height")? as i64)?;
    // re-derive every claim about each member from its minimal polynomial
    let mut bi_perron = true;
    let mut locus = true;
    let mut below = true;
    let mut reciprocal = true;
    for m in &batch.found {
        let c = classify(&m.minpoly)?;
        bi_perron &= c.is_bi_perron && c.leading_root.as_ref() == Some(&m.value);
        locus &= c.conjugates_in_s1_union_r && AlgebraicReal::real_roots(&m.minpoly).iter().all(|r| r.sign() > 0);
        below &= m.value.cmp_exact(&batch.bound) == Ordering::Less;
        reciprocal &= c.is_reciprocal;
    }
    let checks = vec![
        ("every member is bi-Perron".into(), bi_perron),
        ("every member has conjugates in S^1 u R_{>0}".into(), locus),
        ("every member is below 1 + eps + sqrt(2 eps + eps^2)".into(), below),
        ("every member has a reciprocal minpoly".into(), reciprocal),
    ];
    let found: Vec<Value> = batch
        .found
        .iter()
        .map(|m| json!({ "seed": poly(&m.seed), "minpoly": poly(&m.minpoly), "value": algebraic(&m.value, b) }))
        .collect();
    let result = json!({
        "epsilon": rational(&eps),
        "bound": algebraic(&batch.bound, b),
        "max_degree": batch.max_degree,
        "max_height": batch.max_height,
        "seeds_examined": batch.seeds_examined,
        "bounds_limited": batch.bounds_limited(),
        "found": found,
        "minimum": batch.minimum().map_or(Value::Null, |m| algebraic(&m.value, b)),
    });
    Ok((result, checks))
}

fn atlas_cmd(input: &Value, _config: &Value) -> Result<(Value, Checks)> {
    let n = uint(input, "n")? as usize;
    let kind = field(input, "kind")?.as_str().unwrap_or_default();
    let (graphs, checks): (Vec<Value>, Checks) = match kind {
        "trees" => {
            let ts = trees(n);
            let ok = ts.iter().all(|t| t.is_tree() && t.n() == n);
            let v = ts.iter().map(|t| json!(t.edges())).collect();
            (v, vec![("every entry is a tree".into(), ok)])
        }
        "bipartite" => {
            if n > 10 {
                return Err(Error::InvalidArgument("the bipartite atlas goes up to 10 vertices".into()));
            }
            let gs = connected_bipartite_graphs(n);
            let ok = gs.iter().all(|g| g.graph().is_connected() && g.n() == n);
            let v = gs.iter().map(BipartiteGraph::to_json).collect();
            (v, vec![("every entry is connected and bipartite".into(), ok)])
        }
        other => return Err(Error::InvalidArgument(format!("unknown atlas kind `{other}`"))),
    };
    Ok((json!({ "kind": kind, "n": n, "count": graphs.len(), "graphs": graphs }), checks))
}
