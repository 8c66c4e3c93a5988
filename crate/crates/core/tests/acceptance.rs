// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if
// any criterion fails. Tolerances and time limits are pinned below.

use std::time::{Duration, Instant};

use biperron::algnum::{classify, leading_power, minimal_poly_power, power_trace, roots_in_circle_or_line, trace_field_report};
use biperron::coxeter::{acampo_check, verify_spectra_relation};
use biperron::exactpoly::poly::poly;
use biperron::exactpoly::{is_irreducible, AlgebraicReal, IntPoly};
use biperron::linalg::{connected_bipartite_graphs, spectral_radius, trees, SymRatMatrix};
use biperron::realize::{find_realizing_k, find_symmetric_q, StepOneConfig};
use biperron::thurston::{biperron_target, generate_small_biperron, realize_from_step_one};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const LEHMER: f64 = 1.17628;
const LEHMER_TOL: f64 = 1e-4;
const RESIDUAL_TOL: f64 = 1e-9;
const ONE_SECOND: Duration = Duration::from_secs(1);
const FIVE_MINUTES: Duration = Duration::from_secs(300);
const TEN_MINUTES: Duration = Duration::from_secs(600);
const CORPUS_SIZE: usize = 100;
const CORPUS_K: u32 = 8;

type Outcome = Result<String, String>;

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, format!("took {elapsed:.2?}, limit {limit:?}"))
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn cli(args: &[&str]) -> Result<Value, String> {
    let dir = tempfile::tempdir().map_err(err)?;
    let mut full = vec!["biperron", "--cache-dir", dir.path().to_str().unwrap()];
    full.extend_from_slice(args);
    let out = biperron::cli::run(full);
    ensure(out.code == 0, format!("exit {}: {}", out.code, out.stdout))?;
    serde_json::from_str(&out.stdout).map_err(err)
}

fn golden_realize() -> Outcome {
    let start = Instant::now();
    let v = cli(&["realize", "--poly", "1,-1,-1"])?;
    let elapsed = start.elapsed();
    let r = &v["result"];
    ensure(r["used_square"] == true, "used_square")?;
    ensure(r["f"] == "1,-3", "f = s - 3")?;
    ensure(r["q"] == serde_json::json!([["3"]]), "Q = [3]")?;
    ensure(r["k"] == 1, "k = 1")?;
    let g = &r["graph"];
    let sizes = (g["part_one"].as_array().map(Vec::len), g["part_two"].as_array().map(Vec::len));
    ensure(sizes == (Some(3), Some(3)) && g["edges"].as_array().map(Vec::len) == Some(9), "graph K_{3,3}")?;
    ensure(r["coxeter_radius"]["minpoly"] == "1,-7,1", "Coxeter radius minpoly")?;
    ensure(r["thurston"]["r"]["minpoly"] == "1,-3", "Thurston r = 3")?;
    ensure(r["thurston"]["trace"] == "-7", "Thurston trace")?;
    ensure(r["thurston"]["stretch"]["minpoly"] == "1,-7,1", "stretch minpoly")?;
    ensure(r["power_realized"] == 4, "power_realized")?;
    ensure(v["check_log"].as_array().unwrap().iter().all(|c| c["status"] == "pass"), "check log")?;
    within(elapsed, ONE_SECOND)?;
    Ok(format!("{elapsed:.2?}"))
}

fn lehmer_anchor() -> Outcome {
    let start = Instant::now();
    let v = cli(&["coxeter", "--graph", "E10"])?;
    let elapsed = start.elapsed();
    let r = &v["result"];
    let radius: f64 = r["spectral_radius_decimal"].as_str().unwrap_or("").parse().map_err(err)?;
    ensure((radius - LEHMER).abs() < LEHMER_TOL, format!("radius {radius}"))?;
    let minpoly = IntPoly::parse(r["spectral_radius_minpoly"].as_str().unwrap_or("")).map_err(err)?;
    ensure(minpoly.deg() == 10 && is_irreducible(&minpoly), "degree-10 minpoly")?;
    within(elapsed, ONE_SECOND)?;
    Ok(format!("radius {radius:.6}, {elapsed:.2?}"))
}

fn spectra_relation_suite() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    let mut worst = 0.0f64;
    for n in 1..=7 {
        for g in connected_bipartite_graphs(n) {
            let rel = verify_spectra_relation(&g).map_err(err)?;
            ensure(rel.verified && rel.exact_identity, format!("graph {:?}", g.graph().edges()))?;
            worst = worst.max(rel.max_residual);
            count += 1;
        }
    }
    ensure(worst < RESIDUAL_TOL, format!("residual {worst:e}"))?;
    within(start.elapsed(), FIVE_MINUTES)?;
    Ok(format!("{count} graphs, max residual {worst:.1e}, {:.2?}", start.elapsed()))
}

fn acampo_suite() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for n in 1..=8 {
        for t in trees(n) {
            ensure(acampo_check(&t).map_err(err)?, format!("tree {:?}", t.edges()))?;
            count += 1;
        }
    }
    within(start.elapsed(), FIVE_MINUTES)?;
    Ok(format!("{count} trees, {:.2?}", start.elapsed()))
}

fn salem_pipeline() -> Outcome {
    let p = poly(&[1, -1, -1, -1, 1]);
    let target = biperron_target(&p).map_err(err)?;
    let cfg = StepOneConfig::default();
    let step = find_symmetric_q(&target.f, &cfg).map_err(err)?;
    ensure(step.q.dim() == 2, "Q is 2x2")?;
    ensure(step.q.matrix().entries().all(|x| x.is_integer()), "Q is integral")?;
    ensure(step.q.matrix().charpoly() == poly(&[1, -1, -3]), "charpoly(Q) = s^2 - s - 3")?;
    let (k, q_k) = find_realizing_k(&step.q, cfg.k_max).map_err(err)?;
    ensure(k == 3, format!("k = {k}"))?;
    let expected = SymRatMatrix::from_i64(&[&[5, 1], &[1, 2]]).map_err(err)?;
    ensure(q_k == expected, format!("Q_3 = {q_k:?}"))?;
    let rho = spectral_radius(q_k.matrix()).map_err(err)?;
    let independent = power_trace(&p, 3).map_err(err)?;
    ensure(rho.minpoly() == poly(&[1, -7, 9]), "minpoly(rho) = s^2 - 7s + 9")?;
    ensure(independent.minpoly() == rho.minpoly(), "two-path agreement")?;
    let hoffman = match realize_from_step_one(target, step, cfg.k_max) {
        Ok(cert) => {
            ensure(cert.all_checks_pass(), "Hoffman certificate")?;
            format!("graph on {} vertices certified", cert.graph.n())
        }
        Err(e) if e.kind() == "inconclusive" => "Hoffman step inconclusive".to_string(),
        Err(e) => return Err(e.to_string()),
    };
    Ok(format!("k = 3, Q_3 = [[5,1],[1,2]], {hoffman}"))
}

fn quartic_classification() -> Outcome {
    let start = Instant::now();
    let p = poly(&[1, -4, -2, 4, -1]);
    let c = classify(&p).map_err(err)?;
    ensure(c.is_bi_perron, "bi-Perron")?;
    ensure(c.totally_real, "totally real")?;
    ensure(!c.is_reciprocal, "not reciprocal")?;
    ensure(!c.has_minus_inverse_conjugate, "no minus-inverse conjugate")?;
    let report = trace_field_report(&p, 3).map_err(err)?;
    ensure(report.degrees.values().all(|&d| d == 4), format!("degrees {:?}", report.degrees))?;
    ensure(report.all_identities_hold(), "trace identities")?;
    within(start.elapsed(), ONE_SECOND)?;
    Ok(format!("degrees {:?}, {:.2?}", report.degrees, start.elapsed()))
}

fn positive_real_conjugates(p: &IntPoly) -> bool {
    AlgebraicReal::real_roots(p).iter().all(|r| r.sign() > 0)
}

fn small_biperron() -> Outcome {
    let half = BigRational::new(1.into(), 2.into());
    let batch = generate_small_biperron(&half, 2, 3).map_err(err)?;
    let witness = poly(&[1, -2, 1, -2, 1]);
    let hit = batch.found.iter().find(|s| s.minpoly == witness).ok_or("1.8832 missing")?;
    ensure(hit.value.decimal(4) == "1.8832", "witness value")?;
    for s in &batch.found {
        let c = classify(&s.minpoly).map_err(err)?;
        let in_s1_r = roots_in_circle_or_line(&s.minpoly).map_err(err)?;
        ensure(c.is_bi_perron && in_s1_r, format!("{} not verified", s.minpoly.to_text()))?;
        ensure(positive_real_conjugates(&s.minpoly), format!("{} has a negative conjugate", s.minpoly.to_text()))?;
        ensure(s.value.cmp_exact(&batch.bound).is_lt(), "value below bound")?;
    }
    // Seed degree grows with 1/eps; at a fixed degree the first two minima tie.
    let mut minima = Vec::new();
    for (den, degree) in [(2, 2), (4, 3), (8, 4)] {
        let eps = BigRational::new(1.into(), den.into());
        let batch = generate_small_biperron(&eps, degree, 8).map_err(err)?;
        minima.push(batch.minimum().ok_or(format!("empty batch at 1/{den}"))?.value.clone());
    }
    ensure(minima.windows(2).all(|w| w[1].cmp_exact(&w[0]).is_lt()), "minima decrease")?;
    let shown: Vec<_> = minima.iter().map(|m| m.decimal(4)).collect();
    Ok(format!("{} members, minima {}", batch.found.len(), shown.join(" > ")))
}

fn tree_witness() -> Outcome {
    let v = cli(&["tree-realize", "--poly", "1,-1,-1"])?;
    let r = &v["result"];
    let edges = r["tree"]["edges"].as_array().ok_or("tree edges")?;
    let star = edges.len() == 5 && edges.iter().all(|e| e[0] == 0);
    ensure(star, format!("tree {edges:?}"))?;
    ensure(r["eigenvalue_verified"] == true, "phi^2 eigenvalue")?;
    Ok("K_{1,5}, phi^2 verified".into())
}

fn corpus() -> Vec<IntPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut out = Vec::new();
    while out.len() < CORPUS_SIZE {
        let d = rng.gen_range(2..=6);
        let mut desc = vec![1i64];
        desc.extend((1..d).map(|_| rng.gen_range(-5..=5)));
        desc.push(if rng.gen_bool(0.5) { [-1, 1][rng.gen_range(0..2)] } else { rng.gen_range(-5..=5) });
        let p = poly(&desc);
        if !is_irreducible(&p) || out.contains(&p) {
            continue;
        }
        if classify(&p).map(|c| c.is_perron).unwrap_or(false) {
            out.push(p);
        }
    }
    out
}

fn property_corpus() -> Outcome {
    let start = Instant::now();
    let polys = corpus();
    let mut traced = 0;
    for p in &polys {
        let n = p.deg();
        for k in 1..=CORPUS_K {
            let m = minimal_poly_power(p, k).map_err(err)?;
            ensure(m.deg() == n, format!("deg lambda^{k} for {}", p.to_text()))?;
            ensure(leading_power(p, k).map_err(err)?.minpoly() == m, "leading power minpoly")?;
        }
        let c = classify(p).map_err(err)?;
        if c.is_bi_perron && c.is_unit {
            let report = trace_field_report(p, CORPUS_K).map_err(err)?;
            ensure(report.all_identities_hold(), format!("trace identities for {}", p.to_text()))?;
            traced += 1;
        }
    }
    within(start.elapsed(), TEN_MINUTES)?;
    Ok(format!("{} polynomials, {traced} bi-Perron units traced, {:.2?}", polys.len(), start.elapsed()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("golden ratio end to end", golden_realize),
        ("E10 Lehmer anchor", lehmer_anchor),
        ("spectra relation, bipartite graphs <= 7", spectra_relation_suite),
        ("A'Campo, trees <= 8", acampo_suite),
        ("Salem quartic pipeline", salem_pipeline),
        ("totally real quartic classification", quartic_classification),
        ("small bi-Perron generator", small_biperron),
        ("tree witness for phi^2", tree_witness),
        ("Perron powers and trace fields corpus", property_corpus),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
