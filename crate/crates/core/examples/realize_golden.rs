// Realize the square of the golden ratio as a Coxeter spectral radius and a
// Thurston stretch factor, with every intermediate object.

use biperron::error::Result;
use biperron::exactpoly::poly::poly;
use biperron::realize::StepOneConfig;
use biperron::thurston::realize_biperron;

pub fn run_example() -> Result<()> {
    let cert = realize_biperron(&poly(&[1, -1, -1]), &StepOneConfig::default())?;
    let tr = &cert.pipeline;
    println!("j = {}, f = {}", cert.target.j, cert.target.f.to_text());
    println!("Q = {:?}, e = {}, k = {}", tr.q, tr.e, tr.k);
    println!("graph: {} vertices, {} edges", cert.graph.n(), cert.graph.graph().edge_count());
    println!(
        "Coxeter radius {} = lambda^{}",
        cert.coxeter_radius.decimal(10),
        cert.power_realized
    );
    if let Some(s) = cert.thurston.stretch() {
        println!("Thurston stretch {} (minpoly {})", s.decimal(10), s.minpoly().to_text());
    }
    for (name, ok) in &cert.checks {
        println!("  [{}] {name}", if *ok { "ok" } else { "FAIL" });
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
