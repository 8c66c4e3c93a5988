// The realization pipeline step by step for a quartic Salem number.

use biperron::error::Result;
use biperron::exactpoly::poly::poly;
use biperron::realize::{find_symmetric_q, find_realizing_k, StepOneConfig};
use biperron::thurston::biperron_target;

pub fn run_example() -> Result<()> {
    let target = biperron_target(&poly(&[1, -1, -1, -1, 1]))?;
    println!("lambda^{} is a root of the trace transform preimage; f = {}", target.j, target.f.to_text());

    let step = find_symmetric_q(&target.f, &StepOneConfig::default())?;
    println!("Q = {:?} ({:?}), mu = {}", step.q, step.source, step.mu.decimal(8));

    let (k, q_k) = find_realizing_k(&step.q, 12)?;
    println!("first nonnegative integral block: k = {k}, Q_k = {q_k:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
