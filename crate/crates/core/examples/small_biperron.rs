// Bi-Perron units just above the bound `1 + eps + sqrt(2 eps + eps^2)`.

use biperron::error::Result;
use biperron::thurston::generate_small_biperron;
use num_rational::BigRational;

pub fn run_example() -> Result<()> {
    let eps = BigRational::new(1.into(), 2.into());
    let batch = generate_small_biperron(&eps, 2, 3)?;
    println!("bound {} after {} seeds", batch.bound.decimal(6), batch.seeds_examined);
    for s in &batch.found {
        println!("  seed {:12} -> {} ({})", s.seed.to_text(), s.value.decimal(6), s.minpoly.to_text());
    }
    if let Some(m) = batch.minimum() {
        println!("smallest: {}", m.value.decimal(6));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
