// Classify a handful of well-known algebraic integers.
//
// ```bash
// cargo run --example classify
// ```

use biperron::algnum::classify;
use biperron::error::Result;
use biperron::exactpoly::poly::poly;

pub fn run_example() -> Result<()> {
    let named = [
        ("golden ratio", poly(&[1, -1, -1])),
        ("plastic number", poly(&[1, 0, -1, -1])),
        ("Lehmer's number", poly(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])),
        ("quartic Salem", poly(&[1, -1, -1, -1, 1])),
        ("totally real quartic", poly(&[1, -4, -2, 4, -1])),
    ];
    for (name, p) in named {
        let c = classify(&p)?;
        let root = c.leading_root.as_ref().map(|r| r.decimal(8)).unwrap_or_default();
        println!(
            "{name:22} {root:>12}  unit={} perron={} bi_perron={} salem={} minus_inverse={}",
            c.is_unit, c.is_perron, c.is_bi_perron, c.is_salem, c.has_minus_inverse_conjugate
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
