// Degrees of `Q(lambda^k + lambda^-k)` and the parity identities they obey.

use biperron::algnum::{minimal_poly_power, trace_field_report};
use biperron::error::Result;
use biperron::exactpoly::poly::poly;

pub fn run_example() -> Result<()> {
    for p in [poly(&[1, -1, -1]), poly(&[1, -4, -2, 4, -1]), poly(&[1, -1, -1, -1, 1])] {
        let report = trace_field_report(&p, 6)?;
        println!("{}  ({:?})", p.to_text(), report.parity_case);
        for (k, d) in &report.degrees {
            println!("  k={k}: degree {d}");
        }
        for (name, ok) in &report.identities {
            println!("  {name}: {}", if *ok { "holds" } else { "fails" });
        }
        println!("  minpoly of lambda^3: {}", minimal_poly_power(&p, 3)?.to_text());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
