// The E10 diagram: its Coxeter transformation has Lehmer's number as
// spectral radius.

use biperron::coxeter::{coxeter_transform, named_graph};
use biperron::error::Result;

pub fn run_example() -> Result<()> {
    for name in ["A5", "D6", "E8", "E9", "E10"] {
        let t = coxeter_transform(&named_graph(name)?);
        let r = t.spectral_radius()?;
        println!("{name:4} radius {}  charpoly {}", r.decimal(10), t.charpoly().to_text());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
