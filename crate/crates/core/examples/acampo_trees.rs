// Coxeter eigenvalues of a tree lie on the unit circle or are positive reals.

use biperron::coxeter::acampo_check;
use biperron::error::Result;
use biperron::linalg::trees;

pub fn run_example() -> Result<()> {
    for n in 1..=8 {
        let all = trees(n);
        let mut ok = 0;
        for t in &all {
            if acampo_check(t)? {
                ok += 1;
            }
        }
        println!("{n} vertices: {ok}/{} trees pass", all.len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
