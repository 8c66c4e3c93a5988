// Enumerate small trees and connected bipartite graphs up to isomorphism.

use biperron::error::Result;
use biperron::linalg::{connected_bipartite_graphs, trees};

pub fn run_example() -> Result<()> {
    for n in 1..=8 {
        println!(
            "{n}: {:3} trees, {:4} connected bipartite graphs",
            trees(n).len(),
            connected_bipartite_graphs(n).len()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
