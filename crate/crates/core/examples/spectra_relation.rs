// Adjacency eigenvalues `alpha` and Coxeter eigenvalues `nu` pair up via
// `nu + 1/nu = alpha^2 - 2` on every connected bipartite graph.

use biperron::coxeter::verify_spectra_relation;
use biperron::error::Result;
use biperron::linalg::connected_bipartite_graphs;

pub fn run_example() -> Result<()> {
    for n in 2..=6 {
        let graphs = connected_bipartite_graphs(n);
        let mut worst = 0.0f64;
        let mut exact = true;
        for g in &graphs {
            let rel = verify_spectra_relation(g)?;
            worst = worst.max(rel.max_residual);
            exact &= rel.exact_identity && rel.verified;
        }
        println!("n={n}: {} graphs, exact identity {exact}, max residual {worst:.2e}", graphs.len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
