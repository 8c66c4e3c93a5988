// Find a tree whose Coxeter transformation has `lambda^2` as an eigenvalue.

use biperron::error::Result;
use biperron::exactpoly::poly::poly;
use biperron::thurston::realize_conjugate_tree;

pub fn run_example() -> Result<()> {
    let r = realize_conjugate_tree(&poly(&[1, -1, -1]), 12)?;
    println!("mu minpoly {}", r.mu_minpoly.to_text());
    println!("tree edges {:?}", r.tree.edges());
    println!("Coxeter charpoly {}", r.coxeter.charpoly().to_text());
    println!("lambda^2 minpoly {} verified: {}", r.lambda_sq_minpoly.to_text(), r.eigenvalue_verified);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
