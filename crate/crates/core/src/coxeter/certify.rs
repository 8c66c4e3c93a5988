//! Coxeter spectral radii of large bipartite graphs without characteristic
//! polynomials.
//!
//! With part one first, `C = [[BB^T - I, -B], [B^T, -I]]` in block form, and
//! a Schur complement gives
//! `det(xI - C) = (x + 1)^(q - p) det((x + 1)^2 I - x BB^T)`.
//! So every eigenvalue `x` of `C` solves `x + 1/x = sigma - 2` for an
//! eigenvalue `sigma` of `BB^T`, and the largest modulus comes from
//! `sigma = rho(A)^2`. A positive eigenvector of `A` pins `rho(A)` down by
//! Perron-Frobenius, and an explicit eigenvector of `C` confirms the value.

use crate::error::{Error, Result};
use crate::exactpoly::{FieldElem, NumberField};
use crate::linalg::BipartiteGraph;

/// Check over `k` that `v > 0` is an eigenvector of the adjacency matrix for
/// `alpha = nu + 1/nu`, and that `(v on part one, v / nu on part two)` is an
/// eigenvector of the Coxeter transformation (part one first) for `nu^2`.
/// Together these certify that the Coxeter spectral radius is `nu^2`.
pub fn certify_coxeter_eigenvector(g: &BipartiteGraph, k: &NumberField, nu: &FieldElem, v: &[FieldElem]) -> Result<()> {
    let n = g.n();
    if v.len() != n {
        return Err(Error::InvalidArgument("eigenvector has the wrong length".into()));
    }
    let fail = |what: &str| Err(Error::Invariant(format!("Coxeter eigenvector certificate: {what}")));
    if v.iter().any(|x| k.sign(x) <= 0) {
        return fail("adjacency eigenvector is not positive");
    }
    let inv = k.inv(nu)?;
    let alpha = k.add(nu, &inv);
    let graph = g.graph();
    let neighbour_sum = |w: &[FieldElem], x: usize| {
        graph.neighbors(x).fold(FieldElem::zero(), |acc, y| k.add(&acc, &w[y]))
    };
    for x in 0..n {
        if neighbour_sum(v, x) != k.mul(&alpha, &v[x]) {
            return fail("A v != alpha v");
        }
    }
    let mut w = v.to_vec();
    for &y in g.part_two() {
        w[y] = k.mul(&v[y], &inv);
    }
    // part-two reflections act first on the vector, then part one
    let mut cw = w.clone();
    for &y in g.part_two() {
        cw[y] = k.sub(&neighbour_sum(&w, y), &w[y]);
    }
    for &x in g.part_one() {
        cw[x] = k.sub(&neighbour_sum(&cw, x), &w[x]);
    }
    let lambda = k.mul(nu, nu);
    if (0..n).any(|i| cw[i] != k.mul(&lambda, &w[i])) {
        return fail("C w != nu^2 w");
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::coxeter_transform;
    use crate::exactpoly::poly::poly;
    use crate::exactpoly::AlgebraicReal;
    use crate::linalg::Graph;

    #[test]
    fn complete_bipartite() {
        // K_{3,3}: alpha = 3 = nu + 1/nu with nu = phi^2
        let g = Graph::complete_bipartite(3, 3).bipartition().unwrap();
        let nu = AlgebraicReal::largest_real_root(&poly(&[1, -3, 1])).unwrap();
        let k = NumberField::new(&nu);
        let v = vec![k.one(); 6];
        certify_coxeter_eigenvector(&g, &k, &k.gen(), &v).unwrap();
        let wrong = k.add(&k.gen(), &k.one());
        assert!(certify_coxeter_eigenvector(&g, &k, &wrong, &v).is_err());
    }

    #[test]
    fn star_with_unequal_parts() {
        // K_{1,5}: alpha = sqrt 5 = phi + 1/phi, Perron vector (sqrt 5, 1, ..., 1)
        let g = Graph::star(5).bipartition().unwrap();
        let phi = AlgebraicReal::largest_real_root(&poly(&[1, -1, -1])).unwrap();
        let k = NumberField::new(&phi);
        let sqrt5 = k.sub(&k.scale(&k.gen(), &num_rational::BigRational::from_integer(2.into())), &k.one());
        let v: Vec<_> = (0..6).map(|i| if i == 0 { sqrt5.clone() } else { k.one() }).collect();
        assert_eq!(g.part_one(), &[0]);
        certify_coxeter_eigenvector(&g, &k, &k.gen(), &v).unwrap();
        assert_eq!(coxeter_transform(&g).spectral_radius().unwrap().minpoly(), poly(&[1, -3, 1]));
    }
}
