use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::One;

use crate::algnum::{max_root_modulus, roots_in_circle_or_line};
use crate::error::{Error, Result};
use crate::exactpoly::{AlgebraicReal, IntPoly};
use crate::linalg::{BipartiteGraph, Graph, IntMatrix};

/// Which part's reflections come first in the product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartOrder {
    OneFirst,
    TwoFirst,
}

/// Bipartite Coxeter transformation of a simply-laced diagram, in the
/// simple-root basis.
#[derive(Clone, Debug)]
pub struct CoxeterTransform {
    pub graph: BipartiteGraph,
    /// `2I - A`.
    pub cartan: IntMatrix,
    pub matrix: IntMatrix,
    pub part_order: PartOrder,
}

pub fn cartan_matrix(g: &Graph) -> IntMatrix {
    let n = g.n();
    IntMatrix::identity(n)
        .scale(&BigInt::from(2))
        .sub(&g.adjacency())
}

/// Simple reflection `s_i: e_j -> e_j - C_ij e_i`: the identity with row `i`
/// replaced by `delta_ij - C_ij`.
pub fn reflection(cartan: &IntMatrix, i: usize) -> IntMatrix {
    let n = cartan.rows();
    let mut s = IntMatrix::identity(n);
    for j in 0..n {
        let delta = if i == j { BigInt::one() } else { BigInt::from(0) };
        s.set(i, j, delta - cartan.get(i, j));
    }
    s
}

/// Product of reflections in the given vertex order.
pub fn coxeter_element(cartan: &IntMatrix, order: &[usize]) -> IntMatrix {
    order
        .iter()
        .fold(IntMatrix::identity(cartan.rows()), |acc, &i| acc.mul(&reflection(cartan, i)))
}

/// Part-one reflections then part-two reflections, each in increasing
/// vertex order.
pub fn coxeter_transform(g: &BipartiteGraph) -> CoxeterTransform {
    coxeter_transform_ordered(g, PartOrder::OneFirst)
}

pub fn coxeter_transform_ordered(g: &BipartiteGraph, part_order: PartOrder) -> CoxeterTransform {
    let cartan = cartan_matrix(g.graph());
    let (first, second) = match part_order {
        PartOrder::OneFirst => (g.part_one(), g.part_two()),
        PartOrder::TwoFirst => (g.part_two(), g.part_one()),
    };
    let order: Vec<usize> = first.iter().chain(second).copied().collect();
    let matrix = coxeter_element(&cartan, &order);
    CoxeterTransform {
        graph: g.clone(),
        cartan,
        matrix,
        part_order,
    }
}

impl CoxeterTransform {
    pub fn charpoly(&self) -> IntPoly {
        self.matrix.charpoly()
    }

    pub fn spectral_radius(&self) -> Result<AlgebraicReal> {
        max_root_modulus(&self.charpoly())
    }
}

/// Spectral radius of the bipartite Coxeter transformation.
pub fn coxeter_spectral_radius(g: &BipartiteGraph) -> Result<AlgebraicReal> {
    coxeter_transform(g).spectral_radius()
}

/// Every eigenvalue of the tree's Coxeter transformation lies on the unit
/// circle or on the positive real axis (`-1` counts as unimodular).
pub fn acampo_check(t: &Graph) -> Result<bool> {
    if !t.is_tree() {
        return Err(Error::InvalidArgument("A'Campo check needs a tree".into()));
    }
    let c = coxeter_transform(&t.bipartition()?).charpoly();
    eigenvalues_in_circle_or_positive(&c)
}

/// All roots of `p` on `S^1` or in `R_{>0}`.
pub fn eigenvalues_in_circle_or_positive(p: &IntPoly) -> Result<bool> {
    let q = p.squarefree_part();
    if !roots_in_circle_or_line(&q)? {
        return Ok(false);
    }
    let minus_one = AlgebraicReal::from_integer(-1);
    Ok(AlgebraicReal::real_roots(&q)
        .iter()
        .all(|r| r.sign() > 0 || r.cmp_exact(&minus_one) == Ordering::Equal))
}
