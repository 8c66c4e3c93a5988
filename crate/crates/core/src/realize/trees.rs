use std::cmp::Ordering;

use num_rational::BigRational;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactpoly::{AlgebraicReal, IntPoly, SturmSequence};
use crate::linalg::{Graph, TreeCatalog};

/// Smallest tree, in the order (vertex count, canonical encoding), whose
/// adjacency characteristic polynomial is divisible by `mu_minpoly`.
pub fn find_tree_with_eigenvalue(mu_minpoly: &IntPoly, max_vertices: usize) -> Result<Graph> {
    let g = mu_minpoly.primitive_part();
    if g.is_constant() {
        return Err(Error::InvalidArgument("eigenvalue polynomial must have positive degree".into()));
    }
    if SturmSequence::new(&g).count_real() != g.deg() {
        return Err(Error::Precondition(format!("{} is not totally real", g.to_text())));
    }
    let g = g.squarefree_part();
    let top = AlgebraicReal::real_roots(&g)
        .into_iter()
        .map(|r| r.abs())
        .max_by(|a, b| a.cmp_exact(b))
        .expect("totally real of positive degree");
    let top_sq = top.pow(2)?;
    let int = |n: usize| BigRational::from_integer(n.into());

    let mut catalog = TreeCatalog::new();
    for n in 1..=max_vertices {
        // a tree on n vertices has spectral radius at most sqrt(n - 1)
        if top_sq.cmp_rational(&int(n - 1)) == Ordering::Greater {
            continue;
        }
        let trees = catalog.trees(n);
        let hit = trees.par_iter().find_first(|t| {
            let d = t.max_degree();
            // spectral radius < 2 sqrt(d - 1) for maximum degree d >= 2
            if d >= 2 && top_sq.cmp_rational(&int(4 * (d - 1))) != Ordering::Less {
                return false;
            }
            g.divides(&t.charpoly())
        });
        if let Some(t) = hit {
            return Ok(t.clone());
        }
    }
    Err(Error::inconclusive(
        "find_tree_with_eigenvalue",
        format!(
            "no tree with at most {max_vertices} vertices has eigenvalues {}; a larger bound may succeed",
            g.to_text()
        ),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly::poly;

    #[test]
    fn known_examples() {
        let t = find_tree_with_eigenvalue(&poly(&[1, 0, -5]), 8).unwrap();
        assert_eq!(t.n(), 6);
        assert_eq!(t.max_degree(), 5);
        let t = find_tree_with_eigenvalue(&poly(&[1, 0, -2]), 8).unwrap();
        assert_eq!(t.n(), 3);
        let t = find_tree_with_eigenvalue(&poly(&[1, 0]), 8).unwrap();
        assert_eq!(t.n(), 1);
        let t = find_tree_with_eigenvalue(&poly(&[1, -3]), 12).unwrap();
        assert_eq!((t.n(), t.max_degree()), (10, 9));
    }

    #[test]
    fn bound_exhaustion_is_inconclusive() {
        let r = find_tree_with_eigenvalue(&poly(&[1, -3]), 9);
        assert!(r.unwrap_err().is_inconclusive());
        assert!(matches!(
            find_tree_with_eigenvalue(&poly(&[1, 0, 1]), 5),
            Err(Error::Precondition(_))
        ));
    }
}
