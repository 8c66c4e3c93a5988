//! Positive symmetric integer matrices to simple bipartite graphs with the
//! same spectral radius.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{spectral_radius, BipartiteGraph, IntMatrix};

/// Offsets in `Z/s` closed under negation, of the given size.
fn symmetric_offsets(size: usize, s: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(size);
    let mut left = size;
    if left % 2 == 1 {
        out.push(0);
        left -= 1;
    } else if left == s && s % 2 == 0 && left > 0 {
        // all of Z/s for even s: 0, s/2 and the remaining pairs
        out.push(0);
        out.push(s / 2);
        left -= 2;
    }
    let mut d = 1;
    while left > 0 {
        if 2 * d == s {
            d += 1;
            continue;
        }
        out.push(d);
        out.push(s - d);
        left -= 2;
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Symmetric 0/1 matrix `B` with an equitable partition whose quotient is
/// `m`: block `(i, j)` is an `s x s` circulant with `m_ij` ones per row.
pub fn equitable_blowup(m: &IntMatrix) -> Result<IntMatrix> {
    if !m.is_symmetric() || m.entries().any(|x| x.is_negative()) {
        return Err(Error::InvalidArgument("expected a nonnegative symmetric integer matrix".into()));
    }
    let n = m.rows();
    let max = m.entries().max().cloned().unwrap_or_else(BigInt::zero);
    let s = max
        .to_usize()
        .filter(|&v| v <= 4096)
        .ok_or_else(|| Error::InvalidArgument("matrix entries too large for the blow-up".into()))?
        .max(1);
    let mut offsets = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        offsets[i][i] = symmetric_offsets(m.get(i, i).to_usize().expect("bounded"), s);
        for j in i + 1..n {
            let c = m.get(i, j).to_usize().expect("bounded");
            offsets[i][j] = (0..c).collect();
            offsets[j][i] = (0..c).map(|d| (s - d) % s).collect();
        }
    }
    Ok(IntMatrix::from_fn(n * s, n * s, |x, y| {
        let (i, a) = (x / s, x % s);
        let (j, b) = (y / s, y % s);
        BigInt::from(u8::from(offsets[i][j].contains(&((b + s - a) % s))))
    }))
}

/// Bipartite double of a symmetric 0/1 matrix: `u_x - w_y` whenever
/// `B_xy = 1`.
pub fn bipartite_double(b: &IntMatrix) -> Result<BipartiteGraph> {
    BipartiteGraph::from_biadjacency(b)
}

/// A simple bipartite graph whose adjacency spectral radius equals that of
/// the nonnegative symmetric integer matrix `m`, with the equality certified
/// exactly.
pub fn hoffman_bipartite(m: &IntMatrix) -> Result<BipartiteGraph> {
    if !m.is_square() || m.rows() == 0 {
        return Err(Error::InvalidArgument("expected a nonempty square matrix".into()));
    }
    let g = bipartite_double(&equitable_blowup(m)?)?;
    certify_same_radius(m, &g)?;
    Ok(g)
}

/// Above this many vertices the radius is certified through the equitable
/// partition instead of the characteristic polynomial.
pub const CHARPOLY_VERTEX_LIMIT: usize = 48;

/// Certify `rho(g) = rho(m)` exactly. Small graphs: `minpoly(rho(m))`
/// divides the characteristic polynomial and the radii agree as algebraic
/// numbers. Large graphs: see [`certify_equitable`].
pub fn certify_same_radius(m: &IntMatrix, g: &BipartiteGraph) -> Result<()> {
    if g.n() > CHARPOLY_VERTEX_LIMIT {
        return certify_equitable(m, g);
    }
    let rho_m = spectral_radius(&m.to_rat())?;
    let cp = g.block_adjacency().charpoly();
    if !rho_m.minpoly().divides(&cp) {
        return Err(Error::Invariant("graph spectrum misses the matrix spectral radius".into()));
    }
    let rho_g = crate::algnum::max_root_modulus(&cp)?;
    if rho_g.cmp_exact(&rho_m) != Ordering::Equal {
        return Err(Error::Invariant("graph spectral radius differs from the matrix".into()));
    }
    Ok(())
}

/// Class of each vertex in the layout produced by [`hoffman_bipartite`]:
/// `n` classes of size `s` in each part, part one first.
pub fn blowup_class(g: &BipartiteGraph, n: usize) -> Option<impl Fn(usize) -> usize> {
    let half = g.part_one().len();
    if n == 0 || half % n != 0 || g.part_two().len() != half {
        return None;
    }
    let s = half / n;
    Some(move |v: usize| (v % half) / s)
}

/// For positive `m`: every vertex of class `i` has exactly `m_ij` neighbours
/// in class `j` of the other part. The partition is then equitable with
/// quotient `[[0, m], [m, 0]]`, so lifting the positive Perron vector of `m`
/// gives a positive eigenvector of the graph, whose eigenvalue must be the
/// spectral radius.
pub fn certify_equitable(m: &IntMatrix, g: &BipartiteGraph) -> Result<()> {
    let n = m.rows();
    if !m.is_positive() {
        return Err(Error::Invariant("equitable certificate needs a positive matrix".into()));
    }
    let class = blowup_class(g, n).ok_or_else(|| Error::Invariant("graph is not a blow-up of the matrix".into()))?;
    let half = g.part_one().len();
    for v in 0..g.n() {
        let mut counts = vec![0usize; n];
        for w in g.graph().neighbors(v) {
            if (w < half) == (v < half) {
                return Err(Error::Invariant("edge inside a part".into()));
            }
            counts[class(w)] += 1;
        }
        let i = class(v);
        if (0..n).any(|j| BigInt::from(counts[j]) != *m.get(i, j)) {
            return Err(Error::Invariant(format!("vertex {v} breaks the equitable partition")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Graph;

    fn is_complete_bipartite(g: &BipartiteGraph, a: usize) -> bool {
        g.part_one().len() == a && g.part_two().len() == a && g.graph().edge_count() == a * a
    }

    #[test]
    fn scalar_gives_complete_bipartite() {
        for m in 1..=4 {
            let g = hoffman_bipartite(&IntMatrix::from_i64(&[&[m]])).unwrap();
            assert!(is_complete_bipartite(&g, m as usize));
        }
        let g = hoffman_bipartite(&IntMatrix::from_i64(&[&[3]])).unwrap();
        assert_eq!(g.graph().charpoly(), Graph::complete_bipartite(3, 3).charpoly());
    }

    #[test]
    fn zero_one_matrices_double() {
        let g = hoffman_bipartite(&IntMatrix::from_i64(&[&[1, 1], &[1, 1]])).unwrap();
        assert!(is_complete_bipartite(&g, 2));
        let m = IntMatrix::from_i64(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]);
        let g = hoffman_bipartite(&m).unwrap();
        assert_eq!(g.biadjacency(), m);
    }

    #[test]
    fn general_entries() {
        let m = IntMatrix::from_i64(&[&[5, 1], &[1, 2]]);
        let g = hoffman_bipartite(&m).unwrap();
        assert_eq!(g.n(), 20);
        let m = IntMatrix::from_i64(&[&[2, 3, 1], &[3, 4, 0], &[1, 0, 3]]);
        assert!(hoffman_bipartite(&m).is_ok());
    }

    #[test]
    fn equitable_certificate_matches_charpoly() {
        let m = IntMatrix::from_i64(&[&[5, 1], &[1, 2]]);
        let g = bipartite_double(&equitable_blowup(&m).unwrap()).unwrap();
        certify_equitable(&m, &g).unwrap();
        let other = IntMatrix::from_i64(&[&[5, 2], &[2, 2]]);
        assert!(certify_equitable(&other, &g).is_err());
    }

    #[test]
    fn offsets_are_symmetric() {
        for s in 1..=7 {
            for size in 0..=s {
                let o = symmetric_offsets(size, s);
                assert_eq!(o.len(), size, "size {size} in Z/{s}");
                for &d in &o {
                    assert!(o.contains(&((s - d) % s)));
                }
            }
        }
    }
}
