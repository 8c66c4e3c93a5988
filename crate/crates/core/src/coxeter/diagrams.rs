use crate::error::{Error, Result};
use crate::linalg::{BipartiteGraph, Graph};

/// Path `A_n`.
pub fn a_n(n: usize) -> Graph {
    Graph::path(n)
}

/// `D_n`, `n >= 4`: a path on `n - 1` vertices with a pendant at the
/// second-to-last vertex.
pub fn d_n(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!("D_{n} needs at least 4 vertices")));
    }
    let mut edges = Graph::path(n - 1).edges();
    edges.push((n - 3, n - 1));
    Graph::from_edges(n, &edges)
}

/// `E_n`, `n >= 6`: a path on `n - 1` vertices with a pendant at the third
/// vertex. `E_10` has Lehmer's number as Coxeter spectral radius.
pub fn e_n(n: usize) -> Result<Graph> {
    if n < 6 {
        return Err(Error::InvalidArgument(format!("E_{n} needs at least 6 vertices")));
    }
    let mut edges = Graph::path(n - 1).edges();
    edges.push((2, n - 1));
    Graph::from_edges(n, &edges)
}

/// Built-in diagrams by name: `A<n>`, `D<n>`, `E<n>`, `K<a>,<b>` and
/// `star<k>`, case-insensitive.
pub fn named_graph(name: &str) -> Result<BipartiteGraph> {
    let s = name.trim().to_ascii_lowercase();
    let num = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| Error::Parse(format!("unknown diagram `{name}`")))
    };
    let g = if let Some(rest) = s.strip_prefix("star") {
        Graph::star(num(rest)?)
    } else if let Some(rest) = s.strip_prefix('k') {
        let (a, b) = rest
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("unknown diagram `{name}`")))?;
        Graph::complete_bipartite(num(a)?, num(b)?)
    } else if let Some(rest) = s.strip_prefix('a') {
        let n = num(rest)?;
        if n == 0 {
            return Err(Error::InvalidArgument("A_0 is empty".into()));
        }
        a_n(n)
    } else if let Some(rest) = s.strip_prefix('d') {
        d_n(num(rest)?)?
    } else if let Some(rest) = s.strip_prefix('e') {
        e_n(num(rest)?)?
    } else {
        return Err(Error::Parse(format!("unknown diagram `{name}`")));
    };
    g.bipartition()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::coxeter_spectral_radius;
    use crate::exactpoly::poly::poly;

    #[test]
    fn e10_is_lehmer() {
        let g = named_graph("E10").unwrap();
        assert!(g.graph().is_tree());
        let r = coxeter_spectral_radius(&g).unwrap();
        assert_eq!(r.minpoly(), poly(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]));
        assert_eq!(r.decimal(5), "1.17628");
    }

    #[test]
    fn finite_types_have_radius_one() {
        for name in ["A5", "D6", "E6", "E7", "E8"] {
            let r = coxeter_spectral_radius(&named_graph(name).unwrap()).unwrap();
            assert_eq!(r.minpoly(), poly(&[1, -1]), "{name}");
        }
        assert!(named_graph("Q3").is_err());
        assert_eq!(named_graph("K3,3").unwrap().n(), 6);
    }
}
