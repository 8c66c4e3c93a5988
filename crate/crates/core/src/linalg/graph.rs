use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use super::matrix::IntMatrix;
use crate::error::{Error, Result};
use crate::exactpoly::IntPoly;

/// Finite simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::InvalidArgument(format!("edge {u}-{v} out of range for {n} vertices")));
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0).expect("valid cycle");
        }
        g
    }

    /// `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Self {
        let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        Graph::from_edges(k + 1, &edges).expect("valid star")
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::new();
        for i in 0..a {
            for j in 0..b {
                edges.push((i, a + j));
            }
        }
        Graph::from_edges(a + b, &edges).expect("valid complete bipartite graph")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, s) in self.adj.iter().enumerate() {
            for &v in s.range(u + 1..) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.edge_count() + 1 == self.n() && self.is_connected()
    }

    pub fn adjacency(&self) -> IntMatrix {
        let n = self.n();
        IntMatrix::from_fn(n, n, |i, j| BigInt::from(u8::from(self.has_edge(i, j))))
    }

    /// Characteristic polynomial of the adjacency matrix. Trees use the
    /// matching-polynomial recursion, other graphs Berkowitz.
    pub fn charpoly(&self) -> IntPoly {
        if self.is_tree() {
            tree_charpoly(self)
        } else {
            self.adjacency().charpoly()
        }
    }

    /// Graph with vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(self.n(), &edges).expect("permutation keeps edges valid")
    }

    /// Two-colouring by breadth-first search from the lowest unvisited vertex,
    /// which goes to the first part. Fails with an odd cycle.
    pub fn bipartition(&self) -> Result<BipartiteGraph> {
        let n = self.n();
        let mut color: Vec<Option<u8>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(0);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].expect("queued vertices are coloured");
                for v in self.neighbors(u) {
                    match color[v] {
                        None => {
                            color[v] = Some(1 - cu);
                            parent[v] = u;
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => {
                            return Err(Error::NotBipartite(odd_cycle(&parent, u, v)));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let part_one = (0..n).filter(|&v| color[v] == Some(0)).collect();
        let part_two = (0..n).filter(|&v| color[v] == Some(1)).collect();
        BipartiteGraph::new(self.clone(), part_one, part_two)
    }
}

/// Cycle through the tree paths from `u` and `v` to their common ancestor,
/// closed by the edge `u-v`.
fn odd_cycle(parent: &[usize], u: usize, v: usize) -> Vec<usize> {
    let chain = |mut x: usize| {
        let mut out = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            out.push(x);
        }
        out
    };
    let (pu, pv) = (chain(u), chain(v));
    let anc: BTreeSet<usize> = pv.iter().copied().collect();
    let lca_pos = pu.iter().position(|x| anc.contains(x)).expect("same BFS tree");
    let lca = pu[lca_pos];
    let mut cycle: Vec<usize> = pu[..=lca_pos].to_vec();
    let lv = pv.iter().position(|&x| x == lca).expect("ancestor on both chains");
    cycle.extend(pv[..lv].iter().rev());
    cycle
}

/// Characteristic polynomial of a tree: for a forest it equals the matching
/// polynomial, computed bottom-up from an arbitrary root.
fn tree_charpoly(g: &Graph) -> IntPoly {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        order.push(u);
        for v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                parent[v] = u;
                stack.push(v);
            }
        }
    }
    // f[v]: subtree at v; h[v]: subtree at v with v deleted
    let mut f = vec![IntPoly::one(); n];
    let mut h = vec![IntPoly::one(); n];
    let x = IntPoly::x();
    for &v in order.iter().rev() {
        let children: Vec<usize> = g.neighbors(v).filter(|&c| c != parent[v]).collect();
        let prod = children.iter().fold(IntPoly::one(), |acc, &c| &acc * &f[c]);
        let mut fv = &x * &prod;
        for &c in &children {
            let others = children
                .iter()
                .filter(|&&d| d != c)
                .fold(IntPoly::one(), |acc, &d| &acc * &f[d]);
            fv = &fv - &(&h[c] * &others);
        }
        h[v] = prod;
        f[v] = fv;
    }
    f[0].clone()
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.n())?;
        let e: Vec<String> = self.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
        write!(f, "{})", e.join(" "))
    }
}

/// Graph together with a bipartition `V = V1 ⊔ V2` crossed by every edge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    graph: Graph,
    part_one: Vec<usize>,
    part_two: Vec<usize>,
}

impl BipartiteGraph {
    pub fn new(graph: Graph, mut part_one: Vec<usize>, mut part_two: Vec<usize>) -> Result<Self> {
        part_one.sort_unstable();
        part_two.sort_unstable();
        let n = graph.n();
        let mut side = vec![None; n];
        for (s, part) in [(0u8, &part_one), (1u8, &part_two)] {
            for &v in part {
                if v >= n || side[v].is_some() {
                    return Err(Error::InvalidArgument(format!("vertex {v} misplaced in bipartition")));
                }
                side[v] = Some(s);
            }
        }
        if side.iter().any(|s| s.is_none()) {
            return Err(Error::InvalidArgument("bipartition does not cover every vertex".into()));
        }
        if let Some((u, v)) = graph.edges().into_iter().find(|&(u, v)| side[u] == side[v]) {
            return Err(Error::InvalidArgument(format!("edge {u}-{v} lies inside one part")));
        }
        Ok(BipartiteGraph {
            graph,
            part_one,
            part_two,
        })
    }

    /// Graph with the given `p x q` biadjacency block; parts are `0..p` and `p..p+q`.
    pub fn from_biadjacency(b: &IntMatrix) -> Result<Self> {
        let (p, q) = (b.rows(), b.cols());
        let mut g = Graph::empty(p + q);
        for i in 0..p {
            for j in 0..q {
                let e = b.get(i, j);
                if e.is_one() {
                    g.add_edge(i, p + j)?;
                } else if *e != BigInt::from(0) {
                    return Err(Error::InvalidArgument("biadjacency entries must be 0 or 1".into()));
                }
            }
        }
        BipartiteGraph::new(g, (0..p).collect(), (p..p + q).collect())
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn part_one(&self) -> &[usize] {
        &self.part_one
    }

    pub fn part_two(&self) -> &[usize] {
        &self.part_two
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Rows follow `V1`, columns follow `V2`, both in increasing order.
    pub fn biadjacency(&self) -> IntMatrix {
        IntMatrix::from_fn(self.part_one.len(), self.part_two.len(), |i, j| {
            BigInt::from(u8::from(self.graph.has_edge(self.part_one[i], self.part_two[j])))
        })
    }

    /// Adjacency matrix in block order `V1` then `V2`.
    pub fn block_adjacency(&self) -> IntMatrix {
        let b = self.biadjacency();
        let p = b.rows();
        let q = b.cols();
        IntMatrix::from_blocks(&IntMatrix::zeros(p, p), &b, &b.transpose(), &IntMatrix::zeros(q, q))
    }

    /// Text form: a header `n; V1 / V2` followed by one `u-v` per line.
    /// Blank lines and `#` comments are ignored; the header may omit the
    /// bipartition, which is then computed.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty graph description".into()))?;
        let (count, parts) = match header.split_once(';') {
            Some((c, p)) => (c.trim(), Some(p.trim())),
            None => (header, None),
        };
        let n: usize = count
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex count `{count}`")))?;
        let mut g = Graph::empty(n);
        for line in lines {
            for tok in line.split([',', ' ', '\t']).filter(|t| !t.is_empty()) {
                let (u, v) = tok
                    .split_once('-')
                    .ok_or_else(|| Error::Parse(format!("bad edge `{tok}`")))?;
                let parse = |s: &str| {
                    s.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad vertex `{s}`")))
                };
                g.add_edge(parse(u)?, parse(v)?)?;
            }
        }
        match parts {
            None => g.bipartition(),
            Some(p) => {
                let (a, b) = p
                    .split_once('/')
                    .ok_or_else(|| Error::Parse("bipartition must be `V1 / V2`".into()))?;
                BipartiteGraph::new(g, parse_list(a)?, parse_list(b)?)
            }
        }
    }

    pub fn to_text(&self) -> String {
        let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let mut out = format!("{}; {} / {}\n", self.n(), list(&self.part_one), list(&self.part_two));
        for (u, v) in self.graph.edges() {
            out.push_str(&format!("{u}-{v}\n"));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self.n(),
            "part_one": self.part_one,
            "part_two": self.part_two,
            "edges": self.graph.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("graph JSON: {what}"));
        let n = v["vertices"].as_u64().ok_or_else(|| bad("missing `vertices`"))? as usize;
        let idx = |x: &Value| x.as_u64().map(|k| k as usize).ok_or_else(|| bad("non-integer vertex"));
        let mut g = Graph::empty(n);
        for e in v["edges"].as_array().ok_or_else(|| bad("missing `edges`"))? {
            let pair = e.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("edge must be a pair"))?;
            g.add_edge(idx(&pair[0])?, idx(&pair[1])?)?;
        }
        match (v.get("part_one"), v.get("part_two")) {
            (Some(a), Some(b)) => {
                let list = |x: &Value| -> Result<Vec<usize>> {
                    x.as_array().ok_or_else(|| bad("part must be an array"))?.iter().map(idx).collect()
                };
                BipartiteGraph::new(g, list(a)?, list(b)?)
            }
            _ => g.bipartition(),
        }
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad vertex `{t}`"))))
        .collect()
}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_text().trim_end())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly::poly;

    #[test]
    fn complete_bipartite_spectrum() {
        let g = Graph::complete_bipartite(3, 3);
        assert_eq!(g.charpoly(), poly(&[1, 0, -9, 0, 0, 0, 0]));
        let b = g.bipartition().unwrap();
        assert_eq!(b.part_one(), &[0, 1, 2]);
        assert_eq!(b.block_adjacency().charpoly(), g.charpoly());
    }

    #[test]
    fn tree_charpoly_agrees_with_berkowitz() {
        let t = Graph::from_edges(7, &[(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (4, 6)]).unwrap();
        assert_eq!(tree_charpoly(&t), t.adjacency().charpoly());
        assert_eq!(Graph::star(5).charpoly(), poly(&[1, 0, -5, 0, 0, 0, 0]));
        assert_eq!(Graph::path(1).charpoly(), poly(&[1, 0]));
    }

    #[test]
    fn odd_cycle_witness() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5)]).unwrap();
        match g.bipartition() {
            Err(Error::NotBipartite(c)) => {
                assert_eq!(c.len() % 2, 1);
                for i in 0..c.len() {
                    assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
                }
            }
            other => panic!("expected odd cycle, got {other:?}"),
        }
    }

    #[test]
    fn text_and_json_round_trip() {
        let b = BipartiteGraph::parse("4; 0,2 / 1,3\n0-1\n2-1 2-3 # comment\n").unwrap();
        assert_eq!(BipartiteGraph::parse(&b.to_text()).unwrap(), b);
        assert_eq!(BipartiteGraph::from_json(&b.to_json()).unwrap(), b);
        assert_eq!(BipartiteGraph::parse("4\n0-1\n1-2\n2-3").unwrap(), b);
        assert!(BipartiteGraph::parse("3; 0 / 1,2\n1-2").is_err());
        assert!(BipartiteGraph::parse("3\n0-1\n1-2\n2-0").is_err());
    }
}
