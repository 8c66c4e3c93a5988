//! Exhaustive catalogues of small trees and connected bipartite graphs, up to
//! isomorphism, in a fixed canonical order.

use std::collections::BTreeSet;

use super::graph::{BipartiteGraph, Graph};

/// Canonical string of a free tree: the AHU encoding rooted at a center,
/// minimised over both centers when there are two.
pub fn tree_canonical(t: &Graph) -> String {
    assert!(t.is_tree(), "canonical form of a non-tree");
    tree_centers(t)
        .into_iter()
        .map(|c| ahu(t, c, usize::MAX))
        .min()
        .expect("a tree has a center")
}

fn ahu(t: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = t.neighbors(v).filter(|&c| c != parent).map(|c| ahu(t, c, v)).collect();
    kids.sort_unstable();
    format!("({})", kids.concat())
}

fn tree_centers(t: &Graph) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            deg[leaf] = 0;
            for u in t.neighbors(leaf) {
                if deg[u] > 0 {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Rebuild a tree from its canonical string, numbering vertices in
/// preorder; equal strings give identical graphs.
fn tree_from_canonical(s: &str) -> Graph {
    let mut edges = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0;
    for ch in s.chars() {
        if ch == '(' {
            if let Some(&p) = stack.last() {
                edges.push((p, next));
            }
            stack.push(next);
            next += 1;
        } else {
            stack.pop();
        }
    }
    Graph::from_edges(next, &edges).expect("well-formed encoding")
}

/// Non-isomorphic trees level by level, grown by attaching leaves.
#[derive(Clone, Debug, Default)]
pub struct TreeCatalog {
    levels: Vec<Vec<String>>,
}

impl TreeCatalog {
    pub fn new() -> Self {
        TreeCatalog {
            levels: vec![Vec::new(), vec!["()".to_string()]],
        }
    }

    /// Canonical strings of the trees with `n` vertices, sorted.
    pub fn canonical(&mut self, n: usize) -> &[String] {
        while self.levels.len() <= n {
            let prev = self.levels.last().expect("seeded");
            let mut next = BTreeSet::new();
            for s in prev {
                let t = tree_from_canonical(s);
                let m = t.n();
                for v in 0..m {
                    let mut edges = t.edges();
                    edges.push((v, m));
                    let grown = Graph::from_edges(m + 1, &edges).expect("valid");
                    next.insert(tree_canonical(&grown));
                }
            }
            self.levels.push(next.into_iter().collect());
        }
        &self.levels[n]
    }

    pub fn trees(&mut self, n: usize) -> Vec<Graph> {
        self.canonical(n).iter().map(|s| tree_from_canonical(s)).collect()
    }
}

/// All trees with `n` vertices up to isomorphism, in canonical order.
pub fn trees(n: usize) -> Vec<Graph> {
    TreeCatalog::new().trees(n)
}

/// Row-sorted biadjacency under one column permutation, as a canonical key.
fn permuted_rows(rows: &[u32], perm: &[usize]) -> Vec<u32> {
    let mut out: Vec<u32> = rows
        .iter()
        .map(|&r| {
            perm.iter()
                .enumerate()
                .fold(0, |acc, (j, &pj)| acc | (((r >> j) & 1) << pj))
        })
        .collect();
    out.sort_unstable();
    out
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

fn transpose_rows(rows: &[u32], b: usize) -> Vec<u32> {
    (0..b)
        .map(|j| {
            rows.iter()
                .enumerate()
                .fold(0, |acc, (i, &r)| acc | (((r >> j) & 1) << i))
        })
        .collect()
}

fn canonical_biadjacency(rows: &[u32], b: usize, perms: &[Vec<usize>]) -> Vec<u32> {
    let a = rows.len();
    let mut best = perms.iter().map(|p| permuted_rows(rows, p)).min().expect("nonempty");
    if a == b {
        let t = transpose_rows(rows, b);
        if let Some(m) = perms.iter().map(|p| permuted_rows(&t, p)).min() {
            best = best.min(m);
        }
    }
    best
}

fn rows_connected(rows: &[u32], b: usize) -> bool {
    let a = rows.len();
    let mut g = Graph::empty(a + b);
    for (i, &r) in rows.iter().enumerate() {
        for j in 0..b {
            if (r >> j) & 1 == 1 {
                g.add_edge(i, a + j).expect("valid");
            }
        }
    }
    g.is_connected()
}

fn from_rows(rows: &[u32], b: usize) -> BipartiteGraph {
    let a = rows.len();
    let mut g = Graph::empty(a + b);
    for (i, &r) in rows.iter().enumerate() {
        for j in 0..b {
            if (r >> j) & 1 == 1 {
                g.add_edge(i, a + j).expect("valid");
            }
        }
    }
    BipartiteGraph::new(g, (0..a).collect(), (a..a + b).collect()).expect("crossing edges")
}

/// Connected bipartite graphs on `n` vertices up to isomorphism, with the
/// smaller part first. Ordered by part size, then canonical biadjacency.
pub fn connected_bipartite_graphs(n: usize) -> Vec<BipartiteGraph> {
    assert!(n <= 10, "exhaustive enumeration is limited to 10 vertices");
    match n {
        0 => return Vec::new(),
        1 => return vec![from_rows(&[], 1)],
        _ => {}
    }
    let mut out = Vec::new();
    for a in 1..=n / 2 {
        let b = n - a;
        let perms = permutations(b);
        let mut seen = BTreeSet::new();
        // nondecreasing rows already fix the row order
        let mut rows = vec![1u32; a];
        let top = 1u32 << b;
        loop {
            let cols = rows.iter().fold(0, |acc, r| acc | r);
            if cols == top - 1 && rows_connected(&rows, b) {
                seen.insert(canonical_biadjacency(&rows, b, &perms));
            }
            // next nondecreasing tuple of values in 1..top
            let mut i = a;
            while i > 0 && rows[i - 1] == top - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            let v = rows[i - 1] + 1;
            for r in &mut rows[i - 1..] {
                *r = v;
            }
        }
        out.extend(seen.into_iter().map(|rows| from_rows(&rows, b)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts() {
        let mut cat = TreeCatalog::new();
        let counts: Vec<usize> = (1..=10).map(|n| cat.canonical(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn canonical_form_is_invariant() {
        let t = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (4, 5)]).unwrap();
        let relabelled = t.relabel(&[5, 3, 0, 1, 2, 4]);
        assert_eq!(tree_canonical(&t), tree_canonical(&relabelled));
        assert_ne!(tree_canonical(&t), tree_canonical(&Graph::path(6)));
    }

    #[test]
    fn bipartite_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| connected_bipartite_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 3, 5, 17, 44, 182]);
    }
}
