use biperron::algnum::{classify, leading_power, minimal_poly_power, power_trace};
use biperron::coxeter::{coxeter_transform_ordered, PartOrder};
use biperron::exactpoly::{is_irreducible, AlgebraicReal, IntPoly};
use biperron::linalg::{algebraic_multiplicity, spectral_radius, Graph};
use biperron::thurston::thurston_product;
use proptest::prelude::*;

/// A connected graph: a random spanning tree plus extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let parents = (1..n).map(|v| 0..v).collect::<Vec<_>>();
        let extra = proptest::collection::vec((0..n, 0..n), 0..n * 2);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let mut g = Graph::empty(n);
            for (v, p) in parents.into_iter().enumerate() {
                g.add_edge(v + 1, p).unwrap();
            }
            for (u, v) in extra {
                if u != v && !g.has_edge(u, v) {
                    g.add_edge(u, v).unwrap();
                }
            }
            g
        })
    })
}

/// Connected bipartite: spanning tree edges always cross the colouring,
/// extra edges are kept only when they do.
fn connected_bipartite(max_n: usize) -> impl Strategy<Value = Graph> {
    connected_graph(max_n).prop_map(|g| {
        let b = g.bipartition();
        match b {
            Ok(b) => b.graph().clone(),
            Err(_) => {
                let mut colour = vec![usize::MAX; g.n()];
                colour[0] = 0;
                let mut stack = vec![0];
                let mut tree = Graph::empty(g.n());
                while let Some(u) = stack.pop() {
                    for v in g.neighbors(u).collect::<Vec<_>>() {
                        if colour[v] == usize::MAX {
                            colour[v] = 1 - colour[u];
                            tree.add_edge(u, v).unwrap();
                            stack.push(v);
                        }
                    }
                }
                for (u, v) in g.edges() {
                    if colour[u] != colour[v] && !tree.has_edge(u, v) {
                        tree.add_edge(u, v).unwrap();
                    }
                }
                tree
            }
        }
    })
}

fn monic(max_deg: usize, height: i64) -> impl Strategy<Value = IntPoly> {
    (1..=max_deg).prop_flat_map(move |d| {
        proptest::collection::vec(-height..=height, d).prop_map(|tail| {
            IntPoly::from_descending(std::iter::once(1i64).chain(tail))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn connected_graph_has_simple_spectral_radius(g in connected_graph(8)) {
        prop_assume!(g.edge_count() > 0);
        let a = g.adjacency().to_rat();
        let rho = spectral_radius(&a).unwrap();
        prop_assert_eq!(algebraic_multiplicity(&a, &rho), 1);
    }

    #[test]
    fn bipartite_charpoly_has_parity(g in connected_bipartite(8)) {
        prop_assert!(g.bipartition().is_ok());
        let p = g.charpoly();
        let n = g.n();
        for (i, c) in p.coeffs_ascending().iter().enumerate() {
            if (n - i) % 2 == 1 {
                prop_assert_eq!(c, &0.into());
            }
        }
    }

    #[test]
    fn coxeter_charpoly_ignores_part_order(g in connected_bipartite(7)) {
        let b = g.bipartition().unwrap();
        let one = coxeter_transform_ordered(&b, PartOrder::OneFirst).charpoly();
        let two = coxeter_transform_ordered(&b, PartOrder::TwoFirst).charpoly();
        prop_assert_eq!(one, two);
    }

    #[test]
    fn thurston_identities(a in 1i64..12, b in 1i64..4) {
        let r = AlgebraicReal::from_rational(&num_rational::BigRational::new(a.into(), b.into()));
        let t = thurston_product(&r).unwrap();
        prop_assert!(t.checks().unwrap().iter().all(|(_, ok)| *ok));
        prop_assert_eq!(t.is_pseudo_anosov(), a > 2 * b);
    }

    #[test]
    fn thurston_identities_quadratic(n in 2i64..40) {
        let r = AlgebraicReal::largest_real_root(&IntPoly::from_descending([1, 0, -n])).unwrap();
        let t = thurston_product(&r).unwrap();
        prop_assert!(t.checks().unwrap().iter().all(|(_, ok)| *ok));
        prop_assert_eq!(t.is_pseudo_anosov(), n > 4);
    }

    #[test]
    fn perron_powers_are_consistent(p in monic(5, 4), k in 1u32..5) {
        prop_assume!(is_irreducible(&p));
        let c = classify(&p).unwrap();
        prop_assume!(c.is_perron);
        let lambda = c.leading_root.unwrap();
        let power = leading_power(&p, k).unwrap();
        let approx = lambda.to_f64().powi(k as i32);
        prop_assert!((power.to_f64() - approx).abs() <= 1e-9 * approx.max(1.0));
        prop_assert!(power.minpoly().divides(&minimal_poly_power(&p, k).unwrap()));
        if c.is_unit {
            let tr = power_trace(&p, k).unwrap();
            prop_assert!((tr.to_f64() - (approx + 1.0 / approx)).abs() <= 1e-9 * approx.max(1.0));
        }
    }
}
