use proptest::prelude::*;

use qindex::bounds::{bo_window, conjecture_bound, merris_bound, q_bound_t2};
use qindex::graph::{decode_graph6, encode_graph6, parse_edge_list, write_edge_list};
use qindex::spectral::{adjacency_radius, q_index, DEFAULT_TOL};
use qindex::Graph;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_and_edge_list_round_trip(g in graph(62)) {
        prop_assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn adjacency_is_symmetric_and_loopless(g in graph(40)) {
        for u in g.vertices() {
            prop_assert!(!g.has_edge(u, u));
            for v in g.neighbors(u) {
                prop_assert!(g.has_edge(v, u));
            }
        }
        let sum: usize = g.degrees().iter().sum();
        prop_assert_eq!(sum, 2 * g.size());
    }

    #[test]
    fn join_degree_law(g in graph(20), h in graph(20)) {
        let j = g.join(&h).unwrap();
        let (n, m) = (g.order(), h.order());
        prop_assert_eq!(j.order(), n + m);
        prop_assert_eq!(j.size(), g.size() + h.size() + n * m);
        for u in 0..n {
            prop_assert_eq!(j.degree(u), g.degree(u) + m);
        }
        for v in 0..m {
            prop_assert_eq!(j.degree(n + v), h.degree(v) + n);
        }
    }

    #[test]
    fn complement_and_union_counts(g in graph(30), h in graph(30)) {
        let n = g.order();
        prop_assert_eq!(g.complement().size() + g.size(), n * (n - 1) / 2);
        let u = g.disjoint_union(&h).unwrap();
        prop_assert_eq!(u.size(), g.size() + h.size());
        prop_assert_eq!(u.components().len(), g.components().len() + h.components().len());
    }

    #[test]
    fn spectral_facts(g in graph(24)) {
        let q = q_index(&g, DEFAULT_TOL).unwrap().value;
        let lambda = adjacency_radius(&g, DEFAULT_TOL).unwrap().value;
        prop_assert!(lambda >= 2.0 * g.size() as f64 / g.order() as f64 - 1e-9);
        prop_assert!(q >= 2.0 * lambda - 1e-9 || g.is_regular());
        if g.size() > 0 {
            prop_assert!(q >= g.max_degree() as f64 + 1.0 - 1e-9);
            prop_assert!(q <= merris_bound(&g).unwrap() + 1e-7);
        }
    }

    #[test]
    fn bound_window_and_reduction(s in 1usize..=6, n in 3usize..=400) {
        let q = q_bound_t2(n, s);
        prop_assert!((conjecture_bound(n, s, 2).unwrap() - q).abs() <= 1e-10 * q);
        if n > 2 * s {
            let (lo, hi) = bo_window(n, s).unwrap();
            prop_assert!(lo < q && q < hi);
        }
    }
}
