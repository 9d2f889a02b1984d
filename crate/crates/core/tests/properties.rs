mod common;

use common::*;
use proptest::prelude::*;
use twofactor::toughness::{is_t_tough, toughness_exact};
use twofactor::two_factor::eta_of;
use twofactor::{Graph, Rational, VertexSet};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn arb_triple(max_n: usize) -> impl Strategy<Value = (Graph, Vec<u8>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), proptest::collection::vec(0u8..3, n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn eta_is_even_and_matches_definition((g, side) in arb_triple(12)) {
        let n = g.vertex_count();
        let s = VertexSet::from_vertices(n, (0..n).filter(|&v| side[v] == 0));
        let t = VertexSet::from_vertices(n, (0..n).filter(|&v| side[v] == 1));
        let pair = eta_of(&g, &s, &t).unwrap();
        prop_assert_eq!(pair.eta.rem_euclid(2), 0);
        prop_assert_eq!((pair.eta, pair.h), naive_eta(&g, &side));
    }

    #[test]
    fn toughness_is_sharp(g in arb_graph(10)) {
        let t = toughness_exact(&g).unwrap().value;
        prop_assert!(is_t_tough(&g, t).unwrap().tough);
        if let (Some(p), Some(q)) = (t.numer(), t.denom()) {
            let above = Rational::new(p * 1_000_000 + 1, q * 1_000_000);
            prop_assert!(!is_t_tough(&g, above).unwrap().tough);
        }
    }

    #[test]
    fn adding_an_edge_never_lowers_toughness(g in arb_graph(9), pick in any::<prop::sample::Index>()) {
        let n = g.vertex_count();
        let missing: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).filter(|&(u, v)| !g.adjacent(u, v)).collect();
        prop_assume!(!missing.is_empty());
        let extra = missing[pick.index(missing.len())];
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        edges.push(extra);
        let h = Graph::from_edge_list(n, &edges).unwrap();
        prop_assert!(toughness_exact(&g).unwrap().value <= toughness_exact(&h).unwrap().value);
    }

    #[test]
    fn three_halves_tough_forces_min_degree_three(g in arb_graph(10)) {
        prop_assume!(!g.is_complete());
        if is_t_tough(&g, Rational::new(3, 2)).unwrap().tough {
            prop_assert!(g.min_degree().unwrap() >= 3);
        }
    }

    #[test]
    fn witness_attains_value(g in arb_graph(10)) {
        let r = toughness_exact(&g).unwrap();
        if let Some(w) = r.witness {
            let parts = g.component_count(&w);
            prop_assert!(parts >= 2);
            prop_assert_eq!(Rational::new(w.len() as i64, parts as i64), r.value);
        }
    }
}
