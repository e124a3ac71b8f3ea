//! Property tests over random graphs and labelings.

use proptest::prelude::*;

use oitdrd::families;
use oitdrd::graph::Graph;
use oitdrd::labeling::{
    check_oidrdf, check_oitdrdf, check_tdrdf, Labeling,
};
use oitdrd::solver::{solve_oitdrd, SolveOptions};
use oitdrd::tree_dp::solve_tree;

/// Arbitrary simple graph on up to 8 vertices, as an edge-presence mask.
fn arb_graph() -> impl Strategy<Value = Graph> {
    (2usize..=8, any::<u32>()).prop_map(|(n, mask)| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> (i % 32) & 1 == 1 || i % 7 == 3)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

fn arb_graph_and_labeling() -> impl Strategy<Value = (Graph, Labeling)> {
    arb_graph().prop_flat_map(|g| {
        let n = g.n();
        (
            Just(g),
            proptest::collection::vec(0u8..=3, n).prop_map(|v| Labeling::new(v).unwrap()),
        )
    })
}

proptest! {
    #[test]
    fn oitdrdf_is_exactly_tdrdf_and_oidrdf((g, f) in arb_graph_and_labeling()) {
        let whole = check_oitdrdf(&g, &f).unwrap().is_valid();
        let split = check_tdrdf(&g, &f).unwrap() && check_oidrdf(&g, &f).unwrap();
        prop_assert_eq!(whole, split);
    }

    #[test]
    fn edge_list_text_round_trips(g in arb_graph()) {
        let text = g.to_edge_list_string();
        let back = Graph::from_edge_list(&text).unwrap();
        prop_assert_eq!(g, back);
    }

    #[test]
    fn solver_witnesses_are_valid(g in arb_graph()) {
        let res = solve_oitdrd(&g, &SolveOptions::sequential());
        if let Some(w) = res.witness {
            prop_assert!(check_oitdrdf(&g, &w).unwrap().is_valid());
            prop_assert_eq!(w.weight(), res.weight.unwrap());
        } else {
            prop_assert!(!res.feasible);
        }
    }

    #[test]
    fn tree_dp_matches_search_on_random_trees(n in 2usize..=9, seed in any::<u64>()) {
        let t = families::random_tree(n, seed).unwrap();
        let dp = solve_tree(&t, 0).unwrap().weight;
        let bb = solve_oitdrd(&t, &SolveOptions::sequential()).weight;
        prop_assert_eq!(dp, bb);
    }

    #[test]
    fn all_two_labeling_is_always_feasible_witness(n in 2usize..=8, seed in any::<u64>()) {
        let g = families::random_connected(n, seed).unwrap();
        let f = Labeling::constant(n, 2);
        prop_assert!(check_oitdrdf(&g, &f).unwrap().is_valid());
        prop_assert!(solve_oitdrd(&g, &SolveOptions::sequential()).weight.unwrap() <= 2 * n);
    }
}
