mod common;

use common::Bits;
use mced::{parse_edit_set, parse_graph, Edit, EditSet, Graph};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
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
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// A graph together with a random set of distinct pairs turned into edits.
fn arb_edited() -> impl Strategy<Value = (Graph, EditSet)> {
    arb_graph(9).prop_flat_map(|g| {
        let n = g.n();
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |pick| {
            let mut f = EditSet::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if pick[i] {
                        f.push(Edit::toggle(&g, u, v)).unwrap();
                    }
                    i += 1;
                }
            }
            (g.clone(), f)
        })
    })
}

proptest! {
    #[test]
    fn edit_list_roundtrip(g in arb_graph(12)) {
        prop_assert_eq!(parse_graph(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn applying_then_negating_restores_graph((g, f) in arb_edited()) {
        let h = g.apply_edits(&f).unwrap();
        prop_assert_eq!(h.apply_edits(&f.negate()).unwrap(), g.clone());
        prop_assert!(g.apply_edits(&f.negate()).is_err() || f.is_empty());
    }

    #[test]
    fn edit_set_text_roundtrip((_g, f) in arb_edited()) {
        prop_assert_eq!(parse_edit_set(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn complement_is_involution(g in arb_graph(10)) {
        let c = g.complement();
        prop_assert_eq!(c.m() + g.m(), g.n() * g.n().saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn is_module_matches_bitmask(g in arb_graph(8), mask in any::<u32>()) {
        let n = g.n();
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let bits = Bits::from_graph(&g);
        let m = set.iter().fold(0u32, |acc, &v| acc | 1 << v);
        prop_assert_eq!(g.is_module(&set), set.is_empty() || bits.is_module(m));
    }

    #[test]
    fn components_partition_vertices(g in arb_graph(12)) {
        let comps = g.connected_components();
        let mut all: Vec<usize> = comps.concat();
        all.sort_unstable();
        prop_assert_eq!(all, (0..g.n()).collect::<Vec<_>>());
        for c in &comps {
            prop_assert_eq!(g.induced_subgraph(c).connected_components().len(), 1);
            prop_assert!(g.is_module(c));
        }
    }
}
