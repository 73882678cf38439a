//! Property tests for the switching calculus, two-graph correspondence,
//! graph6 codec and the strong-regularity check.

use proptest::prelude::*;

use g2srg::graph::{Graph, VertexSet};
use g2srg::seidel::IntMatrix;
use g2srg::two_graph::{associated_two_graph, switching_witness};
use g2srg::verify::naive_srg_oracle;

/// Random graph on exactly `n` vertices from an edge bitmask.
fn arb_graph_on(n: usize) -> impl Strategy<Value = Graph> {
    let pairs = n * (n - 1) / 2;
    proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
        let mut g = Graph::empty(n).unwrap();
        let mut idx = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                if bits[idx] {
                    g.add_edge(u, v).unwrap();
                }
                idx += 1;
            }
        }
        g
    })
}

/// Random graph on 1..=max_n vertices.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(arb_graph_on)
}

fn subset_of(g: &Graph, mask: u64) -> VertexSet {
    let n = g.n();
    let full = if n >= 64 { !0 } else { (1u64 << n) - 1 };
    VertexSet::from_mask(mask & full)
}

proptest! {
    #[test]
    fn switching_is_an_involution(g in arb_graph(12), mask in any::<u64>()) {
        let y = subset_of(&g, mask);
        prop_assert_eq!(g.switch(y).switch(y), g);
    }

    #[test]
    fn switching_composes_by_symmetric_difference(
        g in arb_graph(12),
        mask1 in any::<u64>(),
        mask2 in any::<u64>(),
    ) {
        let y1 = subset_of(&g, mask1);
        let y2 = subset_of(&g, mask2);
        prop_assert_eq!(
            g.switch(y1).switch(y2),
            g.switch(y1.symmetric_difference(y2))
        );
    }

    #[test]
    fn switched_seidel_matrix_is_dsd(g in arb_graph(12), mask in any::<u64>()) {
        let y = subset_of(&g, mask);
        let n = g.n();
        let d = IntMatrix::from_fn(n, |i, j| {
            if i != j { 0 } else if y.contains(i) { -1 } else { 1 }
        });
        let dsd = d.mul(&g.seidel_matrix()).mul(&d);
        prop_assert_eq!(g.switch(y).seidel_matrix(), dsd);
    }

    #[test]
    fn switching_preserves_the_two_graph_and_witness_recovers(
        g in arb_graph(10),
        mask in any::<u64>(),
    ) {
        let y = subset_of(&g, mask);
        let switched = g.switch(y);
        prop_assert_eq!(associated_two_graph(&g), associated_two_graph(&switched));
        let witness = switching_witness(&g, &switched).unwrap();
        let w = witness.expect("switching-equivalent graphs have a witness");
        prop_assert_eq!(g.switch(w), switched);
    }

    /// Lemma 2.3 in both directions on independent graphs: a witness exists
    /// exactly when the associated two-graphs coincide.
    #[test]
    fn witness_exists_iff_two_graphs_agree(
        (g1, g2) in (1..=8usize).prop_flat_map(|n| (arb_graph_on(n), arb_graph_on(n))),
    ) {
        let equal = associated_two_graph(&g1) == associated_two_graph(&g2);
        let witness = switching_witness(&g1, &g2).unwrap();
        prop_assert_eq!(witness.is_some(), equal);
        if let Some(w) = witness {
            prop_assert_eq!(g1.switch(w), g2);
        }
    }

    #[test]
    fn every_associated_two_graph_satisfies_the_axiom(g in arb_graph(9)) {
        prop_assert!(associated_two_graph(&g).satisfies_even_intersection());
    }

    #[test]
    fn complement_is_involutive(g in arb_graph(16)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    /// Complement parameters follow the round-trip formula whenever the
    /// graph happens to be strongly regular.
    #[test]
    fn srg_complement_roundtrip(g in arb_graph(10)) {
        if let Some(p) = g.check_srg().params() {
            prop_assert!(p.is_feasible());
            prop_assert_eq!(g.complement().check_srg().params(), Some(p.complement()));
        }
    }

    #[test]
    fn graph6_roundtrip(g in arb_graph(64)) {
        let encoded = g2srg::graph6::encode(&g);
        prop_assert_eq!(g2srg::graph6::decode(&encoded).unwrap(), g);
    }

    #[test]
    fn check_srg_matches_the_naive_oracle(g in arb_graph(12)) {
        let rows: Vec<u64> = (0..g.n()).map(|v| g.neighbors_mask(v)).collect();
        prop_assert_eq!(g.check_srg().params(), naive_srg_oracle(&rows, g.n()));
    }

    #[test]
    fn permutation_compose_inverse(
        images in Just((0..10usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let p = g2srg::Permutation::from_images(images).unwrap();
        prop_assert!(p.compose(&p.inverse()).is_identity());
        prop_assert!(p.inverse().compose(&p).is_identity());
    }
}

#[test]
fn seidel_entries_determine_switching_class_size() {
    // all graphs on 3 vertices fall into 2 switching classes (4 graphs each)
    let mut classes: Vec<g2srg::TwoGraph> = Vec::new();
    let mut sizes = std::collections::HashMap::<usize, usize>::new();
    for mask in 0u8..8 {
        let mut g = Graph::empty(3).unwrap();
        let pairs = [(0, 1), (0, 2), (1, 2)];
        for (bit, &(u, v)) in pairs.iter().enumerate() {
            if (mask >> bit) & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
        }
        let tg = associated_two_graph(&g);
        let idx = match classes.iter().position(|t| *t == tg) {
            Some(i) => i,
            None => {
                classes.push(tg);
                classes.len() - 1
            }
        };
        *sizes.entry(idx).or_default() += 1;
    }
    assert_eq!(classes.len(), 2);
    assert!(sizes.values().all(|&s| s == 4));
}
