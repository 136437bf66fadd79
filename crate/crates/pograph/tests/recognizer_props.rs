//! Property tests: structural invariants of the graph type and the
//! recognizers on arbitrary small graphs.

use proptest::prelude::*;

use pograph::classes::{
    self, find_odd_hole, oracle, validate_witness, Budget, Verdict, Witness, WitnessKind,
};
use pograph::graph::UGraph;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = UGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = UGraph::empty(n);
            let mut k = 0;
            for x in 0..n {
                for y in (x + 1)..n {
                    if bits[k] {
                        g.add_edge(x, y);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn complement_is_involutive(g in graph_strategy(24)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn complement_edge_counts_are_complementary(g in graph_strategy(24)) {
        let n = g.order();
        prop_assert_eq!(
            g.edge_count() + g.complement().edge_count(),
            n * n.saturating_sub(1) / 2
        );
    }

    #[test]
    fn induced_preserves_adjacency(g in graph_strategy(16), keep in proptest::collection::vec(any::<bool>(), 16)) {
        let verts: Vec<usize> = (0..g.order()).filter(|&v| keep[v]).collect();
        let sub = g.induced(&verts).unwrap();
        for (i, &x) in verts.iter().enumerate() {
            for (j, &y) in verts.iter().enumerate() {
                if i != j {
                    prop_assert_eq!(sub.has_edge(i, j), g.has_edge(x, y));
                }
            }
        }
    }

    /// Holes of the complement are exactly the antiholes of the graph.
    #[test]
    fn complement_duality_for_holes(g in graph_strategy(11)) {
        let comp = g.complement();
        let found = find_odd_hole(&comp, Budget::unlimited());
        let oracle_hole = oracle::oracle_odd_hole(&comp).unwrap();
        prop_assert_eq!(found.verdict == Verdict::NotInClass, oracle_hole.is_some());
        if found.verdict == Verdict::NotInClass {
            let anti = Witness::new(WitnessKind::OddAntihole, found.witness.vertices.clone());
            prop_assert!(validate_witness(&g, &anti), "hole of complement must be an antihole");
        }
    }

    /// Any oracle-found forbidden structure forces the matching
    /// recognizer to reject, and its canonical form validates.
    #[test]
    fn hereditary_consistency(g in graph_strategy(11)) {
        use oracle::Pattern;
        let p4s = oracle::oracle_induced_scan(&g, Pattern::P4).unwrap();
        if let Some(w) = p4s.first() {
            prop_assert!(validate_witness(&g, &Witness::new(WitnessKind::P4, w.clone())));
            prop_assert_eq!(classes::is_cograph(&g).verdict, Verdict::NotInClass);
            prop_assert_eq!(classes::is_threshold(&g).verdict, Verdict::NotInClass);
        }
        let claws = oracle::oracle_induced_scan(&g, Pattern::Claw).unwrap();
        if let Some(w) = claws.first() {
            prop_assert!(validate_witness(&g, &Witness::new(WitnessKind::Claw, w.clone())));
            prop_assert_eq!(classes::is_clawfree(&g).verdict, Verdict::NotInClass);
        }
        for (pattern, kind) in [(Pattern::TwoK2, WitnessKind::TwoK2), (Pattern::C4, WitnessKind::C4), (Pattern::C5, WitnessKind::C5)] {
            if let Some(w) = oracle::oracle_induced_scan(&g, pattern).unwrap().first() {
                prop_assert!(validate_witness(&g, &Witness::new(kind, w.clone())));
                prop_assert_eq!(classes::is_split(&g).verdict, Verdict::NotInClass);
            }
        }
    }

    /// The chordal recognizer agrees with the subset oracle and its
    /// cycles validate.
    #[test]
    fn chordal_matches_oracle(g in graph_strategy(11)) {
        let out = classes::is_chordal(&g);
        let expected = oracle::oracle_is_chordal(&g).unwrap();
        prop_assert_eq!(out.verdict == Verdict::InClass, expected);
        if out.verdict == Verdict::NotInClass {
            prop_assert!(validate_witness(&g, &out.witness));
            prop_assert!(out.witness.vertices.len() >= 4);
        }
    }

    /// First-found searches are deterministic across repeated runs.
    #[test]
    fn recognizers_are_deterministic(g in graph_strategy(12)) {
        let a = find_odd_hole(&g, Budget::unlimited());
        let b = find_odd_hole(&g, Budget::unlimited());
        prop_assert_eq!(a.verdict, b.verdict);
        prop_assert_eq!(a.witness, b.witness);
        let a = classes::is_split(&g);
        let b = classes::is_split(&g);
        prop_assert_eq!(a.witness, b.witness);
    }
}
