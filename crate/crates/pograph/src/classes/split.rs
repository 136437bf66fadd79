//! Split-graph test by the degree-sequence splittance identity, with a
//! targeted {2K2, C4, C5} witness hunt for the negative case.

use crate::graph::UGraph;

use super::oddhole::search_odd_hole;
use super::witness::{Witness, WitnessKind};
use super::Budget;

/// Hammer–Simeone: sort degrees descending, m = max{i : d_i >= i-1};
/// the graph is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i.
pub(crate) fn splittance_is_zero(g: &UGraph) -> bool {
    let n = g.order();
    let mut degs: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    degs.sort_unstable_by(|a, b| b.cmp(a));
    let mut m = 0;
    for (i, &d) in degs.iter().enumerate() {
        if d >= i {
            m = i + 1;
        } else {
            break;
        }
    }
    let top: usize = degs[..m].iter().sum();
    let rest: usize = degs[m..].iter().sum();
    top == m * (m - 1) + rest
}

fn find_2k2(g: &UGraph) -> Option<Witness> {
    let n = g.order();
    for a in 0..n {
        for b in g.neighbors(a).iter_ones() {
            if b < a {
                continue;
            }
            // far = vertices seeing neither a nor b
            let mut far = g.neighbors(a).clone();
            far.union_with(g.neighbors(b));
            let far: Vec<usize> = (0..n)
                .filter(|&v| v != a && v != b && !far.get(v))
                .collect();
            for (i, &c) in far.iter().enumerate() {
                for &d in &far[i + 1..] {
                    if g.has_edge(c, d) {
                        return Some(Witness::new(WitnessKind::TwoK2, vec![a, b, c, d]));
                    }
                }
            }
        }
    }
    None
}

fn find_c4(g: &UGraph) -> Option<Witness> {
    let n = g.order();
    for a in 0..n {
        for c in (a + 1)..n {
            if g.has_edge(a, c) {
                continue;
            }
            let mut common = g.neighbors(a).clone();
            common.intersect_with(g.neighbors(c));
            let common: Vec<usize> = common.iter_ones().collect();
            for (i, &b) in common.iter().enumerate() {
                for &d in &common[i + 1..] {
                    if !g.has_edge(b, d) {
                        return Some(Witness::new(WitnessKind::C4, vec![a, b, c, d]));
                    }
                }
            }
        }
    }
    None
}

fn find_c5(g: &UGraph) -> Option<Witness> {
    search_odd_hole(g, Budget::unlimited().clock(), Some(5))
        .cycle
        .map(|vs| Witness::new(WitnessKind::C5, vs))
}

/// Witness for a non-split graph. One of 2K2, C4, C5 must exist.
pub(crate) fn split_witness(g: &UGraph) -> Option<Witness> {
    find_2k2(g).or_else(|| find_c4(g)).or_else(|| find_c5(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::validate_witness;
    use crate::graph::build_gamma;
    use crate::group::Group;

    fn gamma(s: &str) -> UGraph {
        build_gamma(&Group::parse(s).unwrap())
    }

    #[test]
    fn gamma_q8_is_split() {
        let g = gamma("Q:8");
        assert_eq!(g.edges(), vec![(0, 2)]);
        assert!(splittance_is_zero(&g));
    }

    #[test]
    fn gamma_z8_is_not_split_with_a_2k2() {
        let g = gamma("C:8");
        assert!(!splittance_is_zero(&g));
        let w = split_witness(&g).unwrap();
        assert_eq!(w.kind, WitnessKind::TwoK2);
        assert!(validate_witness(&g, &w));
        // the known witness {0,4},{1,3} also validates
        assert!(validate_witness(
            &g,
            &Witness::new(WitnessKind::TwoK2, vec![0, 4, 1, 3])
        ));
    }

    #[test]
    fn edgeless_and_complete_graphs_are_split() {
        assert!(splittance_is_zero(&UGraph::empty(7)));
        let g = gamma("C:2 x C:2");
        assert!(splittance_is_zero(&g));
    }

    #[test]
    fn c4_and_c5_witnesses() {
        let c4 = UGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(!splittance_is_zero(&c4));
        let w = split_witness(&c4).unwrap();
        assert_eq!(w.kind, WitnessKind::C4);
        assert!(validate_witness(&c4, &w));

        let c5 = UGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert!(!splittance_is_zero(&c5));
        let w = split_witness(&c5).unwrap();
        assert_eq!(w.kind, WitnessKind::C5);
        assert!(validate_witness(&c5, &w));
    }
}
