//! Forbidden-subgraph certificates and their independent validator.
//!
//! Every recognizer that answers "not in class" must hand back a witness
//! that [`validate_witness`] accepts using nothing but the adjacency
//! matrix. The validator deliberately re-derives every condition instead
//! of trusting recognizer-internal state.

use serde::{Deserialize, Serialize};

use crate::bitset::Bitset;
use crate::graph::UGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WitnessKind {
    /// Induced odd cycle of length >= 5, vertices in cycle order.
    OddHole,
    /// Complement of an induced odd cycle of length >= 5; vertices in
    /// cycle order of the complement.
    OddAntihole,
    /// Induced path on four vertices, in path order.
    P4,
    /// Induced K_{1,3}: center first, then the three leaves.
    Claw,
    /// Induced cycle of length >= 4, vertices in cycle order.
    ChordlessCycle,
    /// Three pairwise non-adjacent vertices, each pair joined by a path
    /// avoiding the closed neighborhood of the third.
    AsteroidalTriple,
    /// Two independent edges `[a,b,c,d]` with ab, cd edges and nothing across.
    TwoK2,
    /// Induced 4-cycle in cycle order.
    C4,
    /// Induced 5-cycle in cycle order.
    C5,
    /// No forbidden structure (used by in-class outcomes).
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub vertices: Vec<usize>,
}

impl Witness {
    pub fn none() -> Witness {
        Witness {
            kind: WitnessKind::None,
            vertices: Vec::new(),
        }
    }

    pub fn new(kind: WitnessKind, vertices: Vec<usize>) -> Witness {
        Witness { kind, vertices }
    }

    pub fn is_none(&self) -> bool {
        self.kind == WitnessKind::None
    }

    /// Serializable form with vertex labels resolved against the graph.
    pub fn to_json(&self, g: &UGraph) -> WitnessJson {
        WitnessJson {
            kind: format!("{:?}", self.kind),
            valid: validate_witness(g, self),
            vertices: self.vertices.iter().map(|&v| g.label(v).to_string()).collect(),
        }
    }
}

/// Wire form of a witness: `{"kind": ..., "valid": true, "vertices": [labels]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub kind: String,
    pub valid: bool,
    pub vertices: Vec<String>,
}

fn all_distinct_in_range(vs: &[usize], n: usize) -> bool {
    if vs.iter().any(|&v| v >= n) {
        return false;
    }
    let mut sorted = vs.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

fn is_induced_cycle(adj: impl Fn(usize, usize) -> bool, vs: &[usize]) -> bool {
    let k = vs.len();
    for i in 0..k {
        for j in (i + 1)..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if adj(vs[i], vs[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

/// Path between a and b in g avoiding every vertex of `forbidden`.
fn connected_avoiding(g: &UGraph, a: usize, b: usize, forbidden: &Bitset) -> bool {
    if forbidden.get(a) || forbidden.get(b) {
        return false;
    }
    let mut seen = Bitset::new(g.order());
    seen.set(a);
    let mut queue = vec![a];
    while let Some(v) = queue.pop() {
        if v == b {
            return true;
        }
        for u in g.neighbors(v).iter_ones() {
            if !seen.get(u) && !forbidden.get(u) {
                seen.set(u);
                queue.push(u);
            }
        }
    }
    false
}

/// Check a witness against the adjacency matrix alone.
pub fn validate_witness(g: &UGraph, w: &Witness) -> bool {
    let n = g.order();
    if !all_distinct_in_range(&w.vertices, n) {
        return false;
    }
    let edge = |x: usize, y: usize| g.has_edge(x, y);
    let co_edge = |x: usize, y: usize| x != y && !g.has_edge(x, y);
    match w.kind {
        WitnessKind::OddHole => {
            w.vertices.len() >= 5
                && w.vertices.len() % 2 == 1
                && is_induced_cycle(edge, &w.vertices)
        }
        WitnessKind::OddAntihole => {
            w.vertices.len() >= 5
                && w.vertices.len() % 2 == 1
                && is_induced_cycle(co_edge, &w.vertices)
        }
        WitnessKind::P4 => {
            let v = &w.vertices;
            v.len() == 4
                && edge(v[0], v[1])
                && edge(v[1], v[2])
                && edge(v[2], v[3])
                && !edge(v[0], v[2])
                && !edge(v[0], v[3])
                && !edge(v[1], v[3])
        }
        WitnessKind::Claw => {
            let v = &w.vertices;
            v.len() == 4
                && edge(v[0], v[1])
                && edge(v[0], v[2])
                && edge(v[0], v[3])
                && !edge(v[1], v[2])
                && !edge(v[1], v[3])
                && !edge(v[2], v[3])
        }
        WitnessKind::ChordlessCycle => {
            w.vertices.len() >= 4 && is_induced_cycle(edge, &w.vertices)
        }
        WitnessKind::AsteroidalTriple => {
            let v = &w.vertices;
            if v.len() != 3 || edge(v[0], v[1]) || edge(v[0], v[2]) || edge(v[1], v[2]) {
                return false;
            }
            (0..3).all(|i| {
                let (a, b, c) = (v[(i + 1) % 3], v[(i + 2) % 3], v[i]);
                let mut forbidden = g.neighbors(c).clone();
                forbidden.set(c);
                connected_avoiding(g, a, b, &forbidden)
            })
        }
        WitnessKind::TwoK2 => {
            let v = &w.vertices;
            v.len() == 4
                && edge(v[0], v[1])
                && edge(v[2], v[3])
                && !edge(v[0], v[2])
                && !edge(v[0], v[3])
                && !edge(v[1], v[2])
                && !edge(v[1], v[3])
        }
        WitnessKind::C4 => w.vertices.len() == 4 && is_induced_cycle(edge, &w.vertices),
        WitnessKind::C5 => w.vertices.len() == 5 && is_induced_cycle(edge, &w.vertices),
        WitnessKind::None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> UGraph {
        UGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    }

    #[test]
    fn validates_odd_holes() {
        let g = c5();
        assert!(validate_witness(
            &g,
            &Witness::new(WitnessKind::OddHole, vec![0, 1, 2, 3, 4])
        ));
        // rotations and reflections of the cycle order still validate
        assert!(validate_witness(
            &g,
            &Witness::new(WitnessKind::OddHole, vec![2, 1, 0, 4, 3])
        ));
        // wrong order has chords-as-gaps
        assert!(!validate_witness(
            &g,
            &Witness::new(WitnessKind::OddHole, vec![0, 2, 1, 3, 4])
        ));
        // C5 is self-complementary: it is also an odd antihole
        assert!(validate_witness(
            &g,
            &Witness::new(WitnessKind::OddAntihole, vec![0, 2, 4, 1, 3])
        ));
    }

    #[test]
    fn rejects_duplicates_and_out_of_range() {
        let g = c5();
        assert!(!validate_witness(
            &g,
            &Witness::new(WitnessKind::OddHole, vec![0, 1, 2, 3, 3])
        ));
        assert!(!validate_witness(
            &g,
            &Witness::new(WitnessKind::C4, vec![0, 1, 2, 9])
        ));
        assert!(!validate_witness(&g, &Witness::none()));
    }

    #[test]
    fn validates_p4_and_claw() {
        let path = UGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(validate_witness(
            &path,
            &Witness::new(WitnessKind::P4, vec![0, 1, 2, 3])
        ));
        assert!(!validate_witness(
            &path,
            &Witness::new(WitnessKind::P4, vec![1, 0, 2, 3])
        ));
        let star = UGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(validate_witness(
            &star,
            &Witness::new(WitnessKind::Claw, vec![0, 1, 2, 3])
        ));
        assert!(!validate_witness(
            &star,
            &Witness::new(WitnessKind::Claw, vec![1, 0, 2, 3])
        ));
    }

    #[test]
    fn validates_asteroidal_triple_on_subdivided_claw() {
        // spider with three legs of length 2: center 0, legs 1-2, 3-4, 5-6
        let g = UGraph::from_edges(
            7,
            &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)],
        );
        assert!(validate_witness(
            &g,
            &Witness::new(WitnessKind::AsteroidalTriple, vec![2, 4, 6])
        ));
        assert!(!validate_witness(
            &g,
            &Witness::new(WitnessKind::AsteroidalTriple, vec![1, 4, 6])
        ));
    }

    #[test]
    fn validates_two_k2() {
        let g = UGraph::from_edges(5, &[(0, 1), (2, 3), (3, 4)]);
        assert!(validate_witness(
            &g,
            &Witness::new(WitnessKind::TwoK2, vec![0, 1, 2, 3])
        ));
        assert!(!validate_witness(
            &g,
            &Witness::new(WitnessKind::TwoK2, vec![2, 3, 3, 4])
        ));
    }
}
