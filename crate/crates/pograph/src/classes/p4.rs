//! Induced-P4 scan: for every ordered edge (b, c), look for a pendant at b
//! and a pendant at c that are themselves non-adjacent.

use crate::graph::UGraph;

pub(crate) fn scan_p4(g: &UGraph) -> Option<[usize; 4]> {
    let n = g.order();
    for b in 0..n {
        for c in g.neighbors(b).iter_ones() {
            // a ~ b, a !~ c, a != c
            let mut side_a = g.neighbors(b).clone();
            side_a.difference_with(g.neighbors(c));
            side_a.unset(c);
            if !side_a.any() {
                continue;
            }
            // d ~ c, d !~ b, d != b
            let mut side_d = g.neighbors(c).clone();
            side_d.difference_with(g.neighbors(b));
            side_d.unset(b);
            if !side_d.any() {
                continue;
            }
            for a in side_a.iter_ones() {
                let mut cand = side_d.clone();
                cand.difference_with(g.neighbors(a));
                cand.unset(a);
                if let Some(d) = cand.iter_ones().next() {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}
