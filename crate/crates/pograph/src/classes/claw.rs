//! Claw scan: for each center, look for three pairwise non-adjacent
//! neighbors. First hit in (center, leaf, leaf, leaf) index order.

use crate::graph::UGraph;

pub(crate) fn scan_claw(g: &UGraph) -> Option<[usize; 4]> {
    let n = g.order();
    for v in 0..n {
        let nb: Vec<usize> = g.neighbors(v).to_vec();
        if nb.len() < 3 {
            continue;
        }
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let mut cand = g.neighbors(v).clone();
                cand.difference_with(g.neighbors(a));
                cand.difference_with(g.neighbors(b));
                if let Some(c) = cand.iter_ones().find(|&c| c > b) {
                    return Some([v, a, b, c]);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{validate_witness, Witness, WitnessKind};
    use crate::graph::build_gamma;
    use crate::group::Group;

    fn gamma(s: &str) -> UGraph {
        build_gamma(&Group::parse(s).unwrap())
    }

    #[test]
    fn gamma_d4_claw_is_centered_at_b() {
        let g = gamma("D:4");
        let claw = scan_claw(&g).unwrap();
        // center b (index 4), leaves e, a, a^3
        assert_eq!(claw, [4, 0, 1, 3]);
        let grp = Group::parse("D:4").unwrap();
        assert_eq!(grp.label(4), "b");
        assert_eq!(grp.label(0), "e");
        assert_eq!(grp.label(1), "a");
        assert_eq!(grp.label(3), "a^3");
        assert!(validate_witness(
            &g,
            &Witness::new(WitnessKind::Claw, claw.to_vec())
        ));
    }

    #[test]
    fn gamma_z35_claw_is_centered_at_identity() {
        let g = gamma("C:35");
        let claw = scan_claw(&g).unwrap();
        assert_eq!(claw[0], 0);
        assert!(validate_witness(
            &g,
            &Witness::new(WitnessKind::Claw, claw.to_vec())
        ));
        // e ~ a^5, e ~ a^-5, e ~ a^7 (p = 5, q = 7)
        assert!(validate_witness(
            &g,
            &Witness::new(WitnessKind::Claw, vec![0, 5, 30, 7])
        ));
    }

    #[test]
    fn max_degree_one_graphs_are_claw_free() {
        assert_eq!(scan_claw(&gamma("C:16")), None);
        assert_eq!(scan_claw(&gamma("C:2")), None);
    }

    #[test]
    fn complete_graphs_are_claw_free() {
        assert_eq!(scan_claw(&gamma("C:2 x C:2 x C:2 x C:2")), None);
    }
}
