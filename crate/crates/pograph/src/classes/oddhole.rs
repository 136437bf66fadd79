//! Odd-hole search by DFS over induced paths.
//!
//! A path v0..vk is grown so that every new vertex is adjacent to the last
//! path vertex and non-adjacent to all earlier ones; a vertex adjacent to
//! v0 may only close the cycle. Symmetric duplicates are killed by
//! requiring v0 to be the path minimum and the second vertex to be smaller
//! than the closing vertex.

use crate::bitset::Bitset;
use crate::graph::UGraph;

use super::BudgetClock;

pub(crate) struct HoleSearch<'a> {
    g: &'a UGraph,
    clock: BudgetClock,
    /// Maximum cycle length to report (usize::MAX when unbounded).
    max_len: usize,
    path: Vec<usize>,
    /// banned[t] filters extension candidates when the path has t vertices.
    banned: Vec<Bitset>,
    found: Option<Vec<usize>>,
    timed_out: bool,
}

/// Outcome of a search: a cycle if one was found, plus whether the
/// enumeration ran to completion (false exactly when the budget expired).
pub(crate) struct SearchResult {
    pub cycle: Option<Vec<usize>>,
    pub completed: bool,
}

pub(crate) fn search_odd_hole(
    g: &UGraph,
    clock: BudgetClock,
    max_len: Option<usize>,
) -> SearchResult {
    let n = g.order();
    if n < 5 {
        return SearchResult {
            cycle: None,
            completed: true,
        };
    }
    let mut s = HoleSearch {
        g,
        clock,
        max_len: max_len.unwrap_or(usize::MAX),
        path: Vec::with_capacity(n),
        banned: Vec::with_capacity(n),
        found: None,
        timed_out: false,
    };
    for start in 0..n {
        let mut base = Bitset::new(n);
        for v in 0..=start {
            base.set(v);
        }
        s.path.push(start);
        s.banned.push(base);
        s.dfs();
        s.path.pop();
        s.banned.pop();
        if s.found.is_some() || s.timed_out {
            break;
        }
    }
    SearchResult {
        cycle: s.found,
        completed: !s.timed_out,
    }
}

impl HoleSearch<'_> {
    fn dfs(&mut self) {
        if self.found.is_some() || self.timed_out {
            return;
        }
        if self.clock.expired() {
            self.timed_out = true;
            return;
        }
        let t = self.path.len();
        let start = self.path[0];
        let last = *self.path.last().unwrap();

        let mut raw = self.g.neighbors(last).clone();
        raw.difference_with(&self.banned[t - 1]);

        let cycle_len = t + 1;
        let closable = cycle_len >= 5 && cycle_len % 2 == 1 && cycle_len <= self.max_len;
        let extendable = t + 1 < self.max_len;

        for u in raw.iter_ones() {
            if t >= 2 && self.g.has_edge(u, start) {
                // u sees v0: it can only close the cycle
                if closable && self.path[1] < u {
                    let mut cycle = self.path.clone();
                    cycle.push(u);
                    self.found = Some(cycle);
                    return;
                }
            } else if extendable {
                let mut next_banned = self.banned[t - 1].clone();
                if t == 1 {
                    // v0's neighborhood stays open for future closers
                    next_banned.set(start);
                } else {
                    next_banned.union_with(self.g.neighbors(last));
                    next_banned.set(last);
                }
                self.path.push(u);
                self.banned.push(next_banned);
                self.dfs();
                self.path.pop();
                self.banned.pop();
                if self.found.is_some() || self.timed_out {
                    return;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::Budget;
    use crate::graph::build_gamma;
    use crate::group::Group;

    fn search(g: &UGraph) -> SearchResult {
        search_odd_hole(g, Budget::unlimited().clock(), None)
    }

    #[test]
    fn finds_c5_itself() {
        let g = UGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let r = search(&g);
        assert!(r.completed);
        assert_eq!(r.cycle, Some(vec![0, 1, 2, 3, 4]));
    }

    #[test]
    fn c7_found_but_not_under_length_cap() {
        let edges: Vec<(usize, usize)> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        let g = UGraph::from_edges(7, &edges);
        assert_eq!(search(&g).cycle, Some(vec![0, 1, 2, 3, 4, 5, 6]));
        let capped = search_odd_hole(&g, Budget::unlimited().clock(), Some(5));
        assert!(capped.completed);
        assert_eq!(capped.cycle, None);
    }

    #[test]
    fn even_cycles_and_small_graphs_are_clean() {
        let c6: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let g = UGraph::from_edges(6, &c6);
        let r = search(&g);
        assert!(r.completed);
        assert_eq!(r.cycle, None);

        let k4 = UGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(search(&k4).cycle, None);
    }

    #[test]
    fn complete_graphs_have_no_holes() {
        let mut g = UGraph::empty(30);
        for x in 0..30 {
            for y in (x + 1)..30 {
                g.add_edge(x, y);
            }
        }
        let r = search(&g);
        assert!(r.completed);
        assert_eq!(r.cycle, None);
    }

    #[test]
    fn gamma_of_z15_has_a_five_hole() {
        let g = build_gamma(&Group::parse("C:15").unwrap());
        let r = search(&g);
        assert!(r.completed);
        let cycle = r.cycle.unwrap();
        assert_eq!(cycle.len(), 5);
        assert!(crate::classes::validate_witness(
            &g,
            &crate::classes::Witness::new(crate::classes::WitnessKind::OddHole, cycle)
        ));
    }

    #[test]
    fn known_five_cycle_in_z3_x_z5_coordinates() {
        // (1,0) ~ (0,0) ~ (2,0) ~ (1,1) ~ (2,2), the first coordinates of
        // order 3 and second of order 5, with q1 + q2 != 0
        let g = build_gamma(&Group::parse("C:3 x C:5").unwrap());
        let w = crate::classes::Witness::new(
            crate::classes::WitnessKind::OddHole,
            vec![5, 0, 10, 6, 12],
        );
        assert!(crate::classes::validate_witness(&g, &w));
    }
}
