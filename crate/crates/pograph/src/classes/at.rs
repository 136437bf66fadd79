//! Asteroidal triple scan: for every vertex c, label the components of
//! G - N[c]; a triple is asteroidal iff each pair shares a component after
//! deleting the closed neighborhood of the third.

use crate::bitset::Bitset;
use crate::graph::UGraph;

const OUT: u16 = u16::MAX;

/// Component labels of G - N[c] (OUT for members of N[c]).
fn components_without(g: &UGraph, c: usize) -> Vec<u16> {
    let n = g.order();
    let mut label = vec![OUT; n];
    let removed = g.neighbors(c);
    let mut next = 0u16;
    for start in 0..n {
        if start == c || removed.get(start) || label[start] != OUT {
            continue;
        }
        label[start] = next;
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            for u in g.neighbors(v).iter_ones() {
                if u != c && !removed.get(u) && label[u] == OUT {
                    label[u] = next;
                    queue.push(u);
                }
            }
        }
        next += 1;
    }
    label
}

pub(crate) fn scan_asteroidal_triple(g: &UGraph) -> Option<[usize; 3]> {
    let n = g.order();
    // candidates must share a connected component of size >= 3
    let mut comp_of = vec![usize::MAX; n];
    let mut comp_size = Vec::new();
    for start in 0..n {
        if comp_of[start] != usize::MAX {
            continue;
        }
        let id = comp_size.len();
        comp_of[start] = id;
        let mut size = 1;
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            for u in g.neighbors(v).iter_ones() {
                if comp_of[u] == usize::MAX {
                    comp_of[u] = id;
                    size += 1;
                    queue.push(u);
                }
            }
        }
        comp_size.push(size);
    }
    if comp_size.iter().all(|&s| s < 3) {
        return None;
    }

    let without: Vec<Vec<u16>> = (0..n).map(|c| components_without(g, c)).collect();
    let mut non_nb = Vec::with_capacity(n);
    for a in 0..n {
        let mut row = Bitset::new(n);
        for b in (a + 1)..n {
            if !g.has_edge(a, b) && comp_of[a] == comp_of[b] {
                row.set(b);
            }
        }
        non_nb.push(row);
    }
    for a in 0..n {
        if comp_size[comp_of[a]] < 3 {
            continue;
        }
        for b in non_nb[a].iter_ones() {
            let mut cands = non_nb[a].clone();
            cands.intersect_with(&non_nb[b]);
            for c in cands.iter_ones() {
                if without[c][a] == without[c][b]
                    && without[c][a] != OUT
                    && without[b][a] == without[b][c]
                    && without[b][a] != OUT
                    && without[a][b] == without[a][c]
                    && without[a][b] != OUT
                {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}
