//! Brute-force oracles for cross-validating the recognizers on small
//! graphs: exhaustive k-subset enumeration, no shared machinery with the
//! production search paths.

use crate::error::{Error, Result};
use crate::graph::UGraph;

use super::witness::{validate_witness, Witness, WitnessKind};

/// Largest graph the subset oracles accept.
pub const ORACLE_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    P4,
    C4,
    C5,
    C6,
    Claw,
    TwoK2,
}

impl Pattern {
    pub fn size(&self) -> usize {
        match self {
            Pattern::P4 | Pattern::C4 | Pattern::Claw | Pattern::TwoK2 => 4,
            Pattern::C5 => 5,
            Pattern::C6 => 6,
        }
    }
}

fn check_cap(g: &UGraph) -> Result<()> {
    if g.order() > ORACLE_CAP {
        return Err(Error::OracleCap {
            n: g.order(),
            cap: ORACLE_CAP,
        });
    }
    Ok(())
}

fn subset_degrees(g: &UGraph, verts: &[usize]) -> Vec<usize> {
    verts
        .iter()
        .map(|&v| verts.iter().filter(|&&u| u != v && g.has_edge(v, u)).count())
        .collect()
}

fn edge_count_in(g: &UGraph, verts: &[usize]) -> usize {
    let mut m = 0;
    for (i, &v) in verts.iter().enumerate() {
        for &u in &verts[i + 1..] {
            if g.has_edge(v, u) {
                m += 1;
            }
        }
    }
    m
}

fn connected_in(g: &UGraph, verts: &[usize]) -> bool {
    if verts.is_empty() {
        return true;
    }
    let mut seen = vec![false; verts.len()];
    seen[0] = true;
    let mut queue = vec![0usize];
    while let Some(i) = queue.pop() {
        for (j, &u) in verts.iter().enumerate() {
            if !seen[j] && g.has_edge(verts[i], u) {
                seen[j] = true;
                queue.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Vertices of an induced cycle in cycle order: start at the minimum,
/// step toward its smaller neighbor.
fn cycle_order(g: &UGraph, verts: &[usize]) -> Vec<usize> {
    let start = *verts.iter().min().unwrap();
    let nbs: Vec<usize> = verts
        .iter()
        .copied()
        .filter(|&u| u != start && g.has_edge(start, u))
        .collect();
    let mut order = vec![start, *nbs.iter().min().unwrap()];
    while order.len() < verts.len() {
        let last = *order.last().unwrap();
        let prev = order[order.len() - 2];
        let next = verts
            .iter()
            .copied()
            .find(|&u| u != prev && u != last && g.has_edge(last, u))
            .unwrap();
        order.push(next);
    }
    order
}

/// Does this subset induce the pattern? If so return the canonical
/// witness ordering.
fn match_pattern(g: &UGraph, verts: &[usize], pattern: Pattern) -> Option<Vec<usize>> {
    let degs = subset_degrees(g, verts);
    let m = edge_count_in(g, verts);
    match pattern {
        Pattern::P4 => {
            if m != 3 || !connected_in(g, verts) {
                return None;
            }
            let mut ends: Vec<usize> = verts
                .iter()
                .zip(&degs)
                .filter(|(_, &d)| d == 1)
                .map(|(&v, _)| v)
                .collect();
            if ends.len() != 2 {
                return None;
            }
            ends.sort_unstable();
            // walk the path from the smaller endpoint
            let mut order = vec![ends[0]];
            while order.len() < 4 {
                let last = *order.last().unwrap();
                let next = verts
                    .iter()
                    .copied()
                    .find(|&u| u != last && !order.contains(&u) && g.has_edge(last, u))?;
                order.push(next);
            }
            Some(order)
        }
        Pattern::C4 | Pattern::C5 | Pattern::C6 => {
            let k = pattern.size();
            if m != k || degs.iter().any(|&d| d != 2) || !connected_in(g, verts) {
                return None;
            }
            Some(cycle_order(g, verts))
        }
        Pattern::Claw => {
            if m != 3 {
                return None;
            }
            let center = verts
                .iter()
                .zip(&degs)
                .find(|(_, &d)| d == 3)
                .map(|(&v, _)| v)?;
            let mut leaves: Vec<usize> =
                verts.iter().copied().filter(|&v| v != center).collect();
            if subset_degrees(g, &leaves).iter().any(|&d| d != 0) {
                return None;
            }
            leaves.sort_unstable();
            let mut out = vec![center];
            out.extend(leaves);
            Some(out)
        }
        Pattern::TwoK2 => {
            if m != 2 || degs.iter().any(|&d| d != 1) {
                return None;
            }
            let mut edges = Vec::new();
            for (i, &v) in verts.iter().enumerate() {
                for &u in &verts[i + 1..] {
                    if g.has_edge(v, u) {
                        edges.push((v, u));
                    }
                }
            }
            edges.sort_unstable();
            Some(vec![edges[0].0, edges[0].1, edges[1].0, edges[1].1])
        }
    }
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == k {
            out.push((0..n).filter(|&i| mask >> i & 1 == 1).collect());
        }
    }
    out
}

/// Every induced occurrence of the pattern, in canonical witness order,
/// sorted so the lexicographically smallest witness comes first.
pub fn oracle_induced_scan(g: &UGraph, pattern: Pattern) -> Result<Vec<Vec<usize>>> {
    check_cap(g)?;
    let mut out = Vec::new();
    for verts in subsets_of_size(g.order(), pattern.size()) {
        if let Some(w) = match_pattern(g, &verts, pattern) {
            out.push(w);
        }
    }
    out.sort();
    Ok(out)
}

/// Smallest odd induced cycle of length >= 5, by exhaustive subsets.
pub fn oracle_odd_hole(g: &UGraph) -> Result<Option<Vec<usize>>> {
    check_cap(g)?;
    let n = g.order();
    let mut k = 5;
    while k <= n {
        for verts in subsets_of_size(n, k) {
            let degs = subset_degrees(g, &verts);
            if edge_count_in(g, &verts) == k
                && degs.iter().all(|&d| d == 2)
                && connected_in(g, &verts)
            {
                return Ok(Some(cycle_order(g, &verts)));
            }
        }
        k += 2;
    }
    Ok(None)
}

pub fn oracle_is_perfect(g: &UGraph) -> Result<bool> {
    Ok(oracle_odd_hole(g)?.is_none() && oracle_odd_hole(&g.complement())?.is_none())
}

/// Chordal iff no vertex subset of size >= 4 induces a cycle.
pub fn oracle_is_chordal(g: &UGraph) -> Result<bool> {
    check_cap(g)?;
    let n = g.order();
    for k in 4..=n {
        for verts in subsets_of_size(n, k) {
            let degs = subset_degrees(g, &verts);
            if edge_count_in(g, &verts) == k
                && degs.iter().all(|&d| d == 2)
                && connected_in(g, &verts)
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn oracle_is_cograph(g: &UGraph) -> Result<bool> {
    Ok(oracle_induced_scan(g, Pattern::P4)?.is_empty())
}

pub fn oracle_is_clawfree(g: &UGraph) -> Result<bool> {
    Ok(oracle_induced_scan(g, Pattern::Claw)?.is_empty())
}

pub fn oracle_is_split(g: &UGraph) -> Result<bool> {
    Ok(oracle_induced_scan(g, Pattern::TwoK2)?.is_empty()
        && oracle_induced_scan(g, Pattern::C4)?.is_empty()
        && oracle_induced_scan(g, Pattern::C5)?.is_empty())
}

pub fn oracle_is_threshold(g: &UGraph) -> Result<bool> {
    Ok(oracle_induced_scan(g, Pattern::P4)?.is_empty()
        && oracle_induced_scan(g, Pattern::C4)?.is_empty()
        && oracle_induced_scan(g, Pattern::TwoK2)?.is_empty())
}

/// Asteroidal-triple freeness through the witness validator (per-pair BFS).
pub fn oracle_is_at_free(g: &UGraph) -> Result<bool> {
    check_cap(g)?;
    let n = g.order();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                let w = Witness::new(WitnessKind::AsteroidalTriple, vec![a, b, c]);
                if validate_witness(g, &w) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

pub fn oracle_is_interval(g: &UGraph) -> Result<bool> {
    Ok(oracle_is_chordal(g)? && oracle_is_at_free(g)?)
}
