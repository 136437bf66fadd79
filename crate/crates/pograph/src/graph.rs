//! Simple undirected graphs with bitset adjacency rows, and the
//! prime-order element graph of a finite group.

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::group::{ElementTable, Group};

/// An undirected simple graph. Immutable once built; adjacency is kept as
/// one bitset row per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UGraph {
    n: usize,
    rows: Vec<Bitset>,
    labels: Vec<String>,
}

impl UGraph {
    pub fn empty(n: usize) -> UGraph {
        UGraph {
            n,
            rows: vec![Bitset::new(n); n],
            labels: (0..n).map(|i| i.to_string()).collect(),
        }
    }

    pub fn with_labels(labels: Vec<String>) -> UGraph {
        let n = labels.len();
        UGraph {
            n,
            rows: vec![Bitset::new(n); n],
            labels,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> UGraph {
        let mut g = UGraph::empty(n);
        for &(x, y) in edges {
            g.add_edge(x, y);
        }
        g
    }

    pub fn add_edge(&mut self, x: usize, y: usize) {
        assert!(x != y, "no loops in a simple graph");
        self.rows[x].set(y);
        self.rows[y].set(x);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.rows[x].get(y)
    }

    pub fn neighbors(&self, v: usize) -> &Bitset {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Edges as (i, j) with i < j, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in self.rows[x].iter_ones() {
                if y > x {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(Bitset::count).sum::<usize>() / 2
    }

    /// Complement on the same vertex set (an involution).
    pub fn complement(&self) -> UGraph {
        let mut g = UGraph {
            n: self.n,
            rows: vec![Bitset::new(self.n); self.n],
            labels: self.labels.clone(),
        };
        for x in 0..self.n {
            for y in 0..self.n {
                if x != y && !self.has_edge(x, y) {
                    g.rows[x].set(y);
                }
            }
        }
        g
    }

    /// Induced subgraph on the given distinct vertices, relabeled to
    /// 0..verts.len() in the given order.
    pub fn induced(&self, verts: &[usize]) -> Result<UGraph> {
        for &v in verts {
            if v >= self.n {
                return Err(Error::IndexOutOfRange { index: v, n: self.n });
            }
        }
        let mut g = UGraph::with_labels(verts.iter().map(|&v| self.labels[v].clone()).collect());
        for (i, &x) in verts.iter().enumerate() {
            for (j, &y) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(x, y) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// True if both endpoints lie in the same connected component.
    pub fn connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = Bitset::new(self.n);
        seen.set(0);
        let mut queue = vec![0usize];
        while let Some(v) = queue.pop() {
            for u in self.rows[v].iter_ones() {
                if !seen.get(u) {
                    seen.set(u);
                    queue.push(u);
                }
            }
        }
        seen.count() == self.n
    }

    pub fn has_universal_vertex(&self) -> bool {
        (0..self.n).any(|v| self.degree(v) == self.n - 1)
    }

    /// DOT rendering: every vertex listed, then one line per edge.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph gamma {\n");
        for l in &self.labels {
            out.push_str(&format!("  \"{l}\";\n"));
        }
        for (x, y) in self.edges() {
            out.push_str(&format!("  \"{}\" -- \"{}\";\n", self.labels[x], self.labels[y]));
        }
        out.push_str("}\n");
        out
    }

    /// JSON rendering with sorted keys: `{"edges": [[i,j],...], "labels": [...], "n": n}`.
    pub fn to_json(&self) -> String {
        let edges: Vec<Vec<usize>> = self.edges().iter().map(|&(x, y)| vec![x, y]).collect();
        let value = serde_json::json!({
            "edges": edges,
            "labels": self.labels,
            "n": self.n,
        });
        let mut s = value.to_string();
        s.push('\n');
        s
    }
}

/// The prime-order element graph of g: vertices are the group elements,
/// x ~ y (x != y) iff x*y has prime order. Vertex order equals the
/// group's element index order and labels carry over.
pub fn build_gamma(g: &Group) -> UGraph {
    let table = ElementTable::new(g);
    build_gamma_with(g, &table)
}

/// Same as [`build_gamma`] with a precomputed element table.
pub fn build_gamma_with(g: &Group, table: &ElementTable) -> UGraph {
    let n = g.order();
    let mut prime_order = Bitset::new(n);
    for &x in table.prime_order_set() {
        prime_order.set(x);
    }
    let mut graph = UGraph::with_labels(g.labels().to_vec());
    for x in 0..n {
        for y in (x + 1)..n {
            if prime_order.get(g.mul(x, y)) {
                // ord(xy) and ord(yx) agree since the two are conjugate;
                // assert it rather than assume it, to catch table bugs.
                debug_assert!(prime_order.get(g.mul(y, x)));
                graph.add_edge(x, y);
            }
        }
    }
    graph
}

/// Degrees in the prime-order element graph take exactly the values |S|
/// and |S| - 1 (the latter iff x*x itself has prime order).
pub fn degree_bounds_hold(graph: &UGraph, s_size: usize) -> bool {
    (0..graph.order()).all(|v| {
        let d = graph.degree(v);
        d == s_size || d + 1 == s_size
    })
}
