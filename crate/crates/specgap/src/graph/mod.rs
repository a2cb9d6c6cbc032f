//! Simple undirected graphs, their Laplacians, canonical certificates and
//! text serializations (graph6 and JSON).

mod canon;
mod graph6;

pub use canon::{canonical_cert, canonical_form, CanonicalCert};
pub(crate) use canon::refine as canon_refine;
pub use graph6::{from_graph6, to_graph6};

use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("malformed graph6 text: {0}")]
    Graph6(String),
    #[error("malformed JSON graph: {0}")]
    Json(String),
}

/// A simple undirected graph on vertices `0..n` with a sorted, deduplicated
/// edge list whose pairs satisfy `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Builds a graph, normalizing each pair to `(min, max)` and removing
/// duplicates.
pub fn make_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
    let mut list = Vec::with_capacity(edges.len());
    for &(u, v) in edges {
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::IndexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        list.push((u.min(v), u.max(v)));
    }
    list.sort_unstable();
    list.dedup();
    Ok(Graph { n, edges: list })
}

impl Graph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Sorted adjacency lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        degrees(self)
    }

    /// The graph obtained by sending vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let edges: Vec<(usize, usize)> =
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        make_graph(self.n, &edges).expect("relabelling preserves simplicity")
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph { n: self.n, edges }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Graph, GraphError> {
        let raw: RawGraph =
            serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        make_graph(raw.n, &raw.edges)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawGraph::deserialize(deserializer)?;
        make_graph(raw.n, &raw.edges).map_err(serde::de::Error::custom)
    }
}

pub fn degrees(g: &Graph) -> Vec<usize> {
    let mut deg = vec![0; g.n];
    for &(u, v) in &g.edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    deg
}

pub fn is_k_regular(g: &Graph, k: usize) -> bool {
    degrees(g).iter().all(|&d| d == k)
}

pub fn is_connected(g: &Graph) -> bool {
    if g.n == 0 {
        return true;
    }
    let adj = g.adjacency();
    let mut seen = vec![false; g.n];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == g.n
}

/// Dense symmetric matrix stored as its lower triangle, row by row.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(order: usize) -> Self {
        SymMatrix { order, entries: vec![0.0; order * (order + 1) / 2] }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn index(i: usize, j: usize) -> usize {
        let (r, c) = if i >= j { (i, j) } else { (j, i) };
        r * (r + 1) / 2 + c
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[Self::index(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.entries[Self::index(i, j)] = value;
    }

    /// Full row-major copy.
    pub fn to_dense(&self) -> Vec<f64> {
        let n = self.order;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                out[i * n + j] = self.get(i, j);
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        let n = self.order;
        let mut y = vec![0.0; n];
        for i in 0..n {
            for j in 0..=i {
                let a = self.get(i, j);
                y[i] += a * x[j];
                if i != j {
                    y[j] += a * x[i];
                }
            }
        }
        y
    }
}

/// Integer Laplacian `D - A` in row-major order; every row sums to zero.
pub fn integer_laplacian(g: &Graph) -> Vec<i64> {
    let n = g.n;
    let mut l = vec![0i64; n * n];
    for &(u, v) in &g.edges {
        l[u * n + u] += 1;
        l[v * n + v] += 1;
        l[u * n + v] -= 1;
        l[v * n + u] -= 1;
    }
    l
}

pub fn laplacian(g: &Graph) -> SymMatrix {
    let n = g.n;
    let ints = integer_laplacian(g);
    debug_assert!((0..n).all(|i| ints[i * n..(i + 1) * n].iter().sum::<i64>() == 0));
    let mut m = SymMatrix::zeros(n);
    for i in 0..n {
        for j in 0..=i {
            m.set(i, j, ints[i * n + j] as f64);
        }
    }
    m
}

/// `Σ_{uv ∈ E} (x_u - x_v)^2`.
pub fn quadratic_form(g: &Graph, x: &[f64]) -> f64 {
    g.edges.iter().map(|&(u, v)| (x[u] - x[v]).powi(2)).sum()
}

/// Common small graphs used throughout the crate and its tests.
pub mod named {
    use super::{make_graph, Graph};

    pub fn path(h: usize) -> Graph {
        let edges: Vec<_> = (1..h).map(|i| (i - 1, i)).collect();
        make_graph(h, &edges).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        make_graph(n, &edges).expect("cycle is simple")
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        make_graph(n, &edges).expect("complete graph is simple")
    }

    /// Vertex-disjoint union, the second graph shifted past the first.
    pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
        let shift = a.n();
        let mut edges: Vec<_> = a.edges().to_vec();
        edges.extend(b.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
        make_graph(a.n() + b.n(), &edges).expect("union is simple")
    }
}
