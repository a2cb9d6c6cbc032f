//! Canonical labelling by equitable refinement plus individualization
//! search, with pruning by the automorphisms discovered along the way.
//!
//! The certificate is the upper-triangle adjacency bit string under the
//! labelling whose bit string is lexicographically largest among all leaves
//! of the search tree, so it is an isomorphism invariant that separates
//! non-isomorphic graphs.

use super::Graph;
use std::cmp::Ordering;

/// Canonical relabelling certificate: equal certificates exactly for
/// isomorphic graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCert {
    bytes: Vec<u8>,
}

impl CanonicalCert {
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }
}

/// Ordered partition of the vertex set.
pub(crate) type Cells = Vec<Vec<usize>>;

struct BitAdj {
    words: usize,
    rows: Vec<u64>,
}

impl BitAdj {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        for &(u, v) in g.edges() {
            rows[u * words + v / 64] |= 1 << (v % 64);
            rows[v * words + u / 64] |= 1 << (u % 64);
        }
        BitAdj { words, rows }
    }

    fn has(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }
}

/// Splits cells by neighbour counts into every cell until the partition is
/// equitable. Each split keeps the sub-cells in increasing signature order,
/// so the result depends only on the isomorphism type of the input.
pub(crate) fn refine(adj: &[Vec<usize>], mut cells: Cells) -> Cells {
    let n = adj.len();
    let mut cell_of = vec![0usize; n];
    loop {
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = c;
            }
        }
        let k = cells.len();
        let mut next: Cells = Vec::with_capacity(k);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig = vec![0u32; k];
                    for &w in &adj[v] {
                        sig[cell_of[w]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    let mut part: Vec<usize> = keyed[start..i].iter().map(|p| p.1).collect();
                    part.sort_unstable();
                    next.push(part);
                    start = i;
                }
            }
        }
        let grew = next.len() != cells.len();
        cells = next;
        if !grew {
            return cells;
        }
    }
}

fn individualize(cells: &Cells, target: usize, v: usize) -> Cells {
    let mut out = Vec::with_capacity(cells.len() + 1);
    for (i, cell) in cells.iter().enumerate() {
        if i == target {
            out.push(vec![v]);
            out.push(cell.iter().copied().filter(|&w| w != v).collect());
        } else {
            out.push(cell.clone());
        }
    }
    out
}

struct Leaf {
    path: Vec<usize>,
    order: Vec<usize>,
    code: Vec<u64>,
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    bits: BitAdj,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

fn divergence(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl<'a> Search<'a> {
    fn leaf_code(&self, order: &[usize]) -> Vec<u64> {
        let n = order.len();
        let total = n * n.saturating_sub(1) / 2;
        let mut code = vec![0u64; total.div_ceil(64).max(1)];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits.has(order[i], order[j]) {
                    code[k / 64] |= 1 << (63 - k % 64);
                }
                k += 1;
            }
        }
        code
    }

    fn record_automorphism(&mut self, from: &[usize], to: &[usize]) {
        let mut gamma = vec![0; from.len()];
        for (&a, &b) in from.iter().zip(to) {
            gamma[a] = b;
        }
        if gamma.iter().enumerate().any(|(i, &g)| i != g) {
            self.generators.push(gamma);
        }
    }

    /// Orbit representatives of the group generated by the stored
    /// automorphisms that fix every vertex of `path`.
    fn orbit_roots(&self, path: &[usize], n: usize) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..n).collect();
        for gamma in &self.generators {
            if path.iter().all(|&p| gamma[p] == p) {
                for (i, &g) in gamma.iter().enumerate() {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, g));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    /// Returns the tree level to which the search should back up, if an
    /// automorphism made the remaining siblings redundant.
    fn dfs(&mut self, cells: Cells, path: &mut Vec<usize>) -> Option<usize> {
        let n = self.adj.len();
        if cells.len() == n {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let code = self.leaf_code(&order);
            let leaf = Leaf { path: path.clone(), order, code };
            let Some(first) = &self.first else {
                self.first = Some(Leaf { path: leaf.path.clone(), order: leaf.order.clone(), code: leaf.code.clone() });
                self.best = Some(leaf);
                return None;
            };
            if leaf.code == first.code {
                let (from, level) = (first.order.clone(), divergence(&first.path, &leaf.path));
                self.record_automorphism(&from, &leaf.order);
                return Some(level);
            }
            let best = self.best.as_ref().expect("best leaf exists once first does");
            return match leaf.code.cmp(&best.code) {
                Ordering::Greater => {
                    self.best = Some(leaf);
                    None
                }
                Ordering::Equal => {
                    let (from, level) = (best.order.clone(), divergence(&best.path, &leaf.path));
                    self.record_automorphism(&from, &leaf.order);
                    Some(level)
                }
                Ordering::Less => None,
            };
        }
        let target = (0..cells.len())
            .filter(|&i| cells[i].len() > 1)
            .min_by_key(|&i| (cells[i].len(), i))
            .expect("non-discrete partition has a non-singleton cell");
        let level = path.len();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if !tried.is_empty() {
                let roots = self.orbit_roots(path, n);
                if tried.iter().any(|&t| roots[t] == roots[v]) {
                    continue;
                }
            }
            let child = refine(self.adj, individualize(&cells, target, v));
            path.push(v);
            let back = self.dfs(child, path);
            path.pop();
            tried.push(v);
            if let Some(l) = back {
                if l < level {
                    return Some(l);
                }
            }
        }
        None
    }
}

/// Canonical labelling: returns the relabelled graph and the map sending
/// each original vertex to its canonical label.
pub fn canonical_form(g: &Graph) -> (Graph, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (g.clone(), Vec::new());
    }
    let adj = g.adjacency();
    let start = refine(&adj, vec![(0..n).collect()]);
    let mut search = Search { adj: &adj, bits: BitAdj::new(g), first: None, best: None, generators: Vec::new() };
    search.dfs(start, &mut Vec::new());
    let best = search.best.expect("search visits at least one leaf");
    let mut label = vec![0; n];
    for (pos, &v) in best.order.iter().enumerate() {
        label[v] = pos;
    }
    (g.relabel(&label), label)
}

pub fn canonical_cert(g: &Graph) -> CanonicalCert {
    let (canon, _) = canonical_form(g);
    let n = canon.n();
    let mut bytes = (n as u32).to_le_bytes().to_vec();
    let total = n * n.saturating_sub(1) / 2;
    let mut packed = vec![0u8; total.div_ceil(8)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if canon.has_edge(i, j) {
                packed[k / 8] |= 1 << (7 - k % 8);
            }
            k += 1;
        }
    }
    bytes.extend(packed);
    CanonicalCert { bytes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_graph;
    use crate::graph::named::{complete, cycle, disjoint_union};

    #[test]
    fn c5_relabelled_has_same_cert() {
        let c5 = cycle(5);
        let relabelled = c5.relabel(&[3, 0, 4, 1, 2]);
        assert_eq!(canonical_cert(&c5), canonical_cert(&relabelled));
    }

    #[test]
    fn c6_differs_from_two_triangles() {
        let two = disjoint_union(&cycle(3), &cycle(3));
        assert_ne!(canonical_cert(&cycle(6)), canonical_cert(&two));
    }

    #[test]
    fn the_two_quartic_graphs_on_seven_vertices_differ() {
        let a = cycle(7).complement();
        let b = disjoint_union(&cycle(3), &cycle(4)).complement();
        assert_ne!(canonical_cert(&a), canonical_cert(&b));
    }

    #[test]
    fn refinement_of_path_p4_separates_ends_from_middles() {
        let p4 = make_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let cells = refine(&p4.adjacency(), vec![(0..4).collect()]);
        assert_eq!(cells, vec![vec![0, 3], vec![1, 2]]);
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        let k = complete(12);
        let cert = canonical_cert(&k);
        assert_eq!(cert, canonical_cert(&k.relabel(&[11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0])));
        let empty = make_graph(14, &[]).unwrap();
        let _ = canonical_cert(&empty);
    }
}
