//! Equitable partitions and the shape of Fiedler vectors on path-like
//! assemblies: constancy on structural cells, strict decrease from left to
//! right, a single sign change, and skew symmetry under the mirror map.

use crate::blocks::{Assembly, Block};
use crate::graph::{canon_refine, Graph};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("cells do not partition the vertex set: {0}")]
    NotAPartition(String),
    #[error("vector has length {found}, graph has {expected} vertices")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("block sequence is not its own mirror image")]
    NotPalindromic,
}

/// Ordered partition of the vertex set into nonempty cells.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub cells: Vec<Vec<usize>>,
}

impl Partition {
    /// Validates that `cells` are nonempty, disjoint and cover `0..n`.
    pub fn new(n: usize, cells: Vec<Vec<usize>>) -> Result<Partition, StructureError> {
        let mut seen = vec![false; n];
        for cell in &cells {
            if cell.is_empty() {
                return Err(StructureError::NotAPartition("empty cell".into()));
            }
            for &v in cell {
                if v >= n {
                    return Err(StructureError::NotAPartition(format!("vertex {v} out of range")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(StructureError::NotAPartition(format!("vertex {v} repeated")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(StructureError::NotAPartition(format!("vertex {v} uncovered")));
        }
        Ok(Partition { cells })
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Cell index of every vertex.
    pub fn cell_of(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for (c, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                out[v] = c;
            }
        }
        out
    }
}

/// Number of neighbours in cell `j` of vertex `v`, for every `j`.
fn neighbour_counts(adj: &[Vec<usize>], cell_of: &[usize], k: usize, v: usize) -> Vec<usize> {
    let mut counts = vec![0; k];
    for &w in &adj[v] {
        counts[cell_of[w]] += 1;
    }
    counts
}

/// True iff every vertex of a cell has the same number of neighbours in
/// each cell.
pub fn is_equitable(g: &Graph, cells: &[Vec<usize>]) -> Result<bool, StructureError> {
    let p = Partition::new(g.n(), cells.to_vec())?;
    let adj = g.adjacency();
    let cell_of = p.cell_of(g.n());
    Ok(p.cells.iter().all(|cell| {
        let first = neighbour_counts(&adj, &cell_of, p.len(), cell[0]);
        cell[1..].iter().all(|&v| neighbour_counts(&adj, &cell_of, p.len(), v) == first)
    }))
}

/// The coarsest equitable partition refining `{V}`.
pub fn coarsest_equitable(g: &Graph) -> Partition {
    if g.n() == 0 {
        return Partition { cells: Vec::new() };
    }
    Partition { cells: canon_refine(&g.adjacency(), vec![(0..g.n()).collect()]) }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Tolerances {
    /// Largest allowed spread of components inside one cell.
    pub spread: f64,
    /// Required strict drop between consecutive cell means.
    pub margin: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { spread: 1e-7, margin: 1e-9 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FiedlerStructureReport {
    pub cell_constant: bool,
    pub max_spread: f64,
    /// Cell whose spread is largest.
    pub worst_cell: usize,
    /// Mean of the components over each cell, left to right.
    pub cell_means: Vec<f64>,
    pub decreasing: bool,
    pub sign_changes: usize,
    /// Cells whose mean is within the margin of zero; skipped when
    /// counting sign changes.
    pub zero_cells: Vec<usize>,
    /// Set when a mirror map is supplied: whether `x[σ(v)] = -x[v]`.
    pub skew_symmetric: Option<bool>,
    pub skew_deviation: Option<f64>,
}

impl FiedlerStructureReport {
    /// Cell-constant, strictly decreasing, one sign change, and skew
    /// symmetric whenever that was tested.
    pub fn passes(&self) -> bool {
        self.cell_constant && self.decreasing && self.sign_changes == 1 && self.skew_symmetric != Some(false)
    }
}

/// Outcome of a structure check that accounts for near-multiple `μ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Pass,
    Fail,
    /// `λ3 - λ2` is too small for the Fiedler vector to be well defined.
    Indeterminate,
}

/// Gap below which the Fiedler vector is treated as not well defined.
pub const DEGENERATE_GAP: f64 = 1e-8;

pub fn verdict(report: &FiedlerStructureReport, gap23: f64) -> Verdict {
    if gap23 < DEGENERATE_GAP {
        Verdict::Indeterminate
    } else if report.passes() {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

/// Measures how `x` behaves on the ordered cells `p`; `mirror`, when given,
/// adds the skew-symmetry check.
pub fn fiedler_structure(
    g: &Graph,
    x: &[f64],
    p: &[Vec<usize>],
    tol: Tolerances,
    mirror: Option<&[usize]>,
) -> Result<FiedlerStructureReport, StructureError> {
    let n = g.n();
    if x.len() != n {
        return Err(StructureError::DimensionMismatch { expected: n, found: x.len() });
    }
    Partition::new(n, p.to_vec())?;
    let mut max_spread = 0.0;
    let mut worst_cell = 0;
    let mut cell_means = Vec::with_capacity(p.len());
    for (c, cell) in p.iter().enumerate() {
        let values = cell.iter().map(|&v| x[v]);
        let hi = values.clone().fold(f64::NEG_INFINITY, f64::max);
        let lo = values.clone().fold(f64::INFINITY, f64::min);
        if hi - lo > max_spread {
            max_spread = hi - lo;
            worst_cell = c;
        }
        cell_means.push(values.sum::<f64>() / cell.len() as f64);
    }
    let decreasing = cell_means.windows(2).all(|w| w[0] - w[1] > tol.margin);
    let zero_cells: Vec<usize> = (0..p.len()).filter(|&c| cell_means[c].abs() <= tol.margin).collect();
    let signs: Vec<bool> = cell_means.iter().filter(|m| m.abs() > tol.margin).map(|&m| m > 0.0).collect();
    let sign_changes = signs.windows(2).filter(|w| w[0] != w[1]).count();
    let (skew_symmetric, skew_deviation) = match mirror {
        Some(sigma) => {
            if sigma.len() != n {
                return Err(StructureError::DimensionMismatch { expected: n, found: sigma.len() });
            }
            let dev = (0..n).map(|v| (x[sigma[v]] + x[v]).abs()).fold(0.0, f64::max);
            (Some(dev <= tol.spread), Some(dev))
        }
        None => (None, None),
    };
    Ok(FiedlerStructureReport {
        cell_constant: max_spread <= tol.spread,
        max_spread,
        worst_cell,
        cell_means,
        decreasing,
        sign_changes,
        zero_cells,
        skew_symmetric,
        skew_deviation,
    })
}

/// Isomorphism from block `x` onto block `y` read right to left: the
/// attachments are exchanged and cell `i` of `x` goes to cell `p - 1 - i`
/// of `y`. With `involution` set, only self-inverse maps are accepted.
fn reflection(x: &Block, y: &Block, involution: bool) -> Option<Vec<usize>> {
    if x.n() != y.n() || x.cells.len() != y.cells.len() || x.graph.edge_count() != y.graph.edge_count() {
        return None;
    }
    let p = x.cells.len();
    let mut target = vec![Vec::new(); x.n()];
    for (i, cell) in x.cells.iter().enumerate() {
        for &u in cell {
            target[u] = y.cells[p - 1 - i].clone();
        }
    }
    let pin = |u: usize, to: &mut Vec<usize>| {
        if Some(u) == x.left_attach {
            to.retain(|&v| Some(v) == y.right_attach);
        } else if Some(u) == x.right_attach {
            to.retain(|&v| Some(v) == y.left_attach);
        }
    };
    for (u, to) in target.iter_mut().enumerate() {
        pin(u, to);
    }
    fn extend(
        u: usize,
        x: &Block,
        y: &Block,
        target: &[Vec<usize>],
        phi: &mut Vec<usize>,
        used: &mut [bool],
        involution: bool,
    ) -> bool {
        if u == phi.len() {
            return !involution || (0..u).all(|w| phi[phi[w]] == w);
        }
        for &v in &target[u] {
            if used[v] || (0..u).any(|w| x.graph.has_edge(u, w) != y.graph.has_edge(v, phi[w])) {
                continue;
            }
            phi[u] = v;
            used[v] = true;
            if extend(u + 1, x, y, target, phi, used, involution) {
                return true;
            }
            used[v] = false;
        }
        false
    }
    let mut phi = vec![usize::MAX; x.n()];
    let mut used = vec![false; y.n()];
    extend(0, x, y, &target, &mut phi, &mut used, involution).then_some(phi)
}

/// The left-right reflection of a palindromic assembly: block `b` is
/// mapped onto block `k - 1 - b` read backwards.
pub fn mirror_map(a: &Assembly) -> Result<Vec<usize>, StructureError> {
    let k = a.blocks.len();
    let mut maps: Vec<Vec<usize>> = Vec::with_capacity(k);
    for b in 0..k {
        let c = k - 1 - b;
        let phi = if c < b {
            let back = &maps[c];
            let mut inv = vec![0; back.len()];
            for (u, &v) in back.iter().enumerate() {
                inv[v] = u;
            }
            inv
        } else {
            reflection(&a.blocks[b], &a.blocks[c], b == c).ok_or(StructureError::NotPalindromic)?
        };
        maps.push(phi);
    }
    let mut sigma = vec![usize::MAX; a.n()];
    for (b, phi) in maps.iter().enumerate() {
        for (u, &v) in a.block_vertices[b].iter().enumerate() {
            let w = a.block_vertices[k - 1 - b][phi[u]];
            if sigma[v] != usize::MAX && sigma[v] != w {
                return Err(StructureError::NotPalindromic);
            }
            sigma[v] = w;
        }
    }
    Ok(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{build_g_n, build_h};
    use crate::graph::make_graph;
    use crate::graph::named::{complete, path};
    use crate::spectra::assembly_spectrum;

    #[test]
    fn trivial_partitions_are_equitable() {
        let k5 = complete(5);
        assert!(is_equitable(&k5, &[(0..5).collect()]).unwrap());
        let singles: Vec<Vec<usize>> = (0..5).map(|v| vec![v]).collect();
        assert!(is_equitable(&path(5), &singles).unwrap());
        assert!(!is_equitable(&path(4), &[(0..4).collect()]).unwrap());
    }

    #[test]
    fn partition_validation() {
        let g = path(3);
        assert!(matches!(is_equitable(&g, &[vec![0, 1]]), Err(StructureError::NotAPartition(_))));
        assert!(matches!(is_equitable(&g, &[vec![0, 1], vec![1, 2]]), Err(StructureError::NotAPartition(_))));
        assert!(matches!(is_equitable(&g, &[vec![0, 1, 2], vec![]]), Err(StructureError::NotAPartition(_))));
    }

    #[test]
    fn structural_cells_of_family_are_equitable() {
        for n in 11..=40 {
            let a = build_g_n(n).unwrap();
            assert!(is_equitable(&a.graph, &a.cell_order).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn coarsest_partitions() {
        assert_eq!(coarsest_equitable(&complete(5)).cells, vec![vec![0, 1, 2, 3, 4]]);
        let p4 = make_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(coarsest_equitable(&p4).cells, vec![vec![0, 3], vec![1, 2]]);
        let a = build_g_n(11).unwrap();
        let coarse = coarsest_equitable(&a.graph);
        assert!(is_equitable(&a.graph, &coarse.cells).unwrap());
        assert!(coarse.len() <= a.cell_order.len());
    }

    #[test]
    fn g11_fiedler_shape() {
        let a = build_g_n(11).unwrap();
        let r = assembly_spectrum(&a).unwrap();
        let rep = fiedler_structure(&a.graph, &r.fiedler, &a.cell_order, Tolerances::default(), None).unwrap();
        assert!(rep.max_spread < 1e-8);
        assert!(rep.passes(), "{rep:?}");
    }

    #[test]
    fn constant_vector_shape() {
        let a = build_g_n(11).unwrap();
        let x = vec![1.0; 11];
        let rep = fiedler_structure(&a.graph, &x, &a.cell_order, Tolerances::default(), None).unwrap();
        assert_eq!(rep.sign_changes, 0);
        assert!(!rep.decreasing);
    }

    #[test]
    fn mirror_maps() {
        for (m, i) in [(3, 0), (3, 4), (2, 2)] {
            let a = build_h(m, i, i).unwrap();
            let sigma = mirror_map(&a).unwrap();
            assert!((0..a.n()).all(|v| sigma[sigma[v]] == v));
            assert_eq!(a.graph.relabel(&sigma), a.graph);
        }
        assert_eq!(mirror_map(&build_g_n(12).unwrap()).unwrap_err(), StructureError::NotPalindromic);
        let a = build_h(3, 4, 4).unwrap();
        let r = assembly_spectrum(&a).unwrap();
        let sigma = mirror_map(&a).unwrap();
        let rep =
            fiedler_structure(&a.graph, &r.fiedler, &a.cell_order, Tolerances::default(), Some(&sigma)).unwrap();
        assert_eq!(rep.skew_symmetric, Some(true));
    }

    #[test]
    fn dimension_mismatch() {
        let g = path(3);
        let err = fiedler_structure(&g, &[1.0], &[vec![0, 1, 2]], Tolerances::default(), None).unwrap_err();
        assert_eq!(err, StructureError::DimensionMismatch { expected: 3, found: 1 });
    }
}
