//! The fits relation between end blocks, end-block replacement with a
//! lifted test vector, and the replacement lemmas run on concrete hosts.

mod experiments;
mod formulas;
mod splice;

pub use experiments::{
    compare_graphs, lemma_spec, run_lemma_experiment, standard_instances, ComparisonReport, HypothesisStatus,
    LemmaReport, LemmaSpec, LEMMA_NAMES,
};
pub use formulas::{lemma_formula, LemmaFormula, FORMULA_NAMES};
pub use splice::{find_embeddings, splice};

use crate::blocks::{assemble, Assembly, Block, BlockError};
use crate::graph::Graph;
use crate::spectra::{assembly_spectrum, shifted_bound, SpectraError};
use crate::structure::{is_equitable, Partition, StructureError};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ReplaceError {
    #[error("invalid partition: {0}")]
    NotAPartition(String),
    #[error("fit search limited to blocks of at most 10 vertices and 10 cells")]
    SearchSpaceExceeded,
    #[error("the witness does not satisfy the fit conditions")]
    FitViolated,
    #[error("Fiedler vector not constant on cell {cell} (spread {spread:e})")]
    CellNotConstant { cell: usize, spread: f64 },
    #[error("unknown formula `{0}`")]
    UnknownFormula(String),
    #[error("mu = {mu} is not below the formula bound {bound}")]
    MuOutOfRange { mu: f64, bound: f64 },
    #[error("expected {expected} boundary values, found {found}")]
    InputCount { expected: usize, found: usize },
    #[error("gadget `{0}` does not occur in the host")]
    GadgetNotFound(String),
    #[error("unknown lemma `{0}`")]
    UnknownLemma(String),
    #[error("splice failed: {0}")]
    SpliceFailed(String),
    #[error(transparent)]
    Block(#[from] BlockError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
}

impl From<StructureError> for ReplaceError {
    fn from(e: StructureError) -> Self {
        ReplaceError::NotAPartition(e.to_string())
    }
}

/// Cells of `D` and `D'` indexed alike, with the number of edges between
/// every two distinct cells.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FitWitness {
    pub pi: Vec<Vec<usize>>,
    pub pi_prime: Vec<Vec<usize>>,
    pub edge_counts: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct ReplacementOutcome {
    pub g_prime: Graph,
    pub x_prime: Vec<f64>,
    pub h: f64,
    pub h_prime: f64,
    /// Energy of the untouched edges, evaluated on `G` and on `G'`.
    pub ell: f64,
    pub ell_prime: f64,
    pub delta: f64,
    pub epsilon: f64,
    pub criterion: f64,
    pub mu_before: f64,
    pub bound_after: f64,
    pub mu_after: f64,
}

/// `h' - h - ε μ`; a negative value certifies `μ(G') < μ(G)`.
pub fn criterion(h: f64, h_prime: f64, epsilon: f64, mu: f64) -> f64 {
    h_prime - h - epsilon * mu
}

fn cross_counts(g: &Graph, cell_of: &[usize], p: usize) -> Vec<Vec<usize>> {
    let mut d = vec![vec![0; p]; p];
    for &(u, v) in g.edges() {
        let (a, b) = (cell_of[u], cell_of[v]);
        if a != b {
            d[a][b] += 1;
            d[b][a] += 1;
        }
    }
    d
}

/// The attachment of an end block: its only attachment vertex.
fn end_attach(d: &Block) -> Option<usize> {
    d.right_attach.or(d.left_attach)
}

/// Checks conditions (i)-(iii) of the fits relation and that the
/// attachment lies in the last cell of both partitions.
pub fn check_fit(d: &Block, d_prime: &Block, w: &FitWitness) -> Result<bool, ReplaceError> {
    let pi = Partition::new(d.n(), w.pi.clone())?;
    let pi_prime = Partition::new(d_prime.n(), w.pi_prime.clone())?;
    let p = pi.len();
    if pi_prime.len() != p {
        return Err(ReplaceError::NotAPartition(format!("{p} cells against {}", pi_prime.len())));
    }
    if !is_equitable(&d.graph, &w.pi)? {
        return Ok(false);
    }
    if (0..p).any(|i| w.pi[i].len() > w.pi_prime[i].len()) {
        return Ok(false);
    }
    match (end_attach(d), end_attach(d_prime)) {
        (Some(a), Some(b)) if w.pi[p - 1].contains(&a) && w.pi_prime[p - 1].contains(&b) => {}
        (None, None) => {}
        _ => return Ok(false),
    }
    let counts = cross_counts(&d.graph, &pi.cell_of(d.n()), p);
    let counts_prime = cross_counts(&d_prime.graph, &pi_prime.cell_of(d_prime.n()), p);
    Ok(counts == counts_prime && counts == w.edge_counts)
}

/// Restricted-growth enumeration of the set partitions of `0..n` with at
/// most `p_max` blocks.
fn set_partitions(n: usize, p_max: usize, mut visit: impl FnMut(&[usize], usize) -> bool) {
    fn rec(
        i: usize,
        n: usize,
        used: usize,
        p_max: usize,
        a: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize], usize) -> bool,
    ) -> bool {
        if i == n {
            return visit(a, used);
        }
        for c in 0..=used.min(p_max - 1) {
            a[i] = c;
            if rec(i + 1, n, used.max(c + 1), p_max, a, visit) {
                return true;
            }
        }
        false
    }
    let mut a = vec![0; n];
    if n > 0 && p_max > 0 {
        rec(0, n, 0, p_max, &mut a, &mut visit);
    }
}

/// Assigns every vertex of `D'` to a cell so that the cross-cell counts
/// match `target`, cell sizes dominate `min_sizes`, and the attachment
/// lands in the last cell.
fn assign_prime(d_prime: &Block, target: &[Vec<usize>], min_sizes: &[usize]) -> Option<Vec<usize>> {
    let n = d_prime.n();
    let p = target.len();
    let adj = d_prime.graph.adjacency();
    let attach = end_attach(d_prime);
    let mut cell = vec![usize::MAX; n];
    let mut counts = vec![vec![0usize; p]; p];
    let mut sizes = vec![0usize; p];

    #[allow(clippy::too_many_arguments)]
    fn rec(
        v: usize,
        n: usize,
        p: usize,
        adj: &[Vec<usize>],
        attach: Option<usize>,
        target: &[Vec<usize>],
        min_sizes: &[usize],
        cell: &mut Vec<usize>,
        counts: &mut Vec<Vec<usize>>,
        sizes: &mut Vec<usize>,
    ) -> bool {
        let deficit: usize = (0..p).map(|i| min_sizes[i].saturating_sub(sizes[i])).sum();
        if deficit > n - v {
            return false;
        }
        if v == n {
            return counts == target;
        }
        let choices: Vec<usize> = if Some(v) == attach { vec![p - 1] } else { (0..p).collect() };
        for c in choices {
            let mut ok = true;
            for &w in &adj[v] {
                if cell[w] != usize::MAX && cell[w] != c {
                    counts[c][cell[w]] += 1;
                    counts[cell[w]][c] += 1;
                    if counts[c][cell[w]] > target[c][cell[w]] {
                        ok = false;
                    }
                }
            }
            cell[v] = c;
            sizes[c] += 1;
            if ok && rec(v + 1, n, p, adj, attach, target, min_sizes, cell, counts, sizes) {
                return true;
            }
            sizes[c] -= 1;
            cell[v] = usize::MAX;
            for &w in &adj[v] {
                if cell[w] != usize::MAX && cell[w] != c {
                    counts[c][cell[w]] -= 1;
                    counts[cell[w]][c] -= 1;
                }
            }
        }
        false
    }
    rec(0, n, p, &adj, attach, target, min_sizes, &mut cell, &mut counts, &mut sizes).then_some(cell)
}

fn cells_from_labels(cell_of: &[usize], p: usize) -> Vec<Vec<usize>> {
    let mut cells = vec![Vec::new(); p];
    for (v, &c) in cell_of.iter().enumerate() {
        cells[c].push(v);
    }
    cells
}

/// End-block pairs `(i, j)` for which `D_j` fits `D_i`.
pub const FITTING_PAIRS: [(usize, usize); 9] = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4)];

/// Exhaustive search for a fit witness with at most `p_max` cells.
pub fn find_fit_partition(d: &Block, d_prime: &Block, p_max: usize) -> Result<Option<FitWitness>, ReplaceError> {
    if d.n() > 10 || d_prime.n() > 10 || p_max > 10 {
        return Err(ReplaceError::SearchSpaceExceeded);
    }
    let attach = end_attach(d);
    let mut found = None;
    set_partitions(d.n(), p_max, |labels, p| {
        let mut order: Vec<usize> = (0..p).collect();
        if let Some(a) = attach {
            let last = labels[a];
            order.retain(|&c| c != last);
            order.push(last);
        }
        let mut rank = vec![0; p];
        for (i, &c) in order.iter().enumerate() {
            rank[c] = i;
        }
        let cell_of: Vec<usize> = labels.iter().map(|&c| rank[c]).collect();
        let pi = cells_from_labels(&cell_of, p);
        if !is_equitable(&d.graph, &pi).unwrap_or(false) {
            return false;
        }
        let target = cross_counts(&d.graph, &cell_of, p);
        let min_sizes: Vec<usize> = pi.iter().map(Vec::len).collect();
        if let Some(prime) = assign_prime(d_prime, &target, &min_sizes) {
            found = Some(FitWitness { pi, pi_prime: cells_from_labels(&prime, p), edge_counts: target });
            return true;
        }
        false
    });
    Ok(found)
}

fn energy(g: &Graph, x: &[f64], touched: &[bool]) -> (f64, f64) {
    let mut inside = 0.0;
    let mut rest = 0.0;
    for &(u, v) in g.edges() {
        let e = (x[u] - x[v]).powi(2);
        if touched[u] || touched[v] {
            inside += e;
        } else {
            rest += e;
        }
    }
    (inside, rest)
}

/// Replaces the left end block of `g` by `d_prime`, lifting the Fiedler
/// vector cell by cell. For the right end, pass the reversed assembly.
pub fn replace_end_block(g: &Assembly, d_prime: &Block, w: &FitWitness) -> Result<ReplacementOutcome, ReplaceError> {
    let d = &g.blocks[0];
    if !check_fit(d, d_prime, w)? {
        return Err(ReplaceError::FitViolated);
    }
    let before = assembly_spectrum(g)?;
    let x = &before.fiedler;
    let mut a = Vec::with_capacity(w.pi.len());
    for (i, cell) in w.pi.iter().enumerate() {
        let values: Vec<f64> = cell.iter().map(|&u| x[g.block_vertices[0][u]]).collect();
        let mean = values.iter().sum::<f64>() / values.len() as f64;
        let spread = values.iter().map(|v| (v - mean).abs()).fold(0.0, f64::max);
        if spread > 1e-7 {
            return Err(ReplaceError::CellNotConstant { cell: i, spread });
        }
        a.push(mean);
    }
    let mut seq = vec![d_prime.clone()];
    seq.extend(g.blocks[1..].iter().cloned());
    let gp = assemble(&seq)?;
    let mut x_prime = vec![0.0; gp.n()];
    for (i, cell) in w.pi_prime.iter().enumerate() {
        for &u in cell {
            x_prime[gp.block_vertices[0][u]] = a[i];
        }
    }
    for b in 1..g.blocks.len() {
        for (u, &v) in g.block_vertices[b].iter().enumerate() {
            if !g.blocks[b].left_attach.is_some_and(|l| l == u) {
                x_prime[gp.block_vertices[b][u]] = x[v];
            }
        }
    }
    let mut touched = vec![false; g.n()];
    for &v in &g.block_vertices[0] {
        touched[v] = true;
    }
    let mut touched_prime = vec![false; gp.n()];
    for &v in &gp.block_vertices[0] {
        touched_prime[v] = true;
    }
    let (h, ell) = energy(&g.graph, x, &touched);
    let (h_prime, ell_prime) = energy(&gp.graph, &x_prime, &touched_prime);
    let n_prime = gp.n() as f64;
    let sb = shifted_bound(&gp.graph, &x_prime)?;
    let norm2: f64 = x_prime.iter().map(|v| v * v).sum();
    let epsilon = norm2 - sb.delta * sb.delta / n_prime - 1.0;
    let after = assembly_spectrum(&gp)?;
    Ok(ReplacementOutcome {
        g_prime: gp.graph,
        x_prime,
        h,
        h_prime,
        ell,
        ell_prime,
        delta: sb.delta,
        epsilon,
        criterion: criterion(h, h_prime, epsilon, before.mu),
        mu_before: before.mu,
        bound_after: sb.bound,
        mu_after: after.mu,
    })
}

/// The same graph read from right to left.
pub fn reversed(a: &Assembly) -> Result<Assembly, ReplaceError> {
    let seq: Vec<Block> = a.blocks.iter().rev().map(Block::mirror).collect();
    Ok(assemble(&seq)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{block, build_h};

    fn d(i: usize) -> Block {
        block(&format!("D_{i}")).unwrap()
    }

    fn labelled(b: &Block, cells: &[&[&str]]) -> Vec<Vec<usize>> {
        cells.iter().map(|c| c.iter().map(|l| b.vertex(l).unwrap()).collect()).collect()
    }

    fn witness(dd: &Block, dp: &Block, pi: &[&[&str]], pi_prime: &[&[&str]]) -> FitWitness {
        let pi = labelled(dd, pi);
        let pi_prime = labelled(dp, pi_prime);
        let p = pi.len();
        let cell_of = Partition::new(dd.n(), pi.clone()).unwrap().cell_of(dd.n());
        FitWitness { edge_counts: cross_counts(&dd.graph, &cell_of, p), pi, pi_prime }
    }

    #[test]
    fn handwritten_witnesses() {
        let w = witness(
            &d(0),
            &d(1),
            &[&["r", "r1", "r2"], &["r3", "r4"], &["r5"]],
            &[&["r1", "r2", "r3"], &["r4", "r5", "r6"], &["r7"]],
        );
        assert!(check_fit(&d(0), &d(1), &w).unwrap());
        let w = witness(
            &d(3),
            &d(4),
            &[&["r1", "r2", "r3", "r4"], &["r5", "r6"], &["r7", "r8"], &["r9"]],
            &[&["r1", "r2", "r3", "r4"], &["r5", "r6", "r7"], &["r8", "r9"], &["r10"]],
        );
        assert!(check_fit(&d(3), &d(4), &w).unwrap());
        let id: Vec<Vec<usize>> = d(0).cells.clone();
        let w = FitWitness {
            edge_counts: cross_counts(&d(0).graph, &Partition::new(6, id.clone()).unwrap().cell_of(6), id.len()),
            pi: id.clone(),
            pi_prime: id,
        };
        assert!(check_fit(&d(0), &d(0), &w).unwrap());
        let bad = FitWitness { pi: vec![vec![0, 1]], pi_prime: w.pi_prime.clone(), edge_counts: vec![] };
        assert!(matches!(check_fit(&d(0), &d(0), &bad), Err(ReplaceError::NotAPartition(_))));
    }

    #[test]
    fn table_of_fits() {
        for (i, j) in FITTING_PAIRS {
            let w = find_fit_partition(&d(i), &d(j), 6).unwrap().unwrap_or_else(|| panic!("D_{j} fits D_{i}"));
            assert!(check_fit(&d(i), &d(j), &w).unwrap());
        }
        assert!(find_fit_partition(&d(4), &d(0), 6).unwrap().is_none());
        let bricks: Vec<Block> = ["D'_0", "M''_0", "~M'_0"].iter().map(|k| block(k).unwrap()).collect();
        let big = crate::blocks::long_block(&bricks, crate::blocks::LongType::End).unwrap();
        assert!(matches!(find_fit_partition(&big, &d(0), 6), Err(ReplaceError::SearchSpaceExceeded)));
    }

    #[test]
    fn identity_replacement_is_neutral() {
        let g = build_h(2, 0, 0).unwrap();
        let w = find_fit_partition(&d(0), &d(0), 6).unwrap().unwrap();
        let out = replace_end_block(&g, &d(0), &w).unwrap();
        assert!(out.criterion.abs() < 1e-12);
        assert!((out.mu_after - out.mu_before).abs() < 1e-12);
        assert_eq!(out.ell, out.ell_prime);
    }

    #[test]
    fn end_replacement_orders_family() {
        for m in 1..=4 {
            for j in 0..=4 {
                for i in 1..=4 {
                    let g = build_h(m, 0, j).unwrap();
                    let w = find_fit_partition(&d(0), &d(i), 6).unwrap().unwrap();
                    let out = replace_end_block(&g, &d(i), &w).unwrap();
                    assert!(out.mu_after <= out.bound_after + 1e-12);
                    assert!(out.bound_after <= out.mu_before + 1e-9, "m={m} i={i} j={j}");
                    assert_eq!(out.ell, out.ell_prime);
                }
            }
        }
    }

    #[test]
    fn right_end_via_reversal() {
        let g = build_h(3, 4, 0).unwrap();
        let r = reversed(&g).unwrap();
        assert_eq!(r.blocks[0].name, "D_0");
        let w = find_fit_partition(&d(0), &d(4), 6).unwrap().unwrap();
        let out = replace_end_block(&r, &d(4), &w).unwrap();
        let h44 = crate::spectra::assembly_spectrum(&build_h(3, 4, 4).unwrap()).unwrap().mu;
        assert!((out.mu_after - h44).abs() < 1e-9);
        assert!(h44 <= out.mu_before + 1e-9);
    }
}
