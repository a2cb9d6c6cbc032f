//! Laplacian spectra: algebraic connectivity, Fiedler vectors, Rayleigh
//! quotients, the shifted Rayleigh bound, relaxation times, and the cosine
//! test vector on the two-sided `D_0` family.

mod eigen;
mod families;

pub use eigen::{eigen_sym, EigenDecomposition, MAX_QL_ITERATIONS};
pub use families::{
    path_bound, sandwich_row, verify_h00, verify_sandwich, H00Row, SandwichRow, H00_SLACK, ORTHOGONALITY_TOLERANCE,
    SANDWICH_SLACK,
};

use crate::blocks::{build_h, Assembly};
use crate::graph::{degrees, is_connected, laplacian, quadratic_form, Graph, SymMatrix};
use serde::Serialize;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectraError {
    #[error("QL iteration for eigenvalue {index} did not converge within {iterations} sweeps")]
    ConvergenceFailure { index: usize, iterations: usize },
    #[error("vector is zero")]
    ZeroVector,
    #[error("vector is constant")]
    ConstantVector,
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vector has length {found}, graph has {expected} vertices")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("graph needs at least 2 vertices")]
    TooSmall,
    #[error("relaxation times disagree: {from_mu} from the Laplacian, {from_walk} from the walk")]
    Inconsistent { from_mu: f64, from_walk: f64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectralReport {
    pub eigenvalues: Vec<f64>,
    pub mu: f64,
    pub fiedler: Vec<f64>,
    /// `λ3 - λ2`; infinite for graphs with fewer than three vertices.
    pub gap23: f64,
    /// Largest component of `|L x - μ x|`.
    pub residual: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ShiftedBoundResult {
    pub delta: f64,
    pub bound: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RelaxationReport {
    pub degree: usize,
    pub mu: f64,
    /// `k / μ`.
    pub tau: f64,
    /// Second largest eigenvalue of the transition matrix `A / k`.
    pub eta2: f64,
}

fn normalize_sign(x: &mut [f64], cells: Option<&[Vec<usize>]>) {
    let first_cell_sum = cells
        .and_then(|c| c.first())
        .map(|cell| cell.iter().map(|&v| x[v]).sum::<f64>())
        .filter(|s| s.abs() > 1e-12);
    let flip = match first_cell_sum {
        Some(s) => s < 0.0,
        None => {
            let max = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            let lead = x.iter().find(|v| v.abs() >= max - 1e-12).copied().unwrap_or(0.0);
            lead < 0.0
        }
    };
    if flip {
        x.iter_mut().for_each(|v| *v = -*v);
    }
}

/// Full Laplacian spectrum, `μ = λ2`, and a unit Fiedler vector whose sign
/// makes its largest-magnitude component (the first, on ties) positive.
pub fn algebraic_connectivity(g: &Graph) -> Result<SpectralReport, SpectraError> {
    spectral_report(g, None)
}

/// As [`algebraic_connectivity`], but the Fiedler sign makes the sum over
/// the first of the given cells positive.
pub fn algebraic_connectivity_with_cells(
    g: &Graph,
    cells: &[Vec<usize>],
) -> Result<SpectralReport, SpectraError> {
    spectral_report(g, Some(cells))
}

/// Spectral report for an assembly, sign-normalized on its leftmost cell.
pub fn assembly_spectrum(a: &Assembly) -> Result<SpectralReport, SpectraError> {
    algebraic_connectivity_with_cells(&a.graph, &a.cell_order)
}

fn spectral_report(g: &Graph, cells: Option<&[Vec<usize>]>) -> Result<SpectralReport, SpectraError> {
    let n = g.n();
    if n < 2 {
        return Err(SpectraError::TooSmall);
    }
    let l = laplacian(g);
    let dec = eigen_sym(&l)?;
    let mu = dec.values[1];
    let mut fiedler = dec.vectors[1].clone();
    normalize_sign(&mut fiedler, cells);
    let lx = l.mul_vec(&fiedler);
    let residual = lx.iter().zip(&fiedler).map(|(a, b)| (a - mu * b).abs()).fold(0.0, f64::max);
    let gap23 = if n >= 3 { dec.values[2] - mu } else { f64::INFINITY };
    Ok(SpectralReport { eigenvalues: dec.values, mu, fiedler, gap23, residual })
}

fn check_len(g: &Graph, x: &[f64]) -> Result<(), SpectraError> {
    if x.len() != g.n() {
        return Err(SpectraError::DimensionMismatch { expected: g.n(), found: x.len() });
    }
    Ok(())
}

/// `Σ_{ij ∈ E} (x_i - x_j)^2 / ‖x‖^2`.
pub fn rayleigh(g: &Graph, x: &[f64]) -> Result<f64, SpectraError> {
    check_len(g, x)?;
    let norm2: f64 = x.iter().map(|v| v * v).sum();
    if norm2 == 0.0 {
        return Err(SpectraError::ZeroVector);
    }
    Ok(quadratic_form(g, x) / norm2)
}

/// `δ = x·1` and the upper bound `x L xᵀ / (‖x‖² - δ²/n)` on `μ(g)`.
pub fn shifted_bound(g: &Graph, x: &[f64]) -> Result<ShiftedBoundResult, SpectraError> {
    check_len(g, x)?;
    let n = x.len() as f64;
    let delta: f64 = x.iter().sum();
    let norm2: f64 = x.iter().map(|v| v * v).sum();
    let denom = norm2 - delta * delta / n;
    let scale = norm2.max(f64::MIN_POSITIVE);
    if denom <= 1e-14 * scale {
        return Err(SpectraError::ConstantVector);
    }
    Ok(ShiftedBoundResult { delta, bound: quadratic_form(g, x) / denom })
}

/// Relaxation time `k / μ` of the simple random walk on a connected
/// `k`-regular graph, cross-checked against `1 / (1 - η2)` computed from
/// the spectrum of the transition matrix.
pub fn relaxation_time(g: &Graph) -> Result<RelaxationReport, SpectraError> {
    let deg = degrees(g);
    let k = *deg.first().ok_or(SpectraError::TooSmall)?;
    if deg.iter().any(|&d| d != k) {
        return Err(SpectraError::NotRegular);
    }
    if !is_connected(g) {
        return Err(SpectraError::Disconnected);
    }
    let mu = algebraic_connectivity(g)?.mu;
    let n = g.n();
    let mut walk = SymMatrix::zeros(n);
    for &(u, v) in g.edges() {
        walk.set(u, v, 1.0 / k as f64);
    }
    let values = eigen_sym(&walk)?.values;
    let eta2 = values[n - 2];
    let tau = k as f64 / mu;
    let from_walk = 1.0 / (1.0 - eta2);
    if (tau - from_walk).abs() > 1e-8 * tau.max(1.0) {
        return Err(SpectraError::Inconsistent { from_mu: tau, from_walk });
    }
    Ok(RelaxationReport { degree: k, mu, tau, eta2 })
}

/// The two-sided `D_0` graph with `m` middle blocks together with the
/// cosine test vector: with `x_i = cos((2i-1)π/(2m+2))`, cut vertex `i`
/// and the whole left (right) end block carry `x_1` (`x_{m+1}`), and the
/// two vertex pairs of the `i`-th middle block carry `(3x_i + 2x_{i+1})/5`
/// and `(2x_i + 3x_{i+1})/5`.
pub fn test_vector_h00(m: usize) -> (Assembly, Vec<f64>) {
    let a = build_h(m, 0, 0).expect("ends D_0 are in the catalog");
    let xs: Vec<f64> =
        (1..=m + 1).map(|i| ((2 * i - 1) as f64 * PI / (2 * m + 2) as f64).cos()).collect();
    let mut x = vec![0.0; a.n()];
    for &v in &a.block_vertices[0] {
        x[v] = xs[0];
    }
    for &v in &a.block_vertices[m + 1] {
        x[v] = xs[m];
    }
    for i in 1..=m {
        let (left, right) = (xs[i - 1], xs[i]);
        let map = &a.block_vertices[i];
        let block = &a.blocks[i];
        let id = |label: &str| map[block.vertex(label).expect("M_0 label")];
        x[id("r")] = left;
        x[id("r5")] = right;
        for label in ["r1", "r2"] {
            x[id(label)] = (3.0 * left + 2.0 * right) / 5.0;
        }
        for label in ["r3", "r4"] {
            x[id(label)] = (2.0 * left + 3.0 * right) / 5.0;
        }
    }
    (a, x)
}

/// Closed-form upper bound on the Rayleigh quotient of the cosine test
/// vector with `m` middle blocks.
pub fn closed_form_f(m: usize) -> f64 {
    let mf = m as f64;
    let s = (PI / (2.0 * mf + 2.0)).sin();
    let c = (PI / (2.0 * mf + 2.0)).cos();
    let num = 40.0 * (mf + 1.0) * s * s;
    let den = 77.0 * ((mf + 1.0) / 2.0 - c * c) + 24.0 * (mf * (PI / (mf + 1.0)).cos() - 1.0);
    num / den
}

/// `μ(P_h) = 2(1 - cos(π/h))`.
pub fn path_mu(h: usize) -> f64 {
    2.0 * (1.0 - (PI / h as f64).cos())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::build_g_n;
    use crate::graph::make_graph;
    use crate::graph::named::{complete, cycle, disjoint_union, path};

    #[test]
    fn path_values() {
        for h in 2..=40 {
            let r = algebraic_connectivity(&path(h)).unwrap();
            assert!((r.mu - path_mu(h)).abs() < 1e-10, "h = {h}");
        }
    }

    #[test]
    fn disconnected_has_zero_mu() {
        let g = disjoint_union(&cycle(3), &cycle(4));
        assert!(algebraic_connectivity(&g).unwrap().mu.abs() < 1e-10);
    }

    #[test]
    fn g11_mu_window() {
        let a = build_g_n(11).unwrap();
        let r = assembly_spectrum(&a).unwrap();
        assert!(r.mu > 0.354 && r.mu <= 0.355, "{}", r.mu);
        assert!(r.residual <= 1e-9);
        assert!(r.eigenvalues[0].abs() < 1e-10);
        let sum: f64 = r.fiedler.iter().sum();
        assert!(sum.abs() < 1e-10);
        let first: f64 = a.cell_order[0].iter().map(|&v| r.fiedler[v]).sum();
        assert!(first > 0.0);
    }

    #[test]
    fn rayleigh_basics() {
        let g = cycle(6);
        assert_eq!(rayleigh(&g, &[1.0; 6]).unwrap(), 0.0);
        assert_eq!(rayleigh(&g, &[0.0; 6]), Err(SpectraError::ZeroVector));
        assert!(matches!(rayleigh(&g, &[1.0; 5]), Err(SpectraError::DimensionMismatch { .. })));
        let r = algebraic_connectivity(&g).unwrap();
        assert!((rayleigh(&g, &r.fiedler).unwrap() - r.mu).abs() < 1e-9);
    }

    #[test]
    fn shifted_bound_basics() {
        let g = cycle(6);
        let x = [1.0, -1.0, 2.0, -2.0, 0.5, -0.5];
        let b = shifted_bound(&g, &x).unwrap();
        assert_eq!(b.delta, 0.0);
        assert!((b.bound - rayleigh(&g, &x).unwrap()).abs() < 1e-15);
        assert_eq!(shifted_bound(&g, &[3.0; 6]), Err(SpectraError::ConstantVector));
        let y = [1.0, 2.0, 3.0, 4.0, 5.0, 7.0];
        assert!(shifted_bound(&g, &y).unwrap().bound >= 1.0 - 1e-9);
    }

    #[test]
    fn relaxation_times() {
        let r = relaxation_time(&complete(5)).unwrap();
        assert!((r.tau - 0.8).abs() < 1e-12);
        for n in [5, 8, 13] {
            let r = relaxation_time(&cycle(n)).unwrap();
            let expected = 2.0 / (2.0 - 2.0 * (2.0 * PI / n as f64).cos());
            assert!((r.tau - expected).abs() < 1e-9);
        }
        assert_eq!(relaxation_time(&path(4)), Err(SpectraError::NotRegular));
        let two = make_graph(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(relaxation_time(&two), Err(SpectraError::Disconnected));
    }

    #[test]
    fn cosine_vector_small_case() {
        let (a, x) = test_vector_h00(1);
        let cut = a.cut_vertices.clone();
        assert!((x[cut[0]] - (PI / 4.0).cos()).abs() < 1e-15);
        assert!((x[cut[1]] - (3.0 * PI / 4.0).cos()).abs() < 1e-15);
        assert!(x.iter().sum::<f64>().abs() < 1e-12);
    }

    #[test]
    fn closed_form_facts() {
        assert!(closed_form_f(6) < 0.046);
        for m in 1..100 {
            assert!(closed_form_f(m + 1) < closed_form_f(m), "m = {m}");
        }
        let m = 200.0;
        let ratio = closed_form_f(200) * 25.0 * m * m / (4.0 * PI * PI);
        assert!((ratio - 1.0).abs() < 0.05, "{ratio}");
    }
}
