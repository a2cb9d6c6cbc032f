//! Batch checks over the two-sided families `H_{i,j}(m)`: the cosine test
//! vector against its closed-form bound, and the ordering of `μ` between
//! the extreme end-block choices.

use super::{algebraic_connectivity, assembly_spectrum, closed_form_f, path_mu, rayleigh, test_vector_h00, SpectraError};
use crate::blocks::build_h;
use crate::graph::named::path;
use rayon::prelude::*;
use serde::Serialize;

/// Slack on the Rayleigh quotient against `f(m)`.
pub const H00_SLACK: f64 = 1e-12;
/// Largest allowed `|x · 1|` for the test vector.
pub const ORTHOGONALITY_TOLERANCE: f64 = 1e-10;
/// Slack on every `μ` comparison of the sandwich.
pub const SANDWICH_SLACK: f64 = 1e-9;

#[derive(Clone, Debug, Serialize)]
pub struct H00Row {
    pub m: usize,
    pub rayleigh: f64,
    pub f: f64,
    /// `x · 1`.
    pub dot_one: f64,
    pub holds: bool,
}

pub fn verify_h00(ms: &[usize]) -> Result<Vec<H00Row>, SpectraError> {
    ms.par_iter()
        .map(|&m| {
            let (a, x) = test_vector_h00(m);
            let q = rayleigh(&a.graph, &x)?;
            let f = closed_form_f(m);
            let dot_one: f64 = x.iter().sum();
            Ok(H00Row { m, rayleigh: q, f, dot_one, holds: q <= f + H00_SLACK && dot_one.abs() <= ORTHOGONALITY_TOLERANCE })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SandwichRow {
    pub m: usize,
    /// `(4/25) μ(P_{m+11})`.
    pub path_bound: f64,
    pub mu_44: f64,
    pub mu_00: f64,
    /// Extremes of `μ(H_{i,j}(m))` over `0 ≤ i, j ≤ 4`.
    pub min_ij: f64,
    pub max_ij: f64,
    pub holds: bool,
}

pub fn sandwich_row(m: usize) -> Result<SandwichRow, SpectraError> {
    let mut mus = [[0.0; 5]; 5];
    for (i, row) in mus.iter_mut().enumerate() {
        for (j, mu) in row.iter_mut().enumerate() {
            *mu = assembly_spectrum(&build_h(m, i, j).expect("end blocks D_0..D_4 exist"))?.mu;
        }
    }
    let flat = mus.iter().flatten().copied();
    let min_ij = flat.clone().fold(f64::INFINITY, f64::min);
    let max_ij = flat.fold(f64::NEG_INFINITY, f64::max);
    let path_bound = 4.0 / 25.0 * algebraic_connectivity(&path(m + 11))?.mu;
    let (mu_44, mu_00) = (mus[4][4], mus[0][0]);
    let holds = path_bound - SANDWICH_SLACK <= mu_44
        && mu_44 <= min_ij + SANDWICH_SLACK
        && max_ij <= mu_00 + SANDWICH_SLACK;
    Ok(SandwichRow { m, path_bound, mu_44, mu_00, min_ij, max_ij, holds })
}

pub fn verify_sandwich(ms: &[usize]) -> Result<Vec<SandwichRow>, SpectraError> {
    ms.par_iter().map(|&m| sandwich_row(m)).collect()
}

/// `(4/25) μ(P_h)` from the closed form.
pub fn path_bound(h: usize) -> f64 {
    4.0 / 25.0 * path_mu(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h00_vector_under_closed_form() {
        let ms: Vec<usize> = (1..=50).collect();
        for row in verify_h00(&ms).unwrap() {
            assert!(row.holds, "{row:?}");
        }
        assert!(closed_form_f(6) < 0.046);
    }

    #[test]
    fn sandwich_small_m() {
        for row in verify_sandwich(&[1, 2, 3]).unwrap() {
            assert!(row.holds, "{row:?}");
            assert!((row.path_bound - path_bound(row.m + 11)).abs() < 1e-12);
            assert!(row.mu_00 <= closed_form_f(row.m) + 1e-12);
        }
    }
}
