//! Exhaustive enumeration of connected quartic graphs at small orders,
//! minimality certification of `G_n`, and batch checks of `μ(G_n)` over a
//! range of orders.

use crate::blocks::{assemble_names, build_g_n, BlockError};
use crate::graph::{canonical_cert, is_connected, make_graph, CanonicalCert, Graph};
use crate::spectra::{algebraic_connectivity, assembly_spectrum, SpectraError};
use crate::structure::{fiedler_structure, verdict, StructureError, Tolerances, Verdict};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::f64::consts::PI;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};
use thiserror::Error;

/// Smallest order with a quartic graph.
pub const MIN_ORDER: usize = 5;
/// Largest order the enumerator accepts.
pub const MAX_ORDER: usize = 14;
/// Entries whose `μ` differ by less than this are co-minimal.
pub const TIE_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Error)]
pub enum CertifyError {
    #[error("order {0} is outside the enumerable range {MIN_ORDER}..={MAX_ORDER}")]
    OrderCapExceeded(usize),
    #[error("enumeration at order {0} needs the explicit opt-in")]
    OptInRequired(usize),
    #[error("enumeration stopped after {0:?}")]
    TimeCapExceeded(Duration),
    #[error(transparent)]
    Block(#[from] BlockError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

#[derive(Clone, Debug)]
pub struct CensusEntry {
    pub cert: CanonicalCert,
    pub graph: Graph,
    pub mu: f64,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct EnumerationOptions {
    /// Abort once this much wall time has elapsed.
    pub cap: Option<Duration>,
    /// Permit the largest order, which takes far longer than the others.
    pub allow_max_order: bool,
}

/// Partial graph on at most [`MAX_ORDER`] vertices as neighbour bitmasks.
#[derive(Clone)]
struct State {
    adj: Vec<u16>,
}

impl State {
    fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    fn graph(&self) -> Graph {
        let n = self.adj.len();
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).filter(move |&v| self.adj[u] >> v & 1 == 1).map(move |v| (u, v))).collect();
        make_graph(n, &edges).expect("state edges are in range")
    }

    /// Vertex set of the component containing `v`.
    fn component(&self, v: usize) -> u16 {
        let mut seen = 1u16 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Completions of the non-full vertex of largest degree (lowest index
    /// on ties) by edges to other non-full vertices. Every edge of a state
    /// has a full endpoint, so each quartic graph arises from the empty
    /// graph along some path of such completions.
    fn children(&self) -> Vec<State> {
        let n = self.adj.len();
        let open: Vec<usize> = (0..n).filter(|&v| self.degree(v) < 4).collect();
        let Some(&v) = open.iter().max_by_key(|&&v| (self.degree(v), std::cmp::Reverse(v))) else {
            return Vec::new();
        };
        let need = 4 - self.degree(v);
        let others: Vec<usize> = open.iter().copied().filter(|&u| u != v).collect();
        let mut out = Vec::new();
        for_each_subset(&others, need, &mut |chosen| {
            let mut child = self.clone();
            for &u in chosen {
                child.adj[v] |= 1 << u;
                child.adj[u] |= 1 << v;
            }
            if child.viable(v) {
                out.push(child);
            }
        });
        out
    }

    /// Rejects states that cannot complete to a connected quartic graph:
    /// a saturated component short of the whole vertex set, or a non-full
    /// vertex with too few non-full partners left.
    fn viable(&self, v: usize) -> bool {
        let n = self.adj.len();
        let comp = self.component(v);
        let all = if n == 16 { u16::MAX } else { (1u16 << n) - 1 };
        let mut c = comp;
        let mut saturated = true;
        while c != 0 {
            let u = c.trailing_zeros() as usize;
            c &= c - 1;
            if self.degree(u) < 4 {
                saturated = false;
                break;
            }
        }
        if saturated && comp != all {
            return false;
        }
        let open = (0..n).filter(|&u| self.degree(u) < 4).count();
        (0..n).all(|u| self.degree(u) == 4 || 4 - self.degree(u) < open)
    }
}

fn for_each_subset(items: &[usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(items: &[usize], k: usize, start: usize, chosen: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if chosen.len() == k {
            f(chosen);
            return;
        }
        for i in start..=items.len() - (k - chosen.len()) {
            chosen.push(items[i]);
            rec(items, k, i + 1, chosen, f);
            chosen.pop();
        }
    }
    if k <= items.len() {
        rec(items, k, 0, &mut Vec::with_capacity(k), f);
    }
}

/// One representative per isomorphism class of connected quartic graphs
/// on `n` vertices, without spectra, ordered by certificate.
pub fn enumerate_quartic_graphs(n: usize, opts: EnumerationOptions) -> Result<Vec<(CanonicalCert, Graph)>, CertifyError> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&n) {
        return Err(CertifyError::OrderCapExceeded(n));
    }
    if n == MAX_ORDER && !opts.allow_max_order {
        return Err(CertifyError::OptInRequired(n));
    }
    let start = Instant::now();
    let expired = AtomicBool::new(false);
    let over = || match opts.cap {
        Some(cap) if start.elapsed() > cap => {
            expired.store(true, Ordering::Relaxed);
            true
        }
        _ => expired.load(Ordering::Relaxed),
    };
    let target = 2 * n;
    let empty = State { adj: vec![0; n] };
    let mut levels: BTreeMap<usize, HashMap<CanonicalCert, State>> = BTreeMap::new();
    levels.entry(0).or_default().insert(canonical_cert(&empty.graph()), empty);
    let mut done = Vec::new();
    while let Some((edges, level)) = levels.pop_first() {
        if edges == target {
            done = level.into_iter().map(|(cert, s)| (cert, s.graph())).collect();
            break;
        }
        let states: Vec<State> = level.into_values().collect();
        let children: Vec<(usize, CanonicalCert, State)> = states
            .par_iter()
            .flat_map_iter(|s| {
                if over() {
                    return Vec::new();
                }
                s.children()
                    .into_iter()
                    .map(|c| {
                        let g = c.graph();
                        (g.edge_count(), canonical_cert(&g), c)
                    })
                    .collect()
            })
            .collect();
        if expired.load(Ordering::Relaxed) {
            return Err(CertifyError::TimeCapExceeded(start.elapsed()));
        }
        for (e, cert, c) in children {
            levels.entry(e).or_default().entry(cert).or_insert(c);
        }
    }
    done.retain(|(_, g)| is_connected(g));
    done.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(done)
}

/// The census at order `n` with `μ` of every graph.
pub fn enumerate_quartic_with(n: usize, opts: EnumerationOptions) -> Result<Vec<CensusEntry>, CertifyError> {
    enumerate_quartic_graphs(n, opts)?
        .into_par_iter()
        .map(|(cert, graph)| {
            let mu = algebraic_connectivity(&graph)?.mu;
            Ok(CensusEntry { cert, graph, mu })
        })
        .collect()
}

pub fn enumerate_quartic(n: usize) -> Result<Vec<CensusEntry>, CertifyError> {
    enumerate_quartic_with(n, EnumerationOptions::default())
}

#[derive(Clone, Debug, Serialize)]
pub struct MinimalReport {
    pub n: usize,
    pub census_size: usize,
    pub min_mu: f64,
    /// Entries within [`TIE_TOLERANCE`] of the minimum, as graph6.
    pub minimal_graph6: Vec<String>,
    pub minimal_mu: Vec<f64>,
    /// Smallest `μ` among the remaining entries.
    pub runner_up_mu: Option<f64>,
    /// Whether `G_n` exists at this order and is isomorphic to the unique
    /// minimizer.
    pub matches_g_n: bool,
    /// Structure verdict of the Fiedler vector of `G_n` on its cells.
    pub structure: Option<Verdict>,
}

impl MinimalReport {
    pub fn unique(&self) -> bool {
        self.minimal_graph6.len() == 1
    }

    pub fn certified(&self) -> bool {
        self.unique() && self.matches_g_n && self.structure == Some(Verdict::Pass)
    }
}

pub fn minimal_from_census(n: usize, census: &[CensusEntry]) -> Result<MinimalReport, CertifyError> {
    let min_mu = census.iter().map(|e| e.mu).fold(f64::INFINITY, f64::min);
    let (minimal, rest): (Vec<&CensusEntry>, Vec<&CensusEntry>) =
        census.iter().partition(|e| (e.mu - min_mu).abs() < TIE_TOLERANCE);
    let runner_up_mu = rest.iter().map(|e| e.mu).reduce(f64::min);
    let (matches_g_n, structure) = if n >= 11 {
        let a = build_g_n(n)?;
        let cert = canonical_cert(&a.graph);
        let r = assembly_spectrum(&a)?;
        let rep = fiedler_structure(&a.graph, &r.fiedler, &a.cell_order, Tolerances::default(), None)?;
        (minimal.len() == 1 && minimal[0].cert == cert, Some(verdict(&rep, r.gap23)))
    } else {
        (false, None)
    };
    Ok(MinimalReport {
        n,
        census_size: census.len(),
        min_mu,
        minimal_graph6: minimal.iter().map(|e| crate::graph::to_graph6(&e.graph)).collect(),
        minimal_mu: minimal.iter().map(|e| e.mu).collect(),
        runner_up_mu,
        matches_g_n,
        structure,
    })
}

pub fn find_minimal(n: usize) -> Result<MinimalReport, CertifyError> {
    minimal_from_census(n, &enumerate_quartic(n)?)
}

/// Orders where `μ(G_n)` is checked against a rounded-up ceiling.
pub const MU_CEILINGS: [(usize, f64); 5] = [(11, 0.355), (13, 0.268), (18, 0.129), (21, 0.091), (26, 0.059)];

#[derive(Clone, Debug, Serialize)]
pub struct CeilingRow {
    pub n: usize,
    pub mu: f64,
    /// Set on rows with a ceiling: the value and whether `μ` rounds up to it.
    pub ceiling: Option<f64>,
    pub ceiling_ok: Option<bool>,
    /// `μ` is strictly below the previous row.
    pub decreasing: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CeilingReport {
    pub rows: Vec<CeilingRow>,
}

impl CeilingReport {
    pub fn passes(&self) -> bool {
        self.rows.iter().all(|r| r.decreasing && r.ceiling_ok != Some(false))
    }
}

/// `x` rounded up to three decimals.
pub fn ceil3(x: f64) -> f64 {
    (x * 1000.0 - 1e-9).ceil() / 1000.0
}

pub fn verify_table2() -> Result<CeilingReport, CertifyError> {
    let mus: Vec<(usize, f64)> = (11..=40)
        .into_par_iter()
        .map(|n| Ok((n, assembly_spectrum(&build_g_n(n)?)?.mu)))
        .collect::<Result<_, CertifyError>>()?;
    let rows = mus
        .iter()
        .enumerate()
        .map(|(i, &(n, mu))| {
            let ceiling = MU_CEILINGS.iter().find(|c| c.0 == n).map(|c| c.1);
            CeilingRow {
                n,
                mu,
                ceiling,
                ceiling_ok: ceiling.map(|c| (ceil3(mu) - c).abs() < 1e-12),
                decreasing: i == 0 || mu < mus[i - 1].1,
            }
        })
        .collect();
    Ok(CeilingReport { rows })
}

#[derive(Clone, Debug, Serialize)]
pub struct AsymptoticRow {
    pub n: usize,
    pub mu: f64,
    /// `n² μ / (4π²)`.
    pub ratio: f64,
    /// `τ · 2π² / (3n²)` with `τ = 4 / μ`.
    pub tau_ratio: f64,
    /// `μ / (8π² / (3n²))`.
    pub lower_ratio: f64,
}

pub fn asymptotic_row(n: usize) -> Result<AsymptoticRow, CertifyError> {
    let mu = assembly_spectrum(&build_g_n(n)?)?.mu;
    let n2 = (n * n) as f64;
    Ok(AsymptoticRow {
        n,
        mu,
        ratio: n2 * mu / (4.0 * PI * PI),
        tau_ratio: 4.0 / mu * 2.0 * PI * PI / (3.0 * n2),
        lower_ratio: mu / (8.0 * PI * PI / (3.0 * n2)),
    })
}

pub fn verify_asymptotic(ns: &[usize]) -> Result<Vec<AsymptoticRow>, CertifyError> {
    ns.par_iter().map(|&n| asymptotic_row(n)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct EndBlockComparison {
    pub blocks: Vec<String>,
    pub n: usize,
    pub mu: f64,
    pub mu_g_n: f64,
    /// Set when a census at this order was supplied.
    pub in_census: Option<bool>,
}

/// `μ` of the path-like graph with the `D_3` end block on the left and the
/// mirrored `D_j` on the right, next to `μ(G_n)` at the same order.
pub fn d3_comparison(j: usize, census: Option<&[CensusEntry]>) -> Result<EndBlockComparison, CertifyError> {
    let right = format!("~D_{j}");
    let a = assemble_names(&["D_3", &right])?;
    let n = a.n();
    let mu = assembly_spectrum(&a)?.mu;
    let mu_g_n = assembly_spectrum(&build_g_n(n)?)?.mu;
    let in_census = census.map(|c| {
        let cert = canonical_cert(&a.graph);
        c.iter().any(|e| e.cert == cert)
    });
    Ok(EndBlockComparison { blocks: a.block_names(), n, mu, mu_g_n, in_census })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_k_regular;
    use std::collections::HashSet;

    fn certs(n: usize) -> Vec<CanonicalCert> {
        enumerate_quartic_graphs(n, EnumerationOptions::default()).unwrap().into_iter().map(|(c, _)| c).collect()
    }

    #[test]
    fn small_orders_by_hand() {
        assert_eq!(certs(5), vec![canonical_cert(&crate::graph::named::complete(5))]);
        assert_eq!(certs(6).len(), 1);
        assert_eq!(certs(7).len(), 2);
    }

    #[test]
    fn entries_are_connected_quartic_and_distinct() {
        for n in 5..=10 {
            let census = enumerate_quartic(n).unwrap();
            let distinct: HashSet<&CanonicalCert> = census.iter().map(|e| &e.cert).collect();
            assert_eq!(distinct.len(), census.len());
            for e in &census {
                assert!(is_k_regular(&e.graph, 4) && is_connected(&e.graph));
                assert_eq!(canonical_cert(&e.graph), e.cert);
                assert!(e.mu > 0.0);
            }
        }
    }

    #[test]
    fn minimizer_at_eleven_and_twelve() {
        for n in [11, 12] {
            let rep = find_minimal(n).unwrap();
            assert!(rep.certified(), "{rep:?}");
            assert!(rep.runner_up_mu.unwrap() - rep.min_mu > TIE_TOLERANCE);
        }
    }

    #[test]
    fn order_cap_and_opt_in() {
        assert!(matches!(enumerate_quartic(4), Err(CertifyError::OrderCapExceeded(4))));
        assert!(matches!(enumerate_quartic(15), Err(CertifyError::OrderCapExceeded(15))));
        assert!(matches!(enumerate_quartic(14), Err(CertifyError::OptInRequired(14))));
    }

    #[test]
    fn table2_rows() {
        let rep = verify_table2().unwrap();
        assert_eq!(rep.rows.len(), 30);
        assert!(rep.passes(), "{rep:?}");
        let mu = |n: usize| rep.rows.iter().find(|r| r.n == n).unwrap().mu;
        assert!(mu(11) > 0.354 && mu(11) <= 0.355);
        assert!(mu(26) > 0.058 && mu(26) <= 0.059);
        assert!((mu(13) - 0.267949).abs() < 1e-6);
        assert!((mu(40) - 0.024853).abs() < 1e-6);
    }

    #[test]
    fn rounding_up() {
        assert_eq!(ceil3(0.354249), 0.355);
        assert_eq!(ceil3(0.355), 0.355);
        assert_eq!(ceil3(0.0581), 0.059);
    }

    #[test]
    fn asymptotic_ratio_approaches_one() {
        let rows = verify_asymptotic(&[100, 200]).unwrap();
        assert!((rows[1].ratio - 1.0).abs() < (rows[0].ratio - 1.0).abs());
        for r in &rows {
            assert!(r.tau_ratio < 1.0 && r.lower_ratio > 1.0);
        }
    }

    #[test]
    fn d3_end_block_order() {
        let c = d3_comparison(0, None).unwrap();
        assert_eq!(c.n, 14);
        assert!(c.mu > 0.0 && c.mu_g_n > 0.0 && c.in_census.is_none());
    }
}
