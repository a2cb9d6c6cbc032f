//! Acceptance criteria 1 to 10, one PASS/FAIL line each.

mod common;

use specgap::blocks::{block, build_g_n, build_h};
use specgap::certify::{enumerate_quartic_graphs, find_minimal, verify_asymptotic, verify_table2, EnumerationOptions};
use specgap::graph::named::path;
use specgap::graph::CanonicalCert;
use specgap::polyroots::{verify_root_claims, verify_sign_statements};
use specgap::replace::{
    check_fit, compare_graphs, find_fit_partition, run_lemma_experiment, standard_instances, HypothesisStatus,
    LEMMA_NAMES, FITTING_PAIRS,
};
use specgap::spectra::{
    algebraic_connectivity, assembly_spectrum, closed_form_f, path_mu, verify_h00, verify_sandwich,
};
use specgap::structure::{fiedler_structure, mirror_map, Tolerances, DEGENERATE_GAP};
use std::collections::HashSet;
use std::io::Write;
use std::time::{Duration, Instant};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

/// Runs one criterion and writes its line straight to the terminal so it
/// shows up even when test output is captured.
fn run(id: u32, name: &str, limit: Duration, check: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let o = check();
    let took = start.elapsed();
    let passed = o.passed && took <= limit;
    let line = format!(
        "criterion {id:>2} {name}: {} ({}; {:.2}s of {}s allowed)\n",
        if passed { "PASS" } else { "FAIL" },
        o.detail,
        took.as_secs_f64(),
        limit.as_secs()
    );
    let _ = std::io::stderr().write_all(line.as_bytes());
    passed
}

fn table2() -> Outcome {
    let rep = verify_table2().unwrap();
    let ceilings: Vec<String> =
        rep.rows.iter().filter(|r| r.ceiling.is_some()).map(|r| format!("n={} mu={:.6}", r.n, r.mu)).collect();
    outcome(rep.rows.len() == 30 && rep.passes(), format!("30 rows decreasing, ceilings at {}", ceilings.join(", ")))
}

fn path_closed_form() -> Outcome {
    let worst = (2..=100)
        .map(|h| (algebraic_connectivity(&path(h)).unwrap().mu - path_mu(h)).abs())
        .fold(0.0, f64::max);
    outcome(worst <= 1e-10, format!("largest deviation {worst:.2e}"))
}

fn h00_vector() -> Outcome {
    let ms: Vec<usize> = (1..=50).collect();
    let rows = verify_h00(&ms).unwrap();
    let all = rows.iter().all(|r| r.holds);
    let f6 = closed_form_f(6);
    outcome(all && f6 < 0.046, format!("m = 1..50 all within bound: {all}; f(6) = {f6:.6}"))
}

fn sandwich() -> Outcome {
    let ms: Vec<usize> = (1..=12).collect();
    let rows = verify_sandwich(&ms).unwrap();
    let failing: Vec<usize> = rows.iter().filter(|r| !r.holds).map(|r| r.m).collect();
    outcome(failing.is_empty(), format!("m = 1..12, failing m: {failing:?}"))
}

fn asymptotics() -> Outcome {
    let rows = verify_asymptotic(&[100, 500]).unwrap();
    let (r100, r500) = (rows[0].ratio, rows[1].ratio);
    let ok = (0.90..=1.10).contains(&r500) && (r500 - 1.0).abs() < (r100 - 1.0).abs();
    outcome(ok, format!("ratio at 100 = {r100:.6}, at 500 = {r500:.6}"))
}

fn fiedler_structure_check() -> Outcome {
    let mut checked = 0;
    let mut skipped = Vec::new();
    let mut failing = Vec::new();
    for n in 11..=100 {
        let a = build_g_n(n).unwrap();
        let r = assembly_spectrum(&a).unwrap();
        if r.gap23 <= DEGENERATE_GAP {
            skipped.push(n);
            continue;
        }
        let rep = fiedler_structure(&a.graph, &r.fiedler, &a.cell_order, Tolerances::default(), None).unwrap();
        checked += 1;
        if !rep.passes() {
            failing.push(format!("G_{n}"));
        }
    }
    let mut skew = 0;
    for m in 1..=12 {
        for i in 0..=4 {
            let a = build_h(m, i, i).unwrap();
            let r = assembly_spectrum(&a).unwrap();
            if r.gap23 <= DEGENERATE_GAP {
                continue;
            }
            let sigma = mirror_map(&a).unwrap();
            let rep =
                fiedler_structure(&a.graph, &r.fiedler, &a.cell_order, Tolerances::default(), Some(&sigma)).unwrap();
            skew += 1;
            if rep.skew_symmetric != Some(true) {
                failing.push(format!("H_{i}{i}({m})"));
            }
        }
    }
    outcome(
        failing.is_empty(),
        format!("{checked} G_n checked, degenerate skipped {skipped:?}, {skew} palindromes skew-checked, failing {failing:?}"),
    )
}

fn fits() -> Outcome {
    let mut failing = Vec::new();
    for (i, j) in FITTING_PAIRS {
        let d = block(&format!("D_{i}")).unwrap();
        let dp = block(&format!("D_{j}")).unwrap();
        let ok = match find_fit_partition(&d, &dp, 6).unwrap() {
            Some(w) => check_fit(&d, &dp, &w).unwrap(),
            None => false,
        };
        if !ok {
            failing.push(format!("D_{j} into D_{i}"));
        }
    }
    outcome(failing.is_empty(), format!("{} pairs, failing {failing:?}", FITTING_PAIRS.len()))
}

fn lemmas() -> Outcome {
    let comparisons = compare_graphs().unwrap();
    let min_margin = comparisons.iter().map(|c| c.margin).fold(f64::INFINITY, f64::min);
    let mut verified = 0;
    let mut bad = Vec::new();
    for name in LEMMA_NAMES {
        for host in standard_instances(name).unwrap() {
            let r = run_lemma_experiment(name, &host).unwrap();
            if r.hypothesis == HypothesisStatus::Verified {
                verified += 1;
                if r.criterion.is_nan() || r.criterion >= 0.0 {
                    bad.push(format!("{name} on {}", r.host));
                }
            }
        }
    }
    outcome(
        min_margin > 1e-8 && bad.is_empty(),
        format!(
            "{} direct comparisons, smallest margin {min_margin:.4e}; {verified} verified instances, non-negative criterion on {bad:?}",
            comparisons.len()
        ),
    )
}

fn roots() -> Outcome {
    let claims = verify_root_claims();
    let signs = verify_sign_statements();
    let ok = claims.len() == 8 && claims.iter().all(|c| c.holds) && signs.iter().all(|s| s.holds);
    outcome(ok, format!("{} root claims, {} sign statements", claims.len(), signs.len()))
}

fn census() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for n in 5..=9 {
        let ours: HashSet<CanonicalCert> =
            enumerate_quartic_graphs(n, EnumerationOptions::default()).unwrap().into_iter().map(|(c, _)| c).collect();
        let same = ours == common::complement_oracle(n);
        ok &= same;
        parts.push(format!("n={n}: {} {}", ours.len(), if same { "=oracle" } else { "!=oracle" }));
    }
    for n in 11..=13 {
        let rep = find_minimal(n).unwrap();
        ok &= rep.certified();
        parts.push(format!("n={n}: {} graphs, unique G_n minimizer {}", rep.census_size, rep.certified()));
    }
    outcome(ok, parts.join("; "))
}

#[test]
fn acceptance_criteria() {
    let results = [
        run(1, "mu(G_n) decrease and ceilings", Duration::from_secs(10), table2),
        run(2, "path closed form", Duration::from_secs(1), path_closed_form),
        run(3, "H_00 test vector", Duration::from_secs(5), h00_vector),
        run(4, "sandwich", Duration::from_secs(60), sandwich),
        run(5, "asymptotics", Duration::from_secs(300), asymptotics),
        run(6, "Fiedler structure", Duration::from_secs(300), fiedler_structure_check),
        run(7, "end-block fits", Duration::from_secs(60), fits),
        run(8, "replacement lemmas", Duration::from_secs(300), lemmas),
        run(9, "polynomial roots", Duration::from_secs(1), roots),
        run(10, "census certification", Duration::from_secs(1800), census),
    ];
    let failed: Vec<usize> = (0..results.len()).filter(|&i| !results[i]).map(|i| i + 1).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
