//! Command-line front end: every verification as a subcommand producing a
//! deterministic text report and an exit status.

use crate::blocks::{assemble_names, block, build_g_n, build_h, Assembly, BlockError};
use crate::certify::{
    d3_comparison, enumerate_quartic_with, minimal_from_census, verify_asymptotic, verify_table2, CertifyError,
    EnumerationOptions, MAX_ORDER,
};
use crate::graph::{from_graph6, to_graph6, GraphError};
use crate::polyroots::{verify_root_claims, verify_sign_statements};
use crate::replace::{
    check_fit, compare_graphs, find_fit_partition, run_lemma_experiment, standard_instances, HypothesisStatus,
    ReplaceError, LEMMA_NAMES, FITTING_PAIRS,
};
use crate::spectra::{
    algebraic_connectivity, algebraic_connectivity_with_cells, verify_h00, verify_sandwich, SpectraError,
};
use crate::structure::{fiedler_structure, mirror_map, verdict, StructureError, Tolerances, Verdict};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;
use std::fmt::Write as _;
use std::time::Duration;
use thiserror::Error;

/// Environment variable that fixes the worker thread count.
pub const THREADS_ENV: &str = "SPECGAP_THREADS";
/// Version tag written above every CSV header.
pub const CSV_VERSION: &str = "v1";

#[derive(Debug, Parser)]
#[command(name = "specgap", version, about = "Spectral-gap checks for connected quartic graphs")]
pub struct Cli {
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    /// Worker threads; the SPECGAP_THREADS environment variable takes precedence.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Graph6,
}

/// One graph, chosen by family parameters, a block sequence or graph6.
#[derive(Debug, Args)]
pub struct GraphSpec {
    /// The family member `G_n`.
    #[arg(long)]
    pub gn: Option<usize>,
    /// `H_{i,j}(m)` given as `m,i,j`.
    #[arg(long, value_delimiter = ',')]
    pub h: Option<Vec<usize>>,
    /// Comma-separated block names, e.g. `D_0,M_0,~D_1`.
    #[arg(long, value_delimiter = ',')]
    pub blocks: Option<Vec<String>>,
    /// A graph in graph6.
    #[arg(long)]
    pub graph6: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a family member and print it.
    Family {
        #[command(flatten)]
        spec: GraphSpec,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
    },
    /// Algebraic connectivity of one graph, or of `G_n` over a range as CSV.
    Mu {
        #[command(flatten)]
        spec: GraphSpec,
        /// Inclusive range `a..b` of orders `n` for `G_n`.
        #[arg(long)]
        range: Option<String>,
    },
    /// Fiedler-vector structure on the structural cells of an assembly.
    Structure {
        #[command(flatten)]
        spec: GraphSpec,
        #[arg(long, default_value_t = Tolerances::default().spread)]
        spread: f64,
        #[arg(long, default_value_t = Tolerances::default().margin)]
        margin: f64,
    },
    #[command(subcommand)]
    Verify(Verify),
    /// Exhaustive census of connected quartic graphs and its minimizer.
    Certify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cap_seconds: Option<u64>,
        /// Permit the slow largest order.
        #[arg(long)]
        allow_14: bool,
    },
    /// Same as `verify asymptotic`.
    Asymptotic {
        #[arg(long, value_delimiter = ',', default_values_t = [100, 200, 500])]
        n: Vec<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum Verify {
    /// `μ(G_n)` for `n = 11..40`: strict decrease and rounded-up ceilings.
    Table2,
    /// The cosine test vector on `H_{0,0}(m)` against its closed form.
    H00 {
        #[arg(long, default_value_t = 50)]
        m_max: usize,
    },
    /// `(4/25) μ(P_{m+11}) ≤ μ(H_{4,4}) ≤ μ(H_{i,j}) ≤ μ(H_{0,0})`.
    Sandwich {
        #[arg(long, default_value_t = 12)]
        m_max: usize,
    },
    /// A replacement lemma on its standard hosts, or `all`.
    Lemma { name: String },
    /// Direct `μ` comparisons where lemma hypotheses fail at small order.
    Comparisons,
    /// Quoted polynomial roots and sign statements.
    Roots,
    /// Fit witnesses for every fitting end-block pair.
    Fits,
    /// `n² μ(G_n) / (4π²)` and the relaxation-time comparison.
    Asymptotic {
        #[arg(long, value_delimiter = ',', default_values_t = [100, 200, 500])]
        n: Vec<usize>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Block(#[from] BlockError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Replace(#[from] ReplaceError),
    #[error(transparent)]
    Certify(#[from] CertifyError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Bad input is a usage error; anything else is a failed check.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Graph(_) | CliError::Block(_) => 2,
            CliError::Replace(ReplaceError::UnknownLemma(_) | ReplaceError::UnknownFormula(_)) => 2,
            CliError::Certify(CertifyError::OrderCapExceeded(_) | CertifyError::OptInRequired(_)) => 2,
            _ => 1,
        }
    }
}

/// A finished report and whether every check in it passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub passed: bool,
}

/// `x` with 12 significant digits, in plain notation where that stays short.
pub fn fmt_float(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let e = x.abs().log10().floor() as i32;
    if (-5..12).contains(&e) {
        let s = format!("{:.*}", (11 - e).max(0) as usize, x);
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        format!("{x:.11e}")
    }
}

fn round_json(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().expect("checked f64");
            fmt_float(x).parse::<f64>().ok().and_then(serde_json::Number::from_f64).map_or(Value::Null, Value::Number)
        }
        Value::Array(a) => Value::Array(a.into_iter().map(round_json).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, round_json(v))).collect()),
        other => other,
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("reports serialize");
    let mut s = serde_json::to_string_pretty(&round_json(v)).expect("values serialize");
    s.push('\n');
    s
}

struct Csv {
    text: String,
}

impl Csv {
    fn new(table: &str, header: &[&str]) -> Csv {
        Csv { text: format!("# specgap {table} {CSV_VERSION}\n{}\n", header.join(",")) }
    }

    fn row(&mut self, cells: &[String]) {
        let _ = writeln!(self.text, "{}", cells.join(","));
    }
}

fn status(ok: bool) -> String {
    if ok { "PASS" } else { "FAIL" }.into()
}

fn assembly_of(spec: &GraphSpec) -> Result<Option<Assembly>, CliError> {
    let chosen = [spec.gn.is_some(), spec.h.is_some(), spec.blocks.is_some(), spec.graph6.is_some()];
    if chosen.iter().filter(|&&c| c).count() != 1 {
        return Err(CliError::Usage("give exactly one of --gn, --h, --blocks, --graph6".into()));
    }
    Ok(if let Some(n) = spec.gn {
        Some(build_g_n(n)?)
    } else if let Some(h) = &spec.h {
        let &[m, i, j] = h.as_slice() else {
            return Err(CliError::Usage("--h takes three values m,i,j".into()));
        };
        Some(build_h(m, i, j)?)
    } else if let Some(names) = &spec.blocks {
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        Some(assemble_names(&names)?)
    } else {
        None
    })
}

fn parse_range(text: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("range `{text}` is not of the form a..b"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let (a, b): (usize, usize) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn nonempty(ms: &[usize], what: &str) -> Result<(), CliError> {
    if ms.is_empty() || ms.contains(&0) {
        return Err(CliError::Usage(format!("{what} must be a nonempty list of positive values")));
    }
    Ok(())
}

pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Family { spec, format } => family(spec, *format),
        Command::Mu { spec, range } => mu(spec, range.as_deref()),
        Command::Structure { spec, spread, margin } => structure(spec, Tolerances { spread: *spread, margin: *margin }),
        Command::Verify(v) => verify(v),
        Command::Certify { n, cap_seconds, allow_14 } => certify(*n, *cap_seconds, *allow_14),
        Command::Asymptotic { n } => asymptotic(n),
    }
}

fn family(spec: &GraphSpec, format: Format) -> Result<Report, CliError> {
    let a = assembly_of(spec)?.ok_or_else(|| CliError::Usage("family needs --gn, --h or --blocks".into()))?;
    let text = match format {
        Format::Graph6 => format!("{}\n", to_graph6(&a.graph)),
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                blocks: Vec<String>,
                n: usize,
                edges: &'a [(usize, usize)],
                cells: &'a [Vec<usize>],
                graph6: String,
            }
            json(&Out {
                blocks: a.block_names(),
                n: a.n(),
                edges: a.graph.edges(),
                cells: &a.cell_order,
                graph6: to_graph6(&a.graph),
            })
        }
        Format::Csv => {
            let mut csv = Csv::new("family-edges", &["u", "v"]);
            for &(u, v) in a.graph.edges() {
                csv.row(&[u.to_string(), v.to_string()]);
            }
            csv.text
        }
    };
    Ok(Report { text, passed: true })
}

fn mu(spec: &GraphSpec, range: Option<&str>) -> Result<Report, CliError> {
    if let Some(range) = range {
        let (a, b) = parse_range(range)?;
        let mut csv = Csv::new("mu-range", &["n", "mu", "gap23", "residual"]);
        for n in a..=b {
            let g = build_g_n(n)?;
            let r = algebraic_connectivity_with_cells(&g.graph, &g.cell_order)?;
            csv.row(&[n.to_string(), fmt_float(r.mu), fmt_float(r.gap23), fmt_float(r.residual)]);
        }
        return Ok(Report { text: csv.text, passed: true });
    }
    let r = match assembly_of(spec)? {
        Some(a) => algebraic_connectivity_with_cells(&a.graph, &a.cell_order)?,
        None => algebraic_connectivity(&from_graph6(spec.graph6.as_deref().expect("one spec given"))?)?,
    };
    Ok(Report { text: json(&r), passed: true })
}

fn structure(spec: &GraphSpec, tol: Tolerances) -> Result<Report, CliError> {
    if !(tol.spread > 0.0 && tol.margin > 0.0) {
        return Err(CliError::Usage("tolerances must be positive".into()));
    }
    let a = assembly_of(spec)?.ok_or_else(|| CliError::Usage("structure needs --gn, --h or --blocks".into()))?;
    let r = algebraic_connectivity_with_cells(&a.graph, &a.cell_order)?;
    let mirror = mirror_map(&a).ok();
    let rep = fiedler_structure(&a.graph, &r.fiedler, &a.cell_order, tol, mirror.as_deref())?;
    let v = verdict(&rep, r.gap23);
    #[derive(Serialize)]
    struct Out<'a> {
        blocks: Vec<String>,
        mu: f64,
        gap23: f64,
        verdict: Verdict,
        report: &'a crate::structure::FiedlerStructureReport,
    }
    Ok(Report {
        text: json(&Out { blocks: a.block_names(), mu: r.mu, gap23: r.gap23, verdict: v, report: &rep }),
        passed: v != Verdict::Fail,
    })
}

fn verify(v: &Verify) -> Result<Report, CliError> {
    match v {
        Verify::Table2 => {
            let rep = verify_table2()?;
            let mut csv = Csv::new("table2", &["n", "mu", "ceil3", "ceiling", "decreasing", "status"]);
            for r in &rep.rows {
                let ok = r.decreasing && r.ceiling_ok != Some(false);
                csv.row(&[
                    r.n.to_string(),
                    fmt_float(r.mu),
                    fmt_float(crate::certify::ceil3(r.mu)),
                    r.ceiling.map(fmt_float).unwrap_or_default(),
                    r.decreasing.to_string(),
                    status(ok),
                ]);
            }
            Ok(Report { text: csv.text, passed: rep.passes() })
        }
        Verify::H00 { m_max } => {
            let ms: Vec<usize> = (1..=*m_max).collect();
            nonempty(&ms, "m range")?;
            let rows = verify_h00(&ms)?;
            let f6 = crate::spectra::closed_form_f(6);
            let mut csv = Csv::new("h00", &["m", "rayleigh", "f", "dot_one", "status"]);
            for r in &rows {
                csv.row(&[r.m.to_string(), fmt_float(r.rayleigh), fmt_float(r.f), fmt_float(r.dot_one), status(r.holds)]);
            }
            let _ = writeln!(csv.text, "# f(6) = {} < 0.046: {}", fmt_float(f6), status(f6 < 0.046));
            Ok(Report { text: csv.text, passed: rows.iter().all(|r| r.holds) && f6 < 0.046 })
        }
        Verify::Sandwich { m_max } => {
            let ms: Vec<usize> = (1..=*m_max).collect();
            nonempty(&ms, "m range")?;
            let rows = verify_sandwich(&ms)?;
            let mut csv = Csv::new("sandwich", &["m", "path_bound", "mu_44", "min_ij", "max_ij", "mu_00", "status"]);
            for r in &rows {
                csv.row(&[
                    r.m.to_string(),
                    fmt_float(r.path_bound),
                    fmt_float(r.mu_44),
                    fmt_float(r.min_ij),
                    fmt_float(r.max_ij),
                    fmt_float(r.mu_00),
                    status(r.holds),
                ]);
            }
            Ok(Report { text: csv.text, passed: rows.iter().all(|r| r.holds) })
        }
        Verify::Lemma { name } => lemma(name),
        Verify::Comparisons => {
            let rows = compare_graphs()?;
            let mut csv = Csv::new("comparisons", &["name", "larger", "smaller", "mu_larger", "mu_smaller", "margin", "status"]);
            let mut passed = true;
            for r in &rows {
                let ok = r.margin > 1e-8;
                passed &= ok;
                csv.row(&[
                    r.name.clone(),
                    r.larger.clone(),
                    r.smaller.clone(),
                    fmt_float(r.mu_larger),
                    fmt_float(r.mu_smaller),
                    fmt_float(r.margin),
                    status(ok),
                ]);
            }
            Ok(Report { text: csv.text, passed })
        }
        Verify::Roots => {
            let claims = verify_root_claims();
            let signs = verify_sign_statements();
            let mut csv = Csv::new(
                "roots",
                &["kind", "polynomial", "claimed_or_upper", "lo", "hi", "smallest_real", "real_roots", "status"],
            );
            for c in &claims {
                csv.row(&[
                    "root".into(),
                    c.polynomial.clone(),
                    fmt_float(c.claimed),
                    fmt_float(c.lo),
                    fmt_float(c.hi),
                    fmt_float(c.smallest_real),
                    c.real_root_count.to_string(),
                    status(c.holds),
                ]);
            }
            for s in &signs {
                csv.row(&[
                    "sign".into(),
                    s.polynomial.clone(),
                    fmt_float(s.upper),
                    String::new(),
                    String::new(),
                    String::new(),
                    s.roots_inside.to_string(),
                    status(s.holds),
                ]);
            }
            Ok(Report { text: csv.text, passed: claims.iter().all(|c| c.holds) && signs.iter().all(|s| s.holds) })
        }
        Verify::Fits => {
            let mut csv = Csv::new("fits", &["d", "d_prime", "pi", "pi_prime", "status"]);
            let mut passed = true;
            let cells = |p: &[Vec<usize>]| p.iter().map(|c| format!("{c:?}").replace(", ", " ")).collect::<Vec<_>>().join("|");
            for (i, j) in FITTING_PAIRS {
                let (d, dp) = (block(&format!("D_{i}"))?, block(&format!("D_{j}"))?);
                let w = find_fit_partition(&d, &dp, 6)?;
                let ok = match &w {
                    Some(w) => check_fit(&d, &dp, w)?,
                    None => false,
                };
                passed &= ok;
                let (pi, pp) = w.as_ref().map(|w| (cells(&w.pi), cells(&w.pi_prime))).unwrap_or_default();
                csv.row(&[format!("D_{i}"), format!("D_{j}"), pi, pp, status(ok)]);
            }
            Ok(Report { text: csv.text, passed })
        }
        Verify::Asymptotic { n } => asymptotic(n),
    }
}

fn lemma(name: &str) -> Result<Report, CliError> {
    let names: Vec<&str> = if name == "all" {
        LEMMA_NAMES.to_vec()
    } else if LEMMA_NAMES.contains(&name) {
        vec![name]
    } else {
        return Err(CliError::Replace(ReplaceError::UnknownLemma(name.to_string())));
    };
    #[derive(Serialize)]
    struct Entry {
        report: crate::replace::LemmaReport,
        status: String,
    }
    let mut entries = Vec::new();
    let mut passed = true;
    for name in names {
        let mut verified = 0;
        for host in standard_instances(name)? {
            let report = run_lemma_experiment(name, &host)?;
            let ok = match report.hypothesis {
                HypothesisStatus::Verified => {
                    verified += 1;
                    report.criterion < 0.0 && report.mu_after < report.mu_before
                }
                _ => true,
            };
            passed &= ok;
            entries.push(Entry { report, status: status(ok) });
        }
        passed &= verified > 0;
    }
    Ok(Report { text: json(&entries), passed })
}

fn asymptotic(ns: &[usize]) -> Result<Report, CliError> {
    nonempty(ns, "--n")?;
    let rows = verify_asymptotic(ns)?;
    let mut csv = Csv::new("asymptotic", &["n", "mu", "ratio", "tau_ratio", "lower_ratio"]);
    for r in &rows {
        csv.row(&[r.n.to_string(), fmt_float(r.mu), fmt_float(r.ratio), fmt_float(r.tau_ratio), fmt_float(r.lower_ratio)]);
    }
    let passed = rows.iter().all(|r| r.tau_ratio < 1.0);
    Ok(Report { text: csv.text, passed })
}

fn certify(n: usize, cap_seconds: Option<u64>, allow_14: bool) -> Result<Report, CliError> {
    let opts = EnumerationOptions { cap: cap_seconds.map(Duration::from_secs), allow_max_order: allow_14 };
    let census = enumerate_quartic_with(n, opts)?;
    let rep = minimal_from_census(n, &census)?;
    let d3 = if n == MAX_ORDER { Some(d3_comparison(0, Some(&census))?) } else { None };
    #[derive(Serialize)]
    struct Out {
        #[serde(flatten)]
        minimal: crate::certify::MinimalReport,
        unique: bool,
        certified: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        d3_end_block: Option<crate::certify::EndBlockComparison>,
    }
    let passed = n < 11 || rep.certified();
    Ok(Report { text: json(&Out { unique: rep.unique(), certified: rep.certified(), minimal: rep, d3_end_block: d3 }), passed })
}

/// Thread count from the environment, else from the flag.
pub fn thread_count(flag: Option<usize>) -> Result<Option<usize>, CliError> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t > 0 => Ok(Some(t)),
            _ => Err(CliError::Usage(format!("{THREADS_ENV} must be a positive integer, got `{v}`"))),
        },
        Err(_) => match flag {
            Some(0) => Err(CliError::Usage("--threads must be positive".into())),
            other => Ok(other),
        },
    }
}

/// Parses `args`, runs the command and writes the report; returns the exit
/// status: 0 when every check passes, 1 on a failed check, 2 on bad usage.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let run = || -> Result<Report, CliError> {
        if let Some(t) = thread_count(cli.threads)? {
            // A global pool can only be installed once per process.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
        }
        let report = execute(&cli)?;
        match &cli.out {
            Some(path) => std::fs::write(path, &report.text)?,
            None => print!("{}", report.text),
        }
        Ok(report)
    };
    match run() {
        Ok(r) if r.passed => 0,
        Ok(_) => {
            eprintln!("one or more checks failed");
            1
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_cert;

    fn run(args: &[&str]) -> Result<Report, CliError> {
        let cli = Cli::try_parse_from(std::iter::once("specgap").chain(args.iter().copied())).unwrap();
        execute(&cli)
    }

    #[test]
    fn float_formatting() {
        assert_eq!(fmt_float(0.354249382), "0.354249382");
        assert_eq!(fmt_float(1.0 / 3.0), "0.333333333333");
        assert_eq!(fmt_float(2.0), "2");
        assert_eq!(fmt_float(123456.0), "123456");
        assert_eq!(fmt_float(1e-9), "1.00000000000e-9");
        assert_eq!(fmt_float(0.0), "0");
    }

    #[test]
    fn family_graph6_line() {
        let r = run(&["family", "--gn", "11", "--format", "graph6"]).unwrap();
        assert_eq!(r.text.lines().count(), 1);
        assert_eq!(from_graph6(r.text.trim()).unwrap(), build_g_n(11).unwrap().graph);
    }

    #[test]
    fn table2_csv() {
        let r = run(&["verify", "table2"]).unwrap();
        assert!(r.passed);
        let rows: Vec<&str> = r.text.lines().skip(2).collect();
        assert_eq!(rows.len(), 30);
        assert!(rows.iter().all(|l| l.ends_with("PASS")));
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run(&["mu", "--gn", "13"]).unwrap();
        let b = run(&["mu", "--gn", "13"]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(&["mu"]).unwrap_err().exit_code(), 2);
        assert_eq!(run(&["mu", "--gn", "11", "--h", "1,0,0"]).unwrap_err().exit_code(), 2);
        assert_eq!(run(&["verify", "lemma", "E9"]).unwrap_err().exit_code(), 2);
        assert_eq!(run(&["certify", "--n", "14"]).unwrap_err().exit_code(), 2);
        assert_eq!(run(&["structure", "--gn", "11", "--spread", "0"]).unwrap_err().exit_code(), 2);
        assert_eq!(main_with(["specgap", "no-such-command"]), 2);
    }

    #[test]
    fn certify_eleven() {
        let r = run(&["certify", "--n", "11"]).unwrap();
        assert!(r.passed);
        let v: Value = serde_json::from_str(&r.text).unwrap();
        assert_eq!(v["census_size"], 265);
        assert_eq!(v["certified"], true);
        let g = from_graph6(v["minimal_graph6"][0].as_str().unwrap()).unwrap();
        assert_eq!(canonical_cert(&g), canonical_cert(&build_g_n(11).unwrap().graph));
    }

    #[test]
    fn structure_and_fits() {
        assert!(run(&["structure", "--h", "3,4,4"]).unwrap().passed);
        let fits = run(&["verify", "fits"]).unwrap();
        assert!(fits.passed);
        assert_eq!(fits.text.lines().count(), 2 + FITTING_PAIRS.len());
    }
}
