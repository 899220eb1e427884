use std::fmt::{self, Write as _};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use comax_core::embedding::{
    classify_surface, euler_genus_lower_bounds, find_triple_certificate, kmn_genus, planarity, Basis, GenusPair,
    KuratowskiKind, PlanarityVerdict, SurfaceClass, SurfaceReport, TripleCertificate,
};
use comax_core::export::{self as exporter, ExportFormat, ExportTarget};
use comax_core::hypergraph::{build_hypergraph, incidence_graph};
use comax_core::oracle::{check_cap, compare_with_oracle, OracleComparison};
use comax_core::report::{analyze_hypergraph, render_text};
use comax_core::structure::{analyze_structure, StructureReport};
use comax_core::GroupParam;
use rayon::prelude::*;
use serde::Serialize;

use crate::Output;

#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Io(PathBuf, std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(msg) => write!(f, "{msg}"),
            CliError::Io(path, e) => write!(f, "cannot write {}: {e}", path.display()),
        }
    }
}

impl From<comax_core::Error> for CliError {
    fn from(e: comax_core::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Invalid(_) => ExitCode::from(2),
            CliError::Io(..) => ExitCode::from(1),
        }
    }
}

/// Whether every compared property held.
pub enum Outcome {
    Agreement,
    Mismatch,
}

impl Outcome {
    fn from_agreement(ok: bool) -> Self {
        if ok {
            Outcome::Agreement
        } else {
            Outcome::Mismatch
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        match self {
            Outcome::Agreement => ExitCode::SUCCESS,
            Outcome::Mismatch => ExitCode::from(1),
        }
    }
}

type CliResult = Result<Outcome, CliError>;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

fn report_format(output: &Output) -> Result<Format, CliError> {
    match output.format.as_deref() {
        None | Some("json") => Ok(Format::Json),
        Some("text") => Ok(Format::Text),
        Some(other) => {
            Err(CliError::Invalid(format!("format {other:?} is not available here (expected json or text)")))
        }
    }
}

fn emit(output: &Output, content: &str) -> Result<(), CliError> {
    match &output.out {
        Some(path) => write_file(path, content),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn write_file(path: &Path, content: &str) -> Result<(), CliError> {
    fs::write(path, content).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialise");
    s.push('\n');
    s
}

fn param(n: u64) -> Result<GroupParam, CliError> {
    Ok(GroupParam::new(n)?)
}

fn range(from: u64, to: u64) -> Result<(), CliError> {
    if from < 2 {
        return Err(CliError::Invalid(format!("range must start at 2 or above, got {from}")));
    }
    if from > to {
        return Err(CliError::Invalid(format!("empty range {from}..={to}")));
    }
    Ok(())
}

/// Runs `f` on a pool sized by `COMAX_THREADS` (default: all cores).
fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(raw) = std::env::var("COMAX_THREADS") {
        let threads: usize = raw
            .trim()
            .parse()
            .ok()
            .filter(|&t| t >= 1)
            .ok_or_else(|| CliError::Invalid(format!("COMAX_THREADS must be a positive integer, got {raw:?}")))?;
        builder = builder.num_threads(threads);
    }
    let pool = builder.build().map_err(|e| CliError::Invalid(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(f))
}

pub fn analyze(n: u64, output: &Output) -> CliResult {
    let format = report_format(output)?;
    let g = param(n)?;
    let report = analyze_hypergraph(g, &build_hypergraph(g));
    let content = match format {
        Format::Json => json(&report),
        Format::Text => render_text(&report),
    };
    emit(output, &content)?;
    Ok(Outcome::Agreement)
}

const SWEEP_CHECKS: [&str; 7] = ["diameter", "girth", "chromatic", "star", "hypertree", "uniform", "surface"];

#[derive(Serialize)]
struct SurfaceSummary {
    class: SurfaceClass,
    basis: Basis,
    planar: bool,
    obstruction: Option<KuratowskiKind>,
    k37: Option<[usize; 3]>,
    euler_bounds: GenusPair,
    consistent: bool,
}

impl From<&SurfaceReport> for SurfaceSummary {
    fn from(r: &SurfaceReport) -> Self {
        SurfaceSummary {
            class: r.class,
            basis: r.basis,
            planar: r.planarity.is_planar(),
            obstruction: r.planarity.obstruction().map(|k| k.kind),
            k37: r.k37.as_ref().map(|c| c.vertices),
            euler_bounds: r.euler_bounds,
            consistent: r.consistent,
        }
    }
}

#[derive(Serialize)]
struct SweepRow {
    n: u64,
    structure: StructureReport,
    surface: SurfaceSummary,
    failed_checks: Vec<&'static str>,
    pass: bool,
}

#[derive(Serialize)]
struct SweepSummary {
    rows: usize,
    passed: usize,
    failed: usize,
}

#[derive(Serialize)]
struct SweepReport {
    from: u64,
    to: u64,
    checks: Vec<&'static str>,
    rows: Vec<SweepRow>,
    summary: SweepSummary,
}

fn parse_checks(checks: Option<Vec<String>>) -> Result<Vec<&'static str>, CliError> {
    let Some(names) = checks else {
        return Ok(SWEEP_CHECKS.to_vec());
    };
    let mut selected = Vec::new();
    for name in names {
        let name = name.trim();
        let known = SWEEP_CHECKS
            .iter()
            .find(|&&c| c == name)
            .ok_or_else(|| CliError::Invalid(format!("unknown check {name:?} (known: {})", SWEEP_CHECKS.join(","))))?;
        if !selected.contains(known) {
            selected.push(*known);
        }
    }
    if selected.is_empty() {
        return Err(CliError::Invalid("no checks selected".into()));
    }
    // Report in canonical order regardless of how they were listed.
    selected.sort_by_key(|c| SWEEP_CHECKS.iter().position(|k| k == c));
    Ok(selected)
}

fn sweep_row(n: u64, checks: &[&'static str]) -> SweepRow {
    let g = GroupParam::new(n).expect("range starts at 2");
    let h = build_hypergraph(g);
    let structure = analyze_structure(g, &h);
    let surface = classify_surface(g);
    let mut failed = Vec::new();
    for (name, ok) in structure.agreements() {
        if !ok && checks.contains(&name) {
            failed.push(name);
        }
    }
    if checks.contains(&"surface") && !surface.consistent {
        failed.push("surface");
    }
    SweepRow { n, structure, surface: SurfaceSummary::from(&surface), pass: failed.is_empty(), failed_checks: failed }
}

fn render_sweep_text(r: &SweepReport) -> String {
    let mut out = format!("sweep n = {}..={}  checks: {}\n", r.from, r.to, r.checks.join(","));
    let _ = writeln!(
        out,
        "{:>4}  {:>4}  {:>5}  {:>3}  {:>4}  {:>9}  {:>7}  {:<23}  {:<7}  result",
        "n", "diam", "girth", "chi", "star", "hypertree", "uniform", "surface", "basis"
    );
    for row in &r.rows {
        let s = &row.structure;
        let basis = match row.surface.basis {
            Basis::Theorem => "theorem",
            Basis::Certificate => "cert",
            Basis::Both => "both",
        };
        let result = if row.pass { "ok".to_string() } else { format!("FAIL {}", row.failed_checks.join(",")) };
        let _ = writeln!(
            out,
            "{:>4}  {:>4}  {:>5}  {:>3}  {:>4}  {:>9}  {:>7}  {:<23}  {:<7}  {result}",
            row.n,
            s.diameter.to_string(),
            s.girth.to_string(),
            s.chromatic,
            if s.star { "yes" } else { "no" },
            if s.hypertree { "yes" } else { "no" },
            s.uniform.map_or("-".to_string(), |k| k.to_string()),
            row.surface.class.name(),
            basis,
        );
    }
    let _ = writeln!(out, "{} rows, {} passed, {} failed", r.summary.rows, r.summary.passed, r.summary.failed);
    out
}

pub fn sweep(from: u64, to: u64, checks: Option<Vec<String>>, output: &Output) -> CliResult {
    let format = report_format(output)?;
    range(from, to)?;
    let checks = parse_checks(checks)?;
    let rows: Vec<SweepRow> = with_pool(|| (from..=to).into_par_iter().map(|n| sweep_row(n, &checks)).collect())?;
    let passed = rows.iter().filter(|r| r.pass).count();
    let report = SweepReport {
        from,
        to,
        checks,
        summary: SweepSummary { rows: rows.len(), passed, failed: rows.len() - passed },
        rows,
    };
    let content = match format {
        Format::Json => json(&report),
        Format::Text => render_sweep_text(&report),
    };
    emit(output, &content)?;
    Ok(Outcome::from_agreement(report.summary.failed == 0))
}

#[derive(Serialize)]
struct OracleReport {
    from: u64,
    to: u64,
    cap: u64,
    results: Vec<OracleComparison>,
    consistent: bool,
}

pub fn verify_oracle(from: u64, to: u64, cap: u64, output: &Output) -> CliResult {
    let format = report_format(output)?;
    range(from, to)?;
    check_cap(to, cap)?;
    let results: Vec<OracleComparison> = with_pool(|| {
        (from..=to)
            .into_par_iter()
            .map(|n| compare_with_oracle(GroupParam::new(n).expect("range starts at 2"), cap).expect("n within cap"))
            .collect()
    })?;
    let consistent = results.iter().all(OracleComparison::is_consistent);
    let report = OracleReport { from, to, cap, results, consistent };
    let content = match format {
        Format::Json => json(&report),
        Format::Text => {
            let mut out = String::new();
            for r in &report.results {
                let _ = writeln!(
                    out,
                    "n = {:>3}: {} subgroups, {} pairs, {} co-maximal, {} hyperedges, {}",
                    r.n,
                    r.subgroups_checked,
                    r.pairs_checked,
                    r.comaximal_pairs,
                    r.hyperedges,
                    if r.is_consistent() {
                        "identical".to_string()
                    } else {
                        format!("{} mismatches", r.mismatches.len())
                    }
                );
                for m in &r.mismatches {
                    let _ = writeln!(out, "    {m}");
                }
            }
            let _ = writeln!(out, "{}", if consistent { "all identical" } else { "MISMATCH" });
            out
        }
    };
    emit(output, &content)?;
    Ok(Outcome::from_agreement(consistent))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Surface {
    Plane,
    Torus,
    Projective,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum Evidence {
    /// The planarity verdict itself.
    Planarity { verdict: PlanarityVerdict },
    /// A triple in `k` hyperedges: `K_{3,k}` lies in the incidence graph.
    Triple { certificate: TripleCertificate, bounds: GenusPair },
    /// Euler-characteristic bounds alone exclude the surface.
    EulerBound { bounds: GenusPair },
    /// Nothing machine-checkable was found.
    Notice { message: String },
}

#[derive(Serialize)]
struct CertifyReport {
    n: u64,
    surface: Surface,
    class: SurfaceClass,
    evidence: Evidence,
}

pub fn certify(n: u64, surface: &str, output: &Output) -> CliResult {
    let format = report_format(output)?;
    let surface = match surface {
        "plane" => Surface::Plane,
        "torus" => Surface::Torus,
        "projective" => Surface::Projective,
        other => {
            return Err(CliError::Invalid(format!("unknown surface {other:?} (expected plane, torus or projective)")))
        }
    };
    let g = param(n)?;
    let h = build_hypergraph(g);
    let inc = incidence_graph(&h);
    let class = comax_core::embedding::predicted_surface(g);
    let triple = |k: usize| {
        find_triple_certificate(&h, k).expect("k >= 3").map(|certificate| Evidence::Triple {
            bounds: kmn_genus(3, certificate.k() as u64).expect("k >= 3"),
            certificate,
        })
    };
    let bounds = euler_genus_lower_bounds(&inc.to_graph());
    let evidence = match surface {
        Surface::Plane => Evidence::Planarity { verdict: planarity(&inc) },
        Surface::Torus => triple(7)
            .or_else(|| (bounds.orientable >= 2).then_some(Evidence::EulerBound { bounds }))
            .unwrap_or_else(|| Evidence::Notice {
                message: format!(
                    "no certificate that D_{n} needs genus 2 or more; classification is {} by theorem",
                    class.name()
                ),
            }),
        Surface::Projective => triple(5)
            .or_else(|| (bounds.nonorientable >= 2).then_some(Evidence::EulerBound { bounds }))
            .unwrap_or_else(|| Evidence::Notice {
                message: format!(
                    "no certificate that D_{n} needs 2 or more crosscaps; classification is {} by theorem",
                    class.name()
                ),
            }),
    };
    let report = CertifyReport { n, surface, class, evidence };
    let content = match format {
        Format::Json => json(&report),
        Format::Text => render_certify_text(&report, &h),
    };
    emit(output, &content)?;
    Ok(Outcome::Agreement)
}

fn render_certify_text(r: &CertifyReport, h: &comax_core::Hypergraph) -> String {
    let surface = match r.surface {
        Surface::Plane => "plane",
        Surface::Torus => "torus",
        Surface::Projective => "projective plane",
    };
    let mut out = format!("D_{} on the {surface} (class: {})\n", r.n, r.class.name());
    match &r.evidence {
        Evidence::Planarity { verdict } => {
            let _ = writeln!(out, "  {}", verdict.summary());
            if let Some(k) = verdict.obstruction() {
                for p in &k.paths {
                    let _ = writeln!(out, "    path {p:?}");
                }
            }
        }
        Evidence::Triple { certificate, bounds } => {
            let names: Vec<String> = certificate.vertices.iter().map(|&v| h.vertices()[v].to_string()).collect();
            let _ = writeln!(
                out,
                "  K3,{} from the triple {} in hyperedges {:?}",
                certificate.k(),
                names.join(", "),
                certificate.common_hyperedges
            );
            let _ = writeln!(out, "  genus >= {}, crosscaps >= {}", bounds.orientable, bounds.nonorientable);
        }
        Evidence::EulerBound { bounds } => {
            let _ =
                writeln!(out, "  Euler bound: genus >= {}, crosscaps >= {}", bounds.orientable, bounds.nonorientable);
        }
        Evidence::Notice { message } => {
            let _ = writeln!(out, "  {message}");
        }
    }
    out
}

pub fn export(n: u64, what: &str, output: &Output) -> CliResult {
    let target: ExportTarget = what.parse()?;
    let format: ExportFormat = output.format.as_deref().unwrap_or("json").parse()?;
    let g = param(n)?;
    emit(output, &exporter::export(g, target, format))?;
    Ok(Outcome::Agreement)
}
