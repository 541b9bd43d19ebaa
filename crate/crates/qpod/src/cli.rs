//! Command-line front end: sequence tables, statement verification suites,
//! bijections applied to explicit inputs, congruence scans, and conjecture
//! sweeps, each rendered as JSON, CSV, or plain text.
//!
//! Exit codes: 0 when every proved statement passes (a `conjecture-consistent`
//! result, or even a recorded conjecture counterexample, does not fail the
//! run), 1 when a proved statement or an ad-hoc scan fails, 2 for usage
//! errors — which are rejected before any computation starts.
//!
//! All output is deterministic: the same invocation produces byte-identical
//! reports.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bijections::{
    epsilon, glaisher_merge, glaisher_split, glaisher_variant, glaisher_variant_inverse, phi, psi,
    rho, two_core, two_core_quotient, xi_map, zigzag_to_triple,
};
use crate::congruences::{self, ProgressionSpec};
use crate::counting::{
    self, Partition, Route, SequenceId, SequenceTable, DEFAULT_ENUMERATION_CEILING,
};
use crate::identities::{self, StatementId, StatementLabel, VerificationReport};

/// A parsed invocation: one subcommand plus its bounds and output options.
#[derive(Debug, Parser)]
#[command(
    name = "qpod",
    version,
    about = "Exact partition tables, q-series identity verification, bijections, and congruence scans",
    after_help = statement_catalog()
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

/// The available subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate one counting sequence for 0 <= n <= n_max.
    Table(TableArgs),
    /// Run statement verifiers and report one line per statement.
    #[command(after_help = statement_catalog())]
    Verify(VerifyArgs),
    /// Apply one combinatorial map to an explicit partition.
    Bijection(BijectionArgs),
    /// Scan one arithmetic progression seq(m n + t) for divisibility by u.
    CongruenceScan(CongruenceScanArgs),
    /// Check a Cauchy product of b4 progression series for divisibility.
    CongruenceProduct(CongruenceProductArgs),
    /// Sweep the conjectured inequality families and report any witnesses.
    ConjectureScan(ConjectureScanArgs),
}

/// Output format selection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable lines.
    Plain,
    /// A JSON document (arrays of reports, objects for tables and maps).
    Json,
    /// Comma-separated rows with exact decimal values.
    Csv,
}

/// Where and how to emit the result.
#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

/// Arguments for `table`.
#[derive(Debug, Args)]
pub struct TableArgs {
    /// Sequence name: pod, pod_e, pod_o, b4, b4_e, b4_o, q0, q2, q0_alt,
    /// overline_p, p, q_odd, q_distinct, mp, mbar.
    #[arg(long)]
    pub seq: String,
    /// Family parameter k (required by mp and mbar).
    #[arg(long)]
    pub k: Option<usize>,
    /// Inclusive upper bound on n.
    #[arg(long, value_name = "N")]
    pub n_max: usize,
    /// Computation route. The enumeration route is guarded by a ceiling,
    /// overridable via the QPOD_ENUM_CEILING environment variable.
    #[arg(long, value_enum, default_value_t = RouteArg::Gf)]
    pub route: RouteArg,
    #[command(flatten)]
    pub out: OutputArgs,
}

/// Which route computes a table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    /// Truncated generating-function expansion (fast, unbounded).
    Gf,
    /// Explicit object enumeration (the oracle; ceiling-guarded).
    Enumeration,
}

/// Arguments for `verify`.
#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated statement ids, or `all`. See the list below.
    #[arg(long, default_value = "all")]
    pub statements: String,
    /// Inclusive upper bound on n for the sweeps.
    #[arg(long, value_name = "N", default_value_t = 200)]
    pub n_max: usize,
    /// Inclusive upper bound on k for the k-indexed families.
    #[arg(long, value_name = "K", default_value_t = 3)]
    pub k_max: usize,
    /// Series order for the product congruences L1/L2/L3 (defaults: 30 for
    /// pairwise products, 12 for triple products).
    #[arg(long, value_name = "N")]
    pub order: Option<usize>,
    #[command(flatten)]
    pub out: OutputArgs,
}

/// Arguments for `bijection`.
#[derive(Debug, Args)]
pub struct BijectionArgs {
    /// The map to apply.
    #[arg(value_enum)]
    pub map: MapName,
    /// Comma-separated parts of the input partition, e.g. 14,14,12,12,8,4.
    #[arg(long, value_name = "LIST")]
    pub parts: String,
    /// Staircase index k (required by zigzag, rejected elsewhere).
    #[arg(long)]
    pub k: Option<usize>,
    #[command(flatten)]
    pub out: OutputArgs,
}

/// The maps invocable from the command line. Maps whose inputs are not a
/// single partition (the structured inverses) are library-only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MapName {
    /// Halve even parts repeatedly: image has odd parts only.
    GlaisherSplit,
    /// Merge equal parts pairwise: image has distinct parts.
    GlaisherMerge,
    /// Split parts divisible by 4: image has no multiple of 4.
    GlaisherVariant,
    /// Merge equal pairs while any part repeats: inverse of glaisher-variant.
    GlaisherVariantInverse,
    /// Length-parity involution on pod-type partitions away from its fixed
    /// points.
    Phi,
    /// Length-parity involution on 4-regular-type partitions away from its
    /// fixed points.
    Epsilon,
    /// Diagonal cut of the staircase-extended shape: distinct odd parts plus
    /// two distinct-even-part partitions alpha, beta (takes --k).
    Zigzag,
    /// Remove dominoes until none fits; the remainder is a staircase.
    TwoCore,
    /// Full domino decomposition: staircase core plus quotient pair.
    TwoQuotient,
    /// Reduce distinct odd parts to a quarter-size partition and a staircase
    /// index.
    Xi,
    /// Halve a distinct-part, no-multiple-of-4 partition; returns the image
    /// and the staircase index.
    Psi,
    /// Quarter a distinct-part, no-part-2-mod-4 partition into an
    /// overpartition; returns the image and the staircase index.
    Rho,
}

/// Arguments for `congruence-scan`.
#[derive(Debug, Args)]
pub struct CongruenceScanArgs {
    /// Base sequence.
    #[arg(long, default_value = "b4")]
    pub seq: String,
    /// Family parameter k (required by mp and mbar).
    #[arg(long)]
    pub k: Option<usize>,
    /// Progression modulus m.
    #[arg(long)]
    pub m: usize,
    /// Progression residue t, with 0 <= t < m.
    #[arg(long)]
    pub t: usize,
    /// Claimed divisor u.
    #[arg(long = "mod", value_name = "U")]
    pub divisor: u64,
    /// Inclusive upper bound on the progression index n.
    #[arg(long, value_name = "N", default_value_t = 40)]
    pub n_max: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

/// Arguments for `congruence-product`.
#[derive(Debug, Args)]
pub struct CongruenceProductArgs {
    /// Comma-separated residues; one progression series per residue.
    #[arg(long, value_name = "LIST")]
    pub residues: String,
    /// Progression modulus m.
    #[arg(long)]
    pub m: usize,
    /// Claimed divisor u of every product coefficient.
    #[arg(long = "mod", value_name = "U")]
    pub divisor: u64,
    /// Series truncation order.
    #[arg(long, value_name = "N", default_value_t = 30)]
    pub order: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

/// Arguments for `conjecture-scan`.
#[derive(Debug, Args)]
pub struct ConjectureScanArgs {
    /// Inclusive upper bound on n.
    #[arg(long, value_name = "N", default_value_t = 500)]
    pub n_max: usize,
    /// Inclusive upper bound on k.
    #[arg(long, value_name = "K", default_value_t = 5)]
    pub k_max: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

/// Entry point for the `qpod` binary: parse, execute, map errors to exit 2.
pub fn main_entry() -> ExitCode {
    let config = RunConfig::parse();
    match execute(&config) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Runs one parsed invocation. `Err` means a usage error (exit 2); `Ok`
/// carries exit 0 or 1 depending on verification outcomes.
pub fn execute(config: &RunConfig) -> Result<ExitCode, String> {
    match &config.command {
        Command::Table(args) => run_table(args),
        Command::Verify(args) => run_verify(args),
        Command::Bijection(args) => run_bijection(args),
        Command::CongruenceScan(args) => run_congruence_scan(args),
        Command::CongruenceProduct(args) => run_congruence_product(args),
        Command::ConjectureScan(args) => run_conjecture_scan(args),
    }
}

/// The statement catalog appended to `--help`.
fn statement_catalog() -> String {
    let mut text = String::from("Statement ids (for verify --statements):\n");
    for id in StatementId::ALL {
        text.push_str(&format!("  {:<7} {}\n", id.as_str(), id.description()));
    }
    text.pop();
    text
}

fn emit(out: &OutputArgs, rendered: String) -> Result<(), String> {
    match &out.output {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

fn parse_usize_list(text: &str, what: &str) -> Result<Vec<usize>, String> {
    let entries: Vec<&str> = text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if entries.is_empty() {
        return Err(format!("{what} must list at least one value"));
    }
    entries
        .iter()
        .map(|entry| {
            entry
                .parse::<usize>()
                .map_err(|_| format!("{what} entry `{entry}` is not a nonnegative integer"))
        })
        .collect()
}

fn parse_partition(text: &str) -> Result<Partition, String> {
    let parts = parse_usize_list(text, "--parts")?;
    if parts.contains(&0) {
        return Err("partition parts must be positive".into());
    }
    Ok(Partition::new(parts))
}

/// The enumeration ceiling, overridable via `QPOD_ENUM_CEILING`.
fn enumeration_ceiling() -> Result<usize, String> {
    match std::env::var("QPOD_ENUM_CEILING") {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| format!("QPOD_ENUM_CEILING must be a nonnegative integer, got `{text}`")),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ENUMERATION_CEILING),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err("QPOD_ENUM_CEILING is not valid unicode".into())
        }
    }
}

fn run_table(args: &TableArgs) -> Result<ExitCode, String> {
    let seq = SequenceId::parse(&args.seq, args.k)?;
    let (route, ceiling) = match args.route {
        RouteArg::Gf => (Route::GeneratingFunction, usize::MAX),
        RouteArg::Enumeration => (Route::Enumeration, enumeration_ceiling()?),
    };
    let table = counting::table_with_ceiling(seq, args.n_max, route, ceiling)
        .map_err(|e| e.to_string())?;
    let rendered = match args.out.format {
        Format::Json => format!("{:#}\n", table.to_json()),
        Format::Csv => table.to_csv(),
        Format::Plain => render_table_plain(&table),
    };
    emit(&args.out, rendered)?;
    Ok(ExitCode::SUCCESS)
}

fn render_table_plain(table: &SequenceTable) -> String {
    let mut text = format!("# {} via {}, 0 <= n <= {}\n", table.name(), table.route(), table.n_max());
    for (n, value) in table.values().iter().enumerate() {
        text.push_str(&format!("{n} {value}\n"));
    }
    text
}

/// Expands `--statements` into a deduplicated list in canonical order.
fn parse_statements(text: &str) -> Result<Vec<StatementId>, String> {
    if text.trim().eq_ignore_ascii_case("all") {
        return Ok(StatementId::ALL.to_vec());
    }
    let mut requested = Vec::new();
    for entry in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        requested.push(StatementId::parse(entry)?);
    }
    if requested.is_empty() {
        return Err("--statements must list at least one id, or `all`".into());
    }
    Ok(StatementId::ALL
        .into_iter()
        .filter(|id| requested.contains(id))
        .collect())
}

/// Runs the verifiers backing the requested statements, one group at a time,
/// and returns the reports in canonical statement order.
pub fn run_statements(
    ids: &[StatementId],
    n_max: usize,
    k_max: usize,
    order: Option<usize>,
) -> Vec<VerificationReport> {
    let wants = |id: StatementId| ids.contains(&id);
    let keep = |reports: Vec<VerificationReport>| {
        reports.into_iter().filter(|report| match &report.statement_id {
            StatementLabel::Named(id) => ids.contains(id),
            StatementLabel::Custom(_) => false,
        })
    };
    let mut reports = Vec::new();
    if wants(StatementId::T1i) || wants(StatementId::T1ii) {
        reports.extend(keep(identities::verify_t1(n_max)));
    }
    if wants(StatementId::T2i) || wants(StatementId::T2ii) {
        reports.extend(keep(identities::verify_t2(n_max)));
    }
    if wants(StatementId::T3i) || wants(StatementId::T3ii) {
        reports.extend(keep(identities::verify_t3(n_max)));
    }
    if wants(StatementId::T4) || wants(StatementId::C4_2) {
        reports.extend(keep(identities::verify_t4(n_max, k_max)));
    }
    if wants(StatementId::T5) || wants(StatementId::C4_4) {
        reports.extend(keep(identities::verify_t5(n_max, k_max)));
    }
    let watson = [
        StatementId::T6,
        StatementId::T7i,
        StatementId::T7ii,
        StatementId::WQodd,
        StatementId::WQ,
    ];
    if watson.iter().any(|&id| wants(id)) {
        reports.extend(keep(identities::verify_watson(n_max)));
    }
    for id in StatementId::ALL.into_iter().filter(|id| id.is_congruence()) {
        if wants(id) {
            reports.push(congruences::verify_congruence_statement(id, n_max, order));
        }
    }
    if wants(StatementId::Conj1) || wants(StatementId::Conj2) {
        reports.extend(keep(identities::check_conjectures(n_max, k_max)));
    }
    reports
}

/// Exit code for a batch of reports: failures of proved statements (or of
/// ad-hoc scans) exit 1; conjecture counterexamples do not fail the run.
fn exit_code_for(reports: &[VerificationReport]) -> ExitCode {
    let failed = reports
        .iter()
        .any(|r| r.is_failure() && !r.statement_id.is_conjecture());
    if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn run_verify(args: &VerifyArgs) -> Result<ExitCode, String> {
    validate_bounds(args.n_max, args.k_max, args.order)?;
    let ids = parse_statements(&args.statements)?;
    let reports = run_statements(&ids, args.n_max, args.k_max, args.order);
    emit(&args.out, render_reports(&reports, args.out.format))?;
    Ok(exit_code_for(&reports))
}

fn validate_bounds(n_max: usize, k_max: usize, order: Option<usize>) -> Result<(), String> {
    if n_max == 0 {
        return Err("--n-max must be positive".into());
    }
    if k_max == 0 {
        return Err("--k-max must be positive".into());
    }
    if order == Some(0) {
        return Err("--order must be positive".into());
    }
    Ok(())
}

/// Renders verification reports in the requested format (always a JSON array
/// in JSON mode, one row per report in CSV mode, one summary line per report
/// in plain mode, with sharpness witnesses on a follow-up line).
fn render_reports(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Json => {
            let rendered = serde_json::to_string_pretty(reports)
                .expect("report serialization cannot fail");
            format!("{rendered}\n")
        }
        Format::Csv => {
            let mut text =
                String::from("statement_id,status,n_max,k_max,failures,equalities,first_failure\n");
            for report in reports {
                let first = report.failures.first().map_or(String::new(), |d| {
                    let k = d.k.map_or(String::new(), |k| format!("k={k} "));
                    format!("n={} {}lhs={} rhs={}", d.n, k, d.lhs, d.rhs)
                });
                text.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    report.statement_id,
                    report.status,
                    report.range.n_max,
                    report.range.k_max.map_or(String::new(), |k| k.to_string()),
                    report.failures.len(),
                    report.equality_set.len(),
                    first
                ));
            }
            text
        }
        Format::Plain => {
            let mut text = String::new();
            for report in reports {
                text.push_str(&report.summary_line());
                text.push('\n');
                if report.is_failure() {
                    continue; // the failures already carry the witnesses
                }
                if let Some(witness) = &report.sharpness {
                    text.push_str(&format!(
                        "  divisor is sharp: value {} at argument {} is not divisible by {}\n",
                        witness.value, witness.n, witness.divisor
                    ));
                }
            }
            text
        }
    }
}

fn partition_json(p: &Partition) -> serde_json::Value {
    json!(p.parts())
}

fn run_bijection(args: &BijectionArgs) -> Result<ExitCode, String> {
    let input = parse_partition(&args.parts)?;
    let takes_k = matches!(args.map, MapName::Zigzag);
    if args.k.is_some() && !takes_k {
        return Err("--k is only accepted by the zigzag map".into());
    }
    let map_err = |e: crate::bijections::BijectionError| e.to_string();
    // Each arm renders (component name, partition-like value) pairs.
    let fields: Vec<(&str, serde_json::Value, String)> = match args.map {
        MapName::GlaisherSplit => single(glaisher_split(&input).map_err(map_err)?),
        MapName::GlaisherMerge => single(glaisher_merge(&input).map_err(map_err)?),
        MapName::GlaisherVariant => single(glaisher_variant(&input).map_err(map_err)?),
        MapName::GlaisherVariantInverse => {
            single(glaisher_variant_inverse(&input).map_err(map_err)?)
        }
        MapName::Phi => single(phi(&input).map_err(map_err)?),
        MapName::Epsilon => single(epsilon(&input).map_err(map_err)?),
        MapName::TwoCore => single(two_core(&input)),
        MapName::Zigzag => {
            let k = args.k.ok_or("the zigzag map requires --k")?;
            let triple = zigzag_to_triple(&input, k).map_err(map_err)?;
            vec![
                named("odd", &triple.odd),
                named("alpha", &triple.alpha),
                named("beta", &triple.beta),
            ]
        }
        MapName::TwoQuotient => {
            let decomposition = two_core_quotient(&input);
            vec![
                named("core", &decomposition.core),
                named("first", &decomposition.first),
                named("second", &decomposition.second),
            ]
        }
        MapName::Xi => {
            let image = xi_map(&input).map_err(map_err)?;
            vec![
                named("image", &image.partition),
                index("staircase_index", image.staircase_index),
            ]
        }
        MapName::Psi => {
            let (image, k) = psi(&input).map_err(map_err)?;
            vec![named("image", &image), index("staircase_index", k)]
        }
        MapName::Rho => {
            let (image, k) = rho(&input).map_err(map_err)?;
            vec![
                (
                    "image",
                    json!({
                        "parts": image.parts(),
                        "overlined": image.overlined().iter().collect::<Vec<_>>(),
                    }),
                    image.to_string(),
                ),
                index("staircase_index", k),
            ]
        }
    };

    let rendered = match args.out.format {
        Format::Json => {
            let mut object = serde_json::Map::new();
            object.insert("map".into(), json!(map_name(args.map)));
            object.insert("input".into(), partition_json(&input));
            if let Some(k) = args.k {
                object.insert("k".into(), json!(k));
            }
            for (name, value, _) in &fields {
                object.insert((*name).into(), value.clone());
            }
            format!("{:#}\n", serde_json::Value::Object(object))
        }
        Format::Csv => {
            let mut text = String::from("component,value\n");
            text.push_str(&format!("input,{}\n", csv_parts(&input)));
            for (name, _, display) in &fields {
                let bare = display.trim_matches(|c| c == '(' || c == ')').replace(", ", " ");
                text.push_str(&format!("{name},{bare}\n"));
            }
            text
        }
        Format::Plain => {
            let mut text = format!("{} of {}\n", map_name(args.map), input);
            for (name, _, display) in &fields {
                text.push_str(&format!("{name} = {display}\n"));
            }
            text
        }
    };
    emit(&args.out, rendered)?;
    Ok(ExitCode::SUCCESS)
}

fn single(image: Partition) -> Vec<(&'static str, serde_json::Value, String)> {
    vec![("image", json!(image.parts()), image.to_string())]
}

fn named(name: &'static str, p: &Partition) -> (&'static str, serde_json::Value, String) {
    (name, json!(p.parts()), p.to_string())
}

fn index(name: &'static str, value: usize) -> (&'static str, serde_json::Value, String) {
    (name, json!(value), value.to_string())
}

fn csv_parts(p: &Partition) -> String {
    p.parts()
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn map_name(map: MapName) -> &'static str {
    match map {
        MapName::GlaisherSplit => "glaisher-split",
        MapName::GlaisherMerge => "glaisher-merge",
        MapName::GlaisherVariant => "glaisher-variant",
        MapName::GlaisherVariantInverse => "glaisher-variant-inverse",
        MapName::Phi => "phi",
        MapName::Epsilon => "epsilon",
        MapName::Zigzag => "zigzag",
        MapName::TwoCore => "two-core",
        MapName::TwoQuotient => "two-quotient",
        MapName::Xi => "xi",
        MapName::Psi => "psi",
        MapName::Rho => "rho",
    }
}

fn run_congruence_scan(args: &CongruenceScanArgs) -> Result<ExitCode, String> {
    let seq = SequenceId::parse(&args.seq, args.k)?;
    let spec =
        ProgressionSpec::new(seq, args.m, args.t, args.divisor).map_err(|e| e.to_string())?;
    let report = congruences::check_progression_congruence(&spec, args.n_max);
    let reports = [report];
    emit(&args.out, render_reports(&reports, args.out.format))?;
    Ok(exit_code_for(&reports))
}

fn run_congruence_product(args: &CongruenceProductArgs) -> Result<ExitCode, String> {
    let residues = parse_usize_list(&args.residues, "--residues")?;
    let report = congruences::check_product_congruence(&residues, args.m, args.divisor, args.order)
        .map_err(|e| e.to_string())?;
    let reports = [report];
    emit(&args.out, render_reports(&reports, args.out.format))?;
    Ok(exit_code_for(&reports))
}

fn run_conjecture_scan(args: &ConjectureScanArgs) -> Result<ExitCode, String> {
    validate_bounds(args.n_max, args.k_max, None)?;
    let reports = identities::check_conjectures(args.n_max, args.k_max);
    emit(&args.out, render_reports(&reports, args.out.format))?;
    Ok(exit_code_for(&reports))
}
