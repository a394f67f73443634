//! Command-line front end and the machine-readable report formats.
//!
//! Subcommands: `analyze`, `verify`, `weights`, `list-catalog`. Exit codes
//! are 0 on success, 1 on a verification mismatch, 2 on a usage error and 3
//! when a resource budget is exceeded.
//!
//! Exact rationals are written as `"p/q"` strings (`q >= 1`). JSON and TSV
//! output depends only on the input and the budgets, never on the thread
//! count; wall-clock timing is emitted only with `--timing`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::catalog::{self, weight_label, CatalogEntry, Expectation};
use crate::error::{Error, Result};
use crate::exactgeom::Rational;
use crate::rootsystem::{RootDatum, RootSystemType, Series};
use crate::strata::{analyze, EnumOptions, NullconeReport};
use crate::weightsys::weight_system;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Schema tag carried by every JSON document.
pub const SCHEMA: &str = "nullcone/1";

#[derive(Parser, Debug)]
#[command(name = "nullcone", version, about = "Dimension and components of nullcones of simple group modules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Stratify the nullcone of one irreducible module.
    Analyze(ModuleArgs),
    /// Check every catalog entry against its expected nullcone.
    Verify(VerifyArgs),
    /// Print the weights of one irreducible module.
    Weights(ModuleArgs),
    /// Print the catalog.
    ListCatalog(ListArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Tsv,
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Worker threads (0: all cores).
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    /// Abort after visiting this many weight tuples.
    #[arg(long, default_value_t = EnumOptions::default().max_subsets)]
    pub max_subsets: u64,
    /// Largest module dimension to work on.
    #[arg(long)]
    pub dim_cap: Option<u64>,
    /// Include wall-clock time in the output.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Args, Debug, Clone)]
pub struct ModuleArgs {
    /// Cartan series, A to G.
    #[arg(long = "type")]
    pub series: Series,
    #[arg(long)]
    pub rank: usize,
    /// Highest weight: comma-separated fundamental-weight coefficients.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub weight: Vec<i64>,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = catalog::DEFAULT_MAX_RANK)]
    pub max_rank: usize,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Args, Debug, Clone)]
pub struct ListArgs {
    #[arg(long, default_value_t = catalog::DEFAULT_MAX_RANK)]
    pub max_rank: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

/// Dimension cap of `verify` when none is given.
pub const VERIFY_DIM_CAP: u64 = 70;

impl RunArgs {
    pub fn options(&self, default_cap: u64) -> EnumOptions {
        EnumOptions {
            max_subsets: self.max_subsets,
            threads: self.threads,
            dim_cap: self.dim_cap.unwrap_or(default_cap),
            ..EnumOptions::default()
        }
    }
}

pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidWeight(format!("not a rational: {s:?}"));
    let (p, q) = s.split_once('/').ok_or_else(bad)?;
    let (p, q) = (p.parse().map_err(|_| bad())?, q.parse().map_err(|_| bad())?);
    if q == num_bigint::BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumSummary {
    /// `lambda` in fundamental-weight coordinates.
    pub lambda: Vec<String>,
    pub norm2: String,
    pub dim_l: u64,
    pub dim_flag: u64,
    pub dim_total: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogInfo {
    pub lists: Vec<String>,
    pub trdeg_class: String,
    pub expected_components: u64,
    pub expected_dim_nullcone: Option<u64>,
    pub stated_dim_nullcone: Option<u64>,
    pub caveat: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_subsets: u64,
    pub subsets_visited: u64,
    pub candidates_examined: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    #[serde(rename = "type")]
    pub root_type: String,
    pub rank: usize,
    pub weight: Vec<i64>,
    pub dim_module: u64,
    pub dim_nullcone: u64,
    pub num_components: u64,
    /// `"catalog"`, or `"maximal-dimension components only"`.
    pub scope: String,
    pub catalog: Option<CatalogInfo>,
    pub strata: Vec<StratumSummary>,
    pub budget: Budget,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing_ms: Option<u64>,
}

pub const NON_CATALOG_SCOPE: &str = "maximal-dimension components only";

fn catalog_info(e: &CatalogEntry) -> Result<CatalogInfo> {
    let x = catalog::expected(e)?;
    let stated = e.stated_dim_nullcone.as_ref();
    Ok(CatalogInfo {
        lists: e.lists.iter().map(ToString::to_string).collect(),
        trdeg_class: e.trdeg_class.to_string(),
        expected_components: x.components,
        expected_dim_nullcone: x.dim_nullcone,
        stated_dim_nullcone: stated.map(|p| p.value),
        caveat: stated.and_then(|p| p.caveat.clone()),
    })
}

fn build_report(
    datum: &RootDatum,
    weight: &[i64],
    r: &NullconeReport,
    max_subsets: u64,
) -> Result<Report> {
    let ty = datum.root_type();
    let entry = catalog::lookup(ty, weight);
    let strata = r
        .strata
        .iter()
        .map(|s| StratumSummary {
            lambda: datum.fw_coords(&s.candidate.lambda).iter().map(format_rational).collect(),
            norm2: format_rational(&s.candidate.norm2),
            dim_l: s.dim_l,
            dim_flag: s.dim_flag,
            dim_total: s.dim_total,
        })
        .collect();
    Ok(Report {
        schema: SCHEMA.into(),
        root_type: ty.to_string(),
        rank: ty.rank,
        weight: weight.to_vec(),
        dim_module: r.dim_module,
        dim_nullcone: r.dim_nullcone,
        num_components: r.num_components,
        scope: if entry.is_some() { "catalog".into() } else { NON_CATALOG_SCOPE.into() },
        catalog: entry.as_ref().map(catalog_info).transpose()?,
        strata,
        budget: Budget {
            max_subsets,
            subsets_visited: r.subsets_visited,
            candidates_examined: r.candidates_examined,
        },
        timing_ms: None,
    })
}

fn module(series: Series, rank: usize, weight: &[i64]) -> Result<(RootDatum, crate::rootsystem::Weight)> {
    let datum = RootDatum::build(RootSystemType::new(series, rank)?)?;
    let lambda = datum.weight(weight)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant);
    }
    if lambda.is_zero() {
        return Err(Error::TrivialModule);
    }
    Ok((datum, lambda))
}

pub fn cmd_analyze(args: &ModuleArgs) -> Result<Report> {
    let start = Instant::now();
    let (datum, lambda) = module(args.series, args.rank, &args.weight)?;
    let opts = args.run.options(crate::weightsys::DEFAULT_DIM_CAP);
    let ws = weight_system(&datum, &lambda, opts.dim_cap)?;
    let r = analyze(&ws, &opts)?;
    let mut report = build_report(&datum, &args.weight, &r, opts.max_subsets)?;
    if args.run.timing {
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Budget,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRow {
    pub entry: String,
    #[serde(rename = "type")]
    pub root_type: String,
    pub weight: Vec<i64>,
    pub lists: Vec<String>,
    pub dim_module: u64,
    pub status: Status,
    pub dim_nullcone: Option<u64>,
    pub num_components: Option<u64>,
    pub expected_components: u64,
    pub expected_dim_nullcone: Option<u64>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub schema: String,
    pub max_rank: usize,
    pub dim_cap: u64,
    pub rows: Vec<VerifyRow>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub over_budget: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing_ms: Option<u64>,
}

impl VerifySummary {
    pub fn exit_code(&self) -> i32 {
        if self.failed > 0 {
            EXIT_MISMATCH
        } else if self.over_budget > 0 {
            EXIT_BUDGET
        } else {
            EXIT_OK
        }
    }
}

/// Runs one catalog entry and compares with its expectation.
pub fn verify_entry(e: &CatalogEntry, opts: &EnumOptions) -> Result<VerifyRow> {
    let dim_module = e.dim_module()?;
    let x: Expectation = catalog::expected(e)?;
    let mut row = VerifyRow {
        entry: e.to_string(),
        root_type: e.root_type.to_string(),
        weight: e.highest.clone(),
        lists: e.lists.iter().map(ToString::to_string).collect(),
        dim_module,
        status: Status::Skipped,
        dim_nullcone: None,
        num_components: None,
        expected_components: x.components,
        expected_dim_nullcone: x.dim_nullcone,
        note: String::new(),
    };
    if dim_module > opts.dim_cap {
        row.note = format!("dim {dim_module} above cap {}", opts.dim_cap);
        return Ok(row);
    }
    let datum = RootDatum::build(e.root_type)?;
    let ws = weight_system(&datum, &datum.weight(&e.highest)?, opts.dim_cap)?;
    let r = match analyze(&ws, opts) {
        Ok(r) => r,
        Err(err @ Error::SubsetBudget { .. }) => {
            row.status = Status::Budget;
            row.note = err.to_string();
            return Ok(row);
        }
        Err(err) => return Err(err),
    };
    row.dim_nullcone = Some(r.dim_nullcone);
    row.num_components = Some(r.num_components);
    let mut problems = Vec::new();
    if r.num_components != x.components {
        problems.push(format!("components {} != {}", r.num_components, x.components));
    }
    if let Some(d) = x.dim_nullcone {
        if r.dim_nullcone != d {
            problems.push(format!("dim {} != {d}", r.dim_nullcone));
        }
    }
    if let Some(p) = &x.unchecked_dim {
        let why = p.caveat.as_deref().unwrap_or("not asserted");
        row.note = format!("computed dim {}, stated {} ({why})", r.dim_nullcone, p.value);
    }
    if problems.is_empty() {
        row.status = Status::Pass;
    } else {
        row.status = Status::Fail;
        let msg = problems.join("; ");
        row.note = if row.note.is_empty() { msg } else { format!("{msg}; {}", row.note) };
    }
    Ok(row)
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<VerifySummary> {
    if args.max_rank == 0 {
        return Err(Error::Catalog("max-rank must be positive".into()));
    }
    let start = Instant::now();
    let opts = args.run.options(VERIFY_DIM_CAP);
    let rows = catalog::entries(args.max_rank)
        .iter()
        .map(|e| opts.run(|| verify_entry(e, &opts)))
        .collect::<Result<Vec<_>>>()?;
    let count = |s: Status| rows.iter().filter(|r| r.status == s).count();
    Ok(VerifySummary {
        schema: SCHEMA.into(),
        max_rank: args.max_rank,
        dim_cap: opts.dim_cap,
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        skipped: count(Status::Skipped),
        over_budget: count(Status::Budget),
        rows,
        timing_ms: args.run.timing.then(|| start.elapsed().as_millis() as u64),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightRow {
    /// Fundamental-weight coordinates.
    pub fw: Vec<i64>,
    /// Euclidean coordinates in the standard realisation.
    pub euclid: Vec<String>,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightTable {
    pub schema: String,
    #[serde(rename = "type")]
    pub root_type: String,
    pub weight: Vec<i64>,
    pub dim_module: u64,
    pub weights: Vec<WeightRow>,
}

pub fn cmd_weights(args: &ModuleArgs) -> Result<WeightTable> {
    let (datum, lambda) = module(args.series, args.rank, &args.weight)?;
    let ws = weight_system(&datum, &lambda, args.run.options(crate::weightsys::DEFAULT_DIM_CAP).dim_cap)?;
    let mut weights: Vec<WeightRow> = ws
        .entries()
        .iter()
        .map(|(mu, &m)| {
            let w = datum.weight_from_euclid(mu)?;
            Ok(WeightRow { fw: w.fw_coords, euclid: mu.coords().iter().map(format_rational).collect(), multiplicity: m })
        })
        .collect::<Result<_>>()?;
    weights.reverse();
    Ok(WeightTable {
        schema: SCHEMA.into(),
        root_type: datum.root_type().to_string(),
        weight: args.weight.clone(),
        dim_module: ws.dim(),
        weights,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRow {
    pub entry: String,
    #[serde(rename = "type")]
    pub root_type: String,
    pub weight: Vec<i64>,
    pub lists: Vec<String>,
    pub dim_module: u64,
    pub trdeg_class: String,
    pub expected_components: u64,
    pub expected_dim_nullcone: Option<u64>,
    pub stated_dim_nullcone: Option<u64>,
    pub caveat: Option<String>,
}

pub fn cmd_list_catalog(args: &ListArgs) -> Result<Vec<CatalogRow>> {
    if args.max_rank == 0 {
        return Err(Error::Catalog("max-rank must be positive".into()));
    }
    catalog::entries(args.max_rank)
        .iter()
        .map(|e| {
            let info = catalog_info(e)?;
            Ok(CatalogRow {
                entry: e.to_string(),
                root_type: e.root_type.to_string(),
                weight: e.highest.clone(),
                lists: info.lists,
                dim_module: e.dim_module()?,
                trdeg_class: info.trdeg_class,
                expected_components: info.expected_components,
                expected_dim_nullcone: info.expected_dim_nullcone,
                stated_dim_nullcone: info.stated_dim_nullcone,
                caveat: info.caveat,
            })
        })
        .collect()
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".into(), ToString::to_string)
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serialisable") + "\n"
}

fn csv(v: &[i64]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Pads columns to a common width.
fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn tsv(rows: &[Vec<String>]) -> String {
    rows.iter().map(|r| r.join("\t") + "\n").collect()
}

pub fn render_report(r: &Report, format: Format) -> String {
    let head = ["dim", "dim_L", "flag", "norm2", "lambda"];
    let rows: Vec<Vec<String>> = r
        .strata
        .iter()
        .map(|s| {
            vec![
                s.dim_total.to_string(),
                s.dim_l.to_string(),
                s.dim_flag.to_string(),
                s.norm2.clone(),
                format!("({})", s.lambda.join(", ")),
            ]
        })
        .collect();
    match format {
        Format::Json => json(r),
        Format::Tsv => {
            let mut all = vec![["type", "weight", "dim_module", "dim_nullcone", "num_components"]
                .iter()
                .chain(&["dim_total", "dim_l", "dim_flag", "norm2", "lambda", "maximal"])
                .map(ToString::to_string)
                .collect::<Vec<_>>()];
            for s in &r.strata {
                all.push(vec![
                    r.root_type.clone(),
                    csv(&r.weight),
                    r.dim_module.to_string(),
                    r.dim_nullcone.to_string(),
                    r.num_components.to_string(),
                    s.dim_total.to_string(),
                    s.dim_l.to_string(),
                    s.dim_flag.to_string(),
                    s.norm2.clone(),
                    s.lambda.join(","),
                    (s.dim_total == r.dim_nullcone).to_string(),
                ]);
            }
            tsv(&all)
        }
        Format::Table => {
            let mut out = String::new();
            let _ = writeln!(out, "module      ({}, {})", r.root_type, weight_label(&r.weight));
            let _ = writeln!(out, "dim V       {}", r.dim_module);
            let _ = writeln!(out, "dim N       {}", r.dim_nullcone);
            let _ = writeln!(out, "components  {}", r.num_components);
            match &r.catalog {
                Some(c) => {
                    let _ = writeln!(
                        out,
                        "catalog     lists {}; expected {} component(s), dim N {}",
                        c.lists.join(","),
                        c.expected_components,
                        opt(&c.expected_dim_nullcone)
                    );
                    if let (Some(v), Some(why)) = (c.stated_dim_nullcone, &c.caveat) {
                        let _ = writeln!(out, "            stated dim N {v} not checked: {why}");
                    }
                }
                None => {
                    let _ = writeln!(out, "scope       {}", r.scope);
                }
            }
            let _ = writeln!(out, "\nstrata ({})", r.strata.len());
            let mut t = vec![head.iter().map(ToString::to_string).collect()];
            t.extend(rows);
            out.push_str(&table(&t));
            let _ = writeln!(
                out,
                "\nsubsets visited {} (budget {}), candidates examined {}",
                r.budget.subsets_visited, r.budget.max_subsets, r.budget.candidates_examined
            );
            if let Some(ms) = r.timing_ms {
                let _ = writeln!(out, "time {ms} ms");
            }
            out
        }
    }
}

pub fn render_verify(v: &VerifySummary, format: Format) -> String {
    let head: Vec<String> = ["status", "entry", "lists", "dim V", "dim N", "expected", "comps", "expected", "note"]
        .iter()
        .map(ToString::to_string)
        .collect();
    let rows: Vec<Vec<String>> = v
        .rows
        .iter()
        .map(|r| {
            vec![
                format!("{:?}", r.status).to_uppercase(),
                r.entry.clone(),
                r.lists.join(","),
                r.dim_module.to_string(),
                opt(&r.dim_nullcone),
                opt(&r.expected_dim_nullcone),
                opt(&r.num_components),
                r.expected_components.to_string(),
                r.note.clone(),
            ]
        })
        .collect();
    match format {
        Format::Json => json(v),
        Format::Tsv => {
            let mut all = vec![head.iter().map(|h| h.replace(' ', "_")).collect::<Vec<_>>()];
            all[0][5] = "expected_dim".into();
            all[0][7] = "expected_comps".into();
            all.extend(rows);
            tsv(&all)
        }
        Format::Table => {
            let mut t = vec![head];
            t.extend(rows);
            let mut out = table(&t);
            let _ = writeln!(
                out,
                "\n{} passed, {} failed, {} skipped, {} over budget (max rank {}, dim cap {})",
                v.passed, v.failed, v.skipped, v.over_budget, v.max_rank, v.dim_cap
            );
            if let Some(ms) = v.timing_ms {
                let _ = writeln!(out, "time {ms} ms");
            }
            out
        }
    }
}

pub fn render_weights(w: &WeightTable, format: Format) -> String {
    let rows: Vec<Vec<String>> = w
        .weights
        .iter()
        .map(|r| vec![csv(&r.fw), r.euclid.join(","), r.multiplicity.to_string()])
        .collect();
    match format {
        Format::Json => json(w),
        Format::Tsv => {
            let mut all = vec![vec!["fw".into(), "euclid".into(), "multiplicity".into()]];
            all.extend(rows);
            tsv(&all)
        }
        Format::Table => {
            let mut out = format!(
                "module ({}, {}), dim {}, {} distinct weights\n\n",
                w.root_type,
                weight_label(&w.weight),
                w.dim_module,
                w.weights.len()
            );
            let mut t = vec![vec!["fundamental".into(), "euclidean".into(), "mult".into()]];
            t.extend(rows.into_iter().map(|r| vec![format!("({})", r[0]), format!("({})", r[1]), r[2].clone()]));
            out.push_str(&table(&t));
            out
        }
    }
}

pub fn render_catalog(rows: &[CatalogRow], format: Format) -> String {
    let head: Vec<String> = ["entry", "lists", "dim V", "trdeg", "comps", "dim N", "stated", "caveat"]
        .iter()
        .map(ToString::to_string)
        .collect();
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.entry.clone(),
                r.lists.join(","),
                r.dim_module.to_string(),
                r.trdeg_class.clone(),
                r.expected_components.to_string(),
                opt(&r.expected_dim_nullcone),
                opt(&r.stated_dim_nullcone),
                r.caveat.clone().unwrap_or_default(),
            ]
        })
        .collect();
    match format {
        Format::Json => json(&rows),
        Format::Tsv => {
            let mut all = vec![head.iter().map(|h| h.replace(' ', "_")).collect()];
            all.extend(body);
            tsv(&all)
        }
        Format::Table => {
            let mut t = vec![head];
            t.extend(body);
            table(&t)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SubsetBudget { .. } | Error::DimensionCap { .. } | Error::OrbitCap { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

/// Parses arguments, runs the command and writes to stdout and stderr.
/// Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = match &cli.command {
        Command::Analyze(a) => cmd_analyze(a).map(|r| (render_report(&r, a.run.format), EXIT_OK)),
        Command::Verify(a) => cmd_verify(a).map(|v| (render_verify(&v, a.run.format), v.exit_code())),
        Command::Weights(a) => cmd_weights(a).map(|w| (render_weights(&w, a.run.format), EXIT_OK)),
        Command::ListCatalog(a) => cmd_list_catalog(a).map(|c| (render_catalog(&c, a.format), EXIT_OK)),
    };
    match result {
        Ok((text, code)) => {
            print!("{text}");
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn module_args(series: Series, rank: usize, weight: &[i64]) -> ModuleArgs {
        ModuleArgs {
            series,
            rank,
            weight: weight.to_vec(),
            run: RunArgs { format: Format::Json, threads: 0, max_subsets: 1_000_000, dim_cap: None, timing: false },
        }
    }

    #[test]
    fn rationals_round_trip() {
        for s in ["3/1", "-1/2", "0/1", "7/3"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn analyze_examples() {
        let r = cmd_analyze(&module_args(Series::A, 3, &[0, 2, 0])).unwrap();
        assert_eq!(r.num_components, 2);
        let r = cmd_analyze(&module_args(Series::A, 1, &[1])).unwrap();
        assert_eq!((r.dim_nullcone, r.num_components), (2, 1));
        let r = cmd_analyze(&module_args(Series::G, 2, &[1, 0])).unwrap();
        assert_eq!((r.dim_nullcone, r.num_components), (6, 1));
        assert_eq!(r.scope, "catalog");
    }

    #[test]
    fn non_catalog_scope() {
        let r = cmd_analyze(&module_args(Series::A, 2, &[2, 1])).unwrap();
        assert_eq!(r.scope, NON_CATALOG_SCOPE);
        assert!(render_report(&r, Format::Table).contains(NON_CATALOG_SCOPE));
    }

    #[test]
    fn report_json_round_trips() {
        let r = cmd_analyze(&module_args(Series::B, 3, &[0, 0, 1])).unwrap();
        let back: Report = serde_json::from_str(&render_report(&r, Format::Json)).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn weights_examples() {
        assert_eq!(cmd_weights(&module_args(Series::A, 1, &[4])).unwrap().weights.len(), 5);
        let w = cmd_weights(&module_args(Series::A, 2, &[1, 1])).unwrap();
        assert_eq!(w.weights.len(), 7);
        assert_eq!(w.weights.iter().find(|r| r.fw == [0, 0]).unwrap().multiplicity, 2);
        assert_eq!(cmd_weights(&module_args(Series::B, 3, &[0, 0, 1])).unwrap().weights.len(), 8);
    }

    #[test]
    fn verify_tiny_cap_skips() {
        let args = VerifyArgs {
            max_rank: 3,
            run: RunArgs { format: Format::Table, threads: 0, max_subsets: 1_000_000, dim_cap: Some(5), timing: false },
        };
        let v = cmd_verify(&args).unwrap();
        assert_eq!(v.failed, 0);
        assert!(v.skipped > 0);
        assert!(v.rows.iter().all(|r| (r.status == Status::Skipped) == (r.dim_module > 5)));
        assert_eq!(v.exit_code(), EXIT_OK);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["nullcone", "analyze", "--type", "A", "--rank", "1", "--weight", "1"]), EXIT_OK);
        assert_eq!(run(["nullcone", "analyze", "--type", "B", "--rank", "2", "--weight", "1,0"]), EXIT_USAGE);
        assert_eq!(run(["nullcone", "analyze", "--type", "A", "--rank", "2", "--weight", "1"]), EXIT_USAGE);
        assert_eq!(run(["nullcone", "frobnicate"]), EXIT_USAGE);
        let budget = ["nullcone", "analyze", "--type", "D", "--rank", "4", "--weight", "2,0,0,0", "--max-subsets", "5"];
        assert_eq!(run(budget), EXIT_BUDGET);
        let cap = ["nullcone", "weights", "--type", "E", "--rank", "8", "--weight", "0,0,0,0,0,0,0,1", "--dim-cap", "10"];
        assert_eq!(run(cap), EXIT_BUDGET);
    }
}
