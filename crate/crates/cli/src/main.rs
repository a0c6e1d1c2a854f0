use std::io::Write;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use repwords::constructors::{pipeline_123, represent, Avoidance, Certificate};
use repwords::geometry::render::{
    hook_records, hook_svg, hook_tikz, interval_records, interval_svg, interval_tikz, mpt_records, mpt_svg,
    mpt_tikz,
};
use repwords::geometry::{build_co132_interval_model, co132_word};
use repwords::oracle::{census, crossvalidate, CensusConfig, CensusRow, CrossRow, SearchBudget};
use repwords::patterns::catalog::FP132;
use repwords::patterns::find_any;
use repwords::Jobs;
use serde_json::json;

mod input;
mod selftest;

use input::GraphInput;

const EXIT_USAGE: u8 = 64;

#[derive(Debug, Parser)]
#[command(name = "repwords", version, about = "12-representation of labeled graphs by pattern-avoiding words")]
struct Cli {
    /// Worker threads; 0 uses every core. REPWORDS_JOBS takes precedence.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide representability, falling back to the word search when needed.
    Check(CheckArgs),
    /// Build a representant; the word search runs only with --oracle.
    Represent(RepresentArgs),
    /// Count representable graphs on n vertices.
    Census(CensusArgs),
    /// Compare pattern decisions, constructors, and word search on every labeled graph.
    Crossvalidate(CrossArgs),
    /// Emit the geometric model behind a 123 or 132 representant.
    Model(ModelArgs),
    /// Randomized consistency checks.
    Selftest(SelftestArgs),
}

#[derive(Debug, Args)]
struct BudgetArgs {
    /// Largest graph the word search accepts.
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    /// Copies of each letter the word search may use.
    #[arg(long, default_value_t = 2)]
    max_occurrences: usize,
    /// Wall-clock cap for one word search.
    #[arg(long)]
    time_limit_ms: Option<u64>,
}

impl BudgetArgs {
    fn budget(&self) -> Result<SearchBudget> {
        if self.max_occurrences == 0 {
            bail!("--max-occurrences must be at least 1");
        }
        let mut b = SearchBudget::default().with_max_n(self.max_n).with_max_occurrences(self.max_occurrences);
        if let Some(ms) = self.time_limit_ms {
            b = b.with_time_limit(Duration::from_millis(ms));
        }
        Ok(b)
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CertFormat {
    Json,
    Text,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[command(flatten)]
    graph: GraphInput,
    /// `none`, a pattern such as `123`, or a set such as `set:121+212`.
    #[arg(long, short, default_value = "none")]
    pattern: String,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long, value_enum, default_value_t = CertFormat::Json)]
    format: CertFormat,
}

#[derive(Debug, Args)]
struct RepresentArgs {
    #[command(flatten)]
    check: CheckArgs,
    /// Allow the word search for patterns without a characterization.
    #[arg(long)]
    oracle: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct CensusArgs {
    #[arg(long)]
    n: usize,
    /// Pattern selectors, comma separated or repeated.
    #[arg(long = "pattern", alias = "patterns", value_delimiter = ',', required = true)]
    patterns: Vec<String>,
    /// Largest n for the word search column.
    #[arg(long, default_value_t = 5)]
    oracle_max_n: usize,
    /// Largest n for the pattern column.
    #[arg(long, default_value_t = 6)]
    pattern_max_n: usize,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Report 0 for wall_time_ms so output is reproducible.
    #[arg(long)]
    no_timing: bool,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,
}

#[derive(Debug, Args)]
struct CrossArgs {
    #[arg(long)]
    n: usize,
    #[arg(long = "patterns", alias = "pattern", value_delimiter = ',', default_value = "121,231,123,132,211")]
    patterns: Vec<String>,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelKind {
    /// Unit hooks of the 123 construction.
    Hook,
    /// Max point-tolerance model of the complement, before adjustment.
    Mpt,
    /// The same model with every one-sided interval of length 1.
    Unit,
    /// Interval model of the complement used by the 132 construction.
    Interval,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModelFormat {
    Svg,
    Tikz,
    Json,
}

#[derive(Debug, Args)]
struct ModelArgs {
    #[command(flatten)]
    graph: GraphInput,
    #[arg(long, value_enum)]
    kind: ModelKind,
    #[arg(long, value_enum, default_value_t = ModelFormat::Svg)]
    format: ModelFormat,
}

#[derive(Debug, Args)]
struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    cases: usize,
    /// Largest generated graph.
    #[arg(long, default_value_t = 7)]
    max_vertices: usize,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let jobs = Jobs::from_env_or(Jobs(cli.jobs));
    match run(cli.command, jobs) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let budget = e.chain().any(|c| matches!(c.downcast_ref(), Some(repwords::Error::Budget(_))));
            ExitCode::from(if budget { 2 } else { EXIT_USAGE })
        }
    }
}

fn run(cmd: Command, jobs: Jobs) -> Result<u8> {
    match cmd {
        Command::Check(a) => {
            let budget = a.budget.budget()?;
            certify(&a, Some(&budget))
        }
        Command::Represent(a) => {
            let budget = a.check.budget.budget()?;
            certify(&a.check, a.oracle.then_some(&budget))
        }
        Command::Census(a) => cmd_census(&a, jobs),
        Command::Crossvalidate(a) => cmd_crossvalidate(&a, jobs),
        Command::Model(a) => cmd_model(&a),
        Command::Selftest(a) => cmd_selftest(&a),
    }
}

fn parse_avoidance(s: &str) -> Result<Avoidance> {
    s.parse().with_context(|| format!("bad pattern selector {s:?}"))
}

fn certify(a: &CheckArgs, oracle: Option<&SearchBudget>) -> Result<u8> {
    let g = a.graph.load()?;
    let avoid = parse_avoidance(&a.pattern)?;
    let cert = represent(&g, &avoid, oracle);
    let mut out = std::io::stdout().lock();
    match a.format {
        CertFormat::Json => writeln!(out, "{}", serde_json::to_string(&cert)?)?,
        CertFormat::Text => writeln!(out, "{}", cert_text(&cert))?,
    }
    Ok(cert.exit_code() as u8)
}

fn cert_text(c: &Certificate) -> String {
    match c {
        Certificate::Represented { word, avoided, method } => {
            let pats: Vec<String> = avoided.iter().map(|p| p.to_string()).collect();
            let avoids = if pats.is_empty() { String::new() } else { format!(" avoiding {}", pats.join(", ")) };
            format!("represented by {}{avoids} ({method:?})", word.compact()).to_lowercase()
        }
        Certificate::Refuted(w) => format!("refuted: {} at {:?}", w.pattern, w.vertices),
        Certificate::RefutedByOracle { budget } => format!(
            "refuted by exhaustive search (at most {} copies per letter)",
            budget.max_occurrences
        ),
        Certificate::Unknown { reason } => format!("unknown: {reason}"),
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn cmd_census(a: &CensusArgs, jobs: Jobs) -> Result<u8> {
    let pats = a.patterns.iter().map(|s| parse_avoidance(s)).collect::<Result<Vec<_>>>()?;
    let budget = a.budget.budget()?;
    let cfg = CensusConfig { budget, oracle_max_n: a.oracle_max_n, pattern_max_n: a.pattern_max_n, jobs };
    let mut rows = census(a.n, &pats, &cfg)?;
    if a.no_timing {
        rows.iter_mut().for_each(|r| r.wall_time_ms = 0);
    }
    let mut out = std::io::stdout().lock();
    match a.format {
        TableFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?,
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            for r in &rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        TableFormat::Text => census_text(&mut out, &rows)?,
    }
    Ok(if rows.iter().any(|r| r.agree == Some(false)) { 1 } else { 0 })
}

fn census_text(out: &mut impl Write, rows: &[CensusRow]) -> Result<()> {
    writeln!(out, "n  pattern       labeled(pattern)  labeled(oracle)  unlabeled  agree  ms")?;
    for r in rows {
        writeln!(
            out,
            "{:<2} {:<13} {:>8} / {:<6} {:>8} / {:<5} {:>4} / {:<3} {:<6} {}",
            r.n,
            r.pattern,
            opt(&r.labeled_count_pattern),
            r.labeled_total,
            opt(&r.labeled_count_oracle),
            r.labeled_total,
            r.unlabeled_count,
            r.unlabeled_total,
            opt(&r.agree),
            r.wall_time_ms
        )?;
    }
    Ok(())
}

fn cmd_crossvalidate(a: &CrossArgs, jobs: Jobs) -> Result<u8> {
    let budget = a.budget.budget()?;
    let mut rows: Vec<CrossRow> = Vec::new();
    for p in &a.patterns {
        let avoid = parse_avoidance(p)?;
        rows.push(crossvalidate(a.n, &avoid, &budget, jobs)?);
    }
    let mut out = std::io::stdout().lock();
    match a.format {
        TableFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?,
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(["n", "pattern", "graphs", "representable", "disagreements"])?;
            for r in &rows {
                w.write_record([
                    r.n.to_string(),
                    r.pattern.clone(),
                    r.graphs.to_string(),
                    r.representable.to_string(),
                    r.disagreements.len().to_string(),
                ])?;
            }
            w.flush()?;
        }
        TableFormat::Text => {
            writeln!(out, "n  pattern       graphs  representable  disagreements")?;
            for r in &rows {
                writeln!(
                    out,
                    "{:<2} {:<13} {:>6}  {:>13}  {:>13}",
                    r.n,
                    r.pattern,
                    r.graphs,
                    r.representable,
                    r.disagreements.len()
                )?;
                for d in &r.disagreements {
                    writeln!(out, "   disagreement: {d}")?;
                }
            }
        }
    }
    Ok(if rows.iter().all(CrossRow::agree) { 0 } else { 1 })
}

fn cmd_model(a: &ModelArgs) -> Result<u8> {
    let g = a.graph.load()?;
    let mut out = std::io::stdout().lock();
    if a.kind == ModelKind::Interval {
        if let Some(w) = find_any(&g, FP132.iter().take(1)) {
            eprintln!("no interval model: {} at {:?}", w.pattern, w.vertices);
            return Ok(1);
        }
        let m = build_co132_interval_model(&g)?;
        let text = match a.format {
            ModelFormat::Svg => interval_svg(&m),
            ModelFormat::Tikz => interval_tikz(&m),
            ModelFormat::Json => {
                let word = co132_word(&m)?;
                let v = json!({
                    "kind": "interval",
                    "anchors": m.anchors(),
                    "intervals": interval_records(&m),
                    "word": word.compact(),
                });
                serde_json::to_string_pretty(&v)? + "\n"
            }
        };
        out.write_all(text.as_bytes())?;
        return Ok(0);
    }
    let pipe = match pipeline_123(&g) {
        Ok(p) => p,
        Err(w) => {
            eprintln!("no 123 model: {} at {:?}", w.pattern, w.vertices);
            return Ok(1);
        }
    };
    let text = match (a.kind, a.format) {
        (ModelKind::Hook, ModelFormat::Svg) => hook_svg(&pipe.hooks),
        (ModelKind::Hook, ModelFormat::Tikz) => hook_tikz(&pipe.hooks),
        (ModelKind::Mpt, ModelFormat::Svg) => mpt_svg(&pipe.mpt),
        (ModelKind::Mpt, ModelFormat::Tikz) => mpt_tikz(&pipe.mpt),
        (ModelKind::Unit, ModelFormat::Svg) => mpt_svg(&pipe.unit),
        (ModelKind::Unit, ModelFormat::Tikz) => mpt_tikz(&pipe.unit),
        (kind, ModelFormat::Json) => {
            let records = match kind {
                ModelKind::Hook => hook_records(&pipe.hooks),
                ModelKind::Mpt => mpt_records(&pipe.mpt),
                _ => mpt_records(&pipe.unit),
            };
            let name = format!("{kind:?}").to_lowercase();
            let v = json!({ "kind": name, "model": records, "word": pipe.word.compact() });
            serde_json::to_string_pretty(&v)? + "\n"
        }
        (ModelKind::Interval, _) => unreachable!("handled above"),
    };
    out.write_all(text.as_bytes())?;
    Ok(0)
}

fn cmd_selftest(a: &SelftestArgs) -> Result<u8> {
    let budget = SearchBudget::default();
    let report = selftest::run(a.seed, a.cases, a.max_vertices, &budget);
    println!(
        "seed {}: {} cases, {} represented, {} refuted, {} unknown, {} failures",
        a.seed,
        report.cases,
        report.represented,
        report.refuted,
        report.unknown,
        report.failures.len()
    );
    for f in &report.failures {
        println!("failure: {f}");
    }
    Ok(if report.failures.is_empty() { 0 } else { 1 })
}
