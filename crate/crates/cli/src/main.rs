//! `sortforge`: run the law catalog, sort key streams, time the variants,
//! and search for the recorded counterexamples.
//!
//! Exit codes: 0 when everything passed (confirmed expected failures count
//! as passing), 1 when at least one check failed, 2 for usage or parse
//! errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sortforge_core::bench::{
    run_bench, run_sort, summarize, to_csv, Algorithm, BenchConfig, BenchRecord, BenchSummary,
    InputOrder, Variant,
};
use sortforge_core::corpus::CorpusConfig;
use sortforge_core::laws::{find_counterexample, run_checks, WitnessTarget};
use sortforge_core::report::CheckReport;
use sortforge_core::trees::Key;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "sortforge",
    version,
    about = "Checkable sorting algorithms derived from one insertion-sort specification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run law checks over the configured corpora
    Check(CheckArgs),
    /// Sort a stream of keys, one decimal 64-bit integer per line
    Sort(SortArgs),
    /// Time the sorting variants on seeded input
    Bench(BenchArgs),
    /// Brute-force search for the smallest tree breaking a law
    Counterexample(CounterexampleArgs),
}

#[derive(Args)]
struct CheckArgs {
    /// Comma-separated law ids to run (see the README for the catalog)
    #[arg(long, value_delimiter = ',', conflicts_with = "all")]
    laws: Option<Vec<String>>,
    /// Run the whole catalog (the default when --laws is absent)
    #[arg(long)]
    all: bool,
    /// Exhaustive corpus: all lists up to this length
    #[arg(long, default_value_t = 8)]
    max_len: usize,
    /// Exhaustive corpus: keys 0..K
    #[arg(long, default_value_t = 4)]
    alphabet: u64,
    /// Number of seeded random lists
    #[arg(long, default_value_t = 10_000)]
    random_cases: usize,
    /// Longest random list
    #[arg(long, default_value_t = 256)]
    max_random_len: usize,
    /// Corpus seed (default: $SORTFORGE_SEED, else 0)
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Args)]
struct SortArgs {
    #[arg(long, value_enum)]
    algorithm: AlgorithmArg,
    #[arg(long, value_enum)]
    variant: VariantArg,
    /// Input file (default: stdin)
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output file (default: stdout)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated list lengths to time
    #[arg(long, required = true, value_delimiter = ',')]
    sizes: Vec<usize>,
    /// Repetitions per point (at least 3; the summary takes the median)
    #[arg(long, default_value_t = 5)]
    reps: u64,
    /// Input seed (default: $SORTFORGE_SEED, else 0)
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = BenchFormat::Csv)]
    format: BenchFormat,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Algorithms to time (default: all four)
    #[arg(long, value_delimiter = ',', value_enum)]
    algorithms: Option<Vec<AlgorithmArg>>,
    /// Variants to route through (default: deforested)
    #[arg(long, value_delimiter = ',', value_enum)]
    variants: Option<Vec<VariantArg>>,
    /// Arrangement of the timed lists
    #[arg(long, value_enum, default_value_t = OrderArg::Random)]
    input_order: OrderArg,
}

#[derive(Args)]
struct CounterexampleArgs {
    /// The law to search against (only tl2-universal has a search)
    #[arg(long)]
    law: String,
    #[arg(long, value_enum)]
    container: ContainerArg,
    /// Largest tree size to enumerate (1..=6)
    #[arg(long, default_value_t = 4)]
    max_nodes: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Msort,
    Hsort,
    Qsort,
    Isort,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Algorithm {
        match a {
            AlgorithmArg::Msort => Algorithm::Msort,
            AlgorithmArg::Hsort => Algorithm::Hsort,
            AlgorithmArg::Qsort => Algorithm::Qsort,
            AlgorithmArg::Isort => Algorithm::Isort,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Spec,
    Fold,
    Hylo,
    Deforested,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Spec => Variant::Spec,
            VariantArg::Fold => Variant::Fold,
            VariantArg::Hylo => Variant::Hylo,
            VariantArg::Deforested => Variant::Deforested,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ContainerArg {
    Heap,
    Bst,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Random,
    Sorted,
}

/// A usage or input error: printed to stderr, exit code 2.
struct UsageError(String);

impl<T: std::fmt::Display> From<T> for UsageError {
    fn from(e: T) -> UsageError {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Check(args) => cmd_check(args),
        Command::Sort(args) => cmd_sort(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Counterexample(args) => cmd_counterexample(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Default seed: $SORTFORGE_SEED when set (decimal), otherwise 0.
fn resolve_seed(flag: Option<u64>) -> Result<u64, UsageError> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("SORTFORGE_SEED") {
        Ok(raw) => raw
            .parse()
            .map_err(|_| UsageError(format!("SORTFORGE_SEED must be a decimal u64, got `{raw}`"))),
        Err(_) => Ok(0),
    }
}

#[derive(Serialize)]
struct CheckOutput<'a> {
    config: &'a CorpusConfig,
    reports: &'a [CheckReport],
}

fn cmd_check(args: CheckArgs) -> Result<u8, UsageError> {
    let config = CorpusConfig {
        max_len: args.max_len,
        alphabet_size: args.alphabet,
        random_cases: args.random_cases,
        max_random_len: args.max_random_len,
        seed: resolve_seed(args.seed)?,
    };
    let reports = run_checks(&config, args.laws.as_deref())?;
    match args.format {
        ReportFormat::Text => {
            for r in &reports {
                println!("{}", r.text_line());
            }
            let passed = reports.iter().filter(|r| r.status == sortforge_core::CheckStatus::Pass).count();
            let confirmed = reports
                .iter()
                .filter(|r| r.status == sortforge_core::CheckStatus::ExpectedFailConfirmed)
                .count();
            let failed = reports.len() - passed - confirmed;
            println!(
                "{} laws: {passed} passed, {confirmed} expected failures confirmed, {failed} failed",
                reports.len()
            );
        }
        ReportFormat::Json => {
            let out = CheckOutput { config: &config, reports: &reports };
            println!("{}", serde_json::to_string_pretty(&out).expect("reports serialize"));
        }
    }
    Ok(if reports.iter().all(|r| r.ok()) { 0 } else { 1 })
}

fn read_keys(args: &SortArgs) -> Result<Vec<Key>, UsageError> {
    let raw = match &args.input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| UsageError(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    let mut keys = Vec::new();
    for (i, line) in raw.lines().enumerate() {
        let key = line.trim().parse::<Key>().map_err(|_| {
            UsageError(format!(
                "line {}: expected one decimal 64-bit signed integer, got `{line}`",
                i + 1
            ))
        })?;
        keys.push(key);
    }
    Ok(keys)
}

fn cmd_sort(args: SortArgs) -> Result<u8, UsageError> {
    let keys = read_keys(&args)?;
    let sorted = run_sort(args.algorithm.into(), args.variant.into(), &keys);
    let mut rendered = String::with_capacity(sorted.len() * 4);
    for k in sorted {
        rendered.push_str(&k.to_string());
        rendered.push('\n');
    }
    match &args.output {
        Some(path) => fs::write(path, rendered)
            .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display())))?,
        None => {
            std::io::stdout()
                .write_all(rendered.as_bytes())
                .map_err(|e| UsageError(format!("cannot write stdout: {e}")))?;
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct BenchOutput<'a> {
    records: &'a [BenchRecord],
    summary: &'a [BenchSummary],
}

fn cmd_bench(args: BenchArgs) -> Result<u8, UsageError> {
    let mut config = BenchConfig::new(args.sizes, args.reps, resolve_seed(args.seed)?);
    if let Some(algorithms) = args.algorithms {
        config.algorithms = algorithms.into_iter().map(Algorithm::from).collect();
    }
    if let Some(variants) = args.variants {
        config.variants = variants.into_iter().map(Variant::from).collect();
    }
    config.input_order = match args.input_order {
        OrderArg::Random => InputOrder::Random,
        OrderArg::Sorted => InputOrder::Sorted,
    };
    let records = run_bench(&config)?;
    for r in &records {
        if let Some(e) = &r.error {
            eprintln!("error: {}/{} n={} rep={}: {e}", r.algorithm, r.variant, r.n, r.rep);
        }
    }
    let summary = summarize(&records);
    for s in &summary {
        if s.noisy {
            eprintln!(
                "warning: {}/{} n={}: repetitions spread {}% of the median ({} ns), \
                 above the 20% noise threshold",
                s.algorithm, s.variant, s.n, s.spread_percent, s.median_nanos
            );
        }
    }
    let rendered = match args.format {
        BenchFormat::Csv => to_csv(&records),
        BenchFormat::Json => {
            let out = BenchOutput { records: &records, summary: &summary };
            let mut s = serde_json::to_string_pretty(&out).expect("records serialize");
            s.push('\n');
            s
        }
    };
    match &args.out {
        Some(path) => fs::write(path, rendered)
            .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display())))?,
        None => {
            std::io::stdout()
                .write_all(rendered.as_bytes())
                .map_err(|e| UsageError(format!("cannot write stdout: {e}")))?;
        }
    }
    Ok(0)
}

fn cmd_counterexample(args: CounterexampleArgs) -> Result<u8, UsageError> {
    if args.law != "tl2-universal" {
        return Err(UsageError(format!(
            "no counterexample search for law `{}`; only tl2-universal has one",
            args.law
        )));
    }
    let target = match args.container {
        ContainerArg::Heap => WitnessTarget::Heap,
        ContainerArg::Bst => WitnessTarget::Bst,
    };
    let report = find_counterexample(target, args.max_nodes)?;
    println!("{}", report.text_line());
    Ok(if report.ok() { 0 } else { 1 })
}
