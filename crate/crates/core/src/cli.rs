//! Command-line front end: `analyze`, `verify` and `table`.
//!
//! Exit codes: 0 on success, 1 when a verified check fails, 2 on usage or
//! load errors.

use std::ffi::OsString;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::corpus::{builtin, load_group, CorpusConfig};
use crate::group::{FiniteGroup, DEFAULT_ELEMENT_CAP};
use crate::lab::{conciseness_table, run_suite, summarize, CheckId, CorpusEntry, Status, SuiteConfig};
use crate::report::{emit_report, emit_table, Format};
use crate::star::{star_set, StarVariant};

pub const MAX_ORDER_ENV: &str = "STARCOMM_MAX_ORDER";

#[derive(Parser, Debug)]
#[command(name = "starcomm", version, about = "Coprime commutator sets of finite permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Star-commutator sets of a single group, level by level.
    Analyze(AnalyzeArgs),
    /// Run lemma checks over a corpus and emit a report.
    Verify(VerifyArgs),
    /// Conciseness measurements (set size against subgroup order) over a corpus.
    Table(TableArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GroupSource {
    /// JSON group file.
    #[arg(long, value_name = "FILE")]
    group: Option<PathBuf>,
    /// Builtin group such as `symmetric:4` or `product(cyclic:2,sl23)`.
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct CorpusSource {
    /// Directory of JSON group files.
    #[arg(long, value_name = "DIR")]
    corpus: Option<PathBuf>,
    /// The built-in corpus.
    #[arg(long)]
    builtin_corpus: bool,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    #[command(flatten)]
    source: GroupSource,
    #[arg(long)]
    variant: StarVariant,
    /// Highest level to compute.
    #[arg(long)]
    k: usize,
    /// Emit JSON including the commutators in cycle notation.
    #[arg(long)]
    json: bool,
    /// Element cap (overrides STARCOMM_MAX_ORDER).
    #[arg(long)]
    max_order: Option<usize>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// `all` or a comma-separated list of check ids.
    #[arg(long, default_value = "all")]
    suite: String,
    #[command(flatten)]
    source: CorpusSource,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Element cap (overrides STARCOMM_MAX_ORDER); setting it also adds the
    /// larger built-in groups that fit.
    #[arg(long)]
    max_order: Option<usize>,
    #[arg(long, default_value_t = 5)]
    k_max: usize,
    #[arg(long, default_value = "csv")]
    format: Format,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long)]
    variant: StarVariant,
    #[arg(long, default_value_t = 5)]
    k_max: usize,
    #[command(flatten)]
    source: CorpusSource,
    /// Element cap (overrides STARCOMM_MAX_ORDER).
    #[arg(long)]
    max_order: Option<usize>,
    /// Only csv is supported.
    #[arg(long, default_value = "csv")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug)]
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

/// Parses `argv` (program name first), runs the command and returns the exit code.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = match cli.command {
        Command::Analyze(args) => analyze(args),
        Command::Verify(args) => verify(args),
        Command::Table(args) => table(args),
    };
    match result {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

/// Flag, then environment, then nothing.
fn resolve_max_order(flag: Option<usize>) -> Result<Option<usize>, UsageError> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var(MAX_ORDER_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| UsageError(format!("{MAX_ORDER_ENV}={v} is not a positive integer"))),
        Err(_) => Ok(None),
    }
}

fn load_corpus(source: &CorpusSource, max_order: Option<usize>) -> Result<Vec<CorpusEntry>, UsageError> {
    let cfg = match &source.corpus {
        Some(dir) => CorpusConfig::directory(dir, max_order),
        None => CorpusConfig::builtin_corpus(max_order),
    };
    Ok(cfg.load()?)
}

#[derive(Serialize)]
struct AnalyzeLevel {
    k: usize,
    m: usize,
    subgroup_order: usize,
    commutators: Vec<String>,
}

#[derive(Serialize)]
struct AnalyzeOutput {
    group_id: String,
    order: usize,
    variant: StarVariant,
    levels: Vec<AnalyzeLevel>,
}

fn analyze(args: AnalyzeArgs) -> Result<i32, UsageError> {
    let cap = resolve_max_order(args.max_order)?.unwrap_or(DEFAULT_ELEMENT_CAP);
    let (id, group): (String, Arc<FiniteGroup>) = match (&args.source.group, &args.source.builtin) {
        (Some(path), _) => {
            let e = load_group(path, cap)?;
            (e.id, e.group)
        }
        (None, Some(name)) => (name.clone(), builtin(name, cap)?),
        (None, None) => unreachable!("clap enforces one source"),
    };
    let base = args.variant.base_level();
    if args.k < base {
        return Err(UsageError(format!("--k must be at least {base} for {}", args.variant)));
    }
    let mut levels = Vec::new();
    for k in base..=args.k {
        let set = star_set(&group, args.variant, k)?;
        levels.push(AnalyzeLevel {
            k,
            m: set.size(),
            subgroup_order: set.subgroup().order(),
            commutators: if args.json {
                set.commutators.iter().map(|a| group.element(a).to_cycle_string()).collect()
            } else {
                Vec::new()
            },
        });
    }
    if args.json {
        let out = AnalyzeOutput { group_id: id, order: group.order(), variant: args.variant, levels };
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        println!("group {id} order {}", group.order());
        println!("k\tm\tsubgroup_order");
        for l in &levels {
            println!("{}\t{}\t{}", l.k, l.m, l.subgroup_order);
        }
    }
    Ok(0)
}

fn parse_suite(spec: &str) -> Result<Vec<CheckId>, UsageError> {
    if spec == "all" {
        return Ok(CheckId::ALL.to_vec());
    }
    let mut checks: Vec<CheckId> =
        spec.split(',').map(|s| s.trim().parse::<CheckId>()).collect::<Result<_, _>>()?;
    checks.sort();
    checks.dedup();
    Ok(checks)
}

fn verify(args: VerifyArgs) -> Result<i32, UsageError> {
    if args.k_max == 0 {
        return Err(UsageError("--k-max must be at least 1".into()));
    }
    let checks = parse_suite(&args.suite)?;
    let entries = load_corpus(&args.source, resolve_max_order(args.max_order)?)?;
    let cfg = SuiteConfig { k_max: args.k_max, seed: args.seed, checks };
    let reports = run_suite(&entries, &cfg);
    emit_report(&reports, args.format, args.out.as_deref())?;
    eprintln!("{} groups, {} reports", entries.len(), reports.len());
    for s in summarize(&reports) {
        eprintln!(
            "{:<32} pass {:>5}  fail {:>4}  skipped {:>5}  hit rate {:.3}",
            s.check_id,
            s.pass,
            s.fail,
            s.skipped,
            s.hit_rate()
        );
    }
    Ok(if reports.iter().any(|r| r.status == Status::Fail) { 1 } else { 0 })
}

fn table(args: TableArgs) -> Result<i32, UsageError> {
    if args.k_max == 0 {
        return Err(UsageError("--k-max must be at least 1".into()));
    }
    if args.format != Format::Csv {
        return Err(UsageError("table supports --format csv only".into()));
    }
    let entries = load_corpus(&args.source, resolve_max_order(args.max_order)?)?;
    let rows: Vec<_> = conciseness_table(&entries, args.k_max)
        .into_iter()
        .filter(|r| r.variant == args.variant)
        .collect();
    emit_table(&rows, args.out.as_deref())?;
    Ok(0)
}
