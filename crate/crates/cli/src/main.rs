//! `qcc` — exact clique/chromatic extremal computations on small graphs.
//!
//! Subcommands map onto the library: Ramsey number lookup, inverse
//! Ramsey numbers with witnesses, ground-truth Q(n,c), the partition
//! minimizations, the constructions, and the verification harness.
//! Every exact value printed alongside a witness is re-certified by the
//! exact solvers at output time.

use clap::{Args, Parser, Subcommand, ValueEnum};
use qcc_core::bounds::{verify_theorems, VerificationReport};
use qcc_core::cache::Cache;
use qcc_core::canon;
use qcc_core::construct::{
    join_construction, plan_join, simple_upper_witness, JoinReport, SimpleWitnessReport,
};
use qcc_core::enumerate::DEFAULT_LIMIT;
use qcc_core::qnc::{q_general, q_small, qnc_bruteforce, qnc_formula, qnc_table, PartitionResult};
use qcc_core::ramsey::{
    inverse_ramsey, inverse_ramsey_bruteforce_limited, ramsey_number, ramsey_witness, Method,
    WitnessKind, WitnessRecord, WitnessSearchOptions,
};
use qcc_core::{Error, RationalRate, ValueInterval};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "qcc", version, about = "Exact clique/chromatic extremal computations")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// Cache directory (falls back to $QCC_CACHE_DIR, then memory-only).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for randomized witness search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Wall-clock budget for witness search, in seconds.
    #[arg(long, global = true)]
    time_limit: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    G6,
}

#[derive(Subcommand)]
enum Command {
    /// Classical Ramsey number R(s,t) from the bundled table.
    Ramsey {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    /// Inverse Ramsey number omega(n,k), with a witness when available.
    Omega {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Compute exactly by exhaustive search instead of the table.
        #[arg(long)]
        brute: bool,
        /// Exhaustive-search order limit.
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Minimum clique number over n-vertex graphs of chromatic number c.
    Qnc {
        #[arg(long)]
        n: usize,
        /// One chromatic number; omit with --all for the whole row set.
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        c: Option<usize>,
        /// Compute Q(n,c) for every c = 1..=n (brute force).
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = QncMethod::Auto)]
        method: QncMethod,
        /// Exhaustive-search order limit.
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
        /// Write the table (or witness list with --format g6) here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Partition-minimized q(k) over at most three parts.
    Qsmall {
        #[arg(long)]
        k: usize,
    },
    /// Partition-minimized q(beta, alpha) over all partitions.
    Qgen {
        #[arg(long)]
        beta: usize,
        #[arg(long)]
        alpha: usize,
    },
    /// Build a witness graph for the upper bounds at rate r and order n.
    Construct {
        /// Rate as an exact fraction P/Q.
        #[arg(long)]
        r: RationalRate,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        kind: ConstructKind,
        /// Write the witness graph6 to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify every applicable bound against brute force.
    Verify {
        /// Comma-separated rates, e.g. 1/2,2/5,3/4.
        #[arg(long, value_delimiter = ',')]
        r: Vec<RationalRate>,
        #[arg(long)]
        n_max: usize,
        /// Write the report (CSV by default, JSON with --format json).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Exhaustive-search order limit.
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QncMethod {
    Auto,
    Brute,
    Formula,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstructKind {
    Simple,
    Join,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.global.threads > 0 {
        // Ignore the error if a pool already exists (tests call run twice).
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.global.threads)
            .build_global();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(classify(&e))
        }
    }
}

/// Usage-shaped problems exit 2; search/verification failures exit 1.
fn classify(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(
            Error::Rate(_)
            | Error::Capacity { .. }
            | Error::VertexRange { .. }
            | Error::Domain { .. }
            | Error::ReciprocalRate
            | Error::BelowThreshold { .. }
            | Error::ChromaticTarget { .. }
            | Error::MissingEdge { .. },
        ) => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

/// Raising the search limit past the default is allowed up to order 10,
/// where the catalog has ~12 million classes; say so once.
fn warn_if_over_default(n: usize, limit: usize) {
    if limit > DEFAULT_LIMIT && n > DEFAULT_LIMIT {
        eprintln!(
            "warning: order {n} exhaustive search enumerates ~12M isomorphism classes; \
             expect minutes, not seconds"
        );
    }
}

fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    let cache = Cache::open(cli.global.cache_dir.clone());
    let witness_opts = WitnessSearchOptions {
        seed: cli.global.seed,
        time_limit: cli.global.time_limit.map(Duration::from_secs),
        ..Default::default()
    };
    match &cli.command {
        Command::Ramsey { s, t } => cmd_ramsey(cli, *s, *t),
        Command::Omega { n, k, brute, limit } => {
            cmd_omega(cli, &cache, &witness_opts, *n, *k, *brute, *limit)
        }
        Command::Qnc {
            n,
            c,
            all,
            method,
            limit,
            out,
        } => {
            if *all {
                cmd_qnc_table(cli, *n, *limit, out.as_deref())
            } else {
                cmd_qnc(cli, &cache, *n, c.expect("clap enforces c unless --all"), *method, *limit)
            }
        }
        Command::Qsmall { k } => {
            if *k < 1 {
                anyhow::bail!(Error::Rate("--k must be at least 1".into()));
            }
            emit_partition(cli, "q_small", *k, None, q_small(*k))
        }
        Command::Qgen { beta, alpha } => {
            if *beta < 1 || *alpha < 1 {
                anyhow::bail!(Error::Rate("--beta and --alpha must be at least 1".into()));
            }
            emit_partition(cli, "q_general", *beta, Some(*alpha), q_general(*beta, *alpha))
        }
        Command::Construct { r, n, kind, out } => {
            cmd_construct(cli, &cache, &witness_opts, r, *n, *kind, out.as_deref())
        }
        Command::Verify { r, n_max, out, limit } => {
            cmd_verify(cli, r, *n_max, out.as_deref(), *limit)
        }
    }
}

#[derive(Serialize)]
struct RamseyOutput {
    s: usize,
    t: usize,
    value: ValueInterval,
    exact: bool,
    source: String,
}

fn cmd_ramsey(cli: &Cli, s: usize, t: usize) -> anyhow::Result<ExitCode> {
    if s < 1 || t < 1 {
        anyhow::bail!(Error::Rate("--s and --t must be at least 1".into()));
    }
    let (value, source) = ramsey_number(s, t);
    let out = RamseyOutput {
        s,
        t,
        value,
        exact: value.is_exact(),
        source,
    };
    match cli.global.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&out)?),
        _ => {
            let tag = if out.exact { "exact" } else { "bounds" };
            println!("R({s},{t}) = {} {tag}  [{}]", fmt_interval(&value), out.source);
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct OmegaOutput {
    n: usize,
    k: usize,
    value: ValueInterval,
    exact: bool,
    method: Method,
    witness_g6: Option<String>,
}

fn cmd_omega(
    cli: &Cli,
    cache: &Cache,
    opts: &WitnessSearchOptions,
    n: usize,
    k: usize,
    brute: bool,
    limit: usize,
) -> anyhow::Result<ExitCode> {
    if n < 1 || k < 1 {
        anyhow::bail!(Error::Rate("--n and --k must be at least 1".into()));
    }
    let record: WitnessRecord = if brute {
        warn_if_over_default(n, limit);
        if let Some(rec) = cache.get(WitnessKind::OmegaNk, &[n, k]) {
            rec
        } else {
            let (_, rec) = inverse_ramsey_bruteforce_limited(n, k, limit)?;
            cache.put(&rec)?;
            rec
        }
    } else {
        let value = inverse_ramsey(n, k);
        // Try to attach a certified witness for the upper end without
        // long searches; absence is not an error here.
        let witness_g6 = value.hi.and_then(|hi| {
            let cheap = WitnessSearchOptions {
                skip_local_search: opts.time_limit.is_none(),
                enum_limit: limit,
                ..opts.clone()
            };
            ramsey_witness(n, k, hi, Some(cache), &cheap)
                .ok()
                .map(|g| canon::canonical_g6(&g).expect("witness fits graph6"))
        });
        WitnessRecord {
            kind: WitnessKind::OmegaNk,
            params: vec![n, k],
            value,
            witness_g6,
            method: Method::Table,
        }
    };
    // Never print an uncertified exact claim.
    if record.witness_g6.is_some() {
        record.certify()?;
    }
    let out = OmegaOutput {
        n,
        k,
        value: record.value,
        exact: record.value.is_exact(),
        method: record.method,
        witness_g6: record.witness_g6.clone(),
    };
    match cli.global.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&out)?),
        Format::G6 => {
            let g6 = out
                .witness_g6
                .as_deref()
                .ok_or(Error::WitnessUnavailable { n, k, target: 0 })?;
            println!("{g6}");
        }
        _ => {
            let tag = if out.exact { "exact" } else { "bounds" };
            match &out.witness_g6 {
                Some(g6) => println!(
                    "omega({n},{k}) = {} {tag}  witness {g6}",
                    fmt_interval(&out.value)
                ),
                None => println!("omega({n},{k}) = {} {tag}", fmt_interval(&out.value)),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct QncOutput {
    n: usize,
    c: usize,
    value: ValueInterval,
    exact: bool,
    method: String,
    witness_g6: Option<String>,
}

fn cmd_qnc(
    cli: &Cli,
    cache: &Cache,
    n: usize,
    c: usize,
    method: QncMethod,
    limit: usize,
) -> anyhow::Result<ExitCode> {
    if n < 1 || c < 1 || c > n {
        anyhow::bail!(Error::Rate(format!(
            "need 1 <= c <= n, got n = {n}, c = {c}"
        )));
    }
    let formula_applicable = c < n && n >= 2 * (n - c) + 3;
    let use_formula = match method {
        QncMethod::Formula => true,
        QncMethod::Brute => false,
        QncMethod::Auto => formula_applicable,
    };
    let out = if use_formula {
        let k = n.checked_sub(c).filter(|&k| k >= 1).ok_or(Error::Domain {
            what: "the closed form for Q(n, n-k)",
            min_n: 2,
            n: 0,
        })?;
        let value = qnc_formula(n, k)?;
        QncOutput {
            n,
            c,
            value,
            exact: value.is_exact(),
            method: "formula".into(),
            witness_g6: None,
        }
    } else {
        warn_if_over_default(n, limit);
        let record = if let Some(rec) = cache.get(WitnessKind::Qnc, &[n, c]) {
            rec
        } else {
            let (_, rec) = qnc_bruteforce(n, c, limit)?;
            cache.put(&rec)?;
            rec
        };
        record.certify()?;
        QncOutput {
            n,
            c,
            value: record.value,
            exact: true,
            method: "brute_force".into(),
            witness_g6: record.witness_g6,
        }
    };
    match cli.global.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&out)?),
        Format::G6 => {
            let g6 = out.witness_g6.as_deref().ok_or(Error::WitnessUnavailable {
                n,
                k: c,
                target: 0,
            })?;
            println!("{g6}");
        }
        _ => match &out.witness_g6 {
            Some(g6) => println!(
                "Q({n},{c}) = {}  witness {g6}  [{}]",
                fmt_interval(&out.value),
                out.method
            ),
            None => println!(
                "Q({n},{c}) = {}  [{}]",
                fmt_interval(&out.value),
                out.method
            ),
        },
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_qnc_table(
    cli: &Cli,
    n: usize,
    limit: usize,
    out_path: Option<&std::path::Path>,
) -> anyhow::Result<ExitCode> {
    if n < 1 {
        anyhow::bail!(Error::Rate("--n must be at least 1".into()));
    }
    warn_if_over_default(n, limit);
    let rows = qnc_table(n, limit)?;
    for row in &rows {
        let rec = WitnessRecord {
            kind: WitnessKind::Qnc,
            params: vec![row.n, row.c],
            value: ValueInterval::exact(row.q),
            witness_g6: Some(row.witness_g6.clone()),
            method: row.method,
        };
        rec.certify()?;
    }
    let rendered = match cli.global.format {
        Format::Json => serde_json::to_string_pretty(&rows)?,
        Format::G6 => rows
            .iter()
            .map(|r| r.witness_g6.as_str())
            .collect::<Vec<_>>()
            .join("\n"),
        _ => {
            let mut s = String::from("n,c,Q,witness_g6,method\n");
            for r in &rows {
                s.push_str(&format!("{},{},{},{},brute_force\n", r.n, r.c, r.q, r.witness_g6));
            }
            s.pop();
            s
        }
    };
    if let Some(path) = out_path {
        std::fs::write(path, format!("{rendered}\n"))?;
    }
    println!("{rendered}");
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct PartitionOutput {
    what: String,
    arg: usize,
    alpha: Option<usize>,
    value: ValueInterval,
    partition: Vec<usize>,
}

fn emit_partition(
    cli: &Cli,
    what: &str,
    arg: usize,
    alpha: Option<usize>,
    result: PartitionResult,
) -> anyhow::Result<ExitCode> {
    let out = PartitionOutput {
        what: what.to_string(),
        arg,
        alpha,
        value: result.value,
        partition: result.partition,
    };
    match cli.global.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&out)?),
        _ => {
            let name = match alpha {
                Some(a) => format!("q({arg},{a})"),
                None => format!("q({arg})"),
            };
            println!(
                "{name} = {}  partition {:?}",
                fmt_interval(&out.value),
                out.partition
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
#[serde(untagged)]
enum ConstructReport {
    Simple(SimpleWitnessReport),
    Join(Box<JoinReport>),
}

fn cmd_construct(
    cli: &Cli,
    cache: &Cache,
    opts: &WitnessSearchOptions,
    r: &RationalRate,
    n: usize,
    kind: ConstructKind,
    out_path: Option<&std::path::Path>,
) -> anyhow::Result<ExitCode> {
    if n < 1 {
        anyhow::bail!(Error::Rate("--n must be at least 1".into()));
    }
    let (g6, report) = match kind {
        ConstructKind::Simple => {
            let (_, rep) = simple_upper_witness(r, n, Some(cache), opts)?;
            (rep.graph_g6.clone(), ConstructReport::Simple(rep))
        }
        ConstructKind::Join => {
            let plan = plan_join(r, n)?;
            let (_, rep) = join_construction(&plan, Some(cache), opts)?;
            (rep.final_g6.clone(), ConstructReport::Join(Box::new(rep)))
        }
    };
    if let Some(path) = out_path {
        std::fs::write(path, format!("{g6}\n"))?;
    }
    match cli.global.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        Format::G6 => println!("{g6}"),
        _ => match &report {
            ConstructReport::Simple(rep) => println!(
                "built n={} chi={} omega={} (bound {})  {}",
                rep.n,
                rep.chi,
                rep.omega,
                fmt_interval(&rep.omega_bound),
                rep.graph_g6
            ),
            ConstructReport::Join(rep) => println!(
                "built n={} chi={} omega={} (certified bound {}; planned {})  {}",
                rep.plan.n,
                rep.final_chi,
                rep.final_omega,
                rep.certified_bound,
                fmt_interval(&rep.plan.bound),
                rep.final_g6
            ),
        },
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    cli: &Cli,
    rates: &[RationalRate],
    n_max: usize,
    out_path: Option<&std::path::Path>,
    limit: usize,
) -> anyhow::Result<ExitCode> {
    if rates.is_empty() {
        anyhow::bail!(Error::Rate("--r needs at least one rate".into()));
    }
    if n_max < 1 || n_max > limit {
        anyhow::bail!(Error::Capacity {
            requested: n_max,
            limit,
        });
    }
    let report = verify_theorems(rates, n_max, limit)?;
    let rendered = match cli.global.format {
        Format::Json => report.to_json()?,
        _ => report.to_csv(),
    };
    if let Some(path) = out_path {
        std::fs::write(path, &rendered)?;
    }
    match cli.global.format {
        Format::Json | Format::Csv => println!("{rendered}"),
        _ => print_verify_text(&report),
    }
    if report.all_pass {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_FAILURE))
    }
}

fn print_verify_text(report: &VerificationReport) {
    for row in &report.rows {
        let mark = if row.pass { "pass" } else { "FAIL" };
        let r = row.r.map(|r| r.to_string()).unwrap_or_else(|| "-".into());
        let n = row.n.map(|n| n.to_string()).unwrap_or_else(|| "-".into());
        let k = row.k.map(|k| k.to_string()).unwrap_or_else(|| "-".into());
        println!("{mark}  {:<14} r={r:<5} n={n:<3} k={k:<3} {}", row.kind, row.detail);
    }
    let failures = report.failures().count();
    println!(
        "{} rows, {} failures{}",
        report.rows.len(),
        failures,
        if failures == 0 { " — all bounds hold" } else { "" }
    );
}

fn fmt_interval(v: &ValueInterval) -> String {
    match v.hi {
        Some(h) if h == v.lo => format!("{}", v.lo),
        Some(h) => format!("[{},{h}]", v.lo),
        None => format!("[{},inf)", v.lo),
    }
}
