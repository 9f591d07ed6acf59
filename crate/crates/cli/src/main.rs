//! `sa`: exact counting, enumeration, mapping and cross-verification for
//! single-source acyclic automata, Stirling cycle determinants, subdiagonal
//! lattice paths, and the bijections between them.
//!
//! Exit codes: 0 success, 1 verification failure, 2 bad input, 3 budget
//! exceeded.

mod json;
mod verify;

use std::fmt;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sa_core::automata::{
    acyclic_count, enumerate_canonical, enumerate_saf, single_source_count, unlabeled_count,
    CanonicalAutomaton, DEFAULT_ENUM_BUDGET,
};
use sa_core::bijection::{automaton_to_path_with_trace, path_to_automaton_with_trace};
use sa_core::involution::{enumerate_lists, DEFAULT_LIST_BUDGET};
use sa_core::matrix::HessenbergMatrix;
use sa_core::paths::{
    count_paths, enumerate_marked_codes, enumerate_paths, marked_count, marked_count_general,
};

use json::{
    AutomatonJson, CheckJson, CountJson, MarkedCodeJson, MatrixJson, PathJson, PermListJson,
    ReportJson, SummaryJson, TraceJson,
};
use verify::{Suite, ALL_SUITES};

#[derive(Parser)]
#[command(
    name = "sa",
    version,
    about = "Exact counts, enumerations and cross-checks for acyclic single-source automata,\n\
             Stirling cycle determinants, and subdiagonal lattice paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one exact count
    Count {
        target: CountTarget,
        #[arg(short = 'k', help = "alphabet parameter")]
        k: usize,
        #[arg(short = 'n', help = "size parameter")]
        n: usize,
        #[arg(short = 'p', help = "path height (paths target only)")]
        p: Option<usize>,
        #[arg(long, help = "wrap the value in a JSON object")]
        json: bool,
    },
    /// Print the Stirling cycle Hessenberg matrix
    Matrix {
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, help = "emit row-major entries as decimal strings")]
        json: bool,
    },
    /// Stream objects as JSON lines, then a summary line with the count
    Enumerate {
        target: EnumTarget,
        #[arg(short = 'k')]
        k: Option<usize>,
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'p')]
        p: Option<usize>,
        #[arg(long, help = "cap on the enumeration candidate space")]
        enum_budget: Option<u64>,
        #[arg(long, help = "cap on the permutation-list space")]
        list_budget: Option<u64>,
    },
    /// Apply the path/automaton bijection to a JSON object (stdin or --input)
    Map {
        direction: MapDirection,
        #[arg(long, help = "read the input object from a file instead of stdin")]
        input: Option<PathBuf>,
        #[arg(long, help = "also print the intermediate quantities")]
        trace: bool,
    },
    /// Canonicalize an automaton given as a JSON object (stdin or --input)
    Canon {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Run the cross-verification suites and report each check
    Verify {
        #[arg(
            long,
            value_delimiter = ',',
            help = "subset of suites to run (default: all)"
        )]
        suites: Option<Vec<Suite>>,
        #[arg(long, default_value_t = 2)]
        max_k: usize,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        enum_budget: Option<u64>,
        #[arg(long)]
        list_budget: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CountTarget {
    Det,
    Acyclic,
    SingleSource,
    Unlabeled,
    Paths,
    Marked,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EnumTarget {
    Automata,
    Canonical,
    Paths,
    MarkedCodes,
    Lists,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MapDirection {
    PathToAutomaton,
    AutomatonToPath,
}

#[derive(Debug)]
enum CliError {
    Core(sa_core::Error),
    Json(serde_json::Error),
    Io(io::Error),
    BadInput(String),
    ChecksFailed(usize),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Json(e) => write!(f, "bad JSON input: {e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::BadInput(msg) => write!(f, "{msg}"),
            CliError::ChecksFailed(n) => write!(f, "{n} check(s) failed"),
        }
    }
}

impl From<sa_core::Error> for CliError {
    fn from(e: sa_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Json(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(sa_core::Error::BudgetExceeded { .. }) => 3,
            CliError::Core(sa_core::Error::Internal(_)) => 1,
            CliError::ChecksFailed(_) => 1,
            _ => 2,
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn budget_from(flag: Option<u64>, env_key: &str, default: u64) -> Result<u64, CliError> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(env_key) {
        Ok(raw) => raw
            .parse::<u64>()
            .map_err(|_| CliError::BadInput(format!("{env_key} must be an integer, got {raw:?}"))),
        Err(_) => Ok(default),
    }
}

fn read_input(path: Option<PathBuf>) -> Result<String, CliError> {
    match path {
        Some(p) => Ok(fs::read_to_string(p)?),
        None => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn require_positive(name: &str, value: usize) -> Result<(), CliError> {
    if value == 0 {
        return Err(CliError::BadInput(format!("{name} must be at least 1")));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Count {
            target,
            k,
            n,
            p,
            json,
        } => cmd_count(target, k, n, p, json),
        Command::Enumerate {
            target,
            k,
            n,
            p,
            enum_budget,
            list_budget,
        } => {
            let enum_budget = budget_from(enum_budget, "SA_ENUM_BUDGET", DEFAULT_ENUM_BUDGET)?;
            let list_budget = budget_from(list_budget, "SA_LIST_BUDGET", DEFAULT_LIST_BUDGET)?;
            cmd_enumerate(target, k, n, p, enum_budget, list_budget)
        }
        Command::Matrix { k, n, json } => cmd_matrix(k, n, json),
        Command::Map {
            direction,
            input,
            trace,
        } => cmd_map(direction, input, trace),
        Command::Canon { input } => cmd_canon(input),
        Command::Verify {
            suites,
            max_k,
            max_n,
            json,
            enum_budget,
            list_budget,
        } => {
            let enum_budget = budget_from(enum_budget, "SA_ENUM_BUDGET", DEFAULT_ENUM_BUDGET)?;
            let list_budget = budget_from(list_budget, "SA_LIST_BUDGET", DEFAULT_LIST_BUDGET)?;
            cmd_verify(suites, max_k, max_n, json, enum_budget, list_budget)
        }
    }
}

fn cmd_count(
    target: CountTarget,
    k: usize,
    n: usize,
    p: Option<usize>,
    json: bool,
) -> Result<(), CliError> {
    require_positive("-k", k)?;
    let (name, value) = match target {
        CountTarget::Det => {
            require_positive("-n", n)?;
            (
                "det",
                HessenbergMatrix::build(k, n)?.determinant().to_string(),
            )
        }
        CountTarget::Acyclic => ("acyclic", acyclic_count(k, n).to_string()),
        CountTarget::SingleSource => ("single-source", single_source_count(k, n)?.to_string()),
        CountTarget::Unlabeled => ("unlabeled", unlabeled_count(k, n)?.to_string()),
        CountTarget::Paths => {
            require_positive("-n", n)?;
            let p = p.ok_or_else(|| CliError::BadInput("target 'paths' requires -p".into()))?;
            if p > n {
                eprintln!("note: no subdiagonal path has p > n; the count is 0");
            }
            ("paths", count_paths(k, n, p)?.to_string())
        }
        CountTarget::Marked => {
            require_positive("-n", n)?;
            let value = match p {
                // no height code exists away from p = n; sum over the paths
                Some(p) if p != n => {
                    let budget = budget_from(None, "SA_ENUM_BUDGET", DEFAULT_ENUM_BUDGET)?;
                    marked_count_general(k, n, p, budget)?.to_string()
                }
                _ => marked_count(k, n)?.to_string(),
            };
            ("marked", value)
        }
    };
    if json {
        let obj = CountJson {
            target: name.to_string(),
            k,
            n,
            p: match target {
                CountTarget::Paths => Some(p.unwrap()),
                CountTarget::Marked => p,
                _ => None,
            },
            value,
        };
        println!("{}", serde_json::to_string(&obj)?);
    } else {
        println!("{value}");
    }
    Ok(())
}

fn cmd_matrix(k: usize, n: usize, json: bool) -> Result<(), CliError> {
    require_positive("-k", k)?;
    require_positive("-n", n)?;
    let m = HessenbergMatrix::build(k, n)?;
    if json {
        let obj = MatrixJson {
            k,
            n,
            dim: m.dim(),
            entries: m
                .rows()
                .flat_map(|row| row.iter().map(|e| e.to_string()))
                .collect(),
        };
        println!("{}", serde_json::to_string(&obj)?);
    } else {
        let width = m
            .rows()
            .flat_map(|row| row.iter().map(|e| e.to_string().len()))
            .max()
            .unwrap_or(1);
        for row in m.rows() {
            let cells: Vec<String> = row.iter().map(|e| format!("{e:>width$}")).collect();
            println!("{}", cells.join(" "));
        }
    }
    Ok(())
}

fn cmd_enumerate(
    target: EnumTarget,
    k: Option<usize>,
    n: usize,
    p: Option<usize>,
    enum_budget: u64,
    list_budget: u64,
) -> Result<(), CliError> {
    require_positive("-n", n)?;
    let need_k = || k.ok_or_else(|| CliError::BadInput("this target requires -k".into()));
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut count: u64 = 0;
    match target {
        EnumTarget::Automata => {
            for a in enumerate_saf(need_k()?, n, enum_budget)? {
                serde_json::to_writer(&mut out, &AutomatonJson::of(&a))?;
                writeln!(out)?;
                count += 1;
            }
        }
        EnumTarget::Canonical => {
            for a in enumerate_canonical(need_k()?, n, enum_budget)? {
                serde_json::to_writer(&mut out, &AutomatonJson::of(a.as_automaton()))?;
                writeln!(out)?;
                count += 1;
            }
        }
        EnumTarget::Paths => {
            let p = p.ok_or_else(|| CliError::BadInput("target 'paths' requires -p".into()))?;
            for path in enumerate_paths(need_k()?, n, p, enum_budget)? {
                serde_json::to_writer(&mut out, &PathJson::of(&path))?;
                writeln!(out)?;
                count += 1;
            }
        }
        EnumTarget::MarkedCodes => {
            for code in enumerate_marked_codes(need_k()?, n, enum_budget)? {
                serde_json::to_writer(&mut out, &MarkedCodeJson::of(&code))?;
                writeln!(out)?;
                count += 1;
            }
        }
        EnumTarget::Lists => {
            for list in enumerate_lists(n, list_budget)? {
                serde_json::to_writer(&mut out, &PermListJson::of(&list))?;
                writeln!(out)?;
                count += 1;
            }
        }
    }
    serde_json::to_writer(&mut out, &SummaryJson { count })?;
    writeln!(out)?;
    out.flush()?;
    Ok(())
}

fn cmd_map(direction: MapDirection, input: Option<PathBuf>, trace: bool) -> Result<(), CliError> {
    let text = read_input(input)?;
    match direction {
        MapDirection::PathToAutomaton => {
            let code: MarkedCodeJson = serde_json::from_str(&text)?;
            let code = code.into_code()?;
            let (auto, t) = path_to_automaton_with_trace(&code)?;
            println!(
                "{}",
                serde_json::to_string(&AutomatonJson::of(auto.as_automaton()))?
            );
            if trace {
                println!("{}", serde_json::to_string(&TraceJson::of(&t))?);
            }
        }
        MapDirection::AutomatonToPath => {
            let auto: AutomatonJson = serde_json::from_str(&text)?;
            let auto = CanonicalAutomaton::new(auto.into_automaton()?)?;
            let (code, t) = automaton_to_path_with_trace(&auto)?;
            println!("{}", serde_json::to_string(&MarkedCodeJson::of(&code))?);
            if trace {
                println!("{}", serde_json::to_string(&TraceJson::of(&t))?);
            }
        }
    }
    Ok(())
}

fn cmd_canon(input: Option<PathBuf>) -> Result<(), CliError> {
    let text = read_input(input)?;
    let auto: AutomatonJson = serde_json::from_str(&text)?;
    let canon = auto.into_automaton()?.canonicalize()?;
    println!(
        "{}",
        serde_json::to_string(&AutomatonJson::of(canon.as_automaton()))?
    );
    Ok(())
}

fn cmd_verify(
    suites: Option<Vec<Suite>>,
    max_k: usize,
    max_n: usize,
    json: bool,
    enum_budget: u64,
    list_budget: u64,
) -> Result<(), CliError> {
    require_positive("--max-k", max_k)?;
    require_positive("--max-n", max_n)?;
    let suites = suites.unwrap_or_else(|| ALL_SUITES.to_vec());
    let report = verify::run(&suites, max_k, max_n, enum_budget, list_budget)?;

    if json {
        let obj = ReportJson {
            checks: report
                .checks
                .iter()
                .map(|c| CheckJson {
                    name: c.name.to_string(),
                    params: c.params.clone(),
                    lhs: c.lhs.clone(),
                    rhs: c.rhs.clone(),
                    status: if c.passed() { "pass" } else { "fail" }.to_string(),
                })
                .collect(),
            passed: report.passed(),
            failed: report.failed(),
        };
        println!("{}", serde_json::to_string(&obj)?);
    } else {
        for c in &report.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            println!(
                "{status} {} {} lhs={} rhs={}",
                c.name, c.params, c.lhs, c.rhs
            );
        }
        println!("passed {} failed {}", report.passed(), report.failed());
    }
    // timings vary run to run, so they go to stderr only
    let total: std::time::Duration = report.checks.iter().map(|c| c.elapsed).sum();
    eprintln!(
        "verify: {} checks in {} ms",
        report.checks.len(),
        total.as_millis()
    );

    if report.failed() > 0 {
        return Err(CliError::ChecksFailed(report.failed()));
    }
    Ok(())
}
