mod commands;
mod report;

use std::path::PathBuf;
use std::process;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use satgraph::checks::Suite;
use satgraph::CliquePattern;
use serde_json::json;

use crate::report::{emit, exit};

#[derive(Parser, Debug)]
#[command(name = "satgraph", version, about = "Saturation numbers for disjoint unions of cliques")]
struct Cli {
    /// Worker threads (default: available parallelism)
    #[arg(long, global = true, env = "SATGRAPH_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build H(n; pattern) or one of the fixtures F1..F5 and write it as graph6
    Construct {
        #[arg(long, required_unless_present = "fixture")]
        n: Option<usize>,
        #[arg(long, required_unless_present = "fixture", value_parser = parse_pattern)]
        pattern: Option<CliquePattern>,
        #[arg(long, conflicts_with_all = ["n", "pattern"])]
        fixture: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether a graph is pattern-saturated
    Check {
        /// graph6 file, or `-` for standard input
        #[arg(long)]
        graph: String,
        #[arg(long, value_parser = parse_pattern)]
        pattern: CliquePattern,
        /// Probe every non-edge and list all failing ones
        #[arg(long)]
        census: bool,
    },
    /// Exact saturation number by exhaustive enumeration (n <= 10)
    Satnum {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_pattern)]
        pattern: CliquePattern,
        /// Directory for the extremal graphs as .g6 files
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Skip graphs violating the minimum-degree conditions (not exhaustive)
        #[arg(long)]
        assume_lemmas: bool,
    },
    /// Run the built-in grid of checks
    VerifyPaper {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 70)]
        max_n: usize,
    },
    /// Local search for saturated graphs sparser than H(n; pattern)
    Hunt {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_pattern)]
        pattern: CliquePattern,
        #[arg(long)]
        budget: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Core,
    Fixtures,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Core => Suite::Core,
            SuiteArg::Fixtures => Suite::Fixtures,
            SuiteArg::All => Suite::All,
        }
    }
}

fn parse_pattern(s: &str) -> Result<CliquePattern, String> {
    s.parse().map_err(|e: satgraph::Error| e.to_string())
}

fn main() {
    let started = Instant::now();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            eprint!("{e}");
            let command = std::env::args().nth(1).unwrap_or_default();
            let message = e.to_string();
            let first = message.lines().next().unwrap_or_default();
            let first = first.strip_prefix("error: ").unwrap_or(first);
            emit(command, json!(null), json!({ "error": first }), started);
            process::exit(exit::USAGE);
        }
    };
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: cannot size worker pool: {e}");
            process::exit(exit::USAGE);
        }
    }
    let (name, params, outcome) = match cli.command {
        Command::Construct { n, pattern, fixture, out } => (
            "construct",
            json!({ "n": n, "pattern": pattern, "fixture": fixture, "out": out }),
            commands::construct(n, pattern.as_ref(), fixture, out.as_deref()),
        ),
        Command::Check { graph, pattern, census } => (
            "check",
            json!({ "graph": graph, "pattern": pattern, "census": census }),
            commands::check(&graph, &pattern, census),
        ),
        Command::Satnum { n, pattern, out, format, assume_lemmas } => (
            "satnum",
            json!({ "n": n, "pattern": pattern, "out": out, "format": format, "assume_lemmas": assume_lemmas }),
            commands::satnum(n, &pattern, out.as_deref(), format, assume_lemmas),
        ),
        Command::VerifyPaper { suite, max_n } => (
            "verify-paper",
            json!({ "suite": Suite::from(suite), "max_n": max_n }),
            commands::verify_paper(suite.into(), max_n),
        ),
        Command::Hunt { n, pattern, budget, seed, out } => (
            "hunt",
            json!({ "n": n, "pattern": pattern, "budget": budget, "seed": seed, "out": out }),
            commands::hunt(n, &pattern, budget, seed, out.as_deref()),
        ),
    };
    match outcome {
        Ok(o) => {
            emit(name.into(), params, o.result, started);
            process::exit(o.exit_code);
        }
        Err(e) => {
            eprintln!("error: {e}");
            emit(name.into(), params, json!({ "error": e.to_string() }), started);
            process::exit(exit::USAGE);
        }
    }
}
