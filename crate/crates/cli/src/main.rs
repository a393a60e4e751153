//! `zqu`: factor `x^n - 1`, enumerate and analyze cyclic codes over
//! `Z_q + uZ_q`, and compute minimum distances.
//!
//! Exit codes: 0 success, 1 parse error, 2 precondition violation,
//! 3 budget exceeded, 4 a `verify-paper` check failed.

mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zqu_codes::{ClosureMode, Metric};

#[derive(Parser, Debug)]
#[command(name = "zqu", version, about = "Cyclic codes over Z_q + uZ_q with u^2 = 0")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Factor x^n - 1 into basic irreducibles over Z_{p^s}.
    Factor {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Count or list the cyclic codes of length n.
    Codes {
        #[command(flatten)]
        ring: RingArgs,
        /// Print only the number of codes.
        #[arg(long, conflicts_with = "enumerate")]
        count: bool,
        /// List every code as a descriptor.
        #[arg(long)]
        enumerate: bool,
        /// Print at most this many descriptors.
        #[arg(long)]
        limit: Option<usize>,
        /// Refuse to enumerate more codes than this.
        #[arg(long)]
        budget: Option<u64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Canonical generators, cardinality, freeness and BCH bound of a code.
    Analyze {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Minimum distance of a code under a metric.
    Distance {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, default_value = "hamming", value_parser = parse_metric)]
        metric: Metric,
        /// Largest number of codewords to scan; exhaustive when |C| fits.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        threads: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Recompute every published number and print a pass/fail table.
    VerifyPaper {
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        threads: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct RingArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: u64,
    #[arg(long)]
    s: u32,
}

#[derive(Args, Debug, Clone)]
struct CodeArgs {
    #[command(flatten)]
    ring: RingArgs,
    /// Generators in the polynomial grammar; repeat the flag or separate with commas.
    #[arg(long, required = true, num_args = 1.., value_delimiter = ',')]
    gens: Vec<String>,
    #[arg(long, default_value = "ideal", value_parser = parse_closure)]
    closure: ClosureMode,
}

#[derive(Args, Debug, Clone, Copy)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Text,
}

fn parse_metric(s: &str) -> Result<Metric, String> {
    s.parse().map_err(|e: zqu_codes::Error| e.to_string())
}

fn parse_closure(s: &str) -> Result<ClosureMode, String> {
    s.parse().map_err(|e: zqu_codes::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match commands::run(cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            ExitCode::from(out.status)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.status)
        }
    }
}
