use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use qutrit_mermin::hidden_variables::SearchMode;
use qutrit_mermin::report::{self, OutputFormat};
use qutrit_mermin::Error;

/// Many-qutrit three-setting Mermin inequalities.
#[derive(Parser)]
#[command(name = "mermin", version)]
struct Cli {
    /// human, json or csv
    #[arg(long, global = true, default_value = "human", value_parser = parse_format)]
    format: OutputFormat,
    /// Write the payload to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Search threads (falls back to MERMIN_WORKERS, then the CPU count).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Quantum value, classical bound, ratio and GHZ contradictions per N.
    Table1 {
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        /// Also run the exhaustive search for N <= 7.
        #[arg(long)]
        search: bool,
    },
    /// Single-site factor table.
    Table2,
    /// Exact GHZ eigenvalue.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        variant: u32,
        #[arg(long, default_value_t = 3)]
        d: u32,
    },
    /// Term-by-term check of the product expansion.
    Identity {
        #[arg(long)]
        n: usize,
    },
    /// Exhaustive hidden-variable maximum.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "ratio", value_parser = parse_mode)]
        mode: SearchMode,
    },
    /// GHZ contradiction witnesses.
    Witness {
        #[arg(long)]
        n: usize,
    },
    /// Odd-d generalization.
    General {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: usize,
    },
    /// Growth data for plotting.
    Scaling {
        #[arg(long, default_value_t = 20)]
        n_max: usize,
    },
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_mode(s: &str) -> Result<SearchMode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = report::resolve_workers(cli.workers);
    let start = Instant::now();
    let result = match cli.command {
        Command::Table1 {
            n_min,
            n_max,
            search,
        } => report::cmd_table1(n_min, n_max, search, workers),
        Command::Table2 => report::cmd_table2(),
        Command::Verify { n, variant, d } => report::cmd_verify(n, variant, d),
        Command::Identity { n } => report::cmd_identity(n),
        Command::Search { n, mode } => report::cmd_search(n, mode, workers),
        Command::Witness { n } => report::cmd_witness(n),
        Command::General { d, n } => report::cmd_general(d, n, workers),
        Command::Scaling { n_max } => report::cmd_scaling(n_max),
    };
    let output = match result {
        Ok(o) => o,
        Err(e @ (Error::VerificationMismatch(_) | Error::NotEigenstate(_))) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let payload = output.render(cli.format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &payload) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{payload}"),
    }
    eprintln!(
        "# {:.3} s, {workers} workers, v{}",
        start.elapsed().as_secs_f64(),
        report::VERSION
    );
    for f in &output.failures {
        eprintln!("mismatch: {f}");
    }
    if output.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
