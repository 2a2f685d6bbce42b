//! `starline` command-line interface.
//!
//! Exit codes: 0 when the computation succeeds and the tested property
//! holds, 1 when the property fails, 2 for usage, input and I/O errors.
//! Human-readable reports end with one `RESULT:` line; `--json` prints a
//! single JSON document instead.

mod commands;
mod report;

use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(
    name = "starline",
    version,
    about = "Star edge-coloring toolkit for subcubic multigraphs"
)]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Star chromatic index with a certificate coloring.
    Chi {
        /// Graph file (edge list or graph6), or '-' for stdin.
        graph: String,
        /// Stop searching above this many colors.
        #[arg(long)]
        max_k: Option<usize>,
        /// Write the certificate as "edge-id color" lines.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Check a coloring file against a graph.
    Verify { graph: String, coloring: String },
    /// Maximum average degree and a densest vertex set.
    Mad { graph: String },
    /// Shortest cycle length.
    Girth { graph: String },
    /// Reducible-configuration predicates.
    Audit { graph: String },
    /// Discharging ledger and audit.
    Discharge {
        graph: String,
        /// Treat the input as G and remove its 1-vertices first.
        #[arg(long)]
        from_g: bool,
    },
    /// Search for a covering map onto the 3-cube.
    CoversCube { graph: String },
    /// List isomorphism classes of small subcubic graphs.
    Enumerate {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value = "simple")]
        mode: String,
        /// Include disconnected graphs.
        #[arg(long)]
        disconnected: bool,
        /// Output format: canon (hex forms), edges, or g6 (simple only).
        #[arg(long, default_value = "canon")]
        format: String,
    },
    /// Sweep enumerated graphs and evaluate checks.
    Sweep {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value = "simple")]
        mode: String,
        /// Comma-separated subset of thm13a, conj6, main5, cube-equiv.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "thm13a,conj6,main5,cube-equiv"
        )]
        check: Vec<String>,
        #[arg(long, env = "STARLINE_CACHE")]
        cache: Option<PathBuf>,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Find star k-critical graphs and audit them.
    Critical {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value = "simple")]
        mode: String,
        #[arg(long, default_value_t = 5)]
        k: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(cli.command) {
        Ok(report) => {
            report.print(cli.json);
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
