//! Thin command-line wrapper: argument parsing and I/O only; all the actual
//! analysis lives in the library.

use std::fs;
use std::path::PathBuf;
use std::process::exit;

use clap::{Parser, Subcommand};

use desys::cli::{self, Command};

#[derive(Parser)]
#[command(
    name = "desys",
    about = "Exact analysis of singular descriptor systems F*X' = G*X + B*V",
    version
)]
struct Args {
    #[command(subcommand)]
    command: Cmd,
    /// Print a one-line human summary to stderr.
    #[arg(long, global = true)]
    verbose: bool,
    /// Write the JSON report to this path instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Test pencil regularity and report the determinant degree.
    Check { file: PathBuf },
    /// Compute the slow/fast block decomposition.
    Decompose { file: PathBuf },
    /// Solve the two-point boundary problem and print the trajectory.
    Simulate { file: PathBuf },
    /// Reachable set from zero; add "target" to get steering inputs.
    Reach { file: PathBuf },
    /// Controllability rank tests.
    Control { file: PathBuf },
    /// Find inputs attaining "target" at step k1 under the boundary data.
    Synthesize { file: PathBuf },
    /// Per-step attainable sets under a fixed terminal fast state.
    Initreach { file: PathBuf },
}

fn main() {
    let args = Args::parse();
    let (command, file) = match args.command {
        Cmd::Check { file } => (Command::Check, file),
        Cmd::Decompose { file } => (Command::Decompose, file),
        Cmd::Simulate { file } => (Command::Simulate, file),
        Cmd::Reach { file } => (Command::Reach, file),
        Cmd::Control { file } => (Command::Control, file),
        Cmd::Synthesize { file } => (Command::Synthesize, file),
        Cmd::Initreach { file } => (Command::InitReach, file),
    };
    match cli::run(command, &file) {
        Ok(report) => {
            let text = serde_json::to_string_pretty(&report.value).expect("report serializes");
            match &args.output {
                Some(path) => {
                    if let Err(e) = fs::write(path, format!("{text}\n")) {
                        eprintln!("error: cannot write {}: {}", path.display(), e);
                        exit(1);
                    }
                }
                None => println!("{text}"),
            }
            if args.verbose {
                eprintln!("{}", report.summary);
            }
        }
        Err(error) => {
            eprintln!("error: {error}");
            exit(cli::exit_code_for(&error));
        }
    }
}
