//! `macvertex` command-line tool.
//!
//! Exit codes: 0 verified, 1 a mathematical check failed, 2 usage or
//! resource error.

mod compute;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use verify::{Mode, VerifyArgs};

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Resource(String),
    Internal(String),
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Resource(m) => write!(f, "resource limit: {m}"),
            Failure::Internal(m) => write!(f, "computation failed: {m}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Parser)]
#[command(name = "macvertex", version, about = "Exact checks for the fused six-vertex partition function")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that the normalised partition function is proportional to the
    /// renormalised Macdonald polynomial of the staircase.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long, value_enum, default_value = "full")]
        mode: Mode,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Cap on the number of transfer-matrix states.
        #[arg(long, default_value_t = 4096)]
        max_states: usize,
    },
    /// Compute one object and print it as JSON.
    Compute {
        #[command(subcommand)]
        object: compute::Object,
    },
    /// Parse a serialized polynomial or expansion and write it back.
    Roundtrip { file: PathBuf },
}

fn exit_with(f: Failure) -> ExitCode {
    eprintln!("{f}");
    match f {
        Failure::Usage(_) | Failure::Resource(_) => ExitCode::from(2),
        Failure::Internal(_) => ExitCode::from(1),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            n,
            ell,
            mode,
            seed,
            format,
            max_states,
        } => {
            let args = VerifyArgs {
                n,
                ell,
                mode,
                seed,
                max_states,
            };
            match verify::run(&args) {
                Ok(rep) => {
                    match format {
                        Format::Json => println!("{}", serde_json::to_string_pretty(&rep).expect("report serializes")),
                        Format::Text => print!("{}", rep.render_text()),
                    }
                    if rep.passed {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(f) => exit_with(f),
            }
        }
        Command::Compute { object } => match compute::run(object) {
            Ok(s) => {
                println!("{s}");
                ExitCode::SUCCESS
            }
            Err(f) => exit_with(f),
        },
        Command::Roundtrip { file } => match compute::roundtrip(&file) {
            Ok(note) => {
                if let Some(n) = note {
                    eprintln!("{n}");
                }
                ExitCode::SUCCESS
            }
            Err(f) => exit_with(f),
        },
    }
}
