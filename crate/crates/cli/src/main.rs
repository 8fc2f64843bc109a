use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use veritas::pipeline::{export_complex, run_verify, Choices, Emit, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "veritas",
    version,
    about = "Exact verification of 600-cell colouring-space claims"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitArg {
    Json,
    Text,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Run claims (`all`, full ids, or short ids such as C07).
    Verify {
        #[arg(default_value = "all")]
        claims: Vec<String>,
        #[arg(long, default_value = "veritas-out")]
        out: PathBuf,
        #[arg(long)]
        jobs: Option<usize>,
        /// Use the second admissible order-5 element.
        #[arg(long)]
        alt_p: bool,
        /// Use the 4-cycle (1 2 3 4) instead of the transposition (1 2).
        #[arg(long)]
        alt_tau: bool,
        #[arg(long, value_enum, default_value = "both")]
        emit: EmitArg,
    },
    /// Write a complex as JSON: 600cell, sigma3, B, B2, B2_icosa, grid.
    Export {
        name: String,
        path: PathBuf,
        #[arg(long)]
        alt_p: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match cli.command {
        Command::Verify {
            claims,
            out,
            jobs,
            alt_p,
            alt_tau,
            emit,
        } => {
            let opts = VerifyOptions {
                claims,
                out_dir: Some(out),
                jobs,
                choices: Choices { alt_p, alt_tau },
                emit: match emit {
                    EmitArg::Json => Emit::Json,
                    EmitArg::Text => Emit::Text,
                    EmitArg::Both => Emit::Both,
                },
            };
            match run_verify(&opts) {
                Ok(report) => {
                    for c in &report.claims {
                        let status = if c.passed() { "pass" } else { "FAIL" };
                        println!(
                            "{status}  {}  expected {} / observed {}",
                            c.id, c.expected, c.observed
                        );
                        eprintln!("{} took {} ms", c.id, c.elapsed_ms);
                    }
                    println!("{} passed, {} failed", report.passed, report.failed);
                    if report.all_passed() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Export { name, path, alt_p } => {
            match export_complex(
                &name,
                &path,
                Choices {
                    alt_p,
                    alt_tau: false,
                },
            ) {
                Ok(c) => {
                    println!(
                        "wrote {name}: {} vertices, {} maximal simplices to {}",
                        c.vertex_count(),
                        c.simplex_count(),
                        path.display()
                    );
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
    }
}
