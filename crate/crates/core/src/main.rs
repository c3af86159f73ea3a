use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use lie_meet::cli::{self, WeightSpec, DEFAULT_MAX_RANK};
use lie_meet::rootsys::Weight;
use lie_meet::verify::{self, VerifyOptions};
use lie_meet::Error;

/// Decide whether a simple Lie group meets its Lie algebra in End(V), with certificates.
#[derive(Parser)]
#[command(name = "lie-meet", version)]
struct Args {
    /// Print JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Largest rank accepted.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_RANK)]
    max_rank: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one representation: TYPE RANK WEIGHT, WEIGHT as w<i> or a1,...,ar.
    Classify {
        type_label: String,
        rank: usize,
        weight: String,
    },
    /// Minuscule flag and verdict for every fundamental weight.
    Report,
    /// Facets of the convex hull of a point file.
    Facets { file: PathBuf },
    /// Run the verification suite.
    VerifyAll {
        /// Run a single check.
        #[arg(long)]
        only: Option<String>,
        /// Read the E6 points from this file instead of computing them.
        #[arg(long)]
        e6_fixture: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::InvalidInput(_)
            | Error::IllegalRootSystem(..)
            | Error::NotDominant(_) => Failure::Usage(e.to_string()),
            _ => Failure::Verification(e.to_string()),
        }
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Returns the output text and whether every check passed.
fn run(args: &Args) -> Result<(String, bool), Failure> {
    match &args.command {
        Command::Classify {
            type_label,
            rank,
            weight,
        } => {
            let t = cli::parse_type(type_label)?;
            if *rank > args.max_rank {
                return Err(Failure::Usage(format!(
                    "rank {rank} exceeds --max-rank {}",
                    args.max_rank
                )));
            }
            let spec: WeightSpec = weight.parse()?;
            let v = cli::classify(t, *rank, &spec)?;
            let ok = v.certificate.verified();
            Ok((if args.json { json(&v) } else { v.render() }, ok))
        }
        Command::Report => {
            let rows = cli::report(args.max_rank)?;
            Ok((
                if args.json {
                    json(&rows)
                } else {
                    cli::render_report(&rows)
                },
                true,
            ))
        }
        Command::Facets { file } => {
            let h = cli::facets(&read(file)?)?;
            let ok = h.check.all();
            Ok((
                if args.json {
                    json(&h)
                } else {
                    cli::render_facets(&h)
                },
                ok,
            ))
        }
        Command::VerifyAll { only, e6_fixture } => {
            let e6_fixture = match e6_fixture {
                Some(p) => Some(
                    cli::parse_points(&read(p)?)?
                        .into_iter()
                        .map(Weight)
                        .collect(),
                ),
                None => None,
            };
            let opts = VerifyOptions {
                only: only.clone(),
                max_rank: args.max_rank,
                e6_fixture,
            };
            let results = verify::run(&opts)?;
            let ok = results.iter().all(|r| r.passed);
            Ok((
                if args.json {
                    json(&results)
                } else {
                    verify::render(&results)
                },
                ok,
            ))
        }
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let (text, ok) = match run(&args) {
        Ok(r) => r,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            return ExitCode::from(1);
        }
    };
    match &args.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
