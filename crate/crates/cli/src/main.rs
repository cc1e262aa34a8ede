//! Command-line front end: run verification suites or dump exact objects.

use clap::{Parser, Subcommand, ValueEnum};
use psl213::harness::{self, EmitFormat};
use psl213::report::{RunConfig, Suite};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "psl213",
    about = "Exact verification of the PSL(2,13) generator tables, presentations, and invariant-form identities",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and print a report.
    Verify {
        /// Suites to run (default: all). One or more of: cyclo, group,
        /// perm, quaternion, forms, duality, rep14, modular-eq, haagerup,
        /// macwilliams, all.
        suites: Vec<String>,
        /// Seed for the randomized spot checks (fully determines them).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Decimal digits of numeric precision for sign checks.
        #[arg(long, default_value_t = 60)]
        precision: u32,
        /// Skip the group-closure enumeration and degree-12 expansions.
        #[arg(long)]
        skip_heavy: bool,
        /// Also write the report to this path.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the exact text serialization of a catalogued matrix, form,
    /// or constant.
    Dump {
        /// Object name (for example S, T, Q3, x1, A0, D7, G12, L, M,
        /// sqrt13, theta1). Use `--list` to see all names.
        name: Option<String>,
        /// Write to this path instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// List every dumpable name.
        #[arg(long)]
        list: bool,
    },
}

fn parse_suites(args: &[String]) -> Result<Vec<Suite>, String> {
    if args.is_empty() || args.iter().any(|s| s == "all") {
        return Ok(Suite::all());
    }
    let mut suites = Vec::new();
    for a in args {
        match Suite::from_name(a) {
            Some(s) => {
                if !suites.contains(&s) {
                    suites.push(s);
                }
            }
            None => {
                return Err(format!(
                    "unknown suite {a:?}; valid suites: {}, all",
                    Suite::all()
                        .iter()
                        .map(|s| s.name())
                        .collect::<Vec<_>>()
                        .join(", ")
                ))
            }
        }
    }
    Ok(suites)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { suites, seed, precision, skip_heavy, report, format } => {
            let suites = match parse_suites(&suites) {
                Ok(s) => s,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return ExitCode::from(2);
                }
            };
            if precision < 20 {
                eprintln!("error: precision must be at least 20 digits");
                return ExitCode::from(2);
            }
            let config = RunConfig { suites, seed, precision, skip_heavy };
            let result = match harness::run(&config) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let emit_format = match format {
                Format::Text => EmitFormat::Text,
                Format::Structured => EmitFormat::Structured,
            };
            let output = harness::emit(&result, emit_format);
            if let Some(path) = report {
                if let Err(e) = std::fs::write(&path, &output) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            print!("{output}");
            ExitCode::from(harness::exit_code(&result) as u8)
        }
        Command::Dump { name, out, list } => {
            if list {
                for n in harness::dump_names() {
                    println!("{n}");
                }
                return ExitCode::SUCCESS;
            }
            let Some(name) = name else {
                eprintln!("error: dump needs an object name (or --list)");
                return ExitCode::from(2);
            };
            match harness::dump(&name) {
                Ok(text) => {
                    if let Some(path) = out {
                        if let Err(e) = std::fs::write(&path, &text) {
                            eprintln!("error: cannot write {}: {e}", path.display());
                            return ExitCode::from(2);
                        }
                    } else {
                        print!("{text}");
                    }
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
