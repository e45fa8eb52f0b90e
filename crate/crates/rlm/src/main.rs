use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use rlm::exec::{run_script, Report};
use rlm::parser::parse;

/// Script runner for the finite relations-language engine.
#[derive(Parser)]
#[command(name = "rlm", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a script file and check its inline expectations.
    Run {
        file: String,
        /// Emit the reports as one JSON document instead of lines.
        #[arg(long)]
        json: bool,
        /// Seed for commands that sample randomly.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Run the bundled worked-examples script.
    Examples {
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Run the randomized law batteries on the 1..12 universe.
    Laws {
        #[arg(long, default_value_t = 2000)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Laws, classical-law refutations, and the examples script in one
    /// deterministic JSON document.
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

const USAGE_ERROR: u8 = 2;
const CHECK_FAILED: u8 = 1;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Cmd::Run { file, json, seed } => {
            let source = match std::fs::read_to_string(&file) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("rlm: cannot read {file}: {e}");
                    return ExitCode::from(USAGE_ERROR);
                }
            };
            run_source(&source, json, seed)
        }
        Cmd::Examples { json, seed } => run_source(rlm::EXAMPLES, json, seed),
        Cmd::Laws { trials, seed } => {
            run_source(&format!("laws trials {trials} seed {seed}"), false, seed)
        }
        Cmd::Selftest { seed } => {
            let source = format!(
                "laws trials 2000 seed {seed}\nrefute_classical seed {seed}\n{}",
                rlm::EXAMPLES
            );
            run_source(&source, true, seed)
        }
    }
}

fn run_source(source: &str, json: bool, seed: u64) -> ExitCode {
    let script = match parse(source) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("rlm: {e}");
            return ExitCode::from(USAGE_ERROR);
        }
    };
    let reports = match run_script(&script, seed) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("rlm: {e}");
            return ExitCode::from(USAGE_ERROR);
        }
    };
    let mismatches = reports.iter().filter(|r| !r.ok).count();
    if json {
        print_json(&reports);
    } else {
        print_lines(&reports, mismatches);
    }
    if mismatches == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(CHECK_FAILED)
    }
}

fn print_json(reports: &[Report]) {
    let doc = json!({
        "version": env!("CARGO_PKG_VERSION"),
        "reports": reports,
    });
    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
}

fn print_lines(reports: &[Report], mismatches: usize) {
    for r in reports {
        let flag = if r.ok { "" } else { "  MISMATCH" };
        println!("{} {}: {}{}", r.command, r.target, r.summary, flag);
    }
    println!("checks: {}, mismatches: {}", reports.len(), mismatches);
}
