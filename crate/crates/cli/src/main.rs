use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use llvkit_cli::run::{run_bytes, selftest_outcome};
use llvkit_cli::spec::{schema, Kind};
use llvkit_cli::suite;

#[derive(Parser)]
#[command(name = "llvkit", version, about = "Exact computations with LLV algebras, spinors and Clifford algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a problem spec and print (or write) a JSON report.
    Run {
        spec: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include wall-clock time in the report (breaks byte-identical output).
        #[arg(long)]
        timing: bool,
    },
    /// Run the built-in acceptance checks.
    Selftest {
        /// Suite name or criterion number.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the full JSON outcome instead of one line per criterion.
        #[arg(long)]
        json: bool,
    },
    /// Print the JSON schema for a spec kind.
    Schema { kind: Kind },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run { spec, seed, out, timing } => {
            let bytes = match std::fs::read(&spec) {
                Ok(b) => b,
                Err(e) => {
                    eprintln!("llvkit: cannot read {}: {e}", spec.display());
                    return ExitCode::from(2);
                }
            };
            let start = Instant::now();
            let mut report = run_bytes(&bytes, seed);
            if timing {
                report.timing_ms = Some(start.elapsed().as_millis());
            }
            let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
            match out {
                Some(p) => {
                    if let Err(e) = std::fs::write(&p, text) {
                        eprintln!("llvkit: cannot write {}: {e}", p.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            if let Some(e) = &report.error {
                eprintln!("llvkit: {}: {}", e.code, e.message);
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Command::Selftest { filter, seed, json } => {
            let selected = suite::select(filter.as_deref());
            if selected.is_empty() {
                eprintln!("llvkit: filter matches no suite or criterion");
                return ExitCode::from(2);
            }
            let mut outcomes = Vec::new();
            for c in selected {
                let o = suite::run_criterion(c, seed);
                if !json {
                    println!("{}", o.line());
                }
                outcomes.push(o);
            }
            let summary = selftest_outcome(&outcomes);
            if json {
                println!("{}", serde_json::to_string_pretty(&summary.result).expect("serializes"));
            }
            if summary.warnings.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Schema { kind } => {
            println!("{}", serde_json::to_string_pretty(&schema(kind)).expect("serializes"));
            ExitCode::SUCCESS
        }
    }
}
