//! `verify`: run the certificate suites described by a config file and emit a
//! machine-readable JSON report.
//!
//! Exit status: 0 all checks pass, 1 some check fails, 2 inconclusive
//! (caps exhausted without a verdict), 3 configuration or hypothesis error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use faithful_cli::config::{self, Suite};
use faithful_cli::runner;

#[derive(Parser)]
#[command(name = "verify", about = "Certify faithful-cyclic-module statements at bounded degree")]
struct Args {
    /// Path to the TOML run configuration.
    #[arg(long)]
    config: PathBuf,
    /// Which suite to run (overrides the config file).
    #[arg(long)]
    suite: Option<Suite>,
    /// Report output path (overrides the config file; stdout if absent).
    #[arg(long)]
    out: Option<String>,
    /// Scalar backend: "rational" or "prime:<p>" (overrides the config file).
    #[arg(long)]
    backend: Option<String>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let cfg = match config::load(&args.config, args.suite, args.backend.as_deref(), args.out.as_deref()) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("config error: {e}");
            return ExitCode::from(3);
        }
    };
    let report = runner::run(&cfg);
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    match &cfg.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, json + "\n") {
                eprintln!("cannot write report to {path}: {e}");
                return ExitCode::from(3);
            }
            for check in &report.checks {
                eprintln!("{:?}  {}", check.status, check.name);
            }
            eprintln!("verdict: {:?} -> {path}", report.verdict);
        }
        None => println!("{json}"),
    }
    ExitCode::from(report.verdict.exit_code() as u8)
}
