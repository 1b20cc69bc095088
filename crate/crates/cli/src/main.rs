mod cli;
mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use cli::Cli;
use report::{file_hash, Reporter, RunManifest};

/// Outcome of a subcommand that ran to completion.
pub struct Status {
    pub holds: bool,
    pub summary: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let workers = cli
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1);
    let _ = rayon::ThreadPoolBuilder::new().num_threads(workers).build_global();
    let mut out = Reporter::new(cli.json);
    let (code, summary) = match commands::run(&cli, workers, &mut out) {
        Ok(s) => (if s.holds { 0 } else { 1 }, s.summary),
        Err(e) => {
            eprintln!("error: {e:#}");
            (2, format!("input error: {e:#}"))
        }
    };
    let manifest = RunManifest {
        subcommand: cli.command.name().to_string(),
        config: serde_json::to_value(&cli).unwrap_or_default(),
        inputs: cli
            .command
            .inputs()
            .iter()
            .map(|p| (p.display().to_string(), file_hash(p)))
            .collect(),
        elapsed_ms: start.elapsed().as_millis(),
        exit_code: code,
        summary,
    };
    let text = serde_json::to_string(&manifest).expect("manifest serialises");
    match &cli.manifest {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text + "\n") {
                eprintln!("error: cannot write manifest {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => eprintln!("manifest {text}"),
    }
    ExitCode::from(code as u8)
}
