use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser, Serialize)]
#[command(name = "gamma3", version, about = "Line graphs, the extension search and Hamilton-connectedness certificates")]
pub struct Cli {
    /// Line-delimited JSON instead of text reports.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every randomised choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true, env = "GAMMA3_WORKERS")]
    pub workers: Option<usize>,
    /// Write the run manifest here instead of stderr.
    #[arg(long, global = true)]
    pub manifest: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum PolicyArg {
    Lexmin,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum ModeArg {
    Subgraph,
    Flat,
    Induced,
}

#[derive(Debug, Subcommand, Serialize)]
pub enum Command {
    /// Generate the family by the extension search.
    Search {
        #[arg(long, value_enum, default_value_t = PolicyArg::Lexmin)]
        policy: PolicyArg,
        /// Wall-clock budget in seconds.
        #[arg(long)]
        budget: Option<u64>,
        /// Archive path; the trace is written next to it.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        no_cache: bool,
    },
    /// Gate and conditions (1)..(14) for every record.
    Check { file: PathBuf },
    /// Hamilton-connectedness of every record.
    Hamcon {
        file: PathBuf,
        /// Test the line graph of each record.
        #[arg(long)]
        line: bool,
        /// Write certificates for the Hamilton-connected records.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Check that every record is covered by a valid certificate.
    Verify {
        family: PathBuf,
        certs: PathBuf,
        /// Certificates are for the line graphs of the records.
        #[arg(long)]
        line: bool,
    },
    /// Decorated Wagner graphs without an `L^{-1}(Γ₃)` subgraph.
    WagnerClaim {
        /// Also subdivide copies of multiedges.
        #[arg(long)]
        with_multiedges: bool,
    },
    /// Line graph of every record.
    Linegraph { file: PathBuf },
    /// Preimage of every record.
    Preimage { file: PathBuf },
    /// Core of every record.
    Core { file: PathBuf },
    /// Strong spanning trailability of every record.
    Sst { file: PathBuf },
    /// Closure operations on claw-free simple graphs.
    Closure {
        file: PathBuf,
        /// `cl`, `local:<v>`, `eligible` or `feasible:<v>`.
        #[arg(long)]
        op: String,
    },
    /// Named patterns.
    Pattern {
        #[command(subcommand)]
        action: PatternAction,
    },
}

#[derive(Debug, Subcommand, Serialize)]
pub enum PatternAction {
    /// Every builder with its vertex and edge counts.
    List,
    /// One builder as a record.
    Show { name: String },
    /// Embeddings of a builder into every record.
    Find {
        name: String,
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Subgraph)]
        mode: ModeArg,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Search { .. } => "search",
            Command::Check { .. } => "check",
            Command::Hamcon { .. } => "hamcon",
            Command::Verify { .. } => "verify",
            Command::WagnerClaim { .. } => "wagner-claim",
            Command::Linegraph { .. } => "linegraph",
            Command::Preimage { .. } => "preimage",
            Command::Core { .. } => "core",
            Command::Sst { .. } => "sst",
            Command::Closure { .. } => "closure",
            Command::Pattern { .. } => "pattern",
        }
    }

    pub fn inputs(&self) -> Vec<PathBuf> {
        match self {
            Command::Check { file }
            | Command::Hamcon { file, .. }
            | Command::Linegraph { file }
            | Command::Preimage { file }
            | Command::Core { file }
            | Command::Sst { file }
            | Command::Closure { file, .. } => vec![file.clone()],
            Command::Verify { family, certs, .. } => vec![family.clone(), certs.clone()],
            Command::Pattern {
                action: PatternAction::Find { file, .. },
            } => vec![file.clone()],
            _ => Vec::new(),
        }
    }
}
