//! Command-line surface of the `cpcm` binary: flag and config-file parsing,
//! run manifests and output files.
//!
//! Exit codes: 0 when every checked row passes (or nothing is checked), 1 on
//! a fail verdict, 2 on usage or runtime errors.

mod config;
mod manifest;
mod run;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use config::{parse_config, ConfigFile, Dist, RunConfig, DEFAULT_A, DEFAULT_LAMBDA, DEFAULT_N, DEFAULT_SEED};
pub use manifest::{RunManifest, MANIFEST_FILE};
pub use run::run;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Clone, Parser)]
#[command(name = "cpcm", version, about = "Contact process on power-law configuration-model graphs")]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// Power-law exponent, in (1, 2].
    #[arg(long, global = true)]
    pub a: Option<f64>,
    #[arg(long, global = true, value_enum)]
    pub dist: Option<Dist>,
    /// Cutoff exponent for `--dist alpha`: degrees up to n^alpha.
    #[arg(long, global = true)]
    pub alpha: Option<f64>,
    /// Number of vertices.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Infection rate.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub lambda: Option<f64>,
    /// Master seed.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true)]
    pub replicas: Option<usize>,
    /// Censoring cap for extinction times.
    #[arg(long, global = true)]
    pub cap: Option<f64>,
    /// Observation times, comma separated.
    #[arg(long, global = true, value_delimiter = ',', allow_negative_numbers = true)]
    pub times: Option<Vec<f64>>,
    /// Worker threads; defaults to every available core.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Existing output directory.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Graph file to use instead of generating one.
    #[arg(long, global = true)]
    pub graph: Option<PathBuf>,
    /// TOML file with any of the flags above; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// TOML file overriding the calibration defaults.
    #[arg(long, global = true)]
    pub calibration: Option<PathBuf>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Sample a graph and write it as `graph.txt`.
    Generate {
        /// Explicit degree sequence instead of sampling from the law.
        #[arg(long, value_delimiter = ',')]
        degrees: Option<Vec<u64>>,
    },
    /// Structural report of a graph, as `structure.json`.
    Structure,
    /// Run the contact process and write densities and extinction times.
    Simulate {
        /// `all`, or comma-separated initially infected vertices.
        #[arg(long, default_value = "all")]
        initial: String,
        /// Censoring horizon; defaults to the cap.
        #[arg(long)]
        horizon: Option<f64>,
        /// Also write the event trajectory of replica 0.
        #[arg(long)]
        trajectory: bool,
    },
    /// Run a statistical experiment and write its result table.
    #[command(subcommand)]
    Experiment(ExperimentCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Stars,
    TwoStep,
}

#[derive(Debug, Clone, Subcommand)]
pub enum ExperimentCommand {
    Density,
    Indicator,
    ExpLaw {
        /// Run every replica on a star with this many leaves.
        #[arg(long, conflicts_with = "fixed_graph")]
        star: Option<usize>,
        /// Share one sampled graph across replicas.
        #[arg(long)]
        fixed_graph: bool,
        /// Also run the non-exponential control.
        #[arg(long)]
        control: bool,
    },
    Growth {
        #[arg(long, value_enum, default_value = "stars")]
        family: FamilyArg,
        /// Number of centers for two-step stars.
        #[arg(long, default_value_t = 4)]
        centers: usize,
        #[arg(long, value_delimiter = ',', default_values_t = [20usize, 30, 40, 50, 60])]
        sizes: Vec<usize>,
    },
    Structure {
        #[arg(long, default_value_t = 20)]
        runs: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Generate { .. } => "generate",
            Command::Structure => "structure",
            Command::Simulate { .. } => "simulate",
            Command::Experiment(e) => match e {
                ExperimentCommand::Density => "experiment density",
                ExperimentCommand::Indicator => "experiment indicator",
                ExperimentCommand::ExpLaw { .. } => "experiment exp-law",
                ExperimentCommand::Growth { .. } => "experiment growth",
                ExperimentCommand::Structure { .. } => "experiment structure",
            },
        }
    }
}

/// Parses `args` (program name first) and runs the command, printing errors
/// to stderr. Returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_PASS };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}
