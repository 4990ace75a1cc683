use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use super::CommonArgs;
use crate::contact::DEFAULT_CAP;
use crate::degree_model::{check_lambda, DegreeLaw};
use crate::error::{Error, Result};
use crate::experiments::{Calibration, ExperimentSpec, DEFAULT_TIMES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Dist {
    Truncated,
    Infinite,
    Alpha,
}

/// Contents of a `--config` TOML file. Every key is optional; flags win.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub a: Option<f64>,
    pub dist: Option<Dist>,
    pub alpha: Option<f64>,
    pub n: Option<usize>,
    pub lambda: Option<f64>,
    pub seed: Option<u64>,
    pub replicas: Option<usize>,
    pub cap: Option<f64>,
    pub times: Option<Vec<f64>>,
    pub threads: Option<usize>,
    pub out: Option<PathBuf>,
    pub graph: Option<PathBuf>,
    pub calibration: Option<PathBuf>,
}

impl ConfigFile {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(format!("malformed config file: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read config file {}: {e}", path.display())))?;
        Self::from_toml(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }
}

/// Fully resolved run configuration, as recorded in the manifest.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub a: f64,
    pub dist: Dist,
    pub alpha: Option<f64>,
    pub n: usize,
    pub lambda: f64,
    pub seed: u64,
    /// `None` leaves the per-command default in place.
    pub replicas: Option<usize>,
    pub cap: f64,
    pub times: Vec<f64>,
    /// `None` uses every available core.
    pub threads: Option<usize>,
    pub out: PathBuf,
    pub graph: Option<PathBuf>,
    pub calibration: Option<PathBuf>,
}

pub const DEFAULT_A: f64 = 1.5;
pub const DEFAULT_N: usize = 2000;
pub const DEFAULT_LAMBDA: f64 = 1.0;
pub const DEFAULT_SEED: u64 = 1;

/// Merges flags over the optional config file over built-in defaults, then
/// validates the result.
pub fn parse_config(args: &CommonArgs) -> Result<RunConfig> {
    let file = match &args.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    let cfg = RunConfig {
        a: args.a.or(file.a).unwrap_or(DEFAULT_A),
        dist: args.dist.or(file.dist).unwrap_or(Dist::Truncated),
        alpha: args.alpha.or(file.alpha),
        n: args.n.or(file.n).unwrap_or(DEFAULT_N),
        lambda: args.lambda.or(file.lambda).unwrap_or(DEFAULT_LAMBDA),
        seed: args.seed.or(file.seed).unwrap_or(DEFAULT_SEED),
        replicas: args.replicas.or(file.replicas),
        cap: args.cap.or(file.cap).unwrap_or(DEFAULT_CAP),
        times: args.times.clone().or(file.times).unwrap_or_else(|| DEFAULT_TIMES.to_vec()),
        threads: args.threads.or(file.threads),
        out: args.out.clone().or(file.out).unwrap_or_else(|| PathBuf::from(".")),
        graph: args.graph.clone().or(file.graph),
        calibration: args.calibration.clone().or(file.calibration),
    };
    cfg.validate()?;
    Ok(cfg)
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        self.law()?;
        check_lambda(self.lambda)?;
        if self.n == 0 {
            return Err(Error::Config("n must be >= 1".into()));
        }
        if self.replicas == Some(0) {
            return Err(Error::Config("replicas must be >= 1".into()));
        }
        if self.threads == Some(0) {
            return Err(Error::Config("threads must be >= 1".into()));
        }
        if !(self.cap >= 0.0) {
            return Err(Error::Config(format!("cap must be >= 0, got {}", self.cap)));
        }
        if self.times.iter().any(|t| !(t.is_finite() && *t >= 0.0)) || self.times.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Config("times must be sorted, finite and non-negative".into()));
        }
        Ok(())
    }

    pub fn law(&self) -> Result<DegreeLaw> {
        match (self.dist, self.alpha) {
            (Dist::Alpha, Some(alpha)) => DegreeLaw::alpha_truncated(self.a, alpha, self.n as u64),
            (Dist::Alpha, None) => Err(Error::Config("--dist alpha needs --alpha".into())),
            (_, Some(_)) => Err(Error::Config("--alpha only applies to --dist alpha".into())),
            (Dist::Truncated, None) => DegreeLaw::truncated(self.a, self.n as u64),
            (Dist::Infinite, None) => DegreeLaw::infinite(self.a),
        }
    }

    pub fn calibration(&self) -> Result<Calibration> {
        match &self.calibration {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Config(format!("cannot read calibration file {}: {e}", path.display())))?;
                Calibration::from_toml(&text)
            }
            None => Ok(Calibration::default()),
        }
    }

    pub fn experiment_spec(&self, default_replicas: usize) -> Result<ExperimentSpec> {
        let mut spec = ExperimentSpec::new(
            self.law()?,
            self.n,
            self.lambda,
            self.replicas.unwrap_or(default_replicas),
            self.seed,
        );
        spec.times = self.times.clone();
        spec.cap = self.cap;
        spec.calibration = self.calibration()?;
        spec.validate()?;
        Ok(spec)
    }
}
