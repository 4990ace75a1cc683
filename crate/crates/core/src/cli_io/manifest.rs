use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;

use super::config::RunConfig;
use super::Command;
use crate::error::Result;

pub const MANIFEST_FILE: &str = "manifest.json";

/// Record of one CLI run. It is written before any output and rewritten at
/// the end with the finish time, the outputs and the exit code. Timestamps
/// live only here, so every other output is reproducible byte for byte.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    /// Subcommand and its own options.
    pub arguments: String,
    pub config: RunConfig,
    pub seed: u64,
    pub config_hash: String,
    pub tool_version: String,
    pub started_unix_ms: u128,
    pub finished_unix_ms: Option<u128>,
    pub wall_time_secs: Option<f64>,
    pub outputs: Vec<PathBuf>,
    pub exit_code: Option<i32>,
}

fn now_ms() -> u128 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_millis()).unwrap_or(0)
}

impl RunManifest {
    pub fn start(command: &Command, config: &RunConfig) -> Self {
        let arguments = format!("{command:?}");
        let hashed = RunConfig {
            out: PathBuf::new(),
            ..config.clone()
        };
        Self {
            command: command.name().to_string(),
            config_hash: crate::experiments::config_hash(command.name(), &(hashed, &arguments)),
            arguments,
            config: config.clone(),
            seed: config.seed,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            started_unix_ms: now_ms(),
            finished_unix_ms: None,
            wall_time_secs: None,
            outputs: Vec::new(),
            exit_code: None,
        }
    }

    pub fn finish(&mut self, exit_code: i32) {
        let end = now_ms();
        self.finished_unix_ms = Some(end);
        self.wall_time_secs = Some(end.saturating_sub(self.started_unix_ms) as f64 / 1000.0);
        self.exit_code = Some(exit_code);
    }

    pub fn path_in(dir: &Path) -> PathBuf {
        dir.join(MANIFEST_FILE)
    }

    pub fn write(&self, dir: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self)?;
        std::fs::write(Self::path_in(dir), text + "\n")?;
        Ok(())
    }
}
