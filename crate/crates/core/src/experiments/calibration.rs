use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const DEFAULTS: &str = include_str!("defaults.toml");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Calibration {
    pub version: u32,
    pub density: DensityCalibration,
    pub indicator: IndicatorCalibration,
    pub exp_law: ExpLawCalibration,
    pub growth: GrowthCalibration,
    pub structure: StructureCalibration,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DensityCalibration {
    pub plateau_start: f64,
    pub plateau_end: f64,
    pub relative_tolerance: f64,
    pub flatness: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IndicatorCalibration {
    pub se_multiplier: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpLawCalibration {
    pub ks_threshold: f64,
    pub control_ks_min: f64,
    pub control_star_leaves: usize,
    pub max_censored_fraction: f64,
    pub min_replicas: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GrowthCalibration {
    pub r2_min: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureCalibration {
    pub n_min: usize,
    pub pass_rate: f64,
    pub degree_class_lo: f64,
    pub degree_class_hi: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    pub diameter_bound: u32,
    pub diameter_slack: f64,
    pub beta_hat: f64,
    pub c_hat: f64,
    pub giant_fraction: f64,
    pub clique_exponent: f64,
}

impl Calibration {
    /// Parses a complete calibration document.
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(format!("calibration: {e}")))
    }

    /// The annotated defaults shipped with the crate.
    pub fn defaults_text() -> &'static str {
        DEFAULTS
    }
}

impl Default for Calibration {
    fn default() -> Self {
        Self::from_toml(DEFAULTS).expect("shipped calibration parses")
    }
}
