use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::calibration::Calibration;
use super::stats::{linear_fit, median_se};
use super::table::{ResultRow, ResultTable};
use super::{config_hash, run_replicas_until};
use crate::config_model::MultiGraph;
use crate::contact::{extinction_time, Extinction, DEFAULT_CAP};
use crate::degree_model::check_lambda;
use crate::error::{Error, Result};
use crate::rng::SeedTree;

const NAME: &str = "growth";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GrowthFamily {
    /// Star with `size` leaves.
    Stars,
    /// Two-step star `S(centers; size, .., size)`.
    TwoStepStars { centers: usize },
}

impl GrowthFamily {
    pub fn graph(&self, size: usize) -> MultiGraph {
        match *self {
            GrowthFamily::Stars => MultiGraph::star(size),
            GrowthFamily::TwoStepStars { centers } => MultiGraph::two_step_star(&vec![size; centers]),
        }
    }

    /// Total number of leaves, the size entering the regression.
    pub fn total_size(&self, size: usize) -> usize {
        match *self {
            GrowthFamily::Stars => size,
            GrowthFamily::TwoStepStars { centers } => centers * size,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GrowthSpec {
    pub family: GrowthFamily,
    pub sizes: Vec<usize>,
    pub lambda: f64,
    pub replicas: usize,
    pub seed: u64,
    pub cap: f64,
    pub calibration: Calibration,
}

impl GrowthSpec {
    pub fn new(family: GrowthFamily, sizes: Vec<usize>, lambda: f64, replicas: usize, seed: u64) -> Self {
        Self {
            family,
            sizes,
            lambda,
            replicas,
            seed,
            cap: DEFAULT_CAP,
            calibration: Calibration::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_lambda(self.lambda)?;
        if self.replicas == 0 {
            return Err(Error::Config("replicas must be >= 1".into()));
        }
        if self.sizes.len() < 2 || self.sizes.contains(&0) {
            return Err(Error::Config("growth grid needs at least two sizes, all >= 1".into()));
        }
        if let GrowthFamily::TwoStepStars { centers: 0 } = self.family {
            return Err(Error::Config("two-step stars need at least one center".into()));
        }
        Ok(())
    }
}

/// Median extinction time from full occupancy over a grid of star or
/// two-step-star sizes, and the regression of its logarithm on
/// `lambda^2 * total size`. A censored median is an error.
pub fn growth_experiment(spec: &GrowthSpec) -> Result<ResultTable> {
    spec.validate()?;
    let start = Instant::now();
    let seeds = SeedTree::new(spec.seed).child(NAME);
    let m = spec.replicas;
    let mut rows = Vec::new();
    let mut xs = Vec::new();
    let mut medians = Vec::new();
    for &size in &spec.sizes {
        let graph = spec.family.graph(size);
        let all: Vec<usize> = (0..graph.n()).collect();
        let stream = seeds.child(&format!("size={size}"));
        let runs = run_replicas_until(
            m,
            |r| {
                let mut rng = stream.stream("dynamics", r);
                extinction_time(&graph, spec.lambda, &all, spec.cap, &mut rng)
            },
            |seen: &[Extinction]| seen.iter().filter(|e| e.is_censored()).count() >= m.div_ceil(2),
        )?
        .ok_or_else(|| {
            Error::Experiment(format!(
                "median extinction time censored at size {size} (cap {:?})",
                spec.cap
            ))
        })?;
        let mut taus: Vec<f64> = runs.iter().map(Extinction::time).collect();
        taus.sort_by(f64::total_cmp);
        let (median, se) = median_se(&taus);
        rows.push(ResultRow::info(format!("size={size}"), median, se));
        xs.push(spec.lambda * spec.lambda * spec.family.total_size(size) as f64);
        medians.push(median);
    }
    let logs: Vec<f64> = medians.iter().map(|t| t.ln()).collect();
    let fit = linear_fit(&xs, &logs)?;
    let r2_min = spec.calibration.growth.r2_min;
    rows.push(ResultRow::checked(
        "slope",
        fit.slope,
        fit.slope_se,
        Some(0.0),
        "signature: slope of log(median tau) on lambda^2 * size > 0",
        fit.slope > 0.0,
    ));
    rows.push(ResultRow::info("intercept", fit.intercept, 0.0));
    rows.push(ResultRow::checked(
        "r_squared",
        fit.r_squared,
        0.0,
        Some(r2_min),
        format!("calibrated: R^2 >= {r2_min:?}"),
        fit.r_squared >= r2_min,
    ));
    let monotone = medians.windows(2).all(|w| w[1] > w[0]);
    rows.push(ResultRow::checked(
        "monotone",
        if monotone { 1.0 } else { 0.0 },
        0.0,
        Some(1.0),
        "median tau strictly increasing in size",
        monotone,
    ));
    Ok(ResultTable {
        experiment: NAME.into(),
        seed: spec.seed,
        config_hash: config_hash(NAME, spec),
        wall_time_secs: start.elapsed().as_secs_f64(),
        rows,
    })
}
