//! Statistical experiments over the contact process and the graph
//! structure. Each experiment is a pure function of its spec and master
//! seed and returns a [`ResultTable`].

mod calibration;
mod density;
mod exp_law;
mod growth;
mod indicator;
mod stats;
mod structure;
mod table;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::config_model::MultiGraph;
use crate::degree_model::{check_lambda, DegreeLaw, DegreeSequence};
use crate::error::{Error, Result};
use crate::rng::SeedTree;

pub use calibration::{
    Calibration, DensityCalibration, ExpLawCalibration, GrowthCalibration, IndicatorCalibration,
    StructureCalibration,
};
pub use density::density_experiment;
pub use exp_law::{exponential_law_control, exponential_law_experiment, GraphFamily};
pub use growth::{growth_experiment, GrowthFamily, GrowthSpec};
pub use indicator::survival_indicator_experiment;
pub use stats::{ks_statistic, ks_two_sample, linear_fit, mean_se, median_se, LinearFit, Reference};
pub use structure::structure_experiment;
pub use table::{ResultRow, ResultTable, Verdict};

/// Default observation probes inside the plateau window.
pub const DEFAULT_TIMES: [f64; 3] = [10.0, 20.0, 40.0];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentSpec {
    pub law: DegreeLaw,
    /// Number of vertices.
    pub n: usize,
    pub lambda: f64,
    pub replicas: usize,
    /// Sorted observation times.
    pub times: Vec<f64>,
    pub seed: u64,
    /// Censoring cap for extinction times.
    pub cap: f64,
    /// One graph shared by all replicas instead of a fresh graph per replica.
    pub fixed_graph: bool,
    pub calibration: Calibration,
}

impl ExperimentSpec {
    pub fn new(law: DegreeLaw, n: usize, lambda: f64, replicas: usize, seed: u64) -> Self {
        Self {
            law,
            n,
            lambda,
            replicas,
            times: DEFAULT_TIMES.to_vec(),
            seed,
            cap: crate::contact::DEFAULT_CAP,
            fixed_graph: false,
            calibration: Calibration::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_lambda(self.lambda)?;
        if self.replicas == 0 {
            return Err(Error::Config("replicas must be >= 1".into()));
        }
        if self.n == 0 {
            return Err(Error::Config("n must be >= 1".into()));
        }
        if self.times.iter().any(|t| !(t.is_finite() && *t >= 0.0)) || self.times.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Config("observation times must be sorted, finite and non-negative".into()));
        }
        if !(self.cap >= 0.0) {
            return Err(Error::Config(format!("cap must be >= 0, got {}", self.cap)));
        }
        Ok(())
    }

    /// Short hex digest of the experiment name and the full spec.
    pub fn config_hash(&self, experiment: &str) -> String {
        config_hash(experiment, self)
    }

    pub(crate) fn seeds(&self, experiment: &str) -> SeedTree {
        SeedTree::new(self.seed).child(experiment)
    }

    /// The graph used by `replica`: its own fresh graph, or replica 0's in
    /// fixed-graph mode.
    pub(crate) fn graph(&self, seeds: &SeedTree, replica: u64) -> Result<MultiGraph> {
        let index = if self.fixed_graph { 0 } else { replica };
        build_graph(&self.law, self.n, seeds, index)
    }
}

pub(crate) fn build_graph(law: &DegreeLaw, n: usize, seeds: &SeedTree, index: u64) -> Result<MultiGraph> {
    let mut rng = seeds.stream("graph", index);
    let seq = DegreeSequence::sample(&law.sampler(), n, &mut rng);
    MultiGraph::build_uniform_matching(&seq, &mut rng)
}

pub(crate) fn config_hash<T: Serialize>(experiment: &str, spec: &T) -> String {
    let json = serde_json::to_string(spec).expect("spec serializes");
    let mut h = Sha256::new();
    h.update(experiment.as_bytes());
    h.update([0]);
    h.update(json.as_bytes());
    hex::encode(&h.finalize()[..6])
}

/// Runs `count` replicas in parallel; results come back in replica order.
pub(crate) fn run_replicas<T, F>(count: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(u64) -> Result<T> + Sync + Send,
{
    (0..count as u64).into_par_iter().map(f).collect()
}

/// Like [`run_replicas`], but in batches of the pool width, stopping as soon
/// as `stop` holds for the results so far. The caller gets `None` on a stop.
pub(crate) fn run_replicas_until<T, F, S>(count: usize, f: F, mut stop: S) -> Result<Option<Vec<T>>>
where
    T: Send,
    F: Fn(u64) -> Result<T> + Sync + Send,
    S: FnMut(&[T]) -> bool,
{
    let batch = rayon::current_num_threads().max(1) as u64;
    let mut out = Vec::with_capacity(count);
    let mut next = 0u64;
    while next < count as u64 {
        let end = (next + batch).min(count as u64);
        let part: Vec<T> = (next..end).into_par_iter().map(&f).collect::<Result<_>>()?;
        out.extend(part);
        if stop(&out) {
            return Ok(None);
        }
        next = end;
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hash_depends_on_spec_and_name() {
        let law = DegreeLaw::truncated(1.5, 100).unwrap();
        let a = ExperimentSpec::new(law.clone(), 100, 1.0, 10, 1);
        let mut b = a.clone();
        b.seed = 2;
        assert_eq!(a.config_hash("x"), a.clone().config_hash("x"));
        assert_ne!(a.config_hash("x"), b.config_hash("x"));
        assert_ne!(a.config_hash("x"), a.config_hash("y"));
        assert_eq!(a.config_hash("x").len(), 12);
    }

    #[test]
    fn spec_validation() {
        let law = DegreeLaw::truncated(1.5, 100).unwrap();
        let good = ExperimentSpec::new(law, 100, 1.0, 10, 1);
        assert!(good.validate().is_ok());
        let mut bad = good.clone();
        bad.replicas = 0;
        assert!(bad.validate().is_err());
        let mut bad = good.clone();
        bad.times = vec![2.0, 1.0];
        assert!(bad.validate().is_err());
        let mut bad = good;
        bad.lambda = -1.0;
        assert!(bad.validate().is_err());
    }

    #[test]
    fn replicas_come_back_in_order_and_stop_early() {
        let v = run_replicas(50, |i| Ok(i * 2)).unwrap();
        assert_eq!(v, (0..50).map(|i| i * 2).collect::<Vec<_>>());
        let stopped = run_replicas_until(50, Ok, |seen: &[u64]| seen.len() >= 5).unwrap();
        assert!(stopped.is_none());
        let full = run_replicas_until(50, Ok, |_: &[u64]| false).unwrap().unwrap();
        assert_eq!(full.len(), 50);
    }

    #[test]
    fn fixed_graph_mode_reuses_graph() {
        let law = DegreeLaw::truncated(1.5, 50).unwrap();
        let mut spec = ExperimentSpec::new(law, 50, 1.0, 3, 5);
        let seeds = spec.seeds("t");
        assert_ne!(spec.graph(&seeds, 0).unwrap(), spec.graph(&seeds, 1).unwrap());
        spec.fixed_graph = true;
        assert_eq!(spec.graph(&seeds, 0).unwrap(), spec.graph(&seeds, 1).unwrap());
    }
}
