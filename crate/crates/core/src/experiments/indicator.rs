use std::time::Instant;

use super::stats::mean_se;
use super::table::{ResultRow, ResultTable};
use super::{run_replicas, ExperimentSpec};
use crate::contact::first_transmission_before_recovery;
use crate::error::Result;

const NAME: &str = "indicator";

/// Samples, for every vertex of every replica graph, whether one of its
/// edge clocks (loops included) rings before its first recovery. The
/// expectation of the pooled mean equals `rho(law, lambda)` exactly, so the
/// verdict is a plain SE band. Per-graph means are the replicas for the SE;
/// with a single graph the per-vertex draws are used instead.
pub fn survival_indicator_experiment(spec: &ExperimentSpec) -> Result<ResultTable> {
    spec.validate()?;
    let start = Instant::now();
    let rho = spec.law.rho(spec.lambda)?;
    let seeds = spec.seeds(NAME);
    let per_graph = run_replicas(spec.replicas, |r| {
        let graph = spec.graph(&seeds, r)?;
        let mut rng = seeds.stream("indicator", r);
        let hits = (0..graph.n())
            .filter(|&v| first_transmission_before_recovery(&graph, v, spec.lambda, true, &mut rng))
            .count();
        Ok((hits, graph.n()))
    })?;
    let hits: usize = per_graph.iter().map(|p| p.0).sum();
    let total: usize = per_graph.iter().map(|p| p.1).sum();
    let mean = hits as f64 / total as f64;
    let se = if per_graph.len() >= 2 {
        let means: Vec<f64> = per_graph.iter().map(|&(h, n)| h as f64 / n as f64).collect();
        mean_se(&means).1
    } else {
        (mean * (1.0 - mean) / total as f64).sqrt()
    };
    let k = spec.calibration.indicator.se_multiplier;
    let band = format!("exact identity: |mean - rho| <= {k:?} SE");
    let ok = (mean - rho).abs() <= k * se;
    let rows = vec![
        ResultRow::checked(format!("lambda={:?}", spec.lambda), mean, se, Some(rho), band, ok),
        ResultRow::info("vertices_sampled", total as f64, 0.0),
    ];
    Ok(ResultTable {
        experiment: NAME.into(),
        seed: spec.seed,
        config_hash: spec.config_hash(NAME),
        wall_time_secs: start.elapsed().as_secs_f64(),
        rows,
    })
}
