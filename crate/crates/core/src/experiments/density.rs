use std::time::Instant;

use super::stats::mean_se;
use super::table::{ResultRow, ResultTable};
use super::{run_replicas, ExperimentSpec};
use crate::contact::{simulate, ContactConfig};
use crate::error::Result;

const NAME: &str = "density";

/// Mean density `|xi_t| / n` from full occupancy at each observation time,
/// one graph per replica, against `rho(law, lambda)`. A row for `t = 0` is
/// always included. Times inside the plateau window must sit within the
/// relative tolerance of rho and, together, within the flatness bound.
pub fn density_experiment(spec: &ExperimentSpec) -> Result<ResultTable> {
    spec.validate()?;
    let start = Instant::now();
    let cal = &spec.calibration.density;
    let rho = spec.law.rho(spec.lambda)?;
    let mut times = spec.times.clone();
    if times.first() != Some(&0.0) {
        times.insert(0, 0.0);
    }
    let horizon = *times.last().expect("t = 0 present");
    let config = ContactConfig::new(spec.lambda, Some(horizon), times.clone())?;
    let seeds = spec.seeds(NAME);

    let runs = run_replicas(spec.replicas, |r| {
        let graph = spec.graph(&seeds, r)?;
        let all: Vec<usize> = (0..graph.n()).collect();
        let mut rng = seeds.stream("dynamics", r);
        let out = simulate(&graph, &config, &all, &mut rng, None)?;
        let densities: Vec<f64> = out.density_samples.iter().map(|s| s.density).collect();
        Ok((densities, out.extinction.is_censored()))
    })?;

    let mut rows = Vec::new();
    let mut plateau_means = Vec::new();
    for (i, &t) in times.iter().enumerate() {
        let column: Vec<f64> = runs.iter().map(|(d, _)| d[i]).collect();
        let (mean, se) = mean_se(&column);
        let point = format!("t={t:?}");
        if t == 0.0 {
            rows.push(ResultRow::checked(point, mean, se, Some(1.0), "exact: full occupancy", mean == 1.0));
        } else if (cal.plateau_start..=cal.plateau_end).contains(&t) {
            plateau_means.push(mean);
            let band = format!("calibrated: |mean / rho - 1| <= {:?}", cal.relative_tolerance);
            let ok = (mean / rho - 1.0).abs() <= cal.relative_tolerance;
            rows.push(ResultRow::checked(point, mean, se, Some(rho), band, ok));
        } else {
            rows.push(ResultRow {
                target: Some(rho),
                ..ResultRow::info(point, mean, se)
            });
        }
    }
    if plateau_means.len() >= 2 {
        let hi = plateau_means.iter().copied().fold(f64::MIN, f64::max);
        let lo = plateau_means.iter().copied().fold(f64::MAX, f64::min);
        let spread = if lo > 0.0 { (hi - lo) / lo } else { f64::INFINITY };
        let band = format!("calibrated: (max - min) / min over plateau means <= {:?}", cal.flatness);
        rows.push(ResultRow::checked("plateau_flatness", spread, 0.0, None, band, spread <= cal.flatness));
    }
    let alive = runs.iter().filter(|(_, censored)| *censored).count();
    rows.push(ResultRow::info(
        "alive_at_horizon",
        alive as f64 / spec.replicas as f64,
        0.0,
    ));

    Ok(ResultTable {
        experiment: NAME.into(),
        seed: spec.seed,
        config_hash: spec.config_hash(NAME),
        wall_time_secs: start.elapsed().as_secs_f64(),
        rows,
    })
}
