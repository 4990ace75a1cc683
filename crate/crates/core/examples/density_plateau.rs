//! Density of infected vertices from full occupancy against rho, on
//! fresh graphs per replica.

use cpcm::degree_model::DegreeLaw;
use cpcm::experiments::{density_experiment, ExperimentSpec};

fn main() -> cpcm::Result<()> {
    let n = 2000;
    let mut spec = ExperimentSpec::new(DegreeLaw::truncated(1.5, n as u64)?, n, 1.0, 20, 4);
    spec.times = vec![1.0, 5.0, 10.0, 20.0, 40.0];
    let table = density_experiment(&spec)?;
    print!("{}", table.report());
    print!("{}", table.to_csv());
    Ok(())
}
