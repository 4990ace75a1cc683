//! The survival indicator: the chance that a vertex transmits before it
//! first recovers has expectation exactly rho(law, lambda).

use cpcm::degree_model::DegreeLaw;
use cpcm::experiments::{survival_indicator_experiment, ExperimentSpec};

fn main() -> cpcm::Result<()> {
    for lambda in [0.2, 1.0, 3.0] {
        let n = 2000;
        let spec = ExperimentSpec::new(DegreeLaw::truncated(1.5, n as u64)?, n, lambda, 20, 1);
        print!("{}", survival_indicator_experiment(&spec)?.report());
    }
    Ok(())
}
