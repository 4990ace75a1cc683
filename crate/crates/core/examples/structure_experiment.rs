//! Structural claims over 20 sampled graphs, with per-claim pass rates.

use cpcm::degree_model::DegreeLaw;
use cpcm::experiments::{structure_experiment, ExperimentSpec};

fn main() -> cpcm::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10_000);
    for a in [1.5, 2.0] {
        let spec = ExperimentSpec::new(DegreeLaw::truncated(a, n as u64)?, n, 1.0, 1, 1);
        print!("{}", structure_experiment(&spec, 20)?.report());
    }
    Ok(())
}
