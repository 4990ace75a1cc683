//! Extinction time of a star from full occupancy, normalised by its mean,
//! against Exp(1); then the deliberately non-exponential control.

use cpcm::config_model::MultiGraph;
use cpcm::degree_model::DegreeLaw;
use cpcm::experiments::{exponential_law_control, exponential_law_experiment, ExperimentSpec, GraphFamily};

fn main() -> cpcm::Result<()> {
    let leaves = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(30);
    let spec = ExperimentSpec::new(DegreeLaw::truncated(1.5, 10)?, 10, 1.0, 1000, 1);
    print!("{}", exponential_law_experiment(&spec, &GraphFamily::Fixed(MultiGraph::star(leaves)))?.report());
    print!("{}", exponential_law_control(&spec)?.report());
    Ok(())
}
