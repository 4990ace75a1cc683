//! One contact-process run from full occupancy, with density samples and
//! the first few events of the trajectory.

use cpcm::config_model::MultiGraph;
use cpcm::contact::{simulate, ContactConfig, TrajectoryEvent};
use cpcm::degree_model::{DegreeLaw, DegreeSequence};
use cpcm::rng::SeedTree;

fn main() -> cpcm::Result<()> {
    let n = 3000;
    let law = DegreeLaw::truncated(1.5, n as u64)?;
    let seeds = SeedTree::new(21);
    let mut rng = seeds.stream("graph", 0);
    let g = MultiGraph::build_uniform_matching(&DegreeSequence::sample(&law.sampler(), n, &mut rng), &mut rng)?;

    let config = ContactConfig::new(1.0, Some(40.0), vec![0.0, 1.0, 5.0, 10.0, 20.0, 40.0])?;
    let all: Vec<usize> = (0..n).collect();
    let mut events: Vec<(f64, TrajectoryEvent)> = Vec::new();
    let out = simulate(&g, &config, &all, &mut seeds.stream("dynamics", 0), Some(&mut events))?;

    println!("rho(law, 1) = {:.4}", law.rho(1.0)?);
    for s in &out.density_samples {
        println!("  t = {:>5}: {:>5} infected, density {:.4}", s.time, s.count, s.density);
    }
    println!("extinction: {:?}, {} events recorded", out.extinction, events.len());
    for (t, e) in events.iter().take(5) {
        println!("  {t:.5} {e:?}");
    }
    Ok(())
}
