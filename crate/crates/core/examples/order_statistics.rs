//! The largest degrees of an infinite-support sample, scaled by
//! n^{1/(a-1)}, next to quantiles of their Poisson-process limit.

use cpcm::degree_model::{DegreeLaw, DegreeSequence};
use cpcm::graph_structure::order_statistics_vs_limit;
use cpcm::rng::SeedTree;

fn main() -> cpcm::Result<()> {
    let law = DegreeLaw::infinite(1.5)?;
    let seeds = SeedTree::new(5);
    let seq = DegreeSequence::sample(&law.sampler(), 100_000, &mut seeds.stream("degrees", 0));
    let rows = order_statistics_vs_limit(seq.degrees(), &law, 5, 20_000, &mut seeds.stream("limit", 0))?;
    println!("rank  scaled degree   limit q10   median     q90");
    for r in rows {
        println!(
            "{:>4}  {:>13.5}  {:>10.5} {:>8.5} {:>8.5}",
            r.rank, r.scaled_degree, r.limit_q10, r.limit_median, r.limit_q90
        );
    }
    Ok(())
}
