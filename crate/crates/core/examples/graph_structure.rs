//! Structural report of a sampled graph: components, giant diameter,
//! high-degree vertices and the largest two-step star.

use cpcm::config_model::MultiGraph;
use cpcm::degree_model::{DegreeLaw, DegreeSequence};
use cpcm::graph_structure::{extract_two_step_star, StructureReport};
use cpcm::rng::SeedTree;

fn main() -> cpcm::Result<()> {
    let n = 20_000;
    let law = DegreeLaw::truncated(1.5, n as u64)?;
    let mut rng = SeedTree::new(11).stream("graph", 0);
    let seq = DegreeSequence::sample(&law.sampler(), n, &mut rng);
    let g = MultiGraph::build_uniform_matching(&seq, &mut rng)?;

    let r = StructureReport::compute(&g);
    println!("n = {}, L_n = {}, L_n / n^1.5 = {:.3}", r.n, r.total_degree, r.total_degree as f64 / (n as f64).powf(1.5));
    println!("|{{D >= n/2}}| = {}, top degrees {:?}", r.high_degree_half_n, &r.top_degrees[..5]);
    println!(
        "giant: {} vertices ({} components), diameter {} (exact: {})",
        r.giant_size, r.component_count, r.giant_diameter.value(), r.giant_diameter.exact
    );
    println!("metastability ratio D_max / max(diam, ln n) = {:.1}", r.metastability_ratio);

    let min_leaves = (0.1 * (n as f64).sqrt()).ceil() as usize;
    match extract_two_step_star(&g, min_leaves, n) {
        Some(star) => println!(
            "two-step star: hub {}, {} centers, {} leaves ({:.3} n)",
            star.hub,
            star.k(),
            star.total_leaves(),
            star.total_leaves() as f64 / n as f64
        ),
        None => println!("no two-step star with {min_leaves}-leaf centers"),
    }
    Ok(())
}
