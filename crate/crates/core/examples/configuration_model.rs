//! Building configuration-model multigraphs with both matching schemes and
//! writing the result in the line format.

use cpcm::config_model::MultiGraph;
use cpcm::degree_model::{DegreeLaw, DegreeSequence};
use cpcm::rng::SeedTree;

fn main() -> cpcm::Result<()> {
    let seeds = SeedTree::new(3);
    let law = DegreeLaw::truncated(1.5, 2000)?;
    let seq = DegreeSequence::sample(&law.sampler(), 2000, &mut seeds.stream("degrees", 0));

    let uniform = MultiGraph::build_uniform_matching(&seq, &mut seeds.stream("uniform", 0))?;
    let sequential = MultiGraph::build_sequential_matching(&seq, &mut seeds.stream("sequential", 0))?;
    for (name, g) in [("uniform", &uniform), ("sequential", &sequential)] {
        let loops: usize = (0..g.n()).map(|v| g.loop_count(v)).sum();
        println!(
            "{name:<10} {} vertices, {} edges, max degree {}, {loops} loop half-edges",
            g.n(),
            g.num_edges(),
            g.max_degree()
        );
    }

    let small = MultiGraph::build_uniform_matching(&DegreeSequence::from_degrees(vec![3, 2, 2, 1])?, &mut seeds.stream("small", 0))?;
    let mut text = Vec::new();
    small.write_text(&mut text)?;
    print!("line format of a small graph:\n{}", String::from_utf8_lossy(&text));
    let back = MultiGraph::read_text(text.as_slice())?;
    assert_eq!(back.edge_multiset(), small.edge_multiset());
    Ok(())
}
