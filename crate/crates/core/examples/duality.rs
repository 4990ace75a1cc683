//! Graphical construction on a small multigraph: the forward infected set
//! from each vertex, and the dual set read backwards through the same log.

use cpcm::config_model::MultiGraph;
use cpcm::contact::EventLog;
use cpcm::rng::SeedTree;

fn main() -> cpcm::Result<()> {
    let g = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (1, 2), (2, 3), (3, 3)])?;
    let t = 1.5;
    let log = EventLog::generate(&g, 1.2, t, &mut SeedTree::new(9).stream("log", 0))?;
    println!("{} recoveries and {} transmissions in [0, {t}]",
        (0..g.n()).map(|v| log.recoveries(v).len()).sum::<usize>(),
        (0..g.num_half_edges()).map(|h| log.transmissions(h).len()).sum::<usize>());
    for v in 0..g.n() {
        let forward = log.reachable_forward(&g, &[v], t)?;
        println!("  from {v}: infected at time {t}: {forward:?}");
    }
    for w in 0..g.n() {
        let dual = log.reachable_dual(&g, w, t)?;
        println!("  {w} is infected at time {t} from any of {dual:?}");
        for v in 0..g.n() {
            assert_eq!(dual.contains(&v), log.reachable_forward(&g, &[v], t)?.contains(&w));
        }
    }
    Ok(())
}
