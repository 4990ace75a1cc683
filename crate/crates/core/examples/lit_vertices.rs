//! Lit vertices: a star center whose neighborhood carries more than a
//! lambda/(16e) fraction of infected vertices.

use cpcm::config_model::MultiGraph;
use cpcm::contact::{is_lit, LIT_CONSTANT};

fn main() {
    let star = MultiGraph::star(100);
    let lambda = 1.0;
    println!("threshold fraction {:.5}", LIT_CONSTANT * lambda);
    for infected_leaves in [0, 1, 2, 3, 10] {
        let mut infected = vec![false; star.n()];
        for leaf in 1..=infected_leaves {
            infected[leaf] = true;
        }
        println!("  {infected_leaves:>2} infected leaves: center lit = {}", is_lit(&star, &infected, 0, lambda, None));
    }
}
