use rayon::prelude::*;

use crate::config_model::MultiGraph;

/// Deduplicated neighbor lists in CSR form, loops dropped. Distances in a
/// multigraph ignore multiplicity, so every BFS runs on this view.
#[derive(Debug, Clone)]
pub struct SimpleAdjacency {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl SimpleAdjacency {
    pub fn new(graph: &MultiGraph) -> Self {
        let lists: Vec<Vec<u32>> = (0..graph.n())
            .into_par_iter()
            .map(|v| {
                let mut nb: Vec<u32> = graph
                    .neighbors(v)
                    .filter(|&w| w != v)
                    .map(|w| w as u32)
                    .collect();
                nb.sort_unstable();
                nb.dedup();
                nb
            })
            .collect();
        let mut offsets = Vec::with_capacity(lists.len() + 1);
        offsets.push(0);
        let mut total = 0;
        for l in &lists {
            total += l.len();
            offsets.push(total);
        }
        let mut targets = Vec::with_capacity(total);
        for l in lists {
            targets.extend(l);
        }
        Self { offsets, targets }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// BFS distances from `source`; unreachable vertices get `u32::MAX`.
    /// Returns the eccentricity (within the reached set) as well.
    pub fn bfs_into(&self, source: usize, dist: &mut Vec<u32>, queue: &mut Vec<u32>) -> u32 {
        dist.clear();
        dist.resize(self.n(), u32::MAX);
        queue.clear();
        dist[source] = 0;
        queue.push(source as u32);
        let mut head = 0;
        let mut ecc = 0;
        while head < queue.len() {
            let v = queue[head] as usize;
            head += 1;
            let d = dist[v];
            ecc = d;
            for &w in self.neighbors(v) {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = d + 1;
                    queue.push(w);
                }
            }
        }
        ecc
    }

    pub fn eccentricity(&self, source: usize) -> u32 {
        let mut dist = Vec::new();
        let mut queue = Vec::new();
        self.bfs_into(source, &mut dist, &mut queue)
    }
}
