use serde::{Deserialize, Serialize};

use crate::config_model::MultiGraph;

/// Number of highest-degree vertices tried as the hub.
pub const HUB_SEARCH_WIDTH: usize = 64;

/// A two-step star `S(k; d_1..d_k)` found inside a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoStepStar {
    pub hub: usize,
    pub centers: Vec<usize>,
    /// `leaves[i]` are the degree-1 vertices hanging off `centers[i]`.
    pub leaves: Vec<Vec<usize>>,
}

impl TwoStepStar {
    pub fn k(&self) -> usize {
        self.centers.len()
    }

    pub fn leaf_counts(&self) -> Vec<usize> {
        self.leaves.iter().map(Vec::len).collect()
    }

    pub fn total_leaves(&self) -> usize {
        self.leaves.iter().map(Vec::len).sum()
    }

    /// Number of vertices in the tree.
    pub fn size(&self) -> usize {
        1 + self.k() + self.total_leaves()
    }

    /// Checks that the tree `S(k; d_1..d_k)` is present in `graph` as a
    /// subgraph: hub-center and center-leaf edges exist, leaves have degree 1,
    /// and hub, centers and leaves are pairwise distinct.
    pub fn is_valid_in(&self, graph: &MultiGraph) -> bool {
        let n = graph.n();
        let mut seen = vec![false; n];
        let mut claim = |v: usize| v < n && !std::mem::replace(&mut seen[v], true);
        if !claim(self.hub) || self.centers.len() != self.leaves.len() || self.centers.is_empty() {
            return false;
        }
        for (&c, leaves) in self.centers.iter().zip(&self.leaves) {
            if !claim(c) || !graph.has_edge(self.hub, c) {
                return false;
            }
            for &l in leaves {
                if !claim(l) || graph.degree(l) != 1 || graph.target(graph.half_edges(l).start) != c {
                    return false;
                }
            }
        }
        true
    }
}

/// Number of degree-1 neighbors of `v`.
pub fn d1_count(graph: &MultiGraph, v: usize) -> usize {
    graph
        .neighbors(v)
        .filter(|&w| w != v && graph.degree(w) == 1)
        .count()
}

/// `d1_count` for every vertex in one pass.
pub fn d1_counts(graph: &MultiGraph) -> Vec<usize> {
    let mut d1 = vec![0usize; graph.n()];
    for v in 0..graph.n() {
        if graph.degree(v) == 1 {
            let w = graph.target(graph.half_edges(v).start);
            if w != v {
                d1[w] += 1;
            }
        }
    }
    d1
}

/// Greedy two-step star extraction. Centers are vertices with at least
/// `min_leaves` degree-1 neighbors, taken in decreasing order of that count;
/// for each of the [`HUB_SEARCH_WIDTH`] highest-degree vertices (degree >= 2)
/// the centers adjacent to it form a candidate star, capped at
/// `max_centers`. The candidate with the most leaves wins.
pub fn extract_two_step_star(
    graph: &MultiGraph,
    min_leaves: usize,
    max_centers: usize,
) -> Option<TwoStepStar> {
    let n = graph.n();
    let d1 = d1_counts(graph);
    let mut candidates: Vec<usize> = (0..n).filter(|&v| d1[v] >= min_leaves.max(1)).collect();
    if candidates.is_empty() || max_centers == 0 {
        return None;
    }
    candidates.sort_by_key(|&v| (std::cmp::Reverse(d1[v]), v));

    let mut hubs: Vec<usize> = (0..n).filter(|&v| graph.degree(v) >= 2).collect();
    hubs.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
    hubs.truncate(HUB_SEARCH_WIDTH);

    let mut stamp = vec![usize::MAX; n];
    let mut best: Option<(usize, usize, Vec<usize>)> = None;
    for &hub in &hubs {
        for w in graph.neighbors(hub) {
            stamp[w] = hub;
        }
        let centers: Vec<usize> = candidates
            .iter()
            .copied()
            .filter(|&c| c != hub && stamp[c] == hub)
            .take(max_centers)
            .collect();
        if centers.is_empty() {
            continue;
        }
        let total: usize = centers.iter().map(|&c| d1[c]).sum();
        if best.as_ref().is_none_or(|(t, _, _)| total > *t) {
            best = Some((total, hub, centers));
        }
    }
    let (_, hub, centers) = best?;
    let leaves = centers
        .iter()
        .map(|&c| {
            graph
                .neighbors(c)
                .filter(|&w| w != c && graph.degree(w) == 1)
                .collect()
        })
        .collect();
    let star = TwoStepStar { hub, centers, leaves };
    debug_assert!(star.is_valid_in(graph));
    Some(star)
}
