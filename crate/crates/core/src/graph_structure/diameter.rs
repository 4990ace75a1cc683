//! Component diameter via the iFUB scheme: BFS from a high-degree root, then
//! eccentricities of the deepest BFS levels until the bound `2 (i - 1)`
//! certifies the answer. Small components run it without a budget, so the
//! result is always exact; larger ones stop when the BFS budget runs out, in
//! which case the result carries both bounds and is flagged inexact.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::adjacency::SimpleAdjacency;

/// Components up to this size always get an exact diameter.
pub const EXACT_DIAMETER_LIMIT: usize = 20_000;

/// Maximum number of eccentricity BFS runs spent by the fringe search.
pub const FRINGE_BFS_BUDGET: usize = 4_096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiameterResult {
    /// Certified lower bound; equals the diameter when `exact`.
    pub lower: u32,
    /// Certified upper bound.
    pub upper: u32,
    pub exact: bool,
}

impl DiameterResult {
    pub fn value(&self) -> u32 {
        self.lower
    }
}

fn max_ecc(adj: &SimpleAdjacency, sources: &[usize]) -> u32 {
    sources
        .par_iter()
        .map_init(
            || (Vec::new(), Vec::new()),
            |(dist, queue), &s| adj.bfs_into(s, dist, queue),
        )
        .max()
        .unwrap_or(0)
}

pub fn diameter(adj: &SimpleAdjacency, component: &[usize]) -> DiameterResult {
    assert!(!component.is_empty(), "diameter of an empty component");
    let budget = if component.len() <= EXACT_DIAMETER_LIMIT {
        usize::MAX
    } else {
        FRINGE_BFS_BUDGET
    };
    fringe_search(adj, component, budget)
}

/// Maximum eccentricity over every vertex of the component, by one BFS per vertex.
pub fn exhaustive_diameter(adj: &SimpleAdjacency, component: &[usize]) -> u32 {
    max_ecc(adj, component)
}

pub(crate) fn fringe_search(adj: &SimpleAdjacency, component: &[usize], budget: usize) -> DiameterResult {
    let root = *component
        .iter()
        .max_by_key(|&&v| (adj.degree(v), std::cmp::Reverse(v)))
        .expect("nonempty");
    let mut dist = Vec::new();
    let mut queue = Vec::new();
    let root_ecc = adj.bfs_into(root, &mut dist, &mut queue);
    let root_dist = dist.clone();
    // double sweep from the farthest vertex for a first lower bound
    let far = *queue.last().expect("root reached") as usize;
    let mut lower = root_ecc.max(adj.bfs_into(far, &mut dist, &mut queue));
    let mut upper = 2 * root_ecc;

    let mut levels: Vec<Vec<usize>> = vec![Vec::new(); root_ecc as usize + 1];
    for &v in component {
        let d = root_dist[v];
        if d != u32::MAX {
            levels[d as usize].push(v);
        }
    }
    let mut spent = 0usize;
    let mut level = root_ecc;
    while upper > lower && level > 0 {
        let fringe = &levels[level as usize];
        if spent.saturating_add(fringe.len()) > budget {
            break;
        }
        spent += fringe.len();
        lower = lower.max(max_ecc(adj, fringe));
        // every pair left unexamined sits within distance 2 (level - 1)
        upper = lower.max(2 * (level - 1));
        level -= 1;
    }
    DiameterResult {
        lower,
        upper,
        exact: lower == upper,
    }
}
