//! Structural statistics of configuration-model graphs: degree classes,
//! high-degree sets, components, diameter, two-step stars and the largest
//! degrees.

mod adjacency;
mod components;
mod diameter;
mod order_stats;
mod star;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::config_model::MultiGraph;

pub use adjacency::SimpleAdjacency;
pub use components::{components, Components};
pub use diameter::{diameter, exhaustive_diameter, DiameterResult, EXACT_DIAMETER_LIMIT, FRINGE_BFS_BUDGET};
pub use order_stats::{order_statistics_vs_limit, GammaLimit, OrderStatRow, MAX_ORDER};
pub use star::{d1_count, d1_counts, extract_two_step_star, TwoStepStar, HUB_SEARCH_WIDTH};

/// `j -> n_j`, the number of vertices of degree `j`; absent degrees have no key.
pub fn degree_class_counts(graph: &MultiGraph) -> BTreeMap<u64, usize> {
    let mut counts = BTreeMap::new();
    for v in 0..graph.n() {
        *counts.entry(graph.degree(v) as u64).or_insert(0) += 1;
    }
    counts
}

/// Vertices with degree at least `threshold`.
pub fn high_degree_set(graph: &MultiGraph, threshold: f64) -> Vec<usize> {
    (0..graph.n())
        .filter(|&v| graph.degree(v) as f64 >= threshold)
        .collect()
}

/// True if every `v` with `D_v >= big` is adjacent to every other `w` with `D_w >= medium`.
pub fn high_degree_pairs_adjacent(graph: &MultiGraph, big: f64, medium: f64) -> bool {
    let bigs = high_degree_set(graph, big);
    let mediums = high_degree_set(graph, medium);
    let mut mark = vec![usize::MAX; graph.n()];
    bigs.iter().all(|&v| {
        for w in graph.neighbors(v) {
            mark[w] = v;
        }
        mediums.iter().all(|&w| w == v || mark[w] == v)
    })
}

/// `D_max / max(diameter, ln n)`.
pub fn metastability_ratio(graph: &MultiGraph, giant_diameter: u32) -> f64 {
    let ln_n = (graph.n() as f64).ln();
    graph.max_degree() as f64 / (giant_diameter as f64).max(ln_n)
}

/// Number of largest degrees kept in a [`StructureReport`].
pub const REPORT_TOP_DEGREES: usize = 20;

#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    pub n: usize,
    pub edges: usize,
    pub total_degree: usize,
    pub degree_class_counts: BTreeMap<u64, usize>,
    /// `|{v : D_v >= n/2}|`.
    pub high_degree_half_n: usize,
    /// `|{v : D_v >= n^{3/4}}|`.
    pub high_degree_three_quarter: usize,
    /// Largest degrees, decreasing.
    pub top_degrees: Vec<u64>,
    pub max_degree: usize,
    pub component_count: usize,
    pub giant_size: usize,
    pub giant_edges: usize,
    /// Largest edge count among non-giant components.
    pub max_off_giant_edges: usize,
    pub giant_diameter: DiameterResult,
    pub metastability_ratio: f64,
    pub vertices_with_loops: usize,
}

impl StructureReport {
    pub fn compute(graph: &MultiGraph) -> Self {
        let n = graph.n();
        let mut degrees = graph.degrees();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        degrees.truncate(REPORT_TOP_DEGREES);
        let comps = components(graph);
        let adj = SimpleAdjacency::new(graph);
        let giant = comps.giant_vertices();
        let d = diameter(&adj, &giant);
        Self {
            n,
            edges: graph.num_edges(),
            total_degree: graph.num_half_edges(),
            degree_class_counts: degree_class_counts(graph),
            high_degree_half_n: high_degree_set(graph, n as f64 / 2.0).len(),
            high_degree_three_quarter: high_degree_set(graph, (n as f64).powf(0.75)).len(),
            max_degree: graph.max_degree(),
            top_degrees: degrees,
            component_count: comps.count(),
            giant_size: comps.giant_size(),
            giant_edges: comps.edge_counts[comps.giant],
            max_off_giant_edges: comps.max_off_giant_edges,
            giant_diameter: d,
            metastability_ratio: metastability_ratio(graph, d.value()),
            vertices_with_loops: (0..n).filter(|&v| graph.loop_count(v) > 0).count(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_classes() {
        let g = MultiGraph::from_edges(4, &[(0, 2), (1, 3), (2, 3), (3, 3)]).unwrap();
        // degrees 1, 1, 2, 4
        let c = degree_class_counts(&g);
        assert_eq!(c.get(&1), Some(&2));
        assert_eq!(c.get(&2), Some(&1));
        assert_eq!(c.get(&4), Some(&1));
        assert_eq!(c.get(&3), None);
        let g = MultiGraph::from_edges(4, &[(0, 3), (1, 3), (2, 2), (3, 2)]).unwrap();
        let c = degree_class_counts(&g);
        assert_eq!(c, BTreeMap::from([(1, 2), (3, 2)]));
    }

    #[test]
    fn class_sums_match_graph() {
        let g = MultiGraph::two_step_star(&[4, 2, 7]);
        let c = degree_class_counts(&g);
        assert_eq!(c.values().sum::<usize>(), g.n());
        assert_eq!(c.iter().map(|(j, nj)| *j as usize * nj).sum::<usize>(), g.num_half_edges());
    }

    #[test]
    fn metastability_ratio_examples() {
        let star = MultiGraph::star(100);
        let r = metastability_ratio(&star, 2);
        assert!((r - 100.0 / 101f64.ln()).abs() < 1e-12);
        assert!((r - 21.67).abs() < 0.01);
        let cycle = MultiGraph::cycle(100);
        assert!((metastability_ratio(&cycle, 50) - 0.04).abs() < 1e-12);
    }

    #[test]
    fn clique_check() {
        let g = MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        assert!(high_degree_pairs_adjacent(&g, 3.0, 2.0));
        assert!(!high_degree_pairs_adjacent(&g, 2.0, 1.0));
    }

    #[test]
    fn report_serializes_with_exact_flag() {
        let r = StructureReport::compute(&MultiGraph::two_step_star(&[3, 3]));
        assert_eq!(r.giant_diameter.value(), 4);
        let json = r.to_json();
        assert!(json.contains("\"exact\": true"));
        assert_eq!(r.top_degrees[0], 4);
        assert_eq!(r.max_off_giant_edges, 0);
    }
}
