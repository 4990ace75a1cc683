use serde::Serialize;

use crate::config_model::MultiGraph;

#[derive(Debug, Clone, Serialize)]
pub struct Components {
    /// Component id per vertex; ids follow the smallest vertex of each component.
    #[serde(skip)]
    pub labels: Vec<u32>,
    /// Vertex count per component.
    pub sizes: Vec<usize>,
    /// Edge count per component (loops included).
    pub edge_counts: Vec<usize>,
    /// Index of the largest component; exact ties go to the lowest id.
    pub giant: usize,
    /// Largest edge count among the non-giant components, 0 if there are none.
    pub max_off_giant_edges: usize,
}

impl Components {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    pub fn giant_size(&self) -> usize {
        self.sizes[self.giant]
    }

    pub fn vertices_of(&self, component: usize) -> Vec<usize> {
        self.labels
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c as usize == component)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn giant_vertices(&self) -> Vec<usize> {
        self.vertices_of(self.giant)
    }
}

pub fn components(graph: &MultiGraph) -> Components {
    let n = graph.n();
    let mut labels = vec![u32::MAX; n];
    let mut sizes = Vec::new();
    let mut stack = Vec::new();
    for s in 0..n {
        if labels[s] != u32::MAX {
            continue;
        }
        let id = sizes.len() as u32;
        labels[s] = id;
        stack.push(s);
        let mut size = 0;
        while let Some(v) = stack.pop() {
            size += 1;
            for w in graph.neighbors(v) {
                if labels[w] == u32::MAX {
                    labels[w] = id;
                    stack.push(w);
                }
            }
        }
        sizes.push(size);
    }
    let mut edge_counts = vec![0usize; sizes.len()];
    for (u, _) in graph.edges() {
        edge_counts[labels[u] as usize] += 1;
    }
    let mut giant = 0;
    for (c, &s) in sizes.iter().enumerate() {
        if s > sizes[giant] {
            giant = c;
        }
    }
    let max_off_giant_edges = edge_counts
        .iter()
        .enumerate()
        .filter(|&(c, _)| c != giant)
        .map(|(_, &e)| e)
        .max()
        .unwrap_or(0);
    Components {
        labels,
        sizes,
        edge_counts,
        giant,
        max_off_giant_edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_graph_has_one_component() {
        let c = components(&MultiGraph::cycle(7));
        assert_eq!(c.count(), 1);
        assert_eq!(c.giant_size(), 7);
        assert_eq!(c.max_off_giant_edges, 0);
    }

    #[test]
    fn tie_goes_to_lowest_vertex() {
        let g = MultiGraph::from_edges(4, &[(2, 3), (0, 1)]).unwrap();
        let c = components(&g);
        assert_eq!(c.count(), 2);
        assert_eq!(c.giant_vertices(), vec![0, 1]);
        assert_eq!(c.giant_size(), 2);
        assert_eq!(c.max_off_giant_edges, 1);
    }

    #[test]
    fn loops_count_as_edges() {
        let g = MultiGraph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (3, 3), (3, 4), (4, 4)]).unwrap();
        let c = components(&g);
        assert_eq!(c.giant_vertices(), vec![0, 1, 2]);
        assert_eq!(c.max_off_giant_edges, 3);
    }
}
