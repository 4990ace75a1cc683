use crate::config_model::MultiGraph;

/// Default lit constant: a vertex is lit when more than `LIT_CONSTANT * lambda`
/// of its neighbors are infected.
pub const LIT_CONSTANT: f64 = 1.0 / (16.0 * std::f64::consts::E);

/// Lit predicate with the default constant.
pub fn is_lit(
    graph: &MultiGraph,
    infected: &[bool],
    v: usize,
    lambda: f64,
    neighborhood: Option<&[usize]>,
) -> bool {
    is_lit_with(graph, infected, v, lambda, neighborhood, LIT_CONSTANT)
}

/// True when the infected fraction of `v`'s distinct neighbors (or of the
/// given `neighborhood`, a subset of them) exceeds `constant * lambda`.
/// `v` itself never counts as its own neighbor.
pub fn is_lit_with(
    graph: &MultiGraph,
    infected: &[bool],
    v: usize,
    lambda: f64,
    neighborhood: Option<&[usize]>,
    constant: f64,
) -> bool {
    let mut pool: Vec<usize> = match neighborhood {
        Some(set) => set.to_vec(),
        None => graph.neighbors(v).collect(),
    };
    pool.retain(|&w| w != v);
    pool.sort_unstable();
    pool.dedup();
    if pool.is_empty() {
        return false;
    }
    let hot = pool.iter().filter(|&&w| infected[w]).count();
    hot as f64 / pool.len() as f64 > constant * lambda
}
