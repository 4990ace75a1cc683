#![allow(dead_code)]

use std::collections::BTreeSet;

use cpcm::config_model::MultiGraph;
use cpcm::contact::EventLog;
use cpcm::degree_model::{DegreeLaw, DegreeSequence};
use cpcm::rng::SimRng;

/// Every connected multigraph (loops and multi-edges allowed) on 1..=4
/// vertices with at most 6 edges, one representative per isomorphism class.
pub fn small_multigraph_corpus() -> Vec<MultiGraph> {
    let mut out = Vec::new();
    for k in 1..=4usize {
        let types: Vec<(usize, usize)> = (0..k).flat_map(|u| (u..k).map(move |v| (u, v))).collect();
        let perms = permutations(k);
        let mut seen: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
        let mut multiset = Vec::new();
        enumerate_multisets(&types, 0, 6, &mut multiset, &mut |edges| {
            if !connected(k, edges) {
                return;
            }
            let canon = perms
                .iter()
                .map(|p| {
                    let mut e: Vec<(usize, usize)> = edges
                        .iter()
                        .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                        .collect();
                    e.sort_unstable();
                    e
                })
                .min()
                .expect("at least one permutation");
            if seen.insert(canon.clone()) {
                out.push(MultiGraph::from_edges(k, &canon).expect("valid corpus graph"));
            }
        });
    }
    out
}

fn enumerate_multisets(
    types: &[(usize, usize)],
    start: usize,
    remaining: usize,
    current: &mut Vec<(usize, usize)>,
    visit: &mut dyn FnMut(&[(usize, usize)]),
) {
    visit(current);
    if remaining == 0 {
        return;
    }
    for i in start..types.len() {
        current.push(types[i]);
        enumerate_multisets(types, i, remaining - 1, current, visit);
        current.pop();
    }
}

fn connected(k: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    let root = find(&mut parent, 0);
    (0..k).all(|v| find(&mut parent, v) == root)
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// Configuration-model graph on `n` vertices with a truncated `a = 1.5` law.
pub fn random_graph(n: usize, rng: &mut SimRng) -> MultiGraph {
    let law = DegreeLaw::truncated(1.5, n as u64).expect("valid law");
    let seq = DegreeSequence::sample(&law.sampler(), n, rng);
    MultiGraph::build_uniform_matching(&seq, rng).expect("graph builds")
}

/// Infection-path search straight from the definition: from `(v, 0)` the
/// infection sits on `v` until `v`'s next recovery; any transmission out of
/// the current vertex before that recovery starts a new segment at the
/// target. Returns, for each time in `times`, the vertices `w` with a path
/// `(v, 0) -> (w, t)`.
pub fn paths_from(log: &EventLog, graph: &MultiGraph, v: usize, times: &[f64]) -> Vec<BTreeSet<usize>> {
    let next_recovery = |x: usize, s: f64| -> f64 {
        log.recoveries(x).iter().copied().find(|&r| r > s).unwrap_or(f64::INFINITY)
    };
    let mut reached = vec![BTreeSet::new(); times.len()];
    // segments (vertex, entry time); every entry time is a distinct log point
    let mut stack = vec![(v, 0.0f64)];
    let mut visited: BTreeSet<(usize, u64)> = BTreeSet::new();
    let horizon = times.iter().copied().fold(0.0, f64::max);
    while let Some((x, s)) = stack.pop() {
        if !visited.insert((x, s.to_bits())) {
            continue;
        }
        let end = next_recovery(x, s);
        for (i, &t) in times.iter().enumerate() {
            if s <= t && t < end {
                reached[i].insert(x);
            }
        }
        for h in graph.half_edges(x) {
            for &u in log.transmissions(h) {
                if u > s && u < end && u <= horizon {
                    stack.push((graph.target(h), u));
                }
            }
        }
    }
    reached
}

/// Exact mean extinction time from state `initial` (bit mask) on a graph with
/// at most 12 vertices, by solving the linear system of the Markov chain.
pub fn exact_mean_extinction(graph: &MultiGraph, lambda: f64, initial: usize) -> f64 {
    let n = graph.n();
    assert!(n <= 12);
    let states = 1usize << n;
    // unknowns for states 1..states; state 0 has mean 0
    let dim = states - 1;
    let mut a = vec![vec![0.0f64; dim]; dim];
    let mut b = vec![1.0f64; dim];
    for s in 1..states {
        let row = s - 1;
        let mut out_rate = 0.0;
        for v in 0..n {
            if s >> v & 1 == 1 {
                out_rate += 1.0;
                let t = s & !(1 << v);
                if t != 0 {
                    a[row][t - 1] -= 1.0;
                }
                for h in graph.half_edges(v) {
                    let w = graph.target(h);
                    if s >> w & 1 == 0 {
                        out_rate += lambda;
                        a[row][(s | 1 << w) - 1] -= lambda;
                    }
                }
            }
        }
        a[row][row] += out_rate;
    }
    // Gaussian elimination with partial pivoting
    for col in 0..dim {
        let piv = (col..dim)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .expect("nonempty");
        a.swap(col, piv);
        b.swap(col, piv);
        for r in col + 1..dim {
            let f = a[r][col] / a[col][col];
            if f != 0.0 {
                for c in col..dim {
                    a[r][c] -= f * a[col][c];
                }
                b[r] -= f * b[col];
            }
        }
    }
    let mut x = vec![0.0; dim];
    for r in (0..dim).rev() {
        let tail: f64 = (r + 1..dim).map(|c| a[r][c] * x[c]).sum();
        x[r] = (b[r] - tail) / a[r][r];
    }
    x[initial - 1]
}
