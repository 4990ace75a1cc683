mod common;

use std::collections::BTreeSet;

use cpcm::contact::EventLog;
use cpcm::rng::SeedTree;
use proptest::prelude::*;
use rand::Rng;

const GRID: [f64; 5] = [0.2, 0.5, 1.0, 1.5, 2.0];

#[test]
fn corpus_has_expected_shape() {
    let corpus = common::small_multigraph_corpus();
    // one vertex: 0..=6 loops
    assert_eq!(corpus.iter().filter(|g| g.n() == 1).count(), 7);
    assert!(corpus.iter().all(|g| g.num_edges() <= 6 && g.n() <= 4));
    let two = corpus.iter().filter(|g| g.n() == 2).count();
    // connected two-vertex multigraphs with <= 6 edges: m >= 1 parallel edges plus
    // loops split over the two (unordered) vertices
    let mut expected = 0;
    for m in 1..=6usize {
        for loops in 0..=(6 - m) {
            expected += loops / 2 + 1;
        }
    }
    assert_eq!(two, expected);
}

#[test]
fn sweep_matches_infection_path_search() {
    let seeds = SeedTree::new(101);
    for (gi, g) in common::small_multigraph_corpus().iter().enumerate() {
        for r in 0..200 {
            let mut rng = seeds.stream(&format!("graph{gi}"), r);
            let lambda = [0.5, 1.0, 2.0][r as usize % 3];
            let log = EventLog::generate(g, lambda, 2.0, &mut rng).unwrap();
            for v in 0..g.n() {
                let sweep = log.forward_snapshots(g, &[v], &GRID).unwrap();
                let paths = common::paths_from(&log, g, v, &GRID);
                for (i, snap) in sweep.iter().enumerate() {
                    let snap: BTreeSet<usize> = snap.iter().copied().collect();
                    assert_eq!(snap, paths[i], "graph {gi} log {r} source {v} t {}", GRID[i]);
                }
            }
        }
    }
}

#[test]
fn self_duality_on_corpus() {
    let seeds = SeedTree::new(202);
    for (gi, g) in common::small_multigraph_corpus().iter().enumerate() {
        for r in 0..500 {
            let mut rng = seeds.stream(&format!("graph{gi}"), r);
            let log = EventLog::generate(g, 1.0, 2.0, &mut rng).unwrap();
            let forward: Vec<Vec<Vec<usize>>> = (0..g.n())
                .map(|v| log.forward_snapshots(g, &[v], &GRID).unwrap())
                .collect();
            for w in 0..g.n() {
                for (i, &t) in GRID.iter().enumerate() {
                    let dual = log.reachable_dual(g, w, t).unwrap();
                    for v in 0..g.n() {
                        assert_eq!(dual.contains(&v), forward[v][i].contains(&w), "graph {gi} log {r}");
                    }
                }
            }
        }
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let b: BTreeSet<usize> = b.iter().copied().collect();
    a.iter().all(|x| b.contains(x))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn forward_monotone_in_initial_set(seed in any::<u64>(), n in 2usize..40, lambda in 0.2f64..3.0) {
        let seeds = SeedTree::new(seed);
        let mut rng = seeds.stream("mono", 0);
        let g = common::random_graph(n, &mut rng);
        let log = EventLog::generate(&g, lambda, 3.0, &mut rng).unwrap();
        let b: Vec<usize> = (0..n).filter(|_| rng.random::<bool>()).collect();
        let a: Vec<usize> = b.iter().copied().filter(|_| rng.random::<bool>()).collect();
        let times = [0.5, 1.0, 2.0, 3.0];
        let fa = log.forward_snapshots(&g, &a, &times).unwrap();
        let fb = log.forward_snapshots(&g, &b, &times).unwrap();
        for (x, y) in fa.iter().zip(&fb) {
            prop_assert!(is_subset(x, y));
        }
    }

    #[test]
    fn thinning_shrinks_infected_set(seed in any::<u64>(), n in 2usize..40, keep in 0.0f64..1.0) {
        let seeds = SeedTree::new(seed);
        let mut rng = seeds.stream("thin", 0);
        let g = common::random_graph(n, &mut rng);
        let log = EventLog::generate(&g, 2.0, 3.0, &mut rng).unwrap();
        let thin = log.thin(keep, &mut rng);
        let all: Vec<usize> = (0..n).collect();
        let times = [0.5, 1.0, 2.0, 3.0];
        let full = log.forward_snapshots(&g, &all, &times).unwrap();
        let thinned = thin.forward_snapshots(&g, &all, &times).unwrap();
        for (x, y) in thinned.iter().zip(&full) {
            prop_assert!(is_subset(x, y));
        }
    }

    #[test]
    fn removing_edges_never_delays_extinction(seed in any::<u64>(), n in 2usize..30) {
        let seeds = SeedTree::new(seed);
        let mut rng = seeds.stream("remove", 0);
        let g = common::random_graph(n, &mut rng);
        let log = EventLog::generate(&g, 1.0, 20.0, &mut rng).unwrap();
        let removed: Vec<usize> = (0..g.num_half_edges()).filter(|_| rng.random::<f64>() < 0.3).collect();
        let smaller = log.without_edges(&g, &removed);
        let all: Vec<usize> = (0..n).collect();
        let full = log.extinction_time(&g, &all).unwrap_or(f64::INFINITY);
        let cut = smaller.extinction_time(&g, &all).unwrap_or(f64::INFINITY);
        prop_assert!(cut <= full);
    }
}
