use std::collections::BTreeMap;

use cpcm::config_model::MultiGraph;
use cpcm::degree_model::{DegreeLaw, DegreeSequence};
use cpcm::rng::{SeedTree, SimRng};

type Multiset = Vec<(usize, usize)>;

/// Exact law of the edge multiset: every perfect matching of the half-edges
/// is equally likely.
fn exact_law(degrees: &[u64]) -> BTreeMap<Multiset, f64> {
    let owner: Vec<usize> = degrees
        .iter()
        .enumerate()
        .flat_map(|(v, &d)| std::iter::repeat_n(v, d as usize))
        .collect();
    let mut counts: BTreeMap<Multiset, f64> = BTreeMap::new();
    let mut free: Vec<usize> = (0..owner.len()).collect();
    let mut edges = Vec::new();
    fn rec(owner: &[usize], free: &mut Vec<usize>, edges: &mut Multiset, counts: &mut BTreeMap<Multiset, f64>) {
        if free.is_empty() {
            let mut e = edges.clone();
            e.sort_unstable();
            *counts.entry(e).or_insert(0.0) += 1.0;
            return;
        }
        let first = free.remove(0);
        for i in 0..free.len() {
            let other = free.remove(i);
            let (u, v) = (owner[first], owner[other]);
            edges.push((u.min(v), u.max(v)));
            rec(owner, free, edges, counts);
            edges.pop();
            free.insert(i, other);
        }
        free.insert(0, first);
    }
    rec(&owner, &mut free, &mut edges, &mut counts);
    let total: f64 = counts.values().sum();
    counts.values_mut().for_each(|c| *c /= total);
    counts
}

fn empirical<F>(degrees: &[u64], samples: usize, label: &str, build: F) -> BTreeMap<Multiset, f64>
where
    F: Fn(&DegreeSequence, &mut SimRng) -> MultiGraph,
{
    let seq = DegreeSequence::from_degrees(degrees.to_vec()).unwrap();
    let mut rng = SeedTree::new(2024).stream(label, degrees.iter().fold(0, |h, d| h * 10 + d));
    let mut counts: BTreeMap<Multiset, f64> = BTreeMap::new();
    for _ in 0..samples {
        *counts.entry(build(&seq, &mut rng).edge_multiset()).or_insert(0.0) += 1.0;
    }
    counts.values_mut().for_each(|c| *c /= samples as f64);
    counts
}

fn uniform(seq: &DegreeSequence, rng: &mut SimRng) -> MultiGraph {
    MultiGraph::build_uniform_matching(seq, rng).unwrap()
}

fn sequential(seq: &DegreeSequence, rng: &mut SimRng) -> MultiGraph {
    MultiGraph::build_sequential_matching(seq, rng).unwrap()
}

fn total_variation(p: &BTreeMap<Multiset, f64>, q: &BTreeMap<Multiset, f64>) -> f64 {
    let keys: std::collections::BTreeSet<&Multiset> = p.keys().chain(q.keys()).collect();
    0.5 * keys
        .into_iter()
        .map(|k| (p.get(k).unwrap_or(&0.0) - q.get(k).unwrap_or(&0.0)).abs())
        .sum::<f64>()
}

/// Pearson goodness of fit against exact probabilities, compared with the
/// Wilson-Hilferty approximation of the chi-square quantile at z = 3.72
/// (upper tail 1e-4).
fn chi_square_ok(freq: &BTreeMap<Multiset, f64>, exact: &BTreeMap<Multiset, f64>, samples: usize) -> (f64, f64) {
    assert!(freq.keys().all(|k| exact.contains_key(k)), "impossible outcome sampled");
    let m = samples as f64;
    let stat: f64 = exact
        .iter()
        .map(|(k, p)| {
            let o = freq.get(k).unwrap_or(&0.0) * m;
            (o - m * p).powi(2) / (m * p)
        })
        .sum();
    let df = (exact.len() - 1).max(1) as f64;
    let z = 3.72;
    let crit = df * (1.0 - 2.0 / (9.0 * df) + z * (2.0 / (9.0 * df)).sqrt()).powi(3);
    (stat, crit)
}

fn partitions(total: u64, max: u64) -> Vec<Vec<u64>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    (1..=max.min(total))
        .rev()
        .flat_map(|first| {
            partitions(total - first, first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

const SAMPLES: usize = 30_000;

#[test]
fn four_single_stubs_hit_each_matching_a_third_of_the_time() {
    let degrees = [1, 1, 1, 1];
    let exact = exact_law(&degrees);
    assert_eq!(exact.len(), 3);
    for (label, freq) in [
        ("uniform", empirical(&degrees, SAMPLES, "uniform", uniform)),
        ("sequential", empirical(&degrees, SAMPLES, "sequential", sequential)),
    ] {
        let se = (1.0 / 3.0 * 2.0 / 3.0 / SAMPLES as f64).sqrt();
        for (k, p) in &freq {
            assert!((p - 1.0 / 3.0).abs() < 3.0 * se, "{label} {k:?}: {p}");
        }
    }
}

#[test]
fn two_double_stubs_parallel_two_thirds() {
    let degrees = [2, 2];
    let exact = exact_law(&degrees);
    let parallel = vec![(0, 1), (0, 1)];
    assert!((exact[&parallel] - 2.0 / 3.0).abs() < 1e-15);
    assert!((exact[&vec![(0, 0), (1, 1)]] - 1.0 / 3.0).abs() < 1e-15);
    let se = (2.0 / 9.0 / SAMPLES as f64).sqrt();
    for build in [uniform, sequential] {
        let freq = empirical(&degrees, SAMPLES, "pair", build);
        assert!((freq[&parallel] - 2.0 / 3.0).abs() < 3.0 * se);
    }
}

#[test]
fn builders_match_exact_law_on_every_small_sequence() {
    for total in [2u64, 4, 6, 8] {
        for degrees in partitions(total, total) {
            let exact = exact_law(&degrees);
            let u = empirical(&degrees, SAMPLES, "uniform", uniform);
            let s = empirical(&degrees, SAMPLES, "sequential", sequential);
            for (label, freq) in [("uniform", &u), ("sequential", &s)] {
                let (stat, crit) = chi_square_ok(freq, &exact, SAMPLES);
                assert!(stat <= crit, "{label} {degrees:?}: chi2 {stat} > {crit}");
            }
            // two independent empirical laws over K outcomes differ by about
            // sqrt(K / (pi m)) in TV from sampling noise alone
            let noise = (exact.len() as f64 / (std::f64::consts::PI * SAMPLES as f64)).sqrt();
            let tv = total_variation(&u, &s);
            if noise < 0.01 {
                assert!(tv <= 0.02, "{degrees:?}: TV {tv}");
            } else {
                assert!(tv <= 2.0 * noise + 0.02, "{degrees:?}: TV {tv}, noise {noise}");
            }
        }
    }
}

#[test]
fn loops_are_rare_for_truncated_law() {
    let n = 10_000;
    let law = DegreeLaw::truncated(1.5, n as u64).unwrap();
    let seeds = SeedTree::new(5);
    let good = (0..20)
        .filter(|&r| {
            let mut rng = seeds.stream("loops", r);
            let seq = DegreeSequence::sample(&law.sampler(), n, &mut rng);
            let g = MultiGraph::build_uniform_matching(&seq, &mut rng).unwrap();
            let with_loops = (0..n).filter(|&v| g.loop_count(v) > 0).count();
            (with_loops as f64 / n as f64) < 0.05
        })
        .count();
    assert!(good >= 19, "{good} of 20 runs below 5% loop vertices");
}
