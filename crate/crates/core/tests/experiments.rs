use cpcm::config_model::MultiGraph;
use cpcm::degree_model::DegreeLaw;
use cpcm::experiments::{
    density_experiment, exponential_law_control, exponential_law_experiment, growth_experiment, ks_statistic,
    structure_experiment, survival_indicator_experiment, ExperimentSpec, GraphFamily, GrowthFamily, GrowthSpec,
    Reference, Verdict,
};
use cpcm::rng::SeedTree;
use rand::Rng;

fn spec(a: f64, n: usize, lambda: f64, replicas: usize, seed: u64) -> ExperimentSpec {
    ExperimentSpec::new(DegreeLaw::truncated(a, n as u64).unwrap(), n, lambda, replicas, seed)
}

/// Supremum over a dense grid of `|F_uniform(x) - F_exp(x)|`.
fn uniform_vs_exp_grid() -> f64 {
    (0..=400_000)
        .map(|i| {
            let x = i as f64 * 1e-5;
            (x.min(1.0) - (1.0 - (-x).exp())).abs()
        })
        .fold(0.0, f64::max)
}

#[test]
fn ks_of_uniform_sample_against_exponential() {
    let oracle = uniform_vs_exp_grid();
    let mut rng = SeedTree::new(3).stream("uniform", 0);
    let mut u: Vec<f64> = (0..10_000).map(|_| rng.random::<f64>()).collect();
    u.sort_by(f64::total_cmp);
    let ks = ks_statistic(&u, |x| Reference::Exponential { mean: 1.0 }.cdf(x)).unwrap();
    assert!((ks - oracle).abs() <= 0.02, "KS {ks}, grid oracle {oracle}");
}

#[test]
fn isolated_vertex_is_exactly_exponential() {
    let s = spec(1.5, 10, 1.0, 10_000, 8);
    let t = exponential_law_experiment(&s, &GraphFamily::Fixed(MultiGraph::empty(1))).unwrap();
    let ks = t.row("ks_exp1").unwrap();
    assert!(ks.estimate <= 0.02, "{}", t.report());
    assert_eq!(t.verdict(), Verdict::Pass);
}

#[test]
fn two_point_mixture_fails_exponential_law() {
    let s = spec(1.5, 10, 1.0, 1000, 9);
    let family = GraphFamily::Alternating(MultiGraph::empty(1), MultiGraph::star(20));
    let t = exponential_law_experiment(&s, &family).unwrap();
    assert_eq!(t.verdict(), Verdict::Fail, "{}", t.report());
    let control = exponential_law_control(&s).unwrap();
    assert!(control.row("ks_exp1").unwrap().estimate >= 0.15);
    assert_eq!(control.verdict(), Verdict::Pass);
}

#[test]
fn exp_law_requires_enough_replicas() {
    let s = spec(1.5, 10, 1.0, 100, 9);
    assert!(exponential_law_experiment(&s, &GraphFamily::Fixed(MultiGraph::empty(1))).is_err());
}

#[test]
fn censoring_beyond_one_percent_is_an_error() {
    let mut s = spec(1.5, 10, 1.0, 500, 2);
    s.cap = 5.0;
    let err = exponential_law_experiment(&s, &GraphFamily::Fixed(MultiGraph::star(30))).unwrap_err();
    assert!(err.to_string().contains("censored"), "{err}");
}

#[test]
fn indicator_degree_one_law() {
    let s = spec(1.5, 1, 1.0, 1, 4);
    let s = ExperimentSpec { n: 20_000, ..s };
    let t = survival_indicator_experiment(&s).unwrap();
    let row = &t.rows[0];
    assert_eq!(row.target, Some(0.5));
    assert!((row.estimate - 0.5).abs() <= 3.0 * row.se);
}

#[test]
fn indicator_two_degree_law() {
    let s = ExperimentSpec { n: 1000, ..spec(2.0, 2, 1.0, 20, 4) };
    let t = survival_indicator_experiment(&s).unwrap();
    let row = &t.rows[0];
    // p(1) = 4/5, p(2) = 1/5: 4/5 * 1/2 + 1/5 * 2/3
    assert!((row.target.unwrap() - 8.0 / 15.0).abs() < 1e-12);
    assert!((row.target.unwrap() - 0.5333333).abs() < 1e-7);
    assert_eq!(t.verdict(), Verdict::Pass, "{}", t.report());
}

#[test]
fn density_starts_at_one() {
    let t = density_experiment(&spec(1.5, 300, 1.0, 4, 1)).unwrap();
    let row = t.row("t=0.0").unwrap();
    assert_eq!(row.estimate, 1.0);
    assert_eq!(row.se, 0.0);
    assert_eq!(row.verdict, Verdict::Pass);
}

#[test]
fn experiments_are_deterministic() {
    let s = spec(1.5, 200, 1.0, 6, 77);
    let a = density_experiment(&s).unwrap();
    let b = density_experiment(&s).unwrap();
    assert_eq!(a.to_csv(), b.to_csv());
    assert_eq!(a.rows, b.rows);
    let c = density_experiment(&ExperimentSpec { seed: 78, ..s }).unwrap();
    assert_ne!(a.to_csv(), c.to_csv());
}

#[test]
fn structure_below_minimum_size_is_informational() {
    let t = structure_experiment(&spec(1.5, 10, 1.0, 1, 1), 20).unwrap();
    assert!(t.rows.iter().all(|r| r.verdict == Verdict::Informational));
    assert_eq!(t.verdict(), Verdict::Informational);
    assert!(t.rows.iter().any(|r| r.point.starts_with("total_degree")));
    assert!(structure_experiment(&spec(1.5, 10, 1.0, 1, 1), 19).is_err());
}

#[test]
fn structure_claims_for_each_exponent() {
    let t = structure_experiment(&spec(1.5, 2000, 1.0, 1, 1), 20).unwrap();
    for claim in ["total_degree", "high_degree", "giant_diameter", "two_step_star"] {
        assert!(t.row(claim).is_some(), "missing {claim}");
    }
    let t = structure_experiment(&spec(2.0, 2000, 1.0, 1, 1), 20).unwrap();
    for claim in ["total_degree", "high_degree", "giant_diameter"] {
        assert!(t.row(claim).is_some(), "missing {claim}");
    }
    assert!(t.row("giant_diameter").unwrap().band.contains("ln n / ln ln n"));
}

#[test]
fn growth_grid_rejects_degenerate_sizes() {
    let spec = GrowthSpec::new(GrowthFamily::Stars, vec![0, 5], 1.0, 10, 1);
    assert!(growth_experiment(&spec).is_err());
}

#[test]
fn growth_on_small_stars() {
    let spec = GrowthSpec::new(GrowthFamily::Stars, vec![2, 6, 10, 14], 1.0, 200, 1);
    let t = growth_experiment(&spec).unwrap();
    assert!(t.row("slope").unwrap().estimate > 0.0, "{}", t.report());
    let spec = GrowthSpec::new(GrowthFamily::TwoStepStars { centers: 2 }, vec![1, 3, 5], 1.0, 200, 1);
    let t = growth_experiment(&spec).unwrap();
    assert_eq!(t.row("monotone").unwrap().verdict, Verdict::Pass, "{}", t.report());
}
