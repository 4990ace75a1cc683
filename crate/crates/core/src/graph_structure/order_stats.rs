//! Largest degrees against their scaling limit. For an infinite-support law
//! with `a < 2`, `D_i / n^{1/(a-1)}` converges jointly to
//! `gamma_i = ((a-1) Gamma_i / c)^{-1/(a-1)}`, where `Gamma_i` is the i-th
//! arrival time of a unit-rate Poisson process and `c` the law's normalizing
//! constant.

use rand::Rng;
use rand_distr::{Distribution, Exp1};
use serde::Serialize;

use crate::degree_model::{Cutoff, DegreeLaw};
use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 20;

#[derive(Debug, Clone, Copy)]
pub struct GammaLimit {
    exponent: f64,
    norm: f64,
}

impl GammaLimit {
    pub fn new(law: &DegreeLaw) -> Result<Self> {
        if law.cutoff() != Cutoff::Infinite {
            return Err(Error::Config(
                "order-statistics limit needs an infinite-support law".into(),
            ));
        }
        if law.exponent() >= 2.0 {
            return Err(Error::Config(
                "order-statistics limit holds only for a < 2".into(),
            ));
        }
        Ok(Self {
            exponent: law.exponent(),
            norm: law.normalizing_constant(),
        })
    }

    /// `gamma` as a function of the arrival time `Gamma`.
    pub fn transform(&self, arrival: f64) -> f64 {
        let b = self.exponent - 1.0;
        (b * arrival / self.norm).powf(-1.0 / b)
    }

    /// One joint draw of `(gamma_1, .., gamma_k)`; strictly decreasing.
    pub fn sample<R: Rng + ?Sized>(&self, k: usize, rng: &mut R) -> Vec<f64> {
        let mut arrival = 0.0;
        (0..k)
            .map(|_| {
                let e: f64 = Exp1.sample(rng);
                arrival += e;
                self.transform(arrival)
            })
            .collect()
    }

    /// Median of `gamma_1`, from `Gamma_1 ~ Exp(1)`.
    pub fn median_first(&self) -> f64 {
        self.transform(std::f64::consts::LN_2)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OrderStatRow {
    pub rank: usize,
    /// `D_i / n^{1/(a-1)}`.
    pub scaled_degree: f64,
    pub limit_q10: f64,
    pub limit_median: f64,
    pub limit_q90: f64,
}

fn quantile(sorted: &[f64], q: f64) -> f64 {
    let idx = ((sorted.len() - 1) as f64 * q).round() as usize;
    sorted[idx]
}

/// The top `k` degrees scaled by `n^{1/(a-1)}`, next to quantiles of the
/// limit variables estimated from `limit_draws` independent draws.
pub fn order_statistics_vs_limit<R: Rng + ?Sized>(
    degrees: &[u64],
    law: &DegreeLaw,
    k: usize,
    limit_draws: usize,
    rng: &mut R,
) -> Result<Vec<OrderStatRow>> {
    if k == 0 || k > MAX_ORDER {
        return Err(Error::Config(format!("k must be in 1..={MAX_ORDER}")));
    }
    let limit = GammaLimit::new(law)?;
    let scale = (degrees.len() as f64).powf(1.0 / (law.exponent() - 1.0));
    let mut top: Vec<u64> = degrees.to_vec();
    top.sort_unstable_by(|a, b| b.cmp(a));
    let mut per_rank: Vec<Vec<f64>> = vec![Vec::with_capacity(limit_draws); k];
    for _ in 0..limit_draws.max(1) {
        for (i, g) in limit.sample(k, rng).into_iter().enumerate() {
            per_rank[i].push(g);
        }
    }
    Ok(per_rank
        .into_iter()
        .enumerate()
        .map(|(i, mut draws)| {
            draws.sort_by(f64::total_cmp);
            OrderStatRow {
                rank: i + 1,
                scaled_degree: top.get(i).map_or(0.0, |&d| d as f64 / scale),
                limit_q10: quantile(&draws, 0.1),
                limit_median: quantile(&draws, 0.5),
                limit_q90: quantile(&draws, 0.9),
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeedTree;

    #[test]
    fn first_limit_median_closed_form() {
        let law = DegreeLaw::infinite(1.5).unwrap();
        let limit = GammaLimit::new(&law).unwrap();
        let c = law.normalizing_constant();
        let oracle = (0.5 * std::f64::consts::LN_2 / c).powf(-2.0);
        assert!((limit.median_first() - oracle).abs() < 1e-12);
        assert!((oracle - 1.2199).abs() < 1e-4);
    }

    #[test]
    fn limit_draws_strictly_decrease() {
        let limit = GammaLimit::new(&DegreeLaw::infinite(1.3).unwrap()).unwrap();
        let mut rng = SeedTree::new(9).stream("gamma", 0);
        for _ in 0..1000 {
            let g = limit.sample(20, &mut rng);
            assert!(g.windows(2).all(|w| w[0] > w[1]));
        }
    }

    #[test]
    fn rejects_a_equal_two_and_truncated() {
        assert!(GammaLimit::new(&DegreeLaw::infinite(2.0).unwrap()).is_err());
        assert!(GammaLimit::new(&DegreeLaw::truncated(1.5, 100).unwrap()).is_err());
        let mut rng = SeedTree::new(1).stream("x", 0);
        let law = DegreeLaw::infinite(1.5).unwrap();
        assert!(order_statistics_vs_limit(&[1, 2, 3], &law, 21, 10, &mut rng).is_err());
    }

    #[test]
    fn table_shape() {
        let law = DegreeLaw::infinite(1.5).unwrap();
        let mut rng = SeedTree::new(2).stream("x", 0);
        let rows = order_statistics_vs_limit(&[4, 100, 9, 1], &law, 3, 1000, &mut rng).unwrap();
        assert_eq!(rows.len(), 3);
        assert!((rows[0].scaled_degree - 100.0 / 16.0).abs() < 1e-12);
        assert!(rows[0].limit_median > rows[1].limit_median);
    }
}
