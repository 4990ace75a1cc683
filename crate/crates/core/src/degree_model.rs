//! Power-law degree laws `P(D = j) = c j^{-a}` with exponent `a` in `(1, 2]`,
//! in three cutoff regimes: truncated at `n`, infinite support, and truncated
//! at `floor(n^alpha)`. Also the metastable density
//! `rho(lambda) = sum_j (j lambda / (j lambda + 1)) P(D = j)`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{self, KahanSum};

/// Largest degree covered by the sampler's cumulative table; larger values
/// come from the exact rejection tail sampler.
pub const SAMPLER_TABLE_CAP: u64 = 1 << 20;

/// Finite supports up to this size are summed term by term when evaluating rho.
const RHO_DIRECT_LIMIT: u64 = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cutoff {
    /// Support `1..=n`.
    Truncated { n: u64 },
    /// Support all positive integers.
    Infinite,
    /// Support `1..=floor(n^alpha)`.
    AlphaTruncated { alpha: f64, n: u64 },
}

/// An immutable, validated degree law. The normalizing constant is computed
/// once at construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "LawDescriptor", into = "LawDescriptor")]
pub struct DegreeLaw {
    exponent: f64,
    cutoff: Cutoff,
    max_degree: Option<u64>,
    norm: f64,
}

/// Text form of a law: `{a, cutoff: "truncated"|"infinite"|"alpha", n?, alpha?}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LawDescriptor {
    pub a: f64,
    pub cutoff: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
}

impl TryFrom<LawDescriptor> for DegreeLaw {
    type Error = Error;

    fn try_from(d: LawDescriptor) -> Result<Self> {
        let need_n = || {
            d.n.ok_or_else(|| Error::Config(format!("cutoff '{}' requires n", d.cutoff)))
        };
        match d.cutoff.as_str() {
            "truncated" => DegreeLaw::truncated(d.a, need_n()?),
            "infinite" => DegreeLaw::infinite(d.a),
            "alpha" => {
                let alpha = d
                    .alpha
                    .ok_or_else(|| Error::Config("cutoff 'alpha' requires alpha".into()))?;
                DegreeLaw::alpha_truncated(d.a, alpha, need_n()?)
            }
            other => Err(Error::Config(format!(
                "unknown cutoff '{other}' (expected truncated|infinite|alpha)"
            ))),
        }
    }
}

impl From<DegreeLaw> for LawDescriptor {
    fn from(law: DegreeLaw) -> Self {
        match law.cutoff {
            Cutoff::Truncated { n } => LawDescriptor {
                a: law.exponent,
                cutoff: "truncated".into(),
                n: Some(n),
                alpha: None,
            },
            Cutoff::Infinite => LawDescriptor {
                a: law.exponent,
                cutoff: "infinite".into(),
                n: None,
                alpha: None,
            },
            Cutoff::AlphaTruncated { alpha, n } => LawDescriptor {
                a: law.exponent,
                cutoff: "alpha".into(),
                n: Some(n),
                alpha: Some(alpha),
            },
        }
    }
}

fn check_exponent(a: f64) -> Result<()> {
    if a.is_finite() && a > 1.0 && a <= 2.0 {
        Ok(())
    } else {
        Err(Error::ExponentOutOfRange(a))
    }
}

pub(crate) fn check_lambda(lambda: f64) -> Result<()> {
    if lambda.is_finite() && lambda > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidLambda(lambda))
    }
}

impl DegreeLaw {
    pub fn new(exponent: f64, cutoff: Cutoff) -> Result<Self> {
        check_exponent(exponent)?;
        let max_degree = match cutoff {
            Cutoff::Truncated { n } => {
                if n == 0 {
                    return Err(Error::ZeroCutoff);
                }
                Some(n)
            }
            Cutoff::Infinite => None,
            Cutoff::AlphaTruncated { alpha, n } => {
                if n == 0 {
                    return Err(Error::ZeroCutoff);
                }
                if !(alpha.is_finite() && alpha >= 1.0) {
                    return Err(Error::AlphaTooSmall(alpha));
                }
                if exponent < 2.0 && (alpha - 1.0 / (exponent - 1.0)).abs() < 1e-9 {
                    return Err(Error::AlphaBoundary { a: exponent, alpha });
                }
                let cap = (n as f64).powf(alpha).floor();
                // saturate: past 2^62 the support is indistinguishable from infinite
                Some(if cap >= 4.6e18 { 1 << 62 } else { cap as u64 })
            }
        };
        let norm = 1.0 / series::power_sum(exponent, 1, max_degree);
        Ok(Self {
            exponent,
            cutoff,
            max_degree,
            norm,
        })
    }

    pub fn truncated(a: f64, n: u64) -> Result<Self> {
        Self::new(a, Cutoff::Truncated { n })
    }

    pub fn infinite(a: f64) -> Result<Self> {
        Self::new(a, Cutoff::Infinite)
    }

    pub fn alpha_truncated(a: f64, alpha: f64, n: u64) -> Result<Self> {
        Self::new(a, Cutoff::AlphaTruncated { alpha, n })
    }

    pub fn exponent(&self) -> f64 {
        self.exponent
    }

    pub fn cutoff(&self) -> Cutoff {
        self.cutoff
    }

    /// Largest degree in the support, `None` for infinite support.
    pub fn max_degree(&self) -> Option<u64> {
        self.max_degree
    }

    /// `c` with `c * sum_{j in support} j^{-a} = 1`.
    pub fn normalizing_constant(&self) -> f64 {
        self.norm
    }

    pub fn pmf(&self, j: u64) -> f64 {
        if j == 0 || self.max_degree.is_some_and(|m| j > m) {
            0.0
        } else {
            self.norm * (j as f64).powf(-self.exponent)
        }
    }

    /// `P(D > j)`.
    pub fn tail_mass(&self, j: u64) -> f64 {
        if self.max_degree.is_some_and(|m| j >= m) {
            return 0.0;
        }
        self.norm * series::power_sum(self.exponent, j + 1, self.max_degree)
    }

    /// Mean degree; `None` when the support is infinite (the mean diverges for `a <= 2`).
    pub fn mean(&self) -> Option<f64> {
        self.max_degree
            .map(|m| self.norm * series::power_sum(self.exponent - 1.0, 1, Some(m)))
    }

    /// Metastable density `sum_j (j lambda/(j lambda + 1)) pmf(j)`.
    pub fn rho(&self, lambda: f64) -> Result<f64> {
        check_lambda(lambda)?;
        let a = self.exponent;
        match self.max_degree {
            Some(m) if m <= RHO_DIRECT_LIMIT => {
                let mut acc = KahanSum::default();
                for j in (1..=m).rev() {
                    let x = j as f64;
                    acc.add(x * lambda / (x * lambda + 1.0) * x.powf(-a));
                }
                Ok(self.norm * acc.value())
            }
            // 1 - sum_j pmf(j)/(j lambda + 1), with the damped series done analytically
            hi => Ok(1.0 - self.norm * series::damped_sum(a, lambda, 1, hi)),
        }
    }

    pub fn sampler(&self) -> DegreeSampler {
        DegreeSampler::new(self)
    }
}

/// Comparison quantity for the small-lambda behaviour of rho:
/// `lambda^{a-1}` for `a < 2` and `lambda log(1/lambda)` for `a = 2`.
pub fn rho_asymptotic(a: f64, lambda: f64) -> Result<f64> {
    check_exponent(a)?;
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::LambdaNotAsymptotic(lambda));
    }
    Ok(if a < 2.0 {
        lambda.powf(a - 1.0)
    } else {
        lambda * (1.0 / lambda).ln()
    })
}

/// Draws from a [`DegreeLaw`]: a cumulative table with binary search up to
/// [`SAMPLER_TABLE_CAP`], and above that an inverse power-law proposal with
/// rejection against the discrete pmf, which is exact.
#[derive(Debug, Clone)]
pub struct DegreeSampler {
    exponent: f64,
    /// `cum[j-1] = sum_{i<=j} i^{-a}`, unnormalized.
    cum: Vec<f64>,
    /// Table mass plus tail mass, unnormalized.
    total: f64,
    tail: Option<TailSampler>,
}

#[derive(Debug, Clone)]
struct TailSampler {
    lo: u64,
    /// Inclusive upper end of the support, `None` if unbounded.
    hi: Option<u64>,
    /// `1 - (lo / (hi+1))^{a-1}`, the proposal's mass fraction on `[lo, hi+1)`.
    span: f64,
    /// Rejection envelope `(1 + 1/lo)^a`.
    envelope: f64,
}

impl DegreeSampler {
    fn new(law: &DegreeLaw) -> Self {
        let a = law.exponent;
        let table_max = law
            .max_degree
            .map_or(SAMPLER_TABLE_CAP, |m| m.min(SAMPLER_TABLE_CAP));
        let mut cum = Vec::with_capacity(table_max as usize);
        let mut acc = KahanSum::default();
        for j in 1..=table_max {
            acc.add((j as f64).powf(-a));
            cum.push(acc.value());
        }
        let table_total = acc.value();
        let tail = match law.max_degree {
            Some(m) if m <= table_max => None,
            hi => {
                let lo = table_max + 1;
                let b = a - 1.0;
                let span = match hi {
                    None => 1.0,
                    Some(h) => -((lo as f64 / (h as f64 + 1.0)).powf(b) - 1.0),
                };
                Some(TailSampler {
                    lo,
                    hi,
                    span,
                    envelope: (1.0 + 1.0 / lo as f64).powf(a),
                })
            }
        };
        let tail_weight = tail
            .as_ref()
            .map_or(0.0, |t| series::power_sum(a, t.lo, t.hi));
        Self {
            exponent: a,
            cum,
            total: table_total + tail_weight,
            tail,
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        let x = rng.random::<f64>() * self.total;
        let table_total = *self.cum.last().expect("table is never empty");
        if x < table_total || self.tail.is_none() {
            let idx = self.cum.partition_point(|&w| w <= x);
            return (idx.min(self.cum.len() - 1) + 1) as u64;
        }
        self.sample_tail(rng)
    }

    fn sample_tail<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        let t = self.tail.as_ref().expect("tail sampler present");
        let a = self.exponent;
        let b = a - 1.0;
        let lo = t.lo as f64;
        loop {
            let u: f64 = rng.random();
            // continuous proposal with density proportional to x^{-a} on [lo, hi+1)
            let x = lo * (1.0 - u * t.span).powf(-1.0 / b);
            if !x.is_finite() || x >= 4.6e18 {
                continue;
            }
            let j = x.floor() as u64;
            if t.hi.is_some_and(|h| j > h) {
                continue;
            }
            // target/proposal ratio j^{-a} / int_j^{j+1} x^{-a} dx, in [1, envelope]
            let jf = j as f64;
            let ratio = b / (jf * -f64::exp_m1(-b * (1.0 / jf).ln_1p()));
            if rng.random::<f64>() * t.envelope < ratio {
                return j;
            }
        }
    }
}

/// `n` i.i.d. degrees with the total made even by incrementing the last entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSequence {
    degrees: Vec<u64>,
    total: u64,
    parity_adjusted: bool,
}

impl DegreeSequence {
    /// Wraps explicit degrees; every entry must be positive. Odd totals are
    /// fixed the same way sampling fixes them.
    pub fn from_degrees(mut degrees: Vec<u64>) -> Result<Self> {
        if degrees.is_empty() || degrees.contains(&0) {
            return Err(Error::Config("degrees must be a nonempty list of positive integers".into()));
        }
        let mut total: u64 = degrees.iter().sum();
        let parity_adjusted = total % 2 == 1;
        if parity_adjusted {
            *degrees.last_mut().expect("nonempty") += 1;
            total += 1;
        }
        Ok(Self {
            degrees,
            total,
            parity_adjusted,
        })
    }

    /// Degrees as given, without a parity fix; used for graphs read from files
    /// (which may contain isolated vertices).
    pub(crate) fn from_raw(degrees: Vec<u64>) -> Result<Self> {
        let total: u64 = degrees.iter().sum();
        if total % 2 == 1 {
            return Err(Error::OddTotal(total));
        }
        Ok(Self {
            degrees,
            total,
            parity_adjusted: false,
        })
    }

    pub fn sample<R: Rng + ?Sized>(sampler: &DegreeSampler, n: usize, rng: &mut R) -> Self {
        assert!(n >= 1, "degree sequence needs n >= 1");
        let degrees = (0..n).map(|_| sampler.sample(rng)).collect();
        Self::from_degrees(degrees).expect("sampled degrees are positive")
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// `L_n`, the number of half-edges.
    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn parity_adjusted(&self) -> bool {
        self.parity_adjusted
    }
}
