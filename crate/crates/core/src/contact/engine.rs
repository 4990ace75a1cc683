use rand::Rng;
use rand_distr::{Distribution, Exp};
use serde::{Deserialize, Serialize};

use crate::config_model::MultiGraph;
use crate::degree_model::check_lambda;
use crate::error::{Error, Result};

/// Default censoring cap for survival-regime runs.
pub const DEFAULT_CAP: f64 = 1e6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContactConfig {
    pub lambda: f64,
    /// Censoring time; `None` runs until extinction.
    pub horizon: Option<f64>,
    /// Sorted times at which `|xi_t| / n` is recorded.
    pub observation_times: Vec<f64>,
}

impl ContactConfig {
    pub fn new(lambda: f64, horizon: Option<f64>, observation_times: Vec<f64>) -> Result<Self> {
        check_lambda(lambda)?;
        if let Some(h) = horizon {
            if h.is_nan() || h < 0.0 {
                return Err(Error::Config(format!("horizon must be >= 0, got {h}")));
            }
        }
        if observation_times.windows(2).any(|w| w[0] > w[1])
            || observation_times.iter().any(|t| t.is_nan() || *t < 0.0)
        {
            return Err(Error::Config("observation times must be sorted and non-negative".into()));
        }
        if let (Some(h), Some(&last)) = (horizon, observation_times.last()) {
            if last > h {
                return Err(Error::Config(format!(
                    "observation time {last} exceeds horizon {h}"
                )));
            }
        }
        Ok(Self {
            lambda,
            horizon,
            observation_times,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Extinction {
    /// The infected set became empty at this time.
    At(f64),
    /// Still alive at the horizon.
    Censored(f64),
}

impl Extinction {
    pub fn time(&self) -> f64 {
        match *self {
            Extinction::At(t) | Extinction::Censored(t) => t,
        }
    }

    pub fn is_censored(&self) -> bool {
        matches!(self, Extinction::Censored(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DensitySample {
    pub time: f64,
    pub count: usize,
    pub density: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimOutcome {
    pub extinction: Extinction,
    pub density_samples: Vec<DensitySample>,
    pub peak_infected: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TrajectoryEvent {
    Recover { vertex: usize },
    /// Effective transmission: `target` was healthy and is now infected.
    Infect { source: usize, target: usize },
}

/// Receives effective events of a run, in time order.
pub trait TrajectorySink {
    fn record(&mut self, time: f64, event: TrajectoryEvent);
}

impl TrajectorySink for Vec<(f64, TrajectoryEvent)> {
    fn record(&mut self, time: f64, event: TrajectoryEvent) {
        self.push((time, event));
    }
}

/// Indexed set supporting O(1) insert, remove and uniform choice.
struct IndexedSet {
    items: Vec<u32>,
    pos: Vec<u32>,
}

impl IndexedSet {
    fn new(universe: usize) -> Self {
        Self {
            items: Vec::new(),
            pos: vec![u32::MAX; universe],
        }
    }

    fn insert(&mut self, x: usize) {
        debug_assert_eq!(self.pos[x], u32::MAX);
        self.pos[x] = self.items.len() as u32;
        self.items.push(x as u32);
    }

    fn remove(&mut self, x: usize) {
        let i = self.pos[x] as usize;
        let last = *self.items.last().expect("nonempty");
        self.items.swap_remove(i);
        if last as usize != x {
            self.pos[last as usize] = i as u32;
        }
        self.pos[x] = u32::MAX;
    }

    fn contains(&self, x: usize) -> bool {
        self.pos[x] != u32::MAX
    }

    fn len(&self) -> usize {
        self.items.len()
    }

    fn get(&self, i: usize) -> usize {
        self.items[i] as usize
    }
}

/// Infected vertices plus the half-edges they own: recoveries pick a uniform
/// infected vertex, transmissions pick a uniform infected-owned half-edge.
struct State<'g> {
    graph: &'g MultiGraph,
    infected: IndexedSet,
    active: IndexedSet,
}

impl<'g> State<'g> {
    fn new(graph: &'g MultiGraph) -> Self {
        Self {
            graph,
            infected: IndexedSet::new(graph.n()),
            active: IndexedSet::new(graph.num_half_edges()),
        }
    }

    fn infect(&mut self, v: usize) {
        self.infected.insert(v);
        for h in self.graph.half_edges(v) {
            self.active.insert(h);
        }
    }

    fn recover(&mut self, v: usize) {
        self.infected.remove(v);
        for h in self.graph.half_edges(v) {
            self.active.remove(h);
        }
    }
}

/// Continuous-time next-event simulation: each infected vertex recovers at
/// rate 1, each half-edge owned by an infected vertex fires at rate `lambda`
/// toward its mate's owner. Firing into an infected vertex (loops included)
/// changes nothing.
pub fn simulate<R: Rng + ?Sized>(
    graph: &MultiGraph,
    config: &ContactConfig,
    initial: &[usize],
    rng: &mut R,
    mut sink: Option<&mut dyn TrajectorySink>,
) -> Result<SimOutcome> {
    let n = graph.n();
    let mut state = State::new(graph);
    for &v in initial {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if !state.infected.contains(v) {
            state.infect(v);
        }
    }
    let horizon = config.horizon.unwrap_or(f64::INFINITY);
    let lambda = config.lambda;
    let mut samples = Vec::with_capacity(config.observation_times.len());
    let mut next_obs = 0;
    let mut peak = state.infected.len();
    let mut t = 0.0;

    let mut observe_until = |limit: f64, count: usize, samples: &mut Vec<DensitySample>| {
        while next_obs < config.observation_times.len() && config.observation_times[next_obs] <= limit {
            samples.push(DensitySample {
                time: config.observation_times[next_obs],
                count,
                density: count as f64 / n as f64,
            });
            next_obs += 1;
        }
    };

    let extinction = loop {
        let infected = state.infected.len();
        if infected == 0 {
            observe_until(f64::INFINITY, 0, &mut samples);
            break Extinction::At(t);
        }
        let rec_rate = infected as f64;
        let total = rec_rate + lambda * state.active.len() as f64;
        let dt: f64 = Exp::new(total).expect("positive rate").sample(rng);
        let t_next = t + dt;
        if t_next > horizon {
            observe_until(horizon, infected, &mut samples);
            break Extinction::Censored(horizon);
        }
        // observation at time s sees the state after the last event <= s
        observe_until(t_next - f64::EPSILON * t_next, infected, &mut samples);
        t = t_next;
        let u = rng.random::<f64>() * total;
        if u < rec_rate {
            let v = state.infected.get(rng.random_range(0..infected));
            state.recover(v);
            if let Some(s) = sink.as_deref_mut() {
                s.record(t, TrajectoryEvent::Recover { vertex: v });
            }
        } else {
            let h = state.active.get(rng.random_range(0..state.active.len()));
            let target = graph.target(h);
            if !state.infected.contains(target) {
                state.infect(target);
                peak = peak.max(state.infected.len());
                if let Some(s) = sink.as_deref_mut() {
                    s.record(
                        t,
                        TrajectoryEvent::Infect {
                            source: graph.owner(h),
                            target,
                        },
                    );
                }
            }
        }
    };
    Ok(SimOutcome {
        extinction,
        density_samples: samples,
        peak_infected: peak,
    })
}

/// Extinction time from `initial`, censored at `cap`.
pub fn extinction_time<R: Rng + ?Sized>(
    graph: &MultiGraph,
    lambda: f64,
    initial: &[usize],
    cap: f64,
    rng: &mut R,
) -> Result<Extinction> {
    let config = ContactConfig::new(lambda, Some(cap), Vec::new())?;
    Ok(simulate(graph, &config, initial, rng, None)?.extinction)
}

/// Samples whether some oriented edge out of `v` rings before `v`'s first
/// recovery. With `include_loops` every one of the `D_v` edge clocks races;
/// without it the loop half-edges are left out. The clocks race as a single
/// exponential of rate `k lambda` against a unit exponential.
pub fn first_transmission_before_recovery<R: Rng + ?Sized>(
    graph: &MultiGraph,
    v: usize,
    lambda: f64,
    include_loops: bool,
    rng: &mut R,
) -> bool {
    let clocks = if include_loops {
        graph.degree(v)
    } else {
        graph.degree(v) - graph.loop_count(v)
    };
    if clocks == 0 {
        return false;
    }
    let recovery: f64 = Exp::new(1.0).expect("unit rate").sample(rng);
    let first_edge: f64 = Exp::new(clocks as f64 * lambda)
        .expect("positive rate")
        .sample(rng);
    first_edge < recovery
}
