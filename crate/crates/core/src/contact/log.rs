//! Graphical construction: realized Poisson clocks on a time window, and
//! exact forward and dual reachability over them.

use std::cmp::Ordering;

use rand::Rng;
use rand_distr::{Distribution, Exp};

use crate::config_model::MultiGraph;
use crate::degree_model::check_lambda;
use crate::error::{Error, Result};

/// Rate-1 recovery clocks per vertex and rate-lambda transmission clocks per
/// oriented edge on `[0, window]`. Oriented edges are half-edges: half-edge
/// `h` points from `owner(h)` to the owner of its mate, so loops carry two
/// oriented clocks as well.
#[derive(Debug, Clone, PartialEq)]
pub struct EventLog {
    window: f64,
    lambda: f64,
    recoveries: Vec<Vec<f64>>,
    transmissions: Vec<Vec<f64>>,
}

fn poisson_points<R: Rng + ?Sized>(rate: f64, window: f64, rng: &mut R) -> Vec<f64> {
    let gap = Exp::new(rate).expect("positive rate");
    let mut pts = Vec::new();
    let mut t = 0.0;
    loop {
        t += gap.sample(rng);
        if t > window {
            return pts;
        }
        pts.push(t);
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Mark {
    Recovery(u32),
    Transmission(u32),
}

impl Mark {
    fn stream_id(self, n: usize) -> usize {
        match self {
            Mark::Recovery(v) => v as usize,
            Mark::Transmission(h) => n + h as usize,
        }
    }
}

impl EventLog {
    pub fn generate<R: Rng + ?Sized>(graph: &MultiGraph, lambda: f64, window: f64, rng: &mut R) -> Result<Self> {
        check_lambda(lambda)?;
        if !(window > 0.0 && window.is_finite()) {
            return Err(Error::Config(format!("log window must be positive, got {window}")));
        }
        let recoveries = (0..graph.n()).map(|_| poisson_points(1.0, window, rng)).collect();
        let transmissions = (0..graph.num_half_edges())
            .map(|_| poisson_points(lambda, window, rng))
            .collect();
        Ok(Self {
            window,
            lambda,
            recoveries,
            transmissions,
        })
    }

    /// Log with explicit streams, for hand-built scenarios.
    pub fn from_streams(
        graph: &MultiGraph,
        lambda: f64,
        window: f64,
        mut recoveries: Vec<Vec<f64>>,
        mut transmissions: Vec<Vec<f64>>,
    ) -> Result<Self> {
        if recoveries.len() != graph.n() || transmissions.len() != graph.num_half_edges() {
            return Err(Error::Config("stream counts do not match the graph".into()));
        }
        for s in recoveries.iter_mut().chain(transmissions.iter_mut()) {
            s.sort_by(f64::total_cmp);
            if s.iter().any(|&t| !(0.0..=window).contains(&t)) || s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Config("stream times must be distinct and inside the window".into()));
            }
        }
        Ok(Self {
            window,
            lambda,
            recoveries,
            transmissions,
        })
    }

    pub fn window(&self) -> f64 {
        self.window
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn recoveries(&self, v: usize) -> &[f64] {
        &self.recoveries[v]
    }

    /// Transmission times on the oriented edge carried by half-edge `h`.
    pub fn transmissions(&self, h: usize) -> &[f64] {
        &self.transmissions[h]
    }

    /// Keeps each transmission point independently with probability `keep`.
    /// Thinning a rate-lambda log this way yields a rate `keep * lambda` log.
    pub fn thin<R: Rng + ?Sized>(&self, keep: f64, rng: &mut R) -> Self {
        let transmissions = self
            .transmissions
            .iter()
            .map(|s| s.iter().copied().filter(|_| rng.random::<f64>() < keep).collect())
            .collect();
        Self {
            window: self.window,
            lambda: self.lambda * keep,
            recoveries: self.recoveries.clone(),
            transmissions,
        }
    }

    /// Same realization with both orientations of the given edges silenced,
    /// i.e. the log restricted to the graph without those edges.
    /// Edges are identified by either of their half-edges.
    pub fn without_edges(&self, graph: &MultiGraph, half_edges: &[usize]) -> Self {
        let mut out = self.clone();
        for &h in half_edges {
            out.transmissions[h].clear();
            out.transmissions[graph.mate(h)].clear();
        }
        out
    }

    /// All events up to time `t`, sorted by time, ties by stream id.
    pub(crate) fn merged(&self, graph: &MultiGraph, t: f64) -> Vec<(f64, Mark)> {
        let mut events: Vec<(f64, Mark)> = Vec::new();
        for (v, s) in self.recoveries.iter().enumerate() {
            events.extend(s.iter().take_while(|&&x| x <= t).map(|&x| (x, Mark::Recovery(v as u32))));
        }
        for (h, s) in self.transmissions.iter().enumerate() {
            events.extend(s.iter().take_while(|&&x| x <= t).map(|&x| (x, Mark::Transmission(h as u32))));
        }
        let n = graph.n();
        events.sort_by(|a, b| match a.0.total_cmp(&b.0) {
            Ordering::Equal => a.1.stream_id(n).cmp(&b.1.stream_id(n)),
            o => o,
        });
        events
    }

    /// Events up to `t` seen backwards from `t`: a point at `s` moves to
    /// `t - s` and every transmission is carried by the opposite orientation.
    fn reversed(&self, graph: &MultiGraph, t: f64) -> Vec<(f64, Mark)> {
        let n = graph.n();
        let mut events: Vec<(f64, Mark)> = self
            .merged(graph, t)
            .into_iter()
            .map(|(s, m)| {
                let m = match m {
                    Mark::Recovery(v) => Mark::Recovery(v),
                    Mark::Transmission(h) => Mark::Transmission(graph.mate(h as usize) as u32),
                };
                (t - s, m)
            })
            .collect();
        events.sort_by(|a, b| match a.0.total_cmp(&b.0) {
            Ordering::Equal => a.1.stream_id(n).cmp(&b.1.stream_id(n)),
            o => o,
        });
        events
    }

    fn check_time(&self, t: f64) -> Result<()> {
        if t < 0.0 || t > self.window {
            return Err(Error::Config(format!(
                "time {t} outside log window [0, {}]",
                self.window
            )));
        }
        Ok(())
    }

    /// `xi_t^A`: vertices reached at time `t` by an infection path from `A x {0}`.
    pub fn reachable_forward(&self, graph: &MultiGraph, initial: &[usize], t: f64) -> Result<Vec<usize>> {
        Ok(self.forward_snapshots(graph, initial, &[t])?.pop().expect("one snapshot"))
    }

    /// `xi_t^A` at every time of a sorted grid, from one sweep.
    pub fn forward_snapshots(
        &self,
        graph: &MultiGraph,
        initial: &[usize],
        times: &[f64],
    ) -> Result<Vec<Vec<usize>>> {
        let last = times.last().copied().unwrap_or(0.0);
        self.check_time(last)?;
        if times.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Config("snapshot times must be sorted".into()));
        }
        let events = self.merged(graph, last);
        Ok(sweep(graph, &events, initial, times))
    }

    /// Vertices `v` with `(v, 0) -> (w, t)`, via the sweep on the reversed log.
    pub fn reachable_dual(&self, graph: &MultiGraph, w: usize, t: f64) -> Result<Vec<usize>> {
        self.check_time(t)?;
        let events = self.reversed(graph, t);
        Ok(sweep(graph, &events, &[w], &[t]).pop().expect("one snapshot"))
    }

    /// Time at which the forward process from `initial` dies out inside the
    /// window; `None` if it is still alive at the window's end.
    pub fn extinction_time(&self, graph: &MultiGraph, initial: &[usize]) -> Option<f64> {
        let mut infected = vec![false; graph.n()];
        let mut count = 0;
        for &v in initial {
            if !std::mem::replace(&mut infected[v], true) {
                count += 1;
            }
        }
        if count == 0 {
            return Some(0.0);
        }
        for (s, m) in self.merged(graph, self.window) {
            match m {
                Mark::Recovery(v) => {
                    if std::mem::replace(&mut infected[v as usize], false) {
                        count -= 1;
                        if count == 0 {
                            return Some(s);
                        }
                    }
                }
                Mark::Transmission(h) => {
                    let h = h as usize;
                    if infected[graph.owner(h)] {
                        let target = graph.target(h);
                        if !std::mem::replace(&mut infected[target], true) {
                            count += 1;
                        }
                    }
                }
            }
        }
        None
    }
}

/// Chronological sweep: a recovery clears its vertex, a transmission from an
/// infected owner infects the target. Snapshots are taken after all events
/// at or before each time.
fn sweep(graph: &MultiGraph, events: &[(f64, Mark)], initial: &[usize], times: &[f64]) -> Vec<Vec<usize>> {
    let mut infected = vec![false; graph.n()];
    for &v in initial {
        infected[v] = true;
    }
    let snapshot = |inf: &[bool]| -> Vec<usize> {
        inf.iter().enumerate().filter(|&(_, &b)| b).map(|(v, _)| v).collect()
    };
    let mut out = Vec::with_capacity(times.len());
    let mut i = 0;
    for &t in times {
        while i < events.len() && events[i].0 <= t {
            match events[i].1 {
                Mark::Recovery(v) => infected[v as usize] = false,
                Mark::Transmission(h) => {
                    let h = h as usize;
                    if infected[graph.owner(h)] {
                        infected[graph.target(h)] = true;
                    }
                }
            }
            i += 1;
        }
        out.push(snapshot(&infected));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeedTree;

    #[test]
    fn no_events_keeps_initial_set() {
        let g = MultiGraph::path(3);
        let log = EventLog::from_streams(&g, 1.0, 5.0, vec![vec![]; 3], vec![vec![]; 4]).unwrap();
        assert_eq!(log.reachable_forward(&g, &[0, 2], 4.0).unwrap(), vec![0, 2]);
        assert_eq!(log.reachable_dual(&g, 1, 4.0).unwrap(), vec![1]);
    }

    #[test]
    fn single_recovery_kills_single_source() {
        let g = MultiGraph::path(2);
        let log = EventLog::from_streams(&g, 1.0, 5.0, vec![vec![1.0], vec![]], vec![vec![]; 2]).unwrap();
        assert!(log.reachable_forward(&g, &[0], 2.0).unwrap().is_empty());
        assert_eq!(log.reachable_forward(&g, &[0], 0.5).unwrap(), vec![0]);
        assert_eq!(log.extinction_time(&g, &[0]), Some(1.0));
    }

    #[test]
    fn single_transmission_dual() {
        // edge 0-1; half-edge 0 is owned by vertex 0 and points to vertex 1
        let g = MultiGraph::path(2);
        let log = EventLog::from_streams(&g, 1.0, 5.0, vec![vec![], vec![]], vec![vec![1.0], vec![]]).unwrap();
        assert_eq!(log.reachable_dual(&g, 1, 2.0).unwrap(), vec![0, 1]);
        assert_eq!(log.reachable_dual(&g, 0, 2.0).unwrap(), vec![0]);
        assert_eq!(log.reachable_forward(&g, &[0], 2.0).unwrap(), vec![0, 1]);
        assert_eq!(log.reachable_dual(&g, 1, 0.5).unwrap(), vec![1]);
    }

    #[test]
    fn generated_streams_are_sorted_and_in_window() {
        let g = MultiGraph::from_edges(3, &[(0, 1), (1, 2), (2, 2)]).unwrap();
        let log = EventLog::generate(&g, 2.0, 3.0, &mut SeedTree::new(1).stream("log", 0)).unwrap();
        for v in 0..3 {
            let s = log.recoveries(v);
            assert!(s.windows(2).all(|w| w[0] < w[1]));
            assert!(s.iter().all(|&t| (0.0..=3.0).contains(&t)));
        }
        for h in 0..g.num_half_edges() {
            let s = log.transmissions(h);
            assert!(s.windows(2).all(|w| w[0] < w[1]));
        }
        assert!(log.reachable_forward(&g, &[0], 3.5).is_err());
    }

    #[test]
    fn recovery_mean_per_vertex() {
        let g = MultiGraph::empty(10_000);
        let window = 2.5;
        let log = EventLog::generate(&g, 1.0, window, &mut SeedTree::new(2).stream("log", 0)).unwrap();
        let counts: Vec<f64> = (0..g.n()).map(|v| log.recoveries(v).len() as f64).collect();
        let mean = counts.iter().sum::<f64>() / counts.len() as f64;
        let se = (window / counts.len() as f64).sqrt();
        assert!((mean - window).abs() < 3.0 * se, "{mean}");
    }

    #[test]
    fn edge_stream_counts_poisson_and_independent_across_intervals() {
        let g = MultiGraph::from_edges(2, &vec![(0, 1); 5000]).unwrap();
        let (lambda, window) = (1.5, 2.0);
        let log = EventLog::generate(&g, lambda, window, &mut SeedTree::new(3).stream("log", 0)).unwrap();
        let m = g.num_half_edges() as f64;
        let counts: Vec<f64> = (0..g.num_half_edges()).map(|h| log.transmissions(h).len() as f64).collect();
        let mean = counts.iter().sum::<f64>() / m;
        let var = counts.iter().map(|c| (c - mean).powi(2)).sum::<f64>() / (m - 1.0);
        let mu = lambda * window;
        assert!((mean - mu).abs() < 3.0 * (mu / m).sqrt());
        assert!((var / mean - 1.0).abs() < 0.1, "{var} / {mean}");
        // counts on [0, 1) and [1, 2] are uncorrelated
        let (a, b): (Vec<f64>, Vec<f64>) = (0..g.num_half_edges())
            .map(|h| {
                let s = log.transmissions(h);
                let first = s.iter().filter(|&&t| t < 1.0).count() as f64;
                (first, s.len() as f64 - first)
            })
            .unzip();
        let ma = a.iter().sum::<f64>() / m;
        let mb = b.iter().sum::<f64>() / m;
        let cov = a.iter().zip(&b).map(|(x, y)| (x - ma) * (y - mb)).sum::<f64>() / (m - 1.0);
        let corr = cov / (lambda * 1.0);
        assert!(corr.abs() < 3.0 / m.sqrt(), "{corr}");
    }

    #[test]
    fn thinning_rate() {
        let g = MultiGraph::from_edges(2, &vec![(0, 1); 2000]).unwrap();
        let mut rng = SeedTree::new(4).stream("log", 0);
        let log = EventLog::generate(&g, 2.0, 1.0, &mut rng).unwrap();
        let thin = log.thin(0.25, &mut rng);
        assert_eq!(thin.lambda(), 0.5);
        let total = |l: &EventLog| (0..g.num_half_edges()).map(|h| l.transmissions(h).len()).sum::<usize>() as f64;
        let ratio = total(&thin) / total(&log);
        assert!((ratio - 0.25).abs() < 0.02);
    }
}
