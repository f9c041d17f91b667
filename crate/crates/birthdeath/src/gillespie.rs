//! Stochastic simulation with one ChaCha8 stream per path.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;
use serde::Serialize;

use crate::{BirthDeathModel, Execution};

pub const RNG_ID: &str = "ChaCha8Rng(seed_from_u64(seed), stream = path index)";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GillespieConfig {
    pub t_end: f64,
    pub n_paths: usize,
    pub seed: u64,
    pub record_events: bool,
    /// Paths are stopped (and counted in `capped_paths`) after this many events.
    pub max_events: u64,
}

impl GillespieConfig {
    pub fn new(t_end: f64, n_paths: usize, seed: u64) -> Self {
        GillespieConfig { t_end, n_paths, seed, record_events: false, max_events: 10_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrajectoryEnsemble {
    pub seed: u64,
    pub n_paths: usize,
    pub t_end: f64,
    pub rng: &'static str,
    pub terminal: Vec<u64>,
    /// Per path `(t_event, N)` starting with `(0, N0)`.
    pub events: Option<Vec<Vec<(f64, u64)>>>,
    pub capped_paths: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConfidenceIntervals {
    pub mean: Interval,
    pub extinct_fraction: Interval,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnsembleSummary {
    pub seed: u64,
    pub n_paths: usize,
    pub mean: f64,
    pub var: f64,
    pub extinct_fraction: f64,
    /// 95% normal-approximation intervals.
    pub ci: ConfidenceIntervals,
}

struct PathResult {
    terminal: u64,
    events: Option<Vec<(f64, u64)>>,
    capped: bool,
}

fn simulate_path(model: &BirthDeathModel, cfg: &GillespieConfig, path: u64) -> PathResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(path);
    let mut n = model.n0;
    let mut t = 0.0;
    let mut events = cfg.record_events.then(|| vec![(0.0, n)]);
    let mut count = 0u64;
    loop {
        let (b, d) = model.rates(n);
        let total = b + d;
        if total <= 0.0 {
            break;
        }
        let wait: f64 = rng.sample::<f64, _>(Exp1) / total;
        if t + wait > cfg.t_end {
            break;
        }
        t += wait;
        let u: f64 = rng.random();
        if u * total < b {
            n += 1;
        } else {
            n -= 1;
        }
        if let Some(ev) = events.as_mut() {
            ev.push((t, n));
        }
        count += 1;
        if count >= cfg.max_events {
            return PathResult { terminal: n, events, capped: true };
        }
    }
    PathResult { terminal: n, events, capped: false }
}

pub fn gillespie(model: &BirthDeathModel, cfg: &GillespieConfig) -> TrajectoryEnsemble {
    gillespie_with(model, cfg, Execution::default())
}

/// Runs all paths; output is independent of `exec`.
pub fn gillespie_with(model: &BirthDeathModel, cfg: &GillespieConfig, exec: Execution) -> TrajectoryEnsemble {
    let results = exec.map((0..cfg.n_paths as u64).collect(), |p| simulate_path(model, cfg, p));
    let capped_paths = results.iter().filter(|r| r.capped).count();
    let terminal = results.iter().map(|r| r.terminal).collect();
    let events = cfg.record_events.then(|| results.into_iter().map(|r| r.events.expect("recorded")).collect());
    TrajectoryEnsemble { seed: cfg.seed, n_paths: cfg.n_paths, t_end: cfg.t_end, rng: RNG_ID, terminal, events, capped_paths }
}

impl TrajectoryEnsemble {
    pub fn extinct_fraction(&self) -> f64 {
        self.terminal.iter().filter(|&&n| n == 0).count() as f64 / self.n_paths as f64
    }

    pub fn summary(&self) -> EnsembleSummary {
        let n = self.n_paths as f64;
        let mean = self.terminal.iter().map(|&v| v as f64).sum::<f64>() / n;
        let var = if self.n_paths > 1 {
            self.terminal.iter().map(|&v| (v as f64 - mean).powi(2)).sum::<f64>() / (n - 1.0)
        } else {
            0.0
        };
        let p = self.extinct_fraction();
        let se_mean = (var / n).sqrt();
        let se_p = (p * (1.0 - p) / n).sqrt();
        EnsembleSummary {
            seed: self.seed,
            n_paths: self.n_paths,
            mean,
            var,
            extinct_fraction: p,
            ci: ConfidenceIntervals {
                mean: Interval { lo: mean - 1.96 * se_mean, hi: mean + 1.96 * se_mean },
                extinct_fraction: Interval { lo: p - 1.96 * se_p, hi: p + 1.96 * se_p },
            },
        }
    }
}
