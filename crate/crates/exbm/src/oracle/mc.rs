//! Monte Carlo simulation of `∫₀ᵗ e^{2B(s)} ds`.
//!
//! Paths are Brownian with Gaussian increments on a uniform grid; the
//! integrand is accumulated by the trapezoid rule, which halves the
//! discretization bias of the left-endpoint rule at no cost.
//!
//! Reproducibility contract: path `i` draws from ChaCha8 stream `i` of the
//! seeded generator, so results depend only on `(config, seed)` — never on
//! the worker count or scheduling. The reduction over paths runs in path
//! order on one thread for bit-identical output.

use crate::{Error, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

/// Simulation shape: path count, time resolution, seed, and horizon.
#[derive(Debug, Clone, Copy)]
pub struct McConfig {
    pub paths: usize,
    pub steps_per_unit_time: u32,
    pub seed: u64,
    pub t: f64,
}

impl McConfig {
    pub fn new(paths: usize, steps_per_unit_time: u32, seed: u64, t: f64) -> Result<Self> {
        if paths == 0 {
            return Err(Error::Domain("mc needs at least one path".into()));
        }
        if steps_per_unit_time < 16 {
            return Err(Error::Domain(format!(
                "mc needs >= 16 steps per unit time, got {steps_per_unit_time}"
            )));
        }
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::Domain(format!("mc needs t > 0, got {t}")));
        }
        let cfg = McConfig {
            paths,
            steps_per_unit_time,
            seed,
            t,
        };
        if cfg.total_steps() < 2 {
            return Err(Error::Domain("mc grid must have at least two steps".into()));
        }
        Ok(cfg)
    }

    pub fn total_steps(&self) -> usize {
        (self.steps_per_unit_time as f64 * self.t).ceil() as usize
    }
}

/// Sample statistics of the functional.
#[derive(Debug, Clone, Copy)]
pub struct McEstimate {
    pub samples: usize,
    pub mean: f64,
    pub stderr: f64,
    /// First two raw sample moments (mean of `A`, mean of `A²`).
    pub raw_moments: (f64, f64),
}

/// Empirical CDF value at one λ with its binomial standard error.
#[derive(Debug, Clone, Copy)]
pub struct CdfPoint {
    pub lambda: f64,
    pub empirical: f64,
    pub stderr: f64,
}

/// One path: integrate `e^{2B}` by the trapezoid rule on the uniform grid.
fn path_integral(cfg: &McConfig, path_index: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(path_index);
    let steps = cfg.total_steps();
    let dt = cfg.t / steps as f64;
    let sqrt_dt = dt.sqrt();
    let mut b = 0.0_f64;
    let mut prev = 1.0_f64; // e^{2B(0)}
    let mut acc = 0.0_f64;
    for _ in 0..steps {
        let z: f64 = StandardNormal.sample(&mut rng);
        b += sqrt_dt * z;
        let cur = (2.0 * b).exp();
        acc += 0.5 * dt * (prev + cur);
        prev = cur;
    }
    acc
}

/// All path integrals, in path order. Workers split the index range; each
/// path's stream depends only on its index.
fn simulate(cfg: &McConfig, workers: usize) -> Vec<f64> {
    let mut values = vec![0.0_f64; cfg.paths];
    let workers = workers.max(1).min(cfg.paths);
    if workers == 1 {
        for (i, slot) in values.iter_mut().enumerate() {
            *slot = path_integral(cfg, i as u64);
        }
        return values;
    }
    let chunk = cfg.paths.div_ceil(workers);
    std::thread::scope(|scope| {
        for (ci, slots) in values.chunks_mut(chunk).enumerate() {
            scope.spawn(move || {
                let base = ci * chunk;
                for (j, slot) in slots.iter_mut().enumerate() {
                    *slot = path_integral(cfg, (base + j) as u64);
                }
            });
        }
    });
    values
}

/// Monte Carlo estimate of `E[∫₀ᵗ e^{2B}]` with standard error.
pub fn mc_functional(cfg: &McConfig, workers: usize) -> McEstimate {
    let values = simulate(cfg, workers);
    let n = values.len() as f64;
    let mut mean = 0.0;
    let mut comp = 0.0;
    for &v in &values {
        let y = v - comp;
        let t = mean + y;
        comp = (t - mean) - y;
        mean = t;
    }
    mean /= n;
    let mut m2 = 0.0;
    let mut raw2 = 0.0;
    for &v in &values {
        m2 += (v - mean) * (v - mean);
        raw2 += v * v;
    }
    let var = if values.len() > 1 {
        m2 / (n - 1.0)
    } else {
        0.0
    };
    McEstimate {
        samples: values.len(),
        mean,
        stderr: (var / n).sqrt(),
        raw_moments: (mean, raw2 / n),
    }
}

/// Empirical CDF of the functional at the requested λ points.
pub fn mc_cdf_check(cfg: &McConfig, lambda_points: &[f64], workers: usize) -> Vec<CdfPoint> {
    let values = simulate(cfg, workers);
    let n = values.len() as f64;
    lambda_points
        .iter()
        .map(|&lambda| {
            let count = values.iter().filter(|&&v| v < lambda).count() as f64;
            let p = count / n;
            CdfPoint {
                lambda,
                empirical: p,
                stderr: (p * (1.0 - p) / n).sqrt(),
            }
        })
        .collect()
}
