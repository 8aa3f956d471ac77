//! Newman-Ziff Monte Carlo site percolation.
//!
//! Each trial opens the sites in a uniformly random order and merges
//! clusters with a union-find forest, recording statistics at every
//! occupation count `k = 0..=n`. Canonical curves at fixed occupation
//! probability `p` follow by convolving with the binomial distribution of
//! `k`.

mod estimate;
mod union_find;

pub use estimate::{estimate_threshold, Criterion, ThresholdEstimate, DEFAULT_CROSSING_LEVEL};
pub use union_find::ClusterForest;

use std::io::{self, Write};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Number of points on the canonical `p`-grid.
pub const DEFAULT_GRID_POINTS: usize = 201;
/// Binomial weights below `exp(-LOG_WEIGHT_CUTOFF)` relative to the mode are
/// dropped.
const LOG_WEIGHT_CUTOFF: f64 = 40.0;
/// Trials processed per parallel batch.
const BATCH: usize = 32;

/// Seed of trial `t`: the SplitMix64 finaliser applied to
/// `master_seed + (t + 1) * 0x9E3779B97F4A7C15` (wrapping).
pub fn trial_seed(master_seed: u64, trial: u64) -> u64 {
    let mut z = master_seed.wrapping_add((trial + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Mean and standard error of one observable along a curve.
#[derive(Debug, Clone, Default)]
pub struct Curve {
    pub mean: Vec<f64>,
    pub stderr: Vec<f64>,
}

impl Curve {
    fn from_sums(sum: &[f64], sum_sq: &[f64], trials: usize) -> Curve {
        let t = trials as f64;
        let mut mean = Vec::with_capacity(sum.len());
        let mut stderr = Vec::with_capacity(sum.len());
        for (&s, &s2) in sum.iter().zip(sum_sq) {
            let m = s / t;
            let var = if trials > 1 {
                ((s2 - t * m * m) / (t - 1.0)).max(0.0)
            } else {
                0.0
            };
            mean.push(m);
            stderr.push((var / t).sqrt());
        }
        Curve { mean, stderr }
    }
}

/// Aggregated sweep statistics.
#[derive(Debug, Clone)]
pub struct SimulationResult {
    pub n: usize,
    pub trials: usize,
    pub master_seed: u64,
    /// Indexed by occupied count `k = 0..=n`.
    pub largest_fraction: Curve,
    pub susceptibility: Curve,
    /// Canonical `p`-grid.
    pub grid: Vec<f64>,
    pub canonical_largest_fraction: Curve,
    pub canonical_susceptibility: Curve,
}

impl SimulationResult {
    pub fn occupied_fraction(&self, k: usize) -> f64 {
        k as f64 / self.n as f64
    }

    /// Microcanonical curves, one row per occupied count.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(
            out,
            "occupied_fraction,mean_largest_fraction,mean_susceptibility,stderr_largest_fraction,stderr_susceptibility"
        )?;
        for k in 0..=self.n {
            writeln!(
                out,
                "{},{},{},{},{}",
                self.occupied_fraction(k),
                self.largest_fraction.mean[k],
                self.susceptibility.mean[k],
                self.largest_fraction.stderr[k],
                self.susceptibility.stderr[k]
            )?;
        }
        Ok(())
    }

    /// Canonical curves, one row per grid probability.
    pub fn write_canonical_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(
            out,
            "p,mean_largest_fraction,mean_susceptibility,stderr_largest_fraction,stderr_susceptibility"
        )?;
        for (i, p) in self.grid.iter().enumerate() {
            writeln!(
                out,
                "{},{},{},{},{}",
                p,
                self.canonical_largest_fraction.mean[i],
                self.canonical_susceptibility.mean[i],
                self.canonical_largest_fraction.stderr[i],
                self.canonical_susceptibility.stderr[i]
            )?;
        }
        Ok(())
    }
}

/// Binomial(n, p) weights restricted to where they matter.
struct BinomialWindow {
    start: usize,
    weights: Vec<f64>,
}

impl BinomialWindow {
    fn convolve(&self, values: &[f64]) -> f64 {
        self.weights
            .iter()
            .zip(&values[self.start..])
            .map(|(w, v)| w * v)
            .sum()
    }
}

fn binomial_windows(n: usize, grid: &[f64]) -> Vec<BinomialWindow> {
    let mut ln_fact = vec![0.0f64; n + 1];
    for i in 1..=n {
        ln_fact[i] = ln_fact[i - 1] + (i as f64).ln();
    }
    grid.iter()
        .map(|&p| {
            if p <= 0.0 {
                return BinomialWindow {
                    start: 0,
                    weights: vec![1.0],
                };
            }
            if p >= 1.0 {
                return BinomialWindow {
                    start: n,
                    weights: vec![1.0],
                };
            }
            let (lp, lq) = (p.ln(), (1.0 - p).ln());
            let log_w: Vec<f64> = (0..=n)
                .map(|k| {
                    ln_fact[n] - ln_fact[k] - ln_fact[n - k] + k as f64 * lp + (n - k) as f64 * lq
                })
                .collect();
            let peak = log_w.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let keep = |k: &usize| log_w[*k] >= peak - LOG_WEIGHT_CUTOFF;
            let start = (0..=n).find(keep).unwrap();
            let end = (0..=n).rev().find(keep).unwrap();
            let mut weights: Vec<f64> = (start..=end).map(|k| (log_w[k] - peak).exp()).collect();
            let total: f64 = weights.iter().sum();
            weights.iter_mut().for_each(|w| *w /= total);
            BinomialWindow { start, weights }
        })
        .collect()
}

struct TrialCurves {
    largest: Vec<f64>,
    chi: Vec<f64>,
    canon_largest: Vec<f64>,
    canon_chi: Vec<f64>,
}

fn run_trial(g: &Graph, seed: u64, windows: &[BinomialWindow]) -> TrialCurves {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);

    let mut uf = ClusterForest::new(n);
    let mut open = vec![false; n];
    let inv_n = 1.0 / n as f64;
    let mut largest = Vec::with_capacity(n + 1);
    let mut chi = Vec::with_capacity(n + 1);
    largest.push(0.0);
    chi.push(0.0);
    for &v in &order {
        open[v] = true;
        uf.activate(v);
        for &w in g.neighbors(v) {
            if open[w] {
                uf.union(v, w);
            }
        }
        let big = uf.largest() as u64;
        largest.push(big as f64 * inv_n);
        chi.push((uf.sum_sq() - big * big) as f64 * inv_n);
    }
    let canon_largest = windows.iter().map(|w| w.convolve(&largest)).collect();
    let canon_chi = windows.iter().map(|w| w.convolve(&chi)).collect();
    TrialCurves {
        largest,
        chi,
        canon_largest,
        canon_chi,
    }
}

fn accumulate(sum: &mut [f64], sum_sq: &mut [f64], values: &[f64]) {
    for ((s, s2), &v) in sum.iter_mut().zip(sum_sq.iter_mut()).zip(values) {
        *s += v;
        *s2 += v * v;
    }
}

pub fn site_percolation_sweep(
    g: &Graph,
    trials: usize,
    master_seed: u64,
) -> Result<SimulationResult> {
    site_percolation_sweep_with_grid(g, trials, master_seed, DEFAULT_GRID_POINTS)
}

/// Runs `trials` independent Newman-Ziff passes. Trials run in parallel;
/// aggregation is a sequential reduction in trial order, so the result
/// depends only on `(g, trials, master_seed, grid_points)`.
pub fn site_percolation_sweep_with_grid(
    g: &Graph,
    trials: usize,
    master_seed: u64,
    grid_points: usize,
) -> Result<SimulationResult> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    if grid_points < 2 {
        return Err(Error::InvalidParameter(
            "grid needs at least two points".into(),
        ));
    }
    let n = g.n();
    let grid: Vec<f64> = (0..grid_points)
        .map(|i| i as f64 / (grid_points - 1) as f64)
        .collect();
    let windows = binomial_windows(n, &grid);

    let mut sums = [
        vec![0.0; n + 1],
        vec![0.0; n + 1],
        vec![0.0; n + 1],
        vec![0.0; n + 1],
    ];
    let mut canon = [
        vec![0.0; grid_points],
        vec![0.0; grid_points],
        vec![0.0; grid_points],
        vec![0.0; grid_points],
    ];
    for first in (0..trials).step_by(BATCH) {
        let last = (first + BATCH).min(trials);
        let batch: Vec<TrialCurves> = (first..last)
            .into_par_iter()
            .map(|t| run_trial(g, trial_seed(master_seed, t as u64), &windows))
            .collect();
        for tc in &batch {
            let [a, b, c, d] = &mut sums;
            accumulate(a, b, &tc.largest);
            accumulate(c, d, &tc.chi);
            let [a, b, c, d] = &mut canon;
            accumulate(a, b, &tc.canon_largest);
            accumulate(c, d, &tc.canon_chi);
        }
    }

    Ok(SimulationResult {
        n,
        trials,
        master_seed,
        largest_fraction: Curve::from_sums(&sums[0], &sums[1], trials),
        susceptibility: Curve::from_sums(&sums[2], &sums[3], trials),
        grid,
        canonical_largest_fraction: Curve::from_sums(&canon[0], &canon[1], trials),
        canonical_susceptibility: Curve::from_sums(&canon[2], &canon[3], trials),
    })
}
