use serde::Serialize;

use super::SimulationResult;
use crate::error::{Error, Result};

pub const DEFAULT_CROSSING_LEVEL: f64 = 0.1;
const MIN_TRIALS: usize = 10;
const PEAK_FRACTION: f64 = 0.95;

/// Finite-size threshold heuristic.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Criterion {
    /// Maximum of the canonical susceptibility curve.
    #[default]
    SusceptibilityPeak,
    /// First `p` where the canonical largest-cluster fraction reaches `level`.
    FractionCrossing { level: f64 },
}

#[derive(Debug, Clone, Serialize)]
pub struct ThresholdEstimate {
    pub p_hat: f64,
    pub uncertainty: f64,
    pub criterion: Criterion,
}

/// Locates the threshold on the canonical curves of `r`.
///
/// For the susceptibility peak, `p_hat` is the vertex of a parabola through
/// the grid maximum and its neighbours, and the uncertainty is the half-width
/// of the interval where the curve stays above 95% of the peak. For the
/// fraction crossing, `p_hat` is linearly interpolated and the uncertainty is
/// one grid step.
pub fn estimate_threshold(r: &SimulationResult, criterion: Criterion) -> Result<ThresholdEstimate> {
    if r.trials < MIN_TRIALS {
        return Err(Error::InvalidParameter(format!(
            "threshold estimation needs at least {MIN_TRIALS} trials, got {}",
            r.trials
        )));
    }
    let grid = &r.grid;
    let step = grid[1] - grid[0];
    match criterion {
        Criterion::SusceptibilityPeak => {
            let chi = &r.canonical_susceptibility.mean;
            let (imax, &peak) =
                chi.iter()
                    .enumerate()
                    .fold((0, &f64::NEG_INFINITY), |best, cur| {
                        if cur.1 > best.1 {
                            cur
                        } else {
                            best
                        }
                    });
            if imax == 0 || imax + 1 == chi.len() || peak.is_nan() || peak <= 0.0 {
                return Err(Error::FlatCurve(
                    "susceptibility has no interior peak; use a larger graph or more trials".into(),
                ));
            }
            let (a, b, c) = (chi[imax - 1], chi[imax], chi[imax + 1]);
            let denom = a - 2.0 * b + c;
            let shift = if denom < 0.0 {
                0.5 * (a - c) / denom
            } else {
                0.0
            };
            let p_hat = grid[imax] + shift.clamp(-0.5, 0.5) * step;

            let level = PEAK_FRACTION * peak;
            let crossing = |i: usize, j: usize| -> f64 {
                // chi[i] >= level > chi[j], neighbours
                let t = (chi[i] - level) / (chi[i] - chi[j]);
                grid[i] + t * (grid[j] - grid[i])
            };
            let mut lo = imax;
            while lo > 0 && chi[lo - 1] >= level {
                lo -= 1;
            }
            let left = if lo == 0 {
                grid[0]
            } else {
                crossing(lo, lo - 1)
            };
            let mut hi = imax;
            while hi + 1 < chi.len() && chi[hi + 1] >= level {
                hi += 1;
            }
            let right = if hi + 1 == chi.len() {
                grid[hi]
            } else {
                crossing(hi, hi + 1)
            };
            Ok(ThresholdEstimate {
                p_hat,
                uncertainty: (0.5 * (right - left)).max(0.5 * step),
                criterion,
            })
        }
        Criterion::FractionCrossing { level } => {
            if !(level > 0.0 && level < 1.0) {
                return Err(Error::InvalidParameter(format!(
                    "crossing level must lie in (0, 1), got {level}"
                )));
            }
            let s = &r.canonical_largest_fraction.mean;
            let i = s.iter().position(|&x| x >= level).ok_or_else(|| {
                Error::FlatCurve(format!("largest-cluster fraction never reaches {level}"))
            })?;
            if i == 0 {
                return Err(Error::FlatCurve(format!(
                    "largest-cluster fraction already exceeds {level} at p = 0"
                )));
            }
            let t = (level - s[i - 1]) / (s[i] - s[i - 1]);
            Ok(ThresholdEstimate {
                p_hat: grid[i - 1] + t * step,
                uncertainty: step,
                criterion,
            })
        }
    }
}
