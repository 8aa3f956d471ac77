//! Threshold estimates and bounds for a single graph.

mod tree;

pub use tree::{
    tree_reach_probability, tree_threshold_estimate, TreeSolveResult, TreeThresholdEstimate,
    DEFAULT_BISECTION_TOL, DEFAULT_DEPTHS, DEFAULT_ETA,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{degree_moment, Graph};
use crate::spectral::{
    adjacency_spectral_radius_with, nb_spectral_radius, pattern_hashimoto, QuotientPattern,
    DEFAULT_MAX_ITER,
};

/// Every threshold estimate and lower bound for one graph.
///
/// Undefined values are `None` (JSON `null`) with the matching `*_reason`
/// field explaining why.
#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub m: usize,
    pub d_max: usize,
    pub d_min: usize,
    /// Heuristic: uncorrelated random-graph formula `<d> / (<d^2> - <d>)`.
    pub estimate_random: Option<f64>,
    pub estimate_random_reason: Option<String>,
    /// `1 / (d_max - 1)`.
    pub bound_maxdeg: Option<f64>,
    pub bound_maxdeg_reason: Option<String>,
    /// `1 / rho(B)`, tight on quasi-transitive trees.
    pub bound_nb: Option<f64>,
    pub bound_nb_reason: Option<String>,
    /// `1 / rho(A)`, always strictly below `bound_nb`.
    pub bound_adjacency: Option<f64>,
    pub bound_adjacency_reason: Option<String>,
    pub nb_rho: f64,
    pub adjacency_rho: f64,
    pub forest: bool,
    pub connected: bool,
    pub components: usize,
    /// Whether `bound_adjacency < bound_nb` held; `None` when not comparable.
    pub strict_chain: Option<bool>,
    pub converged: bool,
    pub nb_iterations: usize,
    pub adjacency_iterations: usize,
}

pub fn bounds_report(g: &Graph, tol: f64) -> Result<BoundsReport> {
    bounds_report_with(g, tol, DEFAULT_MAX_ITER)
}

pub fn bounds_report_with(g: &Graph, tol: f64, max_iter: usize) -> Result<BoundsReport> {
    if g.is_empty() || g.m() == 0 {
        return Err(Error::EmptyGraph);
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "tol must be positive, got {tol}"
        )));
    }
    let d1 = degree_moment(g, 1)?;
    let d2 = degree_moment(g, 2)?;
    let (estimate_random, estimate_random_reason) = if d2 > d1 {
        (Some(d1 / (d2 - d1)), None)
    } else {
        (
            None,
            Some("<d^2> equals <d>: every vertex has degree 0 or 1".to_string()),
        )
    };

    let d_max = g.max_degree();
    let (bound_maxdeg, bound_maxdeg_reason) = if d_max > 1 {
        (Some(1.0 / (d_max - 1) as f64), None)
    } else {
        (None, Some("maximum degree is at most 1".to_string()))
    };

    let nb = nb_spectral_radius(g, tol, max_iter);
    let forest = nb.nilpotent;
    let (bound_nb, bound_nb_reason) = if forest {
        (
            None,
            Some("forest: the non-backtracking operator is nilpotent; a finite graph has threshold 1".to_string()),
        )
    } else {
        (Some(1.0 / nb.rho), None)
    };

    let adj = adjacency_spectral_radius_with(g, tol, max_iter)?;
    let (bound_adjacency, bound_adjacency_reason) = (Some(1.0 / adj.rho), None);

    let strict_chain = match (bound_adjacency, bound_nb) {
        (Some(a), Some(b)) => Some(a < b),
        _ => None,
    };
    let components = g.components().count();

    Ok(BoundsReport {
        n: g.n(),
        m: g.m(),
        d_max,
        d_min: g.min_degree(),
        estimate_random,
        estimate_random_reason,
        bound_maxdeg,
        bound_maxdeg_reason,
        bound_nb,
        bound_nb_reason,
        bound_adjacency,
        bound_adjacency_reason,
        nb_rho: nb.rho,
        adjacency_rho: adj.rho,
        forest,
        connected: components == 1,
        components,
        strict_chain,
        converged: nb.converged && adj.converged,
        nb_iterations: nb.iterations,
        adjacency_iterations: adj.iterations,
    })
}

/// Exact threshold of the infinite tree described by `p`: `1 / rho`.
pub fn pattern_threshold(p: &QuotientPattern) -> Result<f64> {
    let spectrum = pattern_hashimoto(p)?;
    if spectrum.rho < 1.0 - 1e-9 {
        return Err(Error::InvalidPattern(format!(
            "non-backtracking spectral radius {} is below 1; the pattern does not describe an infinite tree",
            spectrum.rho
        )));
    }
    Ok(1.0 / spectrum.rho)
}
