//! Exact survival recursion on finite tree truncations.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{generate_tree, FamilySpec, Graph};

pub const DEFAULT_ETA: f64 = 1e-3;
pub const DEFAULT_BISECTION_TOL: f64 = 1e-4;
pub const DEFAULT_DEPTHS: [usize; 5] = [6, 8, 10, 12, 14];

/// Reach probability of the boundary from an open root.
#[derive(Debug, Clone)]
pub struct TreeSolveResult {
    pub p: f64,
    pub reach_probability: f64,
    /// Largest distance from the root to a boundary vertex.
    pub depth: usize,
    /// `q[j]` is `Q` on the edge from `parent(j)` to `j`: the probability
    /// that the branch through `j` stays finite. `NaN` at the root.
    pub q: Vec<f64>,
}

/// Solves `Q_ij = prod over children l of j of (1 - p + p Q_jl)` in a single
/// leaf-to-root sweep.
///
/// Boundary vertices stand for "connected to infinity": the branch through
/// one of them has `Q = 0` and whatever lies beyond it is ignored. A
/// non-boundary leaf has the empty product `Q = 1`. The result is
/// `1 - prod over neighbours j of root of (1 - p + p Q_root,j)`, the
/// probability that an open root reaches the boundary.
pub fn tree_reach_probability(
    g: &Graph,
    root: usize,
    p: f64,
    boundary: &[usize],
) -> Result<TreeSolveResult> {
    if root >= g.n() {
        return Err(Error::InvalidTree(format!(
            "root {root} is not a vertex of a graph with {} vertices",
            g.n()
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("p = {p} outside [0, 1]")));
    }
    if !g.is_forest() {
        return Err(Error::HasCycle);
    }
    let mut is_boundary = vec![false; g.n()];
    for &b in boundary {
        if b >= g.n() {
            return Err(Error::InvalidTree(format!(
                "boundary vertex {b} out of range"
            )));
        }
        if b == root {
            return Err(Error::InvalidTree(
                "the root cannot be a boundary vertex".into(),
            ));
        }
        is_boundary[b] = true;
    }

    // breadth-first order from the root, not descending past the boundary
    let mut parent = vec![usize::MAX; g.n()];
    let mut dist = vec![0usize; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let mut queue = VecDeque::from([root]);
    parent[root] = root;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        if is_boundary[v] {
            continue;
        }
        for &w in g.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }

    let mut q = vec![1.0; g.n()];
    for &j in order.iter().rev() {
        if j == root {
            continue;
        }
        if is_boundary[j] {
            q[j] = 0.0;
            continue;
        }
        q[j] = g
            .neighbors(j)
            .iter()
            .filter(|&&l| l != parent[j])
            .map(|&l| 1.0 - p + p * q[l])
            .product();
    }
    let fail: f64 = g
        .neighbors(root)
        .iter()
        .map(|&j| 1.0 - p + p * q[j])
        .product();
    q[root] = f64::NAN;

    let depth = boundary
        .iter()
        .filter(|&&b| parent[b] != usize::MAX)
        .map(|&b| dist[b])
        .max()
        .unwrap_or(0);
    Ok(TreeSolveResult {
        p,
        reach_probability: 1.0 - fail,
        depth,
        q,
    })
}

/// Threshold estimate from a sequence of truncation depths.
#[derive(Debug, Clone, Serialize)]
pub struct TreeThresholdEstimate {
    /// Extrapolated threshold (see [`tree_threshold_estimate`]).
    pub estimate: f64,
    /// Raw crossing at the deepest truncation.
    pub deepest: f64,
    /// `(depth, crossing)` for every requested depth.
    pub sequence: Vec<(usize, f64)>,
    /// Whether the crossings increase with depth (within the bisection tol).
    pub monotone: bool,
    pub eta: f64,
}

/// For each depth `k`, bisects for the occupation probability `p_k` at
/// which the reach probability of the depth-`k` boundary equals `eta`.
///
/// Below the threshold the reach probability decays like
/// `C (p / p_c)^k`, so `ln p_k = ln p_c + (ln eta - ln C) / k + ...`. The
/// estimate is `exp(a)` from a least-squares fit of `ln p_k = a + b / k`;
/// with a single depth it is the raw crossing.
pub fn tree_threshold_estimate(
    spec: &FamilySpec,
    depths: &[usize],
    eta: f64,
    tol: f64,
) -> Result<TreeThresholdEstimate> {
    if !matches!(
        spec,
        FamilySpec::RegularTree { .. } | FamilySpec::ChainTree { .. }
    ) {
        return Err(Error::InvalidParameter(format!(
            "{spec:?} is not a tree family with a truncation depth"
        )));
    }
    if !(eta > 0.0 && eta < 0.5) {
        return Err(Error::InvalidParameter(format!(
            "eta must lie in (0, 0.5), got {eta}"
        )));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParameter(
            "bisection tol must be positive".into(),
        ));
    }
    if depths.is_empty() || depths.contains(&0) || depths.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter(
            "depths must be positive and strictly increasing".into(),
        ));
    }

    let sequence: Vec<(usize, f64)> = depths
        .par_iter()
        .map(|&k| {
            let layout = generate_tree(&spec.with_depth(k).expect("tree family"))?;
            let boundary = layout.boundary();
            let reach = |p: f64| -> Result<f64> {
                Ok(
                    tree_reach_probability(&layout.graph, layout.root, p, &boundary)?
                        .reach_probability,
                )
            };
            let (mut lo, mut hi) = (0.0, 1.0);
            while hi - lo > tol {
                let mid = 0.5 * (lo + hi);
                if reach(mid)? < eta {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            Ok((k, 0.5 * (lo + hi)))
        })
        .collect::<Result<_>>()?;

    let deepest = sequence.last().unwrap().1;
    let monotone = sequence.windows(2).all(|w| w[1].1 >= w[0].1 - tol);
    let estimate = if sequence.len() < 2 {
        deepest
    } else {
        let pts: Vec<(f64, f64)> = sequence
            .iter()
            .map(|&(k, p)| (1.0 / k as f64, p.ln()))
            .collect();
        let len = pts.len() as f64;
        let mx = pts.iter().map(|p| p.0).sum::<f64>() / len;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / len;
        let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
        (my - sxy / sxx * mx).exp().min(1.0)
    };

    Ok(TreeThresholdEstimate {
        estimate,
        deepest,
        sequence,
        monotone,
        eta,
    })
}
