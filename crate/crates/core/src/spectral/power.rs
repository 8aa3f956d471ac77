//! Matrix-free power iteration for the Hashimoto and adjacency operators.

use std::collections::VecDeque;

use serde::Serialize;

use super::edge_index::DirectedEdgeIndex;
use crate::error::{Error, Result};
use crate::graph::{backbone, Graph};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 100_000;

/// Rayleigh estimates must agree over this many iterations.
const WINDOW: usize = 10;
/// Iterates whose largest entry drops below this are treated as zero.
const NILPOTENT_FLOOR: f64 = 1e-250;

/// Outcome of a spectral-radius computation.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralResult {
    pub rho: f64,
    /// Operator applications performed.
    pub iterations: usize,
    pub converged: bool,
    pub nilpotent: bool,
    /// Relative width of the Collatz-Wielandt bracket at the last iterate.
    pub residual: f64,
    /// Certified bracket `lower <= rho <= upper`.
    pub lower: f64,
    pub upper: f64,
    /// Components the iteration was split into.
    pub components: usize,
}

impl SpectralResult {
    fn zero(iterations: usize) -> Self {
        SpectralResult {
            rho: 0.0,
            iterations,
            converged: true,
            nilpotent: true,
            residual: 0.0,
            lower: 0.0,
            upper: 0.0,
            components: 0,
        }
    }
}

struct Iterate {
    rho: f64,
    lower: f64,
    upper: f64,
    iterations: usize,
    converged: bool,
    residual: f64,
}

/// Power iteration on `M + I` for a nonnegative operator `M`, started from
/// the all-ones vector.
///
/// For a positive iterate `x`, the ratios `((M + I)x)_i / x_i` bracket
/// `rho(M) + 1` from both sides. Convergence requires the bracket to close
/// to relative width `tol` and the Rayleigh quotient to move by less than
/// `tol` (relative) over the last `WINDOW` iterations.
fn shifted_power_iteration<F>(dim: usize, mut apply: F, tol: f64, max_iter: usize) -> Iterate
where
    F: FnMut(&[f64], &mut [f64]),
{
    let mut x = vec![1.0; dim];
    let mut y = vec![0.0; dim];
    let mut history: VecDeque<f64> = VecDeque::with_capacity(WINDOW + 1);
    let mut best = Iterate {
        rho: 0.0,
        lower: 0.0,
        upper: f64::INFINITY,
        iterations: 0,
        converged: false,
        residual: f64::INFINITY,
    };

    for it in 1..=max_iter {
        apply(&x, &mut y);
        let mut xy = 0.0;
        let mut xx = 0.0;
        let mut lo = f64::INFINITY;
        let mut hi = 0.0f64;
        let mut scale = 0.0f64;
        for (yi, &xi) in y.iter_mut().zip(&x) {
            *yi += xi;
            xy += xi * *yi;
            xx += xi * xi;
            let ratio = *yi / xi;
            lo = lo.min(ratio);
            hi = hi.max(ratio);
            scale = scale.max(*yi);
        }
        let theta = xy / xx;
        let residual = (hi - lo) / hi;

        best = Iterate {
            rho: theta - 1.0,
            lower: (lo - 1.0).max(best.lower),
            upper: (hi - 1.0).min(best.upper),
            iterations: it,
            converged: false,
            residual,
        };

        history.push_back(theta);
        if history.len() > WINDOW {
            history.pop_front();
        }
        let settled =
            history.len() == WINDOW && history.iter().all(|&t| (t - theta).abs() <= tol * theta);
        if settled && residual <= tol {
            best.converged = true;
            break;
        }

        for (xi, &yi) in x.iter_mut().zip(&y) {
            *xi = yi / scale;
        }
    }
    best.rho = best.rho.clamp(best.lower, best.upper);
    best
}

/// Spectral radius of the Hashimoto matrix of `g`.
///
/// The graph is first reduced to its backbone, which leaves the spectral
/// radius unchanged. An empty backbone means `g` is a forest; the operator
/// is then nilpotent, which is confirmed by applying it to the all-ones
/// vector until it vanishes (at most `2m` applications). Otherwise each
/// backbone component is iterated separately and the largest radius wins.
pub fn nb_spectral_radius(g: &Graph, tol: f64, max_iter: usize) -> SpectralResult {
    let core = backbone(g);
    if core.graph.m() == 0 {
        return nilpotent_probe(g);
    }

    let mut out = SpectralResult {
        rho: 0.0,
        iterations: 0,
        converged: true,
        nilpotent: false,
        residual: 0.0,
        lower: 0.0,
        upper: 0.0,
        components: 0,
    };
    for (component, _) in core.graph.split_components() {
        let idx = DirectedEdgeIndex::new(&component);
        let mut sums = vec![0.0; idx.vertex_count()];
        let it = shifted_power_iteration(
            idx.len(),
            |x, y| idx.apply_into(x, &mut sums, y),
            tol,
            max_iter,
        );
        out.components += 1;
        out.iterations += it.iterations;
        out.converged &= it.converged;
        out.residual = out.residual.max(it.residual);
        out.lower = out.lower.max(it.lower);
        out.upper = out.upper.max(it.upper);
        out.rho = out.rho.max(it.rho);
    }
    out
}

fn nilpotent_probe(g: &Graph) -> SpectralResult {
    let idx = DirectedEdgeIndex::new(g);
    let mut x: Vec<f64> = vec![1.0; idx.len()];
    let mut y = vec![0.0; idx.len()];
    let mut sums = vec![0.0; g.n()];
    let mut applications = 0;
    while x.iter().any(|v| v.abs() >= NILPOTENT_FLOOR) && applications <= idx.len() {
        idx.apply_into(&x, &mut sums, &mut y);
        std::mem::swap(&mut x, &mut y);
        applications += 1;
    }
    SpectralResult::zero(applications)
}

/// Spectral radius of the adjacency matrix, with default iteration cap.
pub fn adjacency_spectral_radius(g: &Graph, tol: f64) -> Result<f64> {
    Ok(adjacency_spectral_radius_with(g, tol, DEFAULT_MAX_ITER)?.rho)
}

/// Power iteration on `A + I` per connected component; the shift removes the
/// period-two oscillation on bipartite graphs.
pub fn adjacency_spectral_radius_with(
    g: &Graph,
    tol: f64,
    max_iter: usize,
) -> Result<SpectralResult> {
    if g.m() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut out = SpectralResult {
        rho: 0.0,
        iterations: 0,
        converged: true,
        nilpotent: false,
        residual: 0.0,
        lower: 0.0,
        upper: 0.0,
        components: 0,
    };
    for (component, _) in g.split_components() {
        if component.m() == 0 {
            continue;
        }
        let it = shifted_power_iteration(
            component.n(),
            |x, y| {
                for (v, yv) in y.iter_mut().enumerate() {
                    *yv = component.neighbors(v).iter().map(|&w| x[w]).sum();
                }
            },
            tol,
            max_iter,
        );
        out.components += 1;
        out.iterations += it.iterations;
        out.converged &= it.converged;
        out.residual = out.residual.max(it.residual);
        out.lower = out.lower.max(it.lower);
        out.upper = out.upper.max(it.upper);
        out.rho = out.rho.max(it.rho);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn nb(g: &Graph) -> SpectralResult {
        nb_spectral_radius(g, DEFAULT_TOL, DEFAULT_MAX_ITER)
    }

    #[test]
    fn trees_are_nilpotent() {
        let g = generate(&FamilySpec::Path { n: 7 }).unwrap();
        let r = nb(&g);
        assert!(r.nilpotent && r.converged);
        assert_eq!(r.rho, 0.0);
        assert!(r.iterations <= 2 * g.m());
        // longest non-backtracking walk on path(7) has 6 edges
        assert_eq!(r.iterations, 6);
    }

    #[test]
    fn edgeless_graph() {
        let g = Graph::from_edges(3, []).unwrap();
        let r = nb(&g);
        assert!(r.nilpotent);
        assert_eq!(r.iterations, 0);
    }

    #[test]
    fn cycle_has_unit_radius() {
        let g = generate(&FamilySpec::Cycle { n: 6 }).unwrap();
        let r = nb(&g);
        assert!(r.converged && !r.nilpotent);
        assert!((r.rho - 1.0).abs() < 1e-12);
    }

    #[test]
    fn regular_graphs_give_d_minus_one() {
        let k4 = generate(&FamilySpec::Complete { n: 4 }).unwrap();
        assert!((nb(&k4).rho - 2.0).abs() < 1e-12);
        let rr = generate(&FamilySpec::RandomRegular {
            d: 5,
            n: 40,
            seed: 1,
        })
        .unwrap();
        assert!((nb(&rr).rho - 4.0).abs() < 1e-12);
    }

    #[test]
    fn bracket_contains_estimate() {
        let g = generate(&FamilySpec::BinomialRandom {
            n: 80,
            p: 0.06,
            seed: 5,
        })
        .unwrap();
        let r = nb(&g);
        assert!(r.converged);
        assert!(r.lower <= r.rho && r.rho <= r.upper);
        assert!(r.residual <= DEFAULT_TOL);
    }

    #[test]
    fn adjacency_of_cycle_and_complete() {
        let c = generate(&FamilySpec::Cycle { n: 9 }).unwrap();
        assert!((adjacency_spectral_radius(&c, 1e-12).unwrap() - 2.0).abs() < 1e-10);
        let k4 = generate(&FamilySpec::Complete { n: 4 }).unwrap();
        assert!((adjacency_spectral_radius(&k4, 1e-12).unwrap() - 3.0).abs() < 1e-10);
        let empty = Graph::from_edges(2, []).unwrap();
        assert!(matches!(
            adjacency_spectral_radius(&empty, 1e-10),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn adjacency_of_even_path_converges_despite_bipartiteness() {
        let g = generate(&FamilySpec::Path { n: 6 }).unwrap();
        let exact = 2.0 * (std::f64::consts::PI / 7.0).cos();
        let r = adjacency_spectral_radius_with(&g, 1e-12, 100_000).unwrap();
        assert!(r.converged);
        assert!((r.rho - exact).abs() < 1e-10);
    }

    #[test]
    fn disconnected_takes_max_component() {
        // triangle plus a disjoint K4
        let g = Graph::from_edges(
            7,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (3, 5),
                (3, 6),
                (4, 5),
                (4, 6),
                (5, 6),
            ],
        )
        .unwrap();
        let r = nb(&g);
        assert_eq!(r.components, 2);
        assert!((r.rho - 2.0).abs() < 1e-12);
    }
}
