use nalgebra::{Cholesky, DMatrix};

use super::dense::spectral_radius;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex-count cap for the dense companion computation.
pub const DEFAULT_DENSE_CAP: usize = 2000;

/// Hashimoto spectral radius through the vertex-space quadratic eigenproblem
/// `[lambda^2 I - lambda A + (D - I)] y = 0`.
///
/// The pencil is linearised as the `2n x 2n` block matrix
/// `[[A, I - D], [I, 0]]` acting on `(y, z)`, whose eigenvalues are those of
/// the Hashimoto matrix apart from `m - n` copies of each of `+1` and `-1`.
/// The largest modulus is floored at one for graphs with a cycle.
///
/// For graphs with a cycle the dense estimate is then refined on the
/// symmetric side: `H(lambda) = lambda I - A + (D - I) / lambda` is positive
/// definite exactly for `lambda` above the Hashimoto spectral radius, so a
/// short bisection on the Cholesky test pins the radius down even when the
/// pencil has a defective eigenvalue there (2-regular components).
pub fn companion_spectral_radius(g: &Graph) -> Result<f64> {
    companion_spectral_radius_capped(g, DEFAULT_DENSE_CAP)
}

pub fn companion_spectral_radius_capped(g: &Graph, cap: usize) -> Result<f64> {
    let n = g.n();
    if n > cap {
        return Err(Error::TooLarge {
            what: "companion linearisation (vertices)",
            size: n,
            cap,
        });
    }
    let mut c = DMatrix::zeros(2 * n, 2 * n);
    for &(u, v) in g.edges() {
        c[(u, v)] = 1.0;
        c[(v, u)] = 1.0;
    }
    for v in 0..n {
        c[(v, n + v)] = 1.0 - g.degree(v) as f64;
        c[(n + v, v)] = 1.0;
    }
    let rho = spectral_radius(&c);
    if g.is_forest() {
        return Ok(rho);
    }
    Ok(refine(g, rho.max(1.0)))
}

/// Slack added to the diagonal so that a touching (non-crossing) zero
/// eigenvalue still factors.
const PD_SLACK: f64 = 1e-11;

fn deformed_laplacian_is_pd(g: &Graph, lambda: f64) -> bool {
    let n = g.n();
    let mut h = DMatrix::zeros(n, n);
    for &(u, v) in g.edges() {
        h[(u, v)] = -1.0;
        h[(v, u)] = -1.0;
    }
    for v in 0..n {
        h[(v, v)] = lambda + (g.degree(v) as f64 - 1.0) / lambda + PD_SLACK;
    }
    Cholesky::new(h).is_some()
}

fn refine(g: &Graph, estimate: f64) -> f64 {
    let width = 1e-6 * estimate;
    let mut lo = (estimate - width).max(1.0);
    let mut hi = estimate + width;
    let ceiling = g.max_degree().saturating_sub(1).max(1) as f64 + 1.0;
    while !deformed_laplacian_is_pd(g, hi) {
        lo = hi;
        hi = (2.0 * hi).min(hi + 1.0);
        if hi > ceiling {
            // dense estimate unusable; keep it rather than guess
            return estimate;
        }
    }
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if deformed_laplacian_is_pd(g, mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}
