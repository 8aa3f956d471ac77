//! Dense reference computations used to cross-check the matrix-free path.
//!
//! Everything here materialises full matrices and runs an `O(N^3)`
//! eigensolver, so each entry point refuses inputs above a size cap.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest dimension accepted by the dense helpers.
pub const DENSE_ORACLE_CAP: usize = 2000;

/// Largest eigenvalue modulus of a square matrix.
///
/// Uses faer's general eigensolver: nalgebra's Schur iteration has no
/// exceptional shifts and can cycle forever on permutation-like matrices.
///
/// # Panics
///
/// If the eigensolver does not converge.
pub fn spectral_radius(m: &DMatrix<f64>) -> f64 {
    let n = m.nrows();
    if n == 0 {
        return 0.0;
    }
    let a = faer::Mat::<f64>::from_fn(n, n, |i, j| m[(i, j)]);
    a.eigenvalues()
        .expect("dense eigensolver did not converge")
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
}

/// The `2m x 2m` Hashimoto matrix built straight from its definition: row
/// `(i -> j)` has a one in column `(j -> l)` for every neighbour `l != i` of
/// `j`. Directed edge `2k` is `u -> v` for the `k`-th canonical edge
/// `(u, v)`, and `2k + 1` its reverse.
pub fn hashimoto_matrix(g: &Graph) -> Result<DMatrix<f64>> {
    let dim = 2 * g.m();
    if dim > DENSE_ORACLE_CAP {
        return Err(Error::TooLarge {
            what: "Hashimoto matrix",
            size: dim,
            cap: DENSE_ORACLE_CAP,
        });
    }
    let mut arcs = Vec::with_capacity(dim);
    for &(u, v) in g.edges() {
        arcs.push((u, v));
        arcs.push((v, u));
    }
    let mut b = DMatrix::zeros(dim, dim);
    for (row, &(i, j)) in arcs.iter().enumerate() {
        for (col, &(j2, l)) in arcs.iter().enumerate() {
            if j2 == j && l != i {
                b[(row, col)] = 1.0;
            }
        }
    }
    Ok(b)
}

/// Dense adjacency matrix.
pub fn adjacency_matrix(g: &Graph) -> Result<DMatrix<f64>> {
    if g.n() > DENSE_ORACLE_CAP {
        return Err(Error::TooLarge {
            what: "adjacency matrix",
            size: g.n(),
            cap: DENSE_ORACLE_CAP,
        });
    }
    let mut a = DMatrix::zeros(g.n(), g.n());
    for &(u, v) in g.edges() {
        a[(u, v)] = 1.0;
        a[(v, u)] = 1.0;
    }
    Ok(a)
}

/// Largest adjacency eigenvalue via a symmetric eigensolve.
pub fn adjacency_spectral_radius(g: &Graph) -> Result<f64> {
    let a = adjacency_matrix(g)?;
    if a.nrows() == 0 {
        return Ok(0.0);
    }
    Ok(a.symmetric_eigenvalues()
        .iter()
        .fold(0.0, |acc, &x| acc.max(x.abs())))
}

/// Whether a nonnegative integer matrix satisfies `M^N = 0`, `N` its order.
///
/// Squares repeatedly; products of small nonnegative integers are exact in
/// `f64` until they overflow, and an overflowed entry is never zero.
pub fn is_nilpotent(m: &DMatrix<f64>) -> bool {
    let n = m.nrows();
    let mut power = m.clone();
    let mut exponent = 1;
    while exponent < n {
        power = &power * &power;
        exponent *= 2;
    }
    power.iter().all(|&x| x == 0.0)
}

/// Hashimoto spectral radius by dense eigensolve.
///
/// Nilpotent matrices (forests) are recognised exactly and report 0: an
/// eigensolver perturbs a size-`k` Jordan block at zero to eigenvalues of
/// modulus about `eps^(1/k)`.
pub fn hashimoto_spectral_radius(g: &Graph) -> Result<f64> {
    let b = hashimoto_matrix(g)?;
    if is_nilpotent(&b) {
        return Ok(0.0);
    }
    Ok(spectral_radius(&b))
}
