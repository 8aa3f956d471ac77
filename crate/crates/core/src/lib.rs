//! Site-percolation thresholds and lower bounds from the spectrum of the
//! non-backtracking (Hashimoto) operator.
//!
//! The crate is organised around four pieces:
//!
//! * [`graph`]: simple undirected graphs, edge-list ingestion, generators for
//!   decorated trees and random graphs, backbone reduction, bridges and
//!   single-cycle unwrapping.
//! * [`spectral`]: the matrix-free Hashimoto operator, its spectral radius,
//!   the vertex-space companion linearisation, adjacency spectral radius and
//!   quotient patterns describing infinite quasi-transitive trees.
//! * [`thresholds`]: the bound chain `1/rho(A) < 1/rho(B) <= p_c` together with
//!   the classical estimates, and the exact tree recursion on finite
//!   truncations.
//! * [`sim`]: Newman-Ziff Monte Carlo site percolation.

pub mod error;
pub mod graph;
pub mod sim;
pub mod spectral;
pub mod thresholds;

pub use error::{Error, Result};
pub use graph::{FamilySpec, Graph};
pub use spectral::QuotientPattern;
