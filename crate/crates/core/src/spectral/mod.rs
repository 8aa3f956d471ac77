//! Spectral quantities: the Hashimoto operator and its spectral radius,
//! the adjacency spectral radius, and quotient patterns.

mod companion;
pub mod dense;
mod edge_index;
mod pattern;
mod power;

pub use companion::{
    companion_spectral_radius, companion_spectral_radius_capped, DEFAULT_DENSE_CAP,
};
pub use edge_index::{hashimoto_apply, DirectedEdgeIndex};
pub use pattern::{pattern_hashimoto, PatternSpectrum, QuotientPattern};
pub use power::{
    adjacency_spectral_radius, adjacency_spectral_radius_with, nb_spectral_radius, SpectralResult,
    DEFAULT_MAX_ITER, DEFAULT_TOL,
};
