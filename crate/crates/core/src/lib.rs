//! Complex zeon algebra, zeon matrix linear algebra and the zeon
//! combinatorial Laplacian of finite simple graphs.
//!
//! Zeon generators `ζ_i` commute and square to zero, so the nilpotent
//! adjacency matrix `Ψ` of a graph turns walk enumeration into algebra:
//! powers of `Ψ` carry self-avoiding walks, and the zeon eigenvalues and
//! eigenvectors of `Λ = Δ − Ψ` carry cycles, paths and paths with an
//! initial cycle. Every census produced algebraically can be compared
//! against the brute-force walker in [`oracle`].
//!
//! Vertices are 1-indexed in every graph-facing API (vertex `v` owns the
//! generator `ζ_v`); matrix rows and columns are 0-indexed.

pub mod blade;
pub mod census;
pub mod element;
pub mod error;
pub mod exec;
pub mod graph;
pub mod matrix;
pub mod oracle;
pub mod pauli;
pub mod poly;
pub mod spectra;
pub mod tol;
pub mod verify;

mod cmat;

pub use blade::Blade;
pub use census::{CensusKind, WalkCensus};
pub use element::Zeon;
pub use error::{Result, ZeonError};
pub use graph::{Graph, LabelKind, Labeling};
pub use matrix::{ZeonMatrix, ZeonVector};
pub use num_complex::Complex64;
pub use poly::{ComplexPoly, ComplexRoot, ZeonPoly};
