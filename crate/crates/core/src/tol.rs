//! Numerical thresholds shared across the crate. All values are absolute
//! unless noted and assume O(1)-scaled data.

/// Relative prune threshold applied after every zeon arithmetic op.
pub const PRUNE_REL: f64 = 1e-12;

/// A scalar part below this magnitude is treated as zero.
pub const SCALAR: f64 = 1e-9;

/// Residual bound for eigenpairs and matrix identities.
pub const RESIDUAL: f64 = 1e-8;

/// Pivot threshold for zeon Gaussian elimination.
pub const SINGULAR: f64 = 1e-9;

/// Condition-number ceiling for inverting the scalar part of a matrix.
pub const MAX_CONDITION: f64 = 1e12;

/// Allowed distance of a decoded walk count from the nearest integer.
pub const COUNT_ROUNDING: f64 = 1e-6;

/// Aberth–Ehrlich iteration cap, residual tolerance and the clustering
/// radius used to classify multiple roots.
pub const ABERTH_MAX_ITER: usize = 200;
pub const ABERTH_RESIDUAL: f64 = 1e-10;
pub const ROOT_CLUSTER: f64 = 1e-7;

/// Simple-root test: `|f'(z0)| > SIMPLE_ROOT * max|coeff|`.
pub const SIMPLE_ROOT: f64 = 1e-8;
