use thiserror::Error;

use crate::blade::Blade;

pub type Result<T> = std::result::Result<T, ZeonError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZeonError {
    #[error("element is not nilpotent (scalar part {0})")]
    NotNilpotent(String),
    #[error("element is not invertible: {0}")]
    NotInvertible(String),
    #[error("polynomial has degree zero")]
    DegreeZero,
    #[error("{0} is not a simple root")]
    NotSimpleRoot(String),
    #[error("Newton iteration did not converge after {iterations} steps (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("linear system is inconsistent (residual {0:e})")]
    InconsistentSystem(f64),
    #[error("vector is null (zero spectral seminorm)")]
    NullVector,
    #[error("vectors do not span: vector {0} is dependent on its predecessors")]
    DeficientSpan(usize),
    #[error("matrix is not self-adjoint")]
    NotSelfAdjoint,
    #[error("degenerate spectrum: {0}")]
    DegenerateSpectrum(String),
    #[error("{what} = {value} exceeds the limit {limit}")]
    TooLarge {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("coefficient {value} on {blade} is not a nonnegative integer count")]
    NonIntegerCount { blade: Blade, value: f64 },
    #[error("label of vertex {0} is not unique")]
    NotUniqueLabel(usize),
    #[error("labeling is invalid: {0}")]
    DuplicateLabels(String),
    #[error("identity `{name}` violated: {detail}")]
    TheoremViolation { name: String, detail: String },
    #[error("generator {index} is outside 1..={n}")]
    GeneratorOutOfRange { index: usize, n: usize },
    #[error("matrix is not in the image of the representation")]
    NotInImage,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
}

impl ZeonError {
    pub(crate) fn violation(name: impl Into<String>, detail: impl Into<String>) -> Self {
        ZeonError::TheoremViolation {
            name: name.into(),
            detail: detail.into(),
        }
    }
}
