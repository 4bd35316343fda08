use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("coordinate {index} = {value} lies outside [0, 1]")]
    OutsideCube { index: usize, value: f64 },

    #[error("design has no points")]
    EmptyDesign,

    #[error("candidate set is empty")]
    EmptyCandidates,

    #[error("{mode} mode is capped at d <= {cap}, got d = {d}")]
    FactorialCap { mode: &'static str, d: usize, cap: usize },

    #[error("design points {first} and {second} lie in the same orbit")]
    DuplicateOrbit { first: usize, second: usize },

    #[error("covering grid would hold {needed} points, cap is {cap}")]
    GridTooLarge { needed: f64, cap: usize },

    #[error(
        "Cholesky factorization failed with jitter {jitter:e} \
         (diagonal range [{min_diag:e}, {max_diag:e}], n = {n})"
    )]
    Factorization { jitter: f64, min_diag: f64, max_diag: f64, n: usize },

    #[error("interpolation residual {residual:e} exceeds tolerance {tolerance:e}")]
    Residual { residual: f64, tolerance: f64 },

    #[error("symmetric eigensolver failed: {0}")]
    EigenSolver(String),

    #[error("eigenvalue {value:e} at index {index} is not positive")]
    NonPositiveEigenvalue { index: usize, value: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for failures of the numerics rather than of the inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::Factorization { .. }
                | Error::Residual { .. }
                | Error::EigenSolver(_)
                | Error::NonPositiveEigenvalue { .. }
        )
    }
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
