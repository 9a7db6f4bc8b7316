use thiserror::Error;

/// Failures raised during problem setup or by the linear solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("fractional order must lie in the open interval (0, 1), got {0}")]
    InvalidOrder(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("coefficient {name} = {value:e} violates its sign constraint at {location}")]
    CoefficientSign {
        name: &'static str,
        value: f64,
        location: String,
    },

    #[error("initial and boundary data disagree at {location}: {initial:e} vs {boundary:e}")]
    Incompatible {
        location: String,
        initial: f64,
        boundary: f64,
    },

    #[error("zero pivot in tridiagonal elimination at row {row}")]
    ZeroPivot { row: usize },

    #[error("conjugate gradients stopped after {iterations} iterations with relative residual {residual:e}")]
    NotConverged { iterations: usize, residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
