use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument fell outside the domain of a map or evaluator.
    #[error("{what} requires {requirement}, got {value}")]
    Domain {
        what: &'static str,
        requirement: &'static str,
        value: f64,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("Hermite-Gauss node iteration for N = {order} did not converge")]
    QuadratureNotConverged { order: usize },

    #[error("Newton iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence {
        iterations: usize,
        residual: f64,
        trace: Vec<crate::solver::NewtonStep>,
    },

    #[error("singular Jacobian: pivot {pivot:e} in column {column}")]
    SingularJacobian { column: usize, pivot: f64 },

    #[error("no sign change found in ({lo}, {hi})")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("unknown problem `{0}`")]
    UnknownProblem(String),

    #[error("problem `{0}` has no published reference table")]
    NoReferenceTable(String),
}
