use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("measurement strength must be finite and >= 0, got {0}")]
    InvalidStrength(f64),

    #[error("prior weight must lie in [0, 1], got {0}")]
    InvalidPrior(f64),

    #[error("prior must be nonnegative and sum to 1 (sum = {sum}, defect = {defect:e})")]
    PriorNotNormalized { sum: f64, defect: f64 },

    #[error("post-selected outcome has probability {probability:e}, below 1e-14")]
    ZeroProbabilityOutcome { probability: f64 },

    #[error("state is not Hermitian: max |rho - rho^dagger| = {defect:e}")]
    NotHermitian { defect: f64 },

    #[error("state does not have unit trace: trace = {trace} (defect = {defect:e})")]
    NotUnitTrace { trace: f64, defect: f64 },

    #[error("state is not positive semidefinite: min eigenvalue = {min_eigenvalue:e}")]
    NotPSD { min_eigenvalue: f64 },

    #[error("matrix contains a non-finite entry")]
    NonFinite,

    #[error("Werner parameter eta must lie in [0, 1], got {0}")]
    InvalidEta(f64),

    #[error("unknown payoff table `{0}`")]
    UnknownTable(String),

    #[error("closed forms require directions in the x-z plane (phi = 0); got phi = {0}")]
    NonZeroPhi(f64),

    #[error("invalid optimization problem: {0}")]
    InvalidProblem(String),

    #[error("outcome distribution sums to {sum}, outside 1e-12 of unity")]
    UnnormalizedDistribution { sum: f64 },

    #[error("{path}: {message}")]
    Schema { path: String, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
