use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix has non-finite entries")]
    NonFinite,

    #[error("matrix is not Hermitian (max |H - H^dagger| = {defect:e})")]
    NonHermitian { defect: f64 },

    #[error("trace is {trace}, expected 1")]
    Trace { trace: f64 },

    #[error("state is not positive semidefinite (min eigenvalue {min_eigenvalue:e})")]
    Negativity { min_eigenvalue: f64 },

    #[error("effect (b={block}, n={outcome}) is not positive semidefinite (min eigenvalue {min_eigenvalue:e})")]
    Positivity {
        block: usize,
        outcome: usize,
        min_eigenvalue: f64,
    },

    #[error("dimension {dim} is not prime (smallest factor {factor})")]
    NotPrime { dim: usize, factor: usize },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),
}
