//! Tolerance ladder shared by constructors, verifiers and reports.

/// Entrywise Hermiticity defect absorbed by symmetrization.
pub const HERMITIAN: f64 = 1e-12;

/// Unit-trace tolerance for density matrices.
pub const TRACE: f64 = 1e-12;

/// Smallest admissible eigenvalue for states and effects.
pub const PSD: f64 = -1e-10;

/// Construction-level identities (defining conditions of a family).
pub const CONSTRUCTION: f64 = 1e-10;

/// Reconciliation of direct sums against closed forms.
pub const IDENTITY: f64 = 1e-9;

/// Families must pass their verifier at this level before reporting.
pub const REPORT_PRECONDITION: f64 = 1e-8;

/// Sharpness parameters this close to the degenerate lower bound are rejected.
pub const DEGENERATE: f64 = 1e-12;

/// Stored sharpness must agree with the value implied by `t`.
pub const PARAMETER_CONSISTENCY: f64 = 1e-9;

/// Relative eigensolver residual: `tol = EIG * max(1, ‖H‖_max)`.
pub const EIG: f64 = 1e-10;
