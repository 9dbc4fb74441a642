//! Complete families of complementary quantum measurements and the
//! Brukner-Zeilinger invariant information they carry.
//!
//! The crate builds mutually unbiased measurements (MUMs), general
//! symmetric informationally complete measurements (GSMs), prime-dimension
//! mutually unbiased bases and the qubit SIC-POVM, then evaluates total
//! variance, index of coincidence and the BZ information/uncertainty of a
//! state two ways: by brute-force summation over effects and by closed form
//! in the sharpness parameter and the purity `Tr ρ²`.
//!
//! Everything here is `no_std` + `alloc`; file formats and the command line
//! live in the companion `bzinfo` crate.
//!
//! ```
//! use bzinfo_core::{bz, measurements, states, Family, TParam};
//!
//! let mum = measurements::build_mum(3, TParam::Auto).unwrap();
//! let rho = states::random_density(3, 2, 7).unwrap();
//! let report = bz::bz_report(&Family::Mum(mum), &rho).unwrap();
//! assert!(report.max_abs_discrepancy < 1e-9);
//! ```

#![no_std]

extern crate alloc;

pub mod basis;
pub mod bz;
pub mod error;
pub mod matrix;
pub mod measurements;
pub mod sampler;
pub mod states;
pub mod tol;

pub use crate::basis::{gell_mann_basis, grid_partition, MumGrid, OperatorBasis};
pub use crate::bz::{BzReport, ClosedForms, OutcomeDistribution, ReportKind, Sharpness};
pub use crate::error::{Error, Result};
pub use crate::matrix::{herm_eig, ComplexMatrix, Eigen, HermitianOperator};
pub use crate::measurements::{
    Family, FamilyKind, GsmSet, MumSet, Povm, TParam, VerificationReport,
};
pub use crate::sampler::{BzEstimate, CountTable};
pub use crate::states::DensityMatrix;

pub use num_complex::Complex64;
