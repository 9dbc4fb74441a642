//! Density matrices: validation, fixtures and seeded random ensembles.

use alloc::format;
use alloc::vec::Vec;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::matrix::{self, ComplexMatrix, HermitianOperator};
use crate::tol;

/// Name of the generator behind every seeded routine, for output metadata.
pub const RNG_ALGORITHM: &str = "chacha20 (rand_chacha ChaCha20Rng::seed_from_u64)";

pub(crate) fn rng(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

/// Hermitian, unit trace, positive semidefinite.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    op: HermitianOperator,
}

impl DensityMatrix {
    pub fn dim(&self) -> usize {
        self.op.dim()
    }

    pub fn operator(&self) -> &HermitianOperator {
        &self.op
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        self.op.matrix()
    }

    pub fn purity(&self) -> f64 {
        matrix::purity(self)
    }

    /// `W ρ W†`. `w` must be unitary; the result is revalidated.
    pub fn conjugate(&self, w: &ComplexMatrix) -> Result<Self> {
        if w.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: w.dim(),
            });
        }
        let m = w.matmul(self.matrix()).matmul(&w.adjoint());
        validate_state(HermitianOperator::symmetrized(m).into_matrix())
    }
}

/// `I/d`.
///
/// # Panics
/// If `d == 0`.
pub fn maximally_mixed(d: usize) -> DensityMatrix {
    assert!(d >= 1, "dimension must be at least 1");
    let diag: Vec<f64> = (0..d).map(|_| 1.0 / d as f64).collect();
    DensityMatrix {
        op: HermitianOperator::from_real_diag(&diag),
    }
}

/// Computational basis projector `|k⟩⟨k|`.
pub fn basis_state(d: usize, k: usize) -> Result<DensityMatrix> {
    if k >= d {
        return Err(Error::Domain(format!(
            "basis index {k} out of range for d={d}"
        )));
    }
    let mut diag = alloc::vec![0.0; d];
    diag[k] = 1.0;
    Ok(DensityMatrix {
        op: HermitianOperator::from_real_diag(&diag),
    })
}

/// `|ψ⟩⟨ψ|/⟨ψ|ψ⟩`.
pub fn pure_state(psi: &[Complex64]) -> Result<DensityMatrix> {
    let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
    if psi.is_empty() || !norm.is_finite() || norm <= 0.0 {
        return Err(Error::Domain(
            "state vector must be nonzero and finite".into(),
        ));
    }
    let m = ComplexMatrix::outer(psi).scale(1.0 / norm);
    Ok(DensityMatrix {
        op: HermitianOperator::symmetrized(m),
    })
}

fn ginibre(d: usize, cols: usize, generator: &mut ChaCha20Rng) -> Vec<Complex64> {
    (0..d * cols)
        .map(|_| {
            let re: f64 = StandardNormal.sample(generator);
            let im: f64 = StandardNormal.sample(generator);
            Complex64::new(re, im)
        })
        .collect()
}

/// Ginibre-induced state `GG†/Tr(GG†)` with `G` a `d × rank` complex
/// Gaussian matrix drawn from the seeded generator.
pub fn random_density(d: usize, rank: usize, seed: u64) -> Result<DensityMatrix> {
    if d == 0 {
        return Err(Error::Domain("dimension must be at least 1".into()));
    }
    if rank == 0 || rank > d {
        return Err(Error::Domain(format!("rank {rank} outside [1, {d}]")));
    }
    let mut generator = rng(seed);
    let g = ginibre(d, rank, &mut generator);
    let mut m = ComplexMatrix::from_fn(d, |i, j| {
        (0..rank)
            .map(|k| g[i * rank + k] * g[j * rank + k].conj())
            .sum()
    });
    let trace = m.trace().re;
    m = m.scale(1.0 / trace);
    Ok(DensityMatrix {
        op: HermitianOperator::symmetrized(m),
    })
}

/// Haar-distributed unitary via Gram-Schmidt on a Ginibre matrix.
pub fn random_unitary(d: usize, seed: u64) -> Result<ComplexMatrix> {
    if d == 0 {
        return Err(Error::Domain("dimension must be at least 1".into()));
    }
    let mut generator = rng(seed);
    let g = ginibre(d, d, &mut generator);
    let mut cols: Vec<Vec<Complex64>> = (0..d)
        .map(|j| (0..d).map(|i| g[i * d + j]).collect())
        .collect();
    for j in 0..d {
        for k in 0..j {
            let (done, rest) = cols.split_at_mut(j);
            let proj: Complex64 = done[k]
                .iter()
                .zip(&rest[0])
                .map(|(a, b)| a.conj() * b)
                .sum();
            for (x, y) in rest[0].iter_mut().zip(&done[k]) {
                *x -= proj * y;
            }
        }
        let norm = libm::sqrt(cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>());
        for x in cols[j].iter_mut() {
            *x /= norm;
        }
    }
    Ok(ComplexMatrix::from_fn(d, |i, j| cols[j][i]))
}

/// Accepts `m` iff it is Hermitian within [`tol::HERMITIAN`], has unit trace
/// within [`tol::TRACE`] and no eigenvalue below [`tol::PSD`].
///
/// Slightly negative spectra inside the tolerance are accepted unmodified.
pub fn validate_state(m: ComplexMatrix) -> Result<DensityMatrix> {
    let op = HermitianOperator::new(m)?;
    let trace = op.trace();
    if (trace - 1.0).abs() > tol::TRACE {
        return Err(Error::Trace { trace });
    }
    let min_eigenvalue = op.min_eigenvalue()?;
    if min_eigenvalue < tol::PSD {
        return Err(Error::Negativity { min_eigenvalue });
    }
    Ok(DensityMatrix { op })
}
