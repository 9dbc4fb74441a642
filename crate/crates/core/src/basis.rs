//! Orthonormal traceless Hermitian operator bases and the MUM grid view.

use alloc::format;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, HermitianOperator};

/// `d² − 1` traceless Hermitian operators, orthonormal under `Tr(AB)`.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorBasis {
    dim: usize,
    ops: Vec<HermitianOperator>,
}

/// Largest deviations of a basis from its defining properties.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct BasisDeviation {
    pub trace: f64,
    pub orthonormality: f64,
    /// `‖Σ F² − (d − 1/d) I‖_max`.
    pub square_sum: f64,
}

impl OperatorBasis {
    /// Wraps an arbitrary operator list after checking only its shape.
    pub fn from_ops(dim: usize, ops: Vec<HermitianOperator>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::Domain(format!(
                "basis dimension must be at least 2, got {dim}"
            )));
        }
        if ops.len() != dim * dim - 1 {
            return Err(Error::Domain(format!(
                "basis for d={dim} needs {} operators, got {}",
                dim * dim - 1,
                ops.len()
            )));
        }
        if let Some(op) = ops.iter().find(|op| op.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: op.dim(),
            });
        }
        Ok(Self { dim, ops })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ops(&self) -> &[HermitianOperator] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// `F = Σ_α F_α`.
    pub fn sum(&self) -> HermitianOperator {
        self.ops
            .iter()
            .fold(HermitianOperator::zeros(self.dim), |acc, f| acc.add(f))
    }

    pub fn deviation(&self) -> BasisDeviation {
        let d = self.dim;
        let trace = self.ops.iter().map(|f| f.trace().abs()).fold(0.0, f64::max);
        let mut orthonormality = 0.0f64;
        for (a, fa) in self.ops.iter().enumerate() {
            for (b, fb) in self.ops.iter().enumerate().skip(a) {
                let target = if a == b { 1.0 } else { 0.0 };
                orthonormality = orthonormality.max((fa.trace_product(fb) - target).abs());
            }
        }
        let squares = self
            .ops
            .iter()
            .fold(HermitianOperator::zeros(d), |acc, f| acc.add(&f.square()));
        let target = HermitianOperator::identity(d).scale(d as f64 - 1.0 / d as f64);
        let square_sum = squares.matrix().max_abs_diff(target.matrix());
        BasisDeviation {
            trace,
            orthonormality,
            square_sum,
        }
    }
}

/// Generalized Gell-Mann basis, normalized so `Tr(F_α F_β) = δ_αβ`.
///
/// Order: symmetric pairs `j<k` row-major, then antisymmetric pairs in the
/// same order, then the `d − 1` diagonal operators.
pub fn gell_mann_basis(d: usize) -> Result<OperatorBasis> {
    if d < 2 {
        return Err(Error::Domain(format!(
            "basis dimension must be at least 2, got {d}"
        )));
    }
    let r = core::f64::consts::FRAC_1_SQRT_2;
    let pairs: Vec<(usize, usize)> = (0..d)
        .flat_map(|j| ((j + 1)..d).map(move |k| (j, k)))
        .collect();

    let mut ops = Vec::with_capacity(d * d - 1);
    for &(j, k) in &pairs {
        let mut m = ComplexMatrix::zeros(d);
        m[(j, k)] = Complex64::new(r, 0.0);
        m[(k, j)] = Complex64::new(r, 0.0);
        ops.push(HermitianOperator::new(m)?);
    }
    for &(j, k) in &pairs {
        let mut m = ComplexMatrix::zeros(d);
        m[(j, k)] = Complex64::new(0.0, -r);
        m[(k, j)] = Complex64::new(0.0, r);
        ops.push(HermitianOperator::new(m)?);
    }
    for l in 1..d {
        let norm = 1.0 / libm::sqrt((l * (l + 1)) as f64);
        let diag: Vec<f64> = (0..d)
            .map(|i| match i.cmp(&l) {
                core::cmp::Ordering::Less => norm,
                core::cmp::Ordering::Equal => -(l as f64) * norm,
                core::cmp::Ordering::Greater => 0.0,
            })
            .collect();
        ops.push(HermitianOperator::from_real_diag(&diag));
    }
    OperatorBasis::from_ops(d, ops)
}

/// The basis relabeled as `F_{n,b}`: `d + 1` columns of `d − 1` operators.
#[derive(Clone, Debug, PartialEq)]
pub struct MumGrid {
    dim: usize,
    columns: Vec<Vec<HermitianOperator>>,
}

impl MumGrid {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Column `b` (0-based) holds `F_{1,b} … F_{d−1,b}`.
    pub fn columns(&self) -> &[Vec<HermitianOperator>] {
        &self.columns
    }

    /// Grid whose column `b` holds `basis[order[b(d−1)]] …`; `order` must be
    /// a permutation of `0..d²−1`.
    pub fn with_order(basis: &OperatorBasis, order: &[usize]) -> Result<Self> {
        let d = basis.dim();
        let n = basis.len();
        if n != d * d - 1 || order.len() != n {
            return Err(Error::Domain(format!(
                "grid for d={d} needs {} operators, got basis {} / order {}",
                d * d - 1,
                n,
                order.len()
            )));
        }
        let mut seen = alloc::vec![false; n];
        for &i in order {
            if i >= n || seen[i] {
                return Err(Error::Domain(format!(
                    "order is not a permutation (index {i})"
                )));
            }
            seen[i] = true;
        }
        let columns = order
            .chunks(d - 1)
            .map(|chunk| chunk.iter().map(|&i| basis.ops()[i].clone()).collect())
            .collect();
        Ok(Self { dim: d, columns })
    }
}

/// Contiguous-block partition: column `b` takes basis elements
/// `b(d−1) .. (b+1)(d−1)`.
pub fn grid_partition(basis: &OperatorBasis) -> Result<MumGrid> {
    let order: Vec<usize> = (0..basis.len()).collect();
    MumGrid::with_order(basis, &order)
}
