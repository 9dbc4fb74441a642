//! Test-only oracles, written without the library's spectral or closed-form
//! code paths.

#![allow(dead_code)]

use bzinfo_core::{Complex64, ComplexMatrix, DensityMatrix, HermitianOperator};

/// Positive definiteness by attempting a complex Cholesky factorization.
pub fn is_positive_definite(m: &ComplexMatrix) -> bool {
    let n = m.dim();
    let mut l = vec![Complex64::new(0.0, 0.0); n * n];
    for j in 0..n {
        let mut diag = m[(j, j)].re;
        for k in 0..j {
            diag -= l[j * n + k].norm_sqr();
        }
        if diag.is_nan() || diag <= 0.0 {
            return false;
        }
        let ljj = diag.sqrt();
        l[j * n + j] = Complex64::new(ljj, 0.0);
        for i in (j + 1)..n {
            let mut s = m[(i, j)];
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k].conj();
            }
            l[i * n + j] = s / ljj;
        }
    }
    true
}

/// Largest `t` with `shift·I + t·G` positive definite for every generator,
/// located by bisection on `[0, hi]`.
pub fn bisect_t_max(gens: &[HermitianOperator], shift: f64, hi: f64) -> f64 {
    let d = gens[0].dim();
    let ok = |t: f64| {
        gens.iter().all(|g| {
            let m = ComplexMatrix::from_fn(d, |i, j| {
                let id = if i == j { shift } else { 0.0 };
                g.matrix()[(i, j)] * t + Complex64::new(id, 0.0)
            });
            is_positive_definite(&m)
        })
    };
    assert!(
        ok(0.0) && !ok(hi),
        "bracket [0, {hi}] does not straddle the boundary"
    );
    let (mut lo, mut hi) = (0.0, hi);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if ok(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// `Tr(AB)` by explicit index loops.
pub fn naive_trace_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Complex64 {
    let d = a.dim();
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..d {
        for k in 0..d {
            acc += a[(i, k)] * b[(k, i)];
        }
    }
    acc
}

fn naive_product(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let d = a.dim();
    ComplexMatrix::from_fn(d, |i, j| (0..d).map(|k| a[(i, k)] * b[(k, j)]).sum())
}

/// `Σ_P Tr(ρP²) − Tr(ρP)²` over the given effects.
pub fn naive_total_variance<'a>(
    effects: impl Iterator<Item = &'a HermitianOperator>,
    rho: &DensityMatrix,
) -> f64 {
    effects
        .map(|p| {
            let m = p.matrix();
            let second = naive_trace_product(rho.matrix(), &naive_product(m, m)).re;
            let first = naive_trace_product(rho.matrix(), m).re;
            second - first * first
        })
        .sum()
}

/// `Σ_P Tr(ρP)²` over the given effects.
pub fn naive_coincidence<'a>(
    effects: impl Iterator<Item = &'a HermitianOperator>,
    rho: &DensityMatrix,
) -> f64 {
    effects
        .map(|p| naive_trace_product(rho.matrix(), p.matrix()).re.powi(2))
        .sum()
}

/// Random Hermitian matrix with entries uniform in `[-1, 1]` from a
/// self-contained xorshift generator.
pub fn random_hermitian(d: usize, seed: u64) -> HermitianOperator {
    let mut s = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1;
    let mut next = || {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        (s >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
    };
    let mut m = ComplexMatrix::zeros(d);
    for i in 0..d {
        m[(i, i)] = Complex64::new(next(), 0.0);
        for j in (i + 1)..d {
            let z = Complex64::new(next(), next());
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
    HermitianOperator::new(m).unwrap()
}
