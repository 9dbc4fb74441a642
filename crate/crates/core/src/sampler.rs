//! Finite-shot simulation and statistical estimates of the index of
//! coincidence and the BZ information.

use alloc::format;
use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::ChaCha20Rng;
use rand_distr::{Binomial, Distribution};

use crate::bz::{closed_forms, family_probs, Sharpness};
use crate::error::{Error, Result};
use crate::measurements::Family;
use crate::states::{rng, DensityMatrix};
use crate::tol;

pub const BOOTSTRAP_RESAMPLES: usize = 200;

/// Outcome counts, one row per POVM of the family, each row summing to
/// `shots`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    shots: u64,
    counts: Vec<Vec<u64>>,
}

impl CountTable {
    pub fn new(shots: u64, counts: Vec<Vec<u64>>) -> Result<Self> {
        if shots == 0 {
            return Err(Error::Domain("shots must be at least 1".into()));
        }
        if counts.is_empty() {
            return Err(Error::Domain("count table has no POVMs".into()));
        }
        for (i, row) in counts.iter().enumerate() {
            let total: u64 = row.iter().sum();
            if total != shots {
                return Err(Error::Domain(format!(
                    "POVM {i} counts sum to {total}, expected {shots}"
                )));
            }
        }
        Ok(Self { shots, counts })
    }

    pub fn shots(&self) -> u64 {
        self.shots
    }

    pub fn counts(&self) -> &[Vec<u64>] {
        &self.counts
    }
}

/// `shots` i.i.d. draws per POVM by inverse CDF. POVM `i` uses the
/// generator seeded with `seed + i`.
pub fn sample_outcomes(
    family: &Family,
    rho: &DensityMatrix,
    shots: u64,
    seed: u64,
) -> Result<CountTable> {
    if shots == 0 {
        return Err(Error::Domain("shots must be at least 1".into()));
    }
    if family.dim() != rho.dim() {
        return Err(Error::DimensionMismatch {
            expected: family.dim(),
            found: rho.dim(),
        });
    }
    if !family.verify(tol::REPORT_PRECONDITION)?.passed() {
        return Err(Error::Precondition(format!(
            "{} family fails verification",
            family.kind()
        )));
    }
    let dists = family_probs(family, rho)?;
    let counts = dists
        .iter()
        .enumerate()
        .map(|(i, dist)| {
            let mut cdf: Vec<f64> = Vec::with_capacity(dist.probs.len());
            let mut acc = 0.0;
            for &p in &dist.probs {
                acc += p.max(0.0);
                cdf.push(acc);
            }
            let last = dist
                .probs
                .iter()
                .rposition(|&p| p > 0.0)
                .unwrap_or(dist.probs.len() - 1);
            let mut generator = rng(seed.wrapping_add(i as u64));
            let mut row = alloc::vec![0u64; cdf.len()];
            for _ in 0..shots {
                let u = generator.random::<f64>() * acc;
                let k = cdf.iter().position(|&c| u < c).unwrap_or(last);
                row[k] += 1;
            }
            row
        })
        .collect();
    CountTable::new(shots, counts)
}

/// Unbiased collision estimate of `Σ p²`, summed over POVMs:
/// `Σ_j n_j(n_j − 1) / (N(N − 1))`.
pub fn estimate_coincidence(table: &CountTable) -> Result<f64> {
    let n = table.shots;
    if n < 2 {
        return Err(Error::Domain(format!(
            "collision estimator needs at least 2 shots, got {n}"
        )));
    }
    let norm = n as f64 * (n - 1) as f64;
    Ok(table
        .counts
        .iter()
        .flatten()
        .map(|&k| k as f64 * k.saturating_sub(1) as f64)
        .sum::<f64>()
        / norm)
}

fn resample_row(row: &[u64], shots: u64, generator: &mut ChaCha20Rng) -> Result<Vec<u64>> {
    let mut out = alloc::vec![0u64; row.len()];
    let mut remaining_shots = shots;
    let mut remaining_mass: u64 = row.iter().sum();
    for (j, &k) in row.iter().enumerate() {
        if remaining_shots == 0 || remaining_mass == 0 {
            break;
        }
        if k == remaining_mass {
            out[j] = remaining_shots;
            break;
        }
        let p = k as f64 / remaining_mass as f64;
        let draw = Binomial::new(remaining_shots, p)
            .map_err(|e| Error::Domain(format!("binomial resample: {e}")))?
            .sample(generator);
        out[j] = draw;
        remaining_shots -= draw;
        remaining_mass -= k;
    }
    Ok(out)
}

/// Bootstrap standard error of [`estimate_coincidence`]: each resample
/// redraws every row from its own empirical distribution.
pub fn bootstrap_std_error(table: &CountTable, resamples: usize, seed: u64) -> Result<f64> {
    if resamples < 2 {
        return Err(Error::Domain("bootstrap needs at least 2 resamples".into()));
    }
    let mut generator = rng(seed);
    generator.set_stream(1);
    let mut estimates = Vec::with_capacity(resamples);
    for _ in 0..resamples {
        let counts = table
            .counts
            .iter()
            .map(|row| resample_row(row, table.shots, &mut generator))
            .collect::<Result<Vec<_>>>()?;
        estimates.push(estimate_coincidence(&CountTable {
            shots: table.shots,
            counts,
        })?);
    }
    let mean = estimates.iter().sum::<f64>() / resamples as f64;
    let var = estimates
        .iter()
        .map(|x| (x - mean) * (x - mean))
        .sum::<f64>()
        / (resamples - 1) as f64;
    Ok(libm::sqrt(var))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BzEstimate {
    pub estimate: f64,
    pub std_error: f64,
}

/// `I ≈ Ĉ(ρ) − C(I/d)` with the mixed-state coincidence taken from the
/// closed form, and a bootstrap standard error.
pub fn estimate_bz_info(
    family: &Family,
    rho: &DensityMatrix,
    shots: u64,
    seed: u64,
) -> Result<BzEstimate> {
    let table = sample_outcomes(family, rho, shots, seed)?;
    estimate_bz_info_from_table(family, &table, seed)
}

/// [`estimate_bz_info`] on an existing table; `seed` drives the bootstrap.
pub fn estimate_bz_info_from_table(
    family: &Family,
    table: &CountTable,
    seed: u64,
) -> Result<BzEstimate> {
    let povms = family.povms();
    if table.counts.len() != povms.len()
        || table
            .counts
            .iter()
            .zip(povms)
            .any(|(row, p)| row.len() != p.len())
    {
        return Err(Error::Domain(
            "count table shape does not match the family".into(),
        ));
    }
    let d = family.dim();
    let c_mixed = closed_forms(d, Sharpness::of(family), 1.0 / d as f64)?.c;
    Ok(BzEstimate {
        estimate: estimate_coincidence(table)? - c_mixed,
        std_error: bootstrap_std_error(table, BOOTSTRAP_RESAMPLES, seed)?,
    })
}
