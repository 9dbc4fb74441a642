//! Probabilities, variances, index of coincidence and the BZ invariant
//! information/uncertainty, each computed by direct summation and by closed
//! form in the sharpness parameter and `Tr ρ²`.
//!
//! The two routes share nothing beyond the state itself: direct values come
//! from effect-by-effect traces, closed forms only see `(d, κ | a, Tr ρ²)`.
//! The direct information uses the coincidence route `C(ρ) − C(I/d)` while
//! the closed form uses `V_max − V`, so their agreement also ties the two
//! readings of the invariant information together.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::basis::gell_mann_basis;
use crate::error::{Error, Result};
use crate::matrix::{expectation, HermitianOperator};
use crate::measurements::{Family, FamilyKind, Povm};
use crate::states::{basis_state, maximally_mixed, DensityMatrix};
use crate::tol;

/// Outcome probabilities of one POVM, indexed like its effects.
#[derive(Clone, Debug, PartialEq)]
pub struct OutcomeDistribution {
    pub probs: Vec<f64>,
}

impl OutcomeDistribution {
    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }
}

fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// `p_n = Tr(P_n ρ)`.
pub fn measurement_probs(povm: &Povm, rho: &DensityMatrix) -> Result<OutcomeDistribution> {
    check_dims(rho.dim(), povm.dim())?;
    let probs = povm
        .effects()
        .iter()
        .map(|e| expectation(e, rho))
        .collect::<Result<Vec<_>>>()?;
    Ok(OutcomeDistribution { probs })
}

/// One distribution per POVM of the family.
pub fn family_probs(family: &Family, rho: &DensityMatrix) -> Result<Vec<OutcomeDistribution>> {
    family
        .povms()
        .iter()
        .map(|p| measurement_probs(p, rho))
        .collect()
}

/// `V(X|ρ) = ⟨X²⟩ − ⟨X⟩²`.
pub fn variance(x: &HermitianOperator, rho: &DensityMatrix) -> Result<f64> {
    check_dims(rho.dim(), x.dim())?;
    let mean = expectation(x, rho)?;
    Ok(expectation(&x.square(), rho)? - mean * mean)
}

/// `Σ p²` over every outcome of every distribution.
pub fn index_of_coincidence(dists: &[OutcomeDistribution]) -> f64 {
    dists
        .iter()
        .flat_map(|d| d.probs.iter())
        .map(|p| p * p)
        .sum()
}

#[derive(Clone, Copy, Debug, Default)]
struct VarianceSum {
    value: f64,
    clamped: usize,
}

fn sum_variances<'a>(
    ops: impl Iterator<Item = &'a HermitianOperator>,
    rho: &DensityMatrix,
) -> Result<VarianceSum> {
    let mut acc = VarianceSum::default();
    for x in ops {
        let v = variance(x, rho)?;
        if (tol::PSD..0.0).contains(&v) {
            acc.clamped += 1;
        } else {
            acc.value += v;
        }
    }
    Ok(acc)
}

/// Sum of effect variances over every POVM, no closed-form shortcut.
/// Variances in `[−1e-10, 0)` count as zero.
pub fn total_variance_direct(povms: &[Povm], rho: &DensityMatrix) -> Result<f64> {
    Ok(sum_variances(povms.iter().flat_map(|p| p.effects()), rho)?.value)
}

/// Sharpness of the family a closed form refers to.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Sharpness {
    /// Complete orthonormal observable basis (no measurement family).
    StateOnly,
    /// MUM sets and MUBs.
    Kappa(f64),
    /// General SIC measurements and SIC-POVMs.
    A(f64),
}

impl Sharpness {
    pub fn of(family: &Family) -> Self {
        match family {
            Family::Mum(m) | Family::Mub(m) => Sharpness::Kappa(m.kappa()),
            Family::Gsm(g) | Family::Sic(g) => Sharpness::A(g.a()),
        }
    }

    pub fn value(self) -> Option<f64> {
        match self {
            Sharpness::StateOnly => None,
            Sharpness::Kappa(x) | Sharpness::A(x) => Some(x),
        }
    }
}

/// Closed-form values of the coincidence/variance family at one purity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosedForms {
    pub c: f64,
    pub v: f64,
    pub v_min: f64,
    pub v_max: f64,
    pub i: f64,
    pub u: f64,
}

const RANGE_SLACK: f64 = 1e-10;

/// Closed forms for total variance, its extremes, the index of coincidence
/// and `I = V_max − V`, `U = V − V_min`.
///
/// For [`Sharpness::StateOnly`] `c` is `Σ⟨X⟩²` over the orthonormal
/// observable basis `{I/√d, F_α}`, which equals `Tr ρ²`.
pub fn closed_forms(d: usize, sharpness: Sharpness, purity: f64) -> Result<ClosedForms> {
    let min_dim = if matches!(sharpness, Sharpness::StateOnly) {
        1
    } else {
        2
    };
    if d < min_dim {
        return Err(Error::Domain(format!("dimension {d} too small")));
    }
    let df = d as f64;
    if !(purity >= 1.0 / df - RANGE_SLACK && purity <= 1.0 + RANGE_SLACK) {
        return Err(Error::Domain(format!("purity {purity} outside [1/{d}, 1]")));
    }
    let (c, v, v_min, v_max) = match sharpness {
        Sharpness::StateOnly => (purity, df - purity, df - 1.0, df - 1.0 / df),
        Sharpness::Kappa(kappa) => {
            if !(kappa > 1.0 / df + tol::DEGENERATE && kappa <= 1.0 + RANGE_SLACK) {
                return Err(Error::Domain(format!("kappa {kappa} outside (1/{d}, 1]")));
            }
            let excess = kappa * df - 1.0;
            let c = (excess * (df * purity - 1.0) + df * df - 1.0) / (df * (df - 1.0));
            let v = excess / (df - 1.0) * (df - purity);
            (c, v, excess, excess * (df + 1.0) / df)
        }
        Sharpness::A(a) => {
            let d3 = df * df * df;
            if !(a > 1.0 / d3 + tol::DEGENERATE && a <= 1.0 / (df * df) + RANGE_SLACK) {
                return Err(Error::Domain(format!("a {a} outside (1/{d}^3, 1/{d}^2]")));
            }
            let denom = df * (df * df - 1.0);
            let g = (a * d3 - 1.0) / denom;
            let c = ((a * d3 - 1.0) * purity + df * (1.0 - a * df)) / denom;
            (c, g * (df - purity), g * (df - 1.0), g * (df - 1.0 / df))
        }
    };
    Ok(ClosedForms {
        c,
        v,
        v_min,
        v_max,
        i: v_max - v,
        u: v - v_min,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReportKind {
    StateOnly,
    Family(FamilyKind),
}

impl ReportKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ReportKind::StateOnly => "state-only",
            ReportKind::Family(k) => k.as_str(),
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "state-only" => Some(ReportKind::StateOnly),
            other => FamilyKind::parse(other).map(ReportKind::Family),
        }
    }
}

impl fmt::Display for ReportKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Every direct quantity next to its closed form.
///
/// `v_min_direct` and `v_max_direct` are direct totals at `|0⟩⟨0|` and
/// `I/d`; `i_direct = C(ρ) − C(I/d)` by direct summation; `u_direct =
/// v_direct − v_min_direct`.
#[derive(Clone, Debug, PartialEq)]
pub struct BzReport {
    pub dim: usize,
    pub kind: ReportKind,
    pub parameter: Option<f64>,
    pub purity: f64,
    pub c_direct: f64,
    pub c_closed: f64,
    pub v_direct: f64,
    pub v_closed: f64,
    pub v_min_direct: f64,
    pub v_min: f64,
    pub v_max_direct: f64,
    pub v_max: f64,
    pub i_direct: f64,
    pub i_closed: f64,
    pub u_direct: f64,
    pub u_closed: f64,
    /// Effect variances in `[−1e-10, 0)` that were reported as zero.
    pub clamped_variances: usize,
    pub max_abs_discrepancy: f64,
}

impl BzReport {
    /// `(name, direct, closed)` for every reconciled quantity.
    pub fn pairs(&self) -> [(&'static str, f64, f64); 6] {
        [
            ("C", self.c_direct, self.c_closed),
            ("V", self.v_direct, self.v_closed),
            ("V_min", self.v_min_direct, self.v_min),
            ("V_max", self.v_max_direct, self.v_max),
            ("I", self.i_direct, self.i_closed),
            ("U", self.u_direct, self.u_closed),
        ]
    }

    fn assemble(
        dim: usize,
        kind: ReportKind,
        sharpness: Sharpness,
        purity: f64,
        direct: [f64; 4],
        clamped: usize,
        c_mixed: f64,
    ) -> Result<Self> {
        let [c_direct, v_direct, v_min_direct, v_max_direct] = direct;
        let closed = closed_forms(dim, sharpness, purity.clamp(1.0 / dim as f64, 1.0))?;
        let mut report = BzReport {
            dim,
            kind,
            parameter: sharpness.value(),
            purity,
            c_direct,
            c_closed: closed.c,
            v_direct,
            v_closed: closed.v,
            v_min_direct,
            v_min: closed.v_min,
            v_max_direct,
            v_max: closed.v_max,
            i_direct: c_direct - c_mixed,
            i_closed: closed.i,
            u_direct: v_direct - v_min_direct,
            u_closed: closed.u,
            clamped_variances: clamped,
            max_abs_discrepancy: 0.0,
        };
        report.max_abs_discrepancy = report
            .pairs()
            .iter()
            .map(|(_, a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        Ok(report)
    }
}

/// Full direct/closed reconciliation for `family` on `rho`.
///
/// The family must pass its verifier at [`tol::REPORT_PRECONDITION`].
pub fn bz_report(family: &Family, rho: &DensityMatrix) -> Result<BzReport> {
    let d = family.dim();
    check_dims(d, rho.dim())?;
    let verification = family.verify(tol::REPORT_PRECONDITION)?;
    if !verification.passed() {
        let mut failed: Vec<String> = verification
            .failures()
            .map(|c| String::from(c.name))
            .collect();
        if verification.degenerate {
            failed.push("degenerate".into());
        }
        return Err(Error::Precondition(format!(
            "{} family fails verification: {}",
            family.kind(),
            failed.join(", ")
        )));
    }

    let povms = family.povms();
    let mixed = maximally_mixed(d);
    let reference_pure = basis_state(d, 0)?;
    let c_direct = index_of_coincidence(&family_probs(family, rho)?);
    let c_mixed = index_of_coincidence(&family_probs(family, &mixed)?);
    let effects = || povms.iter().flat_map(|p| p.effects());
    let v = sum_variances(effects(), rho)?;
    let v_min = sum_variances(effects(), &reference_pure)?;
    let v_max = sum_variances(effects(), &mixed)?;

    BzReport::assemble(
        d,
        ReportKind::Family(family.kind()),
        Sharpness::of(family),
        rho.purity(),
        [c_direct, v.value, v_min.value, v_max.value],
        v.clamped,
        c_mixed,
    )
}

/// Reconciliation against the complete observable basis `{I/√d, F_α}`,
/// where `V = d − Tr ρ²` and `I = Tr ρ² − 1/d`.
pub fn state_report(rho: &DensityMatrix) -> Result<BzReport> {
    let d = rho.dim();
    let basis = gell_mann_basis(d)?;
    let mut observables =
        alloc::vec![HermitianOperator::identity(d).scale(1.0 / libm::sqrt(d as f64))];
    observables.extend(basis.ops().iter().cloned());

    let coincidence = |state: &DensityMatrix| -> Result<f64> {
        observables
            .iter()
            .map(|x| expectation(x, state).map(|m| m * m))
            .sum()
    };
    let mixed = maximally_mixed(d);
    let reference_pure = basis_state(d, 0)?;
    let v = sum_variances(observables.iter(), rho)?;
    let v_min = sum_variances(observables.iter(), &reference_pure)?;
    let v_max = sum_variances(observables.iter(), &mixed)?;

    BzReport::assemble(
        d,
        ReportKind::StateOnly,
        Sharpness::StateOnly,
        rho.purity(),
        [coincidence(rho)?, v.value, v_min.value, v_max.value],
        v.clamped,
        coincidence(&mixed)?,
    )
}
