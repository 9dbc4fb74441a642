//! Measurement families: complete MUM sets, general SIC measurements,
//! prime-dimension MUBs and the qubit SIC-POVM.
//!
//! Both constructions shift the maximally mixed operator by `t` times a
//! traceless generator:
//!
//! * MUM: `P_n^{(b)} = I/d + t F_n^{(b)}` with `F_n^{(b)} = F^{(b)} − (d+√d) F_{n,b}`
//!   for `n < d` and `(1+√d) F^{(b)}` for `n = d`, where `F^{(b)} = Σ_n F_{n,b}`.
//! * GSM: `P_α = I/d² + t [F − d(d+1) F_α]` for `α < d²` and
//!   `P_{d²} = I/d² + t (d+1) F`, where `F = Σ_α F_α`.
//!
//! Positivity is linear in `t` along each eigenvector of the generator, so
//! the largest admissible `t` is a closed form over negative eigenvalues.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use num_complex::Complex64;

use crate::basis::{gell_mann_basis, grid_partition, MumGrid, OperatorBasis};
use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, HermitianOperator};
use crate::tol;

/// Sharpness parameter request: an explicit `t` or the positivity maximum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TParam {
    Auto,
    Value(f64),
}

/// A list of effects on a common space.
#[derive(Clone, Debug, PartialEq)]
pub struct Povm {
    dim: usize,
    effects: Vec<HermitianOperator>,
}

impl Povm {
    /// Checks shape only; positivity and completeness belong to verification.
    pub fn new(dim: usize, effects: Vec<HermitianOperator>) -> Result<Self> {
        if effects.is_empty() {
            return Err(Error::Domain("POVM needs at least one effect".into()));
        }
        if let Some(e) = effects.iter().find(|e| e.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: e.dim(),
            });
        }
        Ok(Self { dim, effects })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn effects(&self) -> &[HermitianOperator] {
        &self.effects
    }

    pub fn len(&self) -> usize {
        self.effects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.effects.is_empty()
    }

    /// `‖Σ P − I‖_max`.
    pub fn completeness_deviation(&self) -> f64 {
        let sum = self
            .effects
            .iter()
            .fold(HermitianOperator::zeros(self.dim), |acc, e| acc.add(e));
        sum.matrix()
            .max_abs_diff(&ComplexMatrix::identity(self.dim))
    }

    /// Smallest eigenvalue over all effects, with the index attaining it.
    pub fn min_eigenvalue(&self) -> Result<(f64, usize)> {
        let mut worst = (f64::INFINITY, 0);
        for (i, e) in self.effects.iter().enumerate() {
            let lo = e.min_eigenvalue()?;
            if lo < worst.0 {
                worst = (lo, i);
            }
        }
        Ok(worst)
    }
}

/// A complete set of `d + 1` MUMs with `d` effects each.
#[derive(Clone, Debug, PartialEq)]
pub struct MumSet {
    dim: usize,
    t: f64,
    kappa: f64,
    povms: Vec<Povm>,
}

/// `κ = 1/d + t²(1+√d)²(d−1)`.
pub fn kappa_for(d: usize, t: f64) -> f64 {
    let df = d as f64;
    let s = 1.0 + libm::sqrt(df);
    1.0 / df + t * t * s * s * (df - 1.0)
}

/// Inverse of [`kappa_for`] on `κ ≥ 1/d`.
pub fn t_for_kappa(d: usize, kappa: f64) -> f64 {
    let df = d as f64;
    let s = 1.0 + libm::sqrt(df);
    libm::sqrt(((kappa - 1.0 / df) / (s * s * (df - 1.0))).max(0.0))
}

/// `a = 1/d³ + t²(d−1)(d+1)³`.
pub fn a_for(d: usize, t: f64) -> f64 {
    let df = d as f64;
    1.0 / (df * df * df) + t * t * (df - 1.0) * (df + 1.0) * (df + 1.0) * (df + 1.0)
}

/// Inverse of [`a_for`] on `a ≥ 1/d³`.
pub fn t_for_a(d: usize, a: f64) -> f64 {
    let df = d as f64;
    libm::sqrt(
        ((a - 1.0 / (df * df * df)) / ((df - 1.0) * (df + 1.0) * (df + 1.0) * (df + 1.0))).max(0.0),
    )
}

fn check_t(t: f64) -> Result<()> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::Domain(format!(
            "t must be finite and non-negative, got {t}"
        )));
    }
    Ok(())
}

impl MumSet {
    /// Assembles a set from stored data, checking shape and that `kappa`
    /// agrees with `t` within [`tol::PARAMETER_CONSISTENCY`].
    pub fn from_parts(dim: usize, t: f64, kappa: f64, povms: Vec<Povm>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::Domain(format!(
                "MUM dimension must be at least 2, got {dim}"
            )));
        }
        check_t(t)?;
        if povms.len() != dim + 1 {
            return Err(Error::Domain(format!(
                "complete MUM set for d={dim} needs {} POVMs, got {}",
                dim + 1,
                povms.len()
            )));
        }
        for p in &povms {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
            if p.len() != dim {
                return Err(Error::Domain(format!(
                    "each MUM POVM needs {dim} effects, got {}",
                    p.len()
                )));
            }
        }
        let implied = kappa_for(dim, t);
        if !kappa.is_finite() || (kappa - implied).abs() > tol::PARAMETER_CONSISTENCY {
            return Err(Error::Domain(format!(
                "kappa {kappa} inconsistent with t={t} (implies {implied})"
            )));
        }
        Ok(Self {
            dim,
            t,
            kappa,
            povms,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn povms(&self) -> &[Povm] {
        &self.povms
    }

    /// Mutable access to every effect. Used by tests and tooling that
    /// perturb a set on purpose.
    pub fn effect_mut(&mut self, block: usize, outcome: usize) -> &mut HermitianOperator {
        &mut self.povms[block].effects[outcome]
    }
}

/// A general SIC measurement: one POVM of `d²` effects.
#[derive(Clone, Debug, PartialEq)]
pub struct GsmSet {
    dim: usize,
    t: f64,
    a: f64,
    povm: Povm,
}

impl GsmSet {
    /// Shape and `a`/`t` consistency check, as [`MumSet::from_parts`].
    pub fn from_parts(dim: usize, t: f64, a: f64, effects: Vec<HermitianOperator>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::Domain(format!(
                "GSM dimension must be at least 2, got {dim}"
            )));
        }
        check_t(t)?;
        if effects.len() != dim * dim {
            return Err(Error::Domain(format!(
                "general SIC measurement for d={dim} needs {} effects, got {}",
                dim * dim,
                effects.len()
            )));
        }
        let povm = Povm::new(dim, effects)?;
        let implied = a_for(dim, t);
        if !a.is_finite() || (a - implied).abs() > tol::PARAMETER_CONSISTENCY {
            return Err(Error::Domain(format!(
                "a {a} inconsistent with t={t} (implies {implied})"
            )));
        }
        Ok(Self { dim, t, a, povm })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn effects(&self) -> &[HermitianOperator] {
        self.povm.effects()
    }

    pub fn povm(&self) -> &Povm {
        &self.povm
    }

    pub fn effect_mut(&mut self, alpha: usize) -> &mut HermitianOperator {
        &mut self.povm.effects[alpha]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Mum,
    Gsm,
    Mub,
    Sic,
}

impl FamilyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::Mum => "mum",
            FamilyKind::Gsm => "gsm",
            FamilyKind::Mub => "mub",
            FamilyKind::Sic => "sic",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "mum" => Some(FamilyKind::Mum),
            "gsm" => Some(FamilyKind::Gsm),
            "mub" => Some(FamilyKind::Mub),
            "sic" => Some(FamilyKind::Sic),
            _ => None,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Any complete family of complementary measurements. MUBs are MUM sets
/// with `κ = 1`; the SIC fixture is a GSM with `a = 1/d²`.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Mum(MumSet),
    Mub(MumSet),
    Gsm(GsmSet),
    Sic(GsmSet),
}

impl Family {
    pub fn kind(&self) -> FamilyKind {
        match self {
            Family::Mum(_) => FamilyKind::Mum,
            Family::Mub(_) => FamilyKind::Mub,
            Family::Gsm(_) => FamilyKind::Gsm,
            Family::Sic(_) => FamilyKind::Sic,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Family::Mum(m) | Family::Mub(m) => m.dim(),
            Family::Gsm(g) | Family::Sic(g) => g.dim(),
        }
    }

    pub fn t(&self) -> f64 {
        match self {
            Family::Mum(m) | Family::Mub(m) => m.t(),
            Family::Gsm(g) | Family::Sic(g) => g.t(),
        }
    }

    /// One POVM per basis for MUM/MUB, a single POVM for GSM/SIC.
    pub fn povms(&self) -> &[Povm] {
        match self {
            Family::Mum(m) | Family::Mub(m) => m.povms(),
            Family::Gsm(g) | Family::Sic(g) => core::slice::from_ref(g.povm()),
        }
    }

    pub fn effects(&self) -> impl Iterator<Item = &HermitianOperator> {
        self.povms().iter().flat_map(|p| p.effects().iter())
    }

    pub fn verify(&self, tol: f64) -> Result<VerificationReport> {
        match self {
            Family::Mum(m) | Family::Mub(m) => verify_mum(m, tol),
            Family::Gsm(g) | Family::Sic(g) => verify_gsm(g, tol),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub deviation: f64,
}

/// Per-condition maximum absolute deviations from a family's defining
/// conditions.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub tol: f64,
    pub checks: Vec<Check>,
    /// Sharpness at (or below) its excluded lower bound.
    pub degenerate: bool,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        !self.degenerate && self.checks.iter().all(|c| c.deviation < self.tol)
    }

    pub fn deviation(&self, name: &str) -> Option<f64> {
        self.checks
            .iter()
            .find(|c| c.name == name)
            .map(|c| c.deviation)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        let tol = self.tol;
        self.checks
            .iter()
            .filter(move |c| c.deviation >= tol || c.deviation.is_nan())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.deviation < self.tol {
                "ok  "
            } else {
                "FAIL"
            };
            writeln!(f, "{mark} {:<20} {:.3e}", c.name, c.deviation)?;
        }
        if self.degenerate {
            writeln!(f, "FAIL degenerate sharpness (t = 0 boundary)")?;
        }
        write!(
            f,
            "{} (tol {:e})",
            if self.passed() { "PASS" } else { "FAIL" },
            self.tol
        )
    }
}

/// `F_n^{(b)}` for every column `b` of the grid; `result[b][n]`.
pub fn mum_generators(grid: &MumGrid) -> Vec<Vec<HermitianOperator>> {
    let d = grid.dim();
    let df = d as f64;
    let sqrt_d = libm::sqrt(df);
    grid.columns()
        .iter()
        .map(|col| {
            let column_sum = col
                .iter()
                .fold(HermitianOperator::zeros(d), |acc, f| acc.add(f));
            let mut gens: Vec<HermitianOperator> = col
                .iter()
                .map(|f| HermitianOperator::combine(1.0, &column_sum, -(df + sqrt_d), f))
                .collect();
            gens.push(column_sum.scale(1.0 + sqrt_d));
            gens
        })
        .collect()
}

/// Largest `t` with `I/scale + t G ⪰ 0` for every generator `G`:
/// the minimum of `−1/(scale·λ)` over negative eigenvalues `λ`.
fn max_t_over<'a>(gens: impl Iterator<Item = &'a HermitianOperator>, scale: f64) -> Result<f64> {
    let mut best = f64::INFINITY;
    for g in gens {
        for &lambda in &g.eig()?.values {
            if lambda < 0.0 {
                best = best.min(-1.0 / (scale * lambda));
            }
        }
    }
    if best.is_finite() {
        Ok(best)
    } else {
        Err(Error::Domain(
            "no generator has a negative eigenvalue".into(),
        ))
    }
}

/// Largest `t` for which every MUM effect built from `grid` is PSD.
pub fn max_t_mum(grid: &MumGrid) -> Result<f64> {
    let gens = mum_generators(grid);
    max_t_over(gens.iter().flatten(), grid.dim() as f64)
}

fn resolve_t(t: TParam, t_max: impl FnOnce() -> Result<f64>) -> Result<f64> {
    match t {
        TParam::Auto => t_max(),
        TParam::Value(v) => {
            check_t(v)?;
            Ok(v)
        }
    }
}

fn shifted(d: usize, shift: f64, t: f64, g: &HermitianOperator) -> HermitianOperator {
    HermitianOperator::combine(shift, &HermitianOperator::identity(d), t, g)
}

/// Complete MUM set from an explicit grid.
pub fn build_mum_from_grid(grid: &MumGrid, t: TParam) -> Result<MumSet> {
    let d = grid.dim();
    let gens = mum_generators(grid);
    let t = resolve_t(t, || max_t_over(gens.iter().flatten(), d as f64))?;
    let mut povms = Vec::with_capacity(d + 1);
    for (b, column) in gens.iter().enumerate() {
        let mut effects = Vec::with_capacity(d);
        for (n, g) in column.iter().enumerate() {
            let p = shifted(d, 1.0 / d as f64, t, g);
            let min_eigenvalue = p.min_eigenvalue()?;
            if min_eigenvalue < tol::PSD {
                return Err(Error::Positivity {
                    block: b + 1,
                    outcome: n + 1,
                    min_eigenvalue,
                });
            }
            effects.push(p);
        }
        povms.push(Povm::new(d, effects)?);
    }
    MumSet::from_parts(d, t, kappa_for(d, t), povms)
}

/// Complete MUM set on the canonical Gell-Mann grid.
pub fn build_mum(d: usize, t: TParam) -> Result<MumSet> {
    let basis = gell_mann_basis(d)?;
    build_mum_from_grid(&grid_partition(&basis)?, t)
}

/// The `d²` GSM generators `F − d(d+1)F_α` followed by `(d+1)F`.
pub fn gsm_generators(basis: &OperatorBasis) -> Vec<HermitianOperator> {
    let df = basis.dim() as f64;
    let total = basis.sum();
    let mut gens: Vec<HermitianOperator> = basis
        .ops()
        .iter()
        .map(|f| HermitianOperator::combine(1.0, &total, -df * (df + 1.0), f))
        .collect();
    gens.push(total.scale(df + 1.0));
    gens
}

/// Largest `t` for which every GSM effect built from `basis` is PSD.
pub fn max_t_gsm(basis: &OperatorBasis) -> Result<f64> {
    let d = basis.dim() as f64;
    max_t_over(gsm_generators(basis).iter(), d * d)
}

pub fn build_gsm_from_basis(basis: &OperatorBasis, t: TParam) -> Result<GsmSet> {
    let d = basis.dim();
    let shift = 1.0 / (d * d) as f64;
    let gens = gsm_generators(basis);
    let t = resolve_t(t, || max_t_over(gens.iter(), (d * d) as f64))?;
    let mut effects = Vec::with_capacity(d * d);
    for (alpha, g) in gens.iter().enumerate() {
        let p = shifted(d, shift, t, g);
        let min_eigenvalue = p.min_eigenvalue()?;
        if min_eigenvalue < tol::PSD {
            return Err(Error::Positivity {
                block: 1,
                outcome: alpha + 1,
                min_eigenvalue,
            });
        }
        effects.push(p);
    }
    GsmSet::from_parts(d, t, a_for(d, t), effects)
}

/// General SIC measurement on the canonical Gell-Mann basis.
pub fn build_gsm(d: usize, t: TParam) -> Result<GsmSet> {
    build_gsm_from_basis(&gell_mann_basis(d)?, t)
}

fn smallest_factor(n: usize) -> Option<usize> {
    (2..)
        .take_while(|f| f * f <= n)
        .find(|f| n.is_multiple_of(*f))
}

fn projectors(basis: &[Vec<Complex64>]) -> Vec<HermitianOperator> {
    basis
        .iter()
        .map(|v| HermitianOperator::symmetrized(ComplexMatrix::outer(v)))
        .collect()
}

/// `d + 1` mutually unbiased bases for prime `d`, as a MUM set with `κ = 1`.
///
/// Odd primes use the quadratic-phase bases
/// `|ψ_j^{(b)}⟩ = d^{-1/2} Σ_k ω^{b k² + j k} |k⟩` next to the computational
/// basis; `d = 2` uses the Pauli eigenbases.
pub fn build_mub(d: usize) -> Result<MumSet> {
    if d < 2 {
        return Err(Error::Domain(format!(
            "MUB dimension must be at least 2, got {d}"
        )));
    }
    if let Some(factor) = smallest_factor(d) {
        return Err(Error::NotPrime { dim: d, factor });
    }
    let z = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let computational: Vec<Vec<Complex64>> = (0..d)
        .map(|j| (0..d).map(|k| if j == k { one } else { z }).collect())
        .collect();

    let mut bases = alloc::vec![computational];
    if d == 2 {
        let r = core::f64::consts::FRAC_1_SQRT_2;
        let i = Complex64::new(0.0, r);
        let re = Complex64::new(r, 0.0);
        bases.push(alloc::vec![alloc::vec![re, re], alloc::vec![re, -re]]);
        bases.push(alloc::vec![alloc::vec![re, i], alloc::vec![re, -i]]);
    } else {
        let amp = 1.0 / libm::sqrt(d as f64);
        for b in 0..d {
            let basis = (0..d)
                .map(|j| {
                    (0..d)
                        .map(|k| {
                            let e = (b * k * k + j * k) % d;
                            let angle = 2.0 * PI * e as f64 / d as f64;
                            Complex64::new(amp * libm::cos(angle), amp * libm::sin(angle))
                        })
                        .collect()
                })
                .collect();
            bases.push(basis);
        }
    }

    let povms = bases
        .iter()
        .map(|b| Povm::new(d, projectors(b)))
        .collect::<Result<Vec<_>>>()?;
    MumSet::from_parts(d, t_for_kappa(d, 1.0), 1.0, povms)
}

/// Qubit SIC-POVM: effects `(I + r·σ)/4` on the tetrahedron
/// `r ∈ {(1,1,1), (1,−1,−1), (−1,1,−1), (−1,−1,1)}/√3`.
pub fn sic2_fixture() -> GsmSet {
    let s = 1.0 / libm::sqrt(3.0);
    let vertices = [
        [1.0, 1.0, 1.0],
        [1.0, -1.0, -1.0],
        [-1.0, 1.0, -1.0],
        [-1.0, -1.0, 1.0],
    ];
    let effects = vertices
        .iter()
        .map(|v| {
            let (x, y, zc) = (v[0] * s, v[1] * s, v[2] * s);
            let m = ComplexMatrix::from_fn(2, |i, j| match (i, j) {
                (0, 0) => Complex64::new((1.0 + zc) / 4.0, 0.0),
                (1, 1) => Complex64::new((1.0 - zc) / 4.0, 0.0),
                (0, 1) => Complex64::new(x / 4.0, -y / 4.0),
                _ => Complex64::new(x / 4.0, y / 4.0),
            });
            HermitianOperator::symmetrized(m)
        })
        .collect();
    GsmSet::from_parts(2, t_for_a(2, 0.25), 0.25, effects).expect("fixture is well formed")
}

fn psd_deviation<'a>(effects: impl Iterator<Item = &'a HermitianOperator>) -> Result<f64> {
    let mut worst = 0.0f64;
    for e in effects {
        worst = worst.max(-e.min_eigenvalue()?);
    }
    Ok(worst.max(0.0))
}

/// Checks every defining condition of a complete MUM set.
pub fn verify_mum(set: &MumSet, tol: f64) -> Result<VerificationReport> {
    let d = set.dim();
    let df = d as f64;
    let kappa = set.kappa();
    let same_off = (1.0 - kappa) / (df - 1.0);

    let mut trace = 0.0f64;
    let mut cross = 0.0f64;
    let mut same = 0.0f64;
    let mut completeness = 0.0f64;
    let povms = set.povms();
    for (b, pb) in povms.iter().enumerate() {
        completeness = completeness.max(pb.completeness_deviation());
        for (n, p) in pb.effects().iter().enumerate() {
            trace = trace.max((p.trace() - 1.0).abs());
            for (n2, p2) in pb.effects().iter().enumerate().skip(n) {
                let target = if n == n2 { kappa } else { same_off };
                same = same.max((p.trace_product(p2) - target).abs());
            }
            for pb2 in &povms[b + 1..] {
                for p2 in pb2.effects() {
                    cross = cross.max((p.trace_product(p2) - 1.0 / df).abs());
                }
            }
        }
    }

    let checks = alloc::vec![
        Check {
            name: "psd",
            deviation: psd_deviation(povms.iter().flat_map(|p| p.effects()))?
        },
        Check {
            name: "trace",
            deviation: trace
        },
        Check {
            name: "cross_overlap",
            deviation: cross
        },
        Check {
            name: "same_basis_overlap",
            deviation: same
        },
        Check {
            name: "completeness",
            deviation: completeness
        },
        Check {
            name: "kappa_formula",
            deviation: (kappa - kappa_for(d, set.t())).abs()
        },
        Check {
            name: "kappa_range",
            deviation: (kappa - 1.0).max(0.0)
        },
    ];
    Ok(VerificationReport {
        tol,
        checks,
        degenerate: kappa <= 1.0 / df + tol::DEGENERATE,
    })
}

/// Checks every defining condition of a general SIC measurement.
pub fn verify_gsm(set: &GsmSet, tol: f64) -> Result<VerificationReport> {
    let d = set.dim();
    let df = d as f64;
    let a = set.a();
    let pair_target = (1.0 - a * df) / (df * (df * df - 1.0));

    let effects = set.effects();
    let mut self_overlap = 0.0f64;
    let mut pair = 0.0f64;
    for (i, p) in effects.iter().enumerate() {
        self_overlap = self_overlap.max((p.trace_product(p) - a).abs());
        for p2 in &effects[i + 1..] {
            pair = pair.max((p.trace_product(p2) - pair_target).abs());
        }
    }

    let checks = alloc::vec![
        Check {
            name: "psd",
            deviation: psd_deviation(effects.iter())?
        },
        Check {
            name: "completeness",
            deviation: set.povm().completeness_deviation()
        },
        Check {
            name: "self_overlap",
            deviation: self_overlap
        },
        Check {
            name: "pair_overlap",
            deviation: pair
        },
        Check {
            name: "a_formula",
            deviation: (a - a_for(d, set.t())).abs()
        },
        Check {
            name: "a_range",
            deviation: (a - 1.0 / (df * df)).max(0.0)
        },
    ];
    Ok(VerificationReport {
        tol,
        checks,
        degenerate: a <= 1.0 / (df * df * df) + tol::DEGENERATE,
    })
}
