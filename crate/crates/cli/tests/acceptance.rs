//! End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
//! the process exits nonzero if any criterion fails.

#[path = "../../core/tests/oracle/mod.rs"]
mod oracle;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::OnceLock;
use std::time::Instant;

use bzinfo::formats::Codec;
use bzinfo::sweep;
use bzinfo_core::basis::{gell_mann_basis, grid_partition};
use bzinfo_core::bz::{self, closed_forms, Sharpness};
use bzinfo_core::measurements::{
    a_for, build_gsm, build_gsm_from_basis, build_mub, build_mum, build_mum_from_grid,
    gsm_generators, kappa_for, max_t_gsm, max_t_mum, mum_generators, sic2_fixture, verify_gsm,
    verify_mum,
};
use bzinfo_core::sampler::{estimate_bz_info, estimate_coincidence, sample_outcomes};
use bzinfo_core::states::{maximally_mixed, random_density};
use bzinfo_core::{
    BzReport, ComplexMatrix, CountTable, DensityMatrix, Error, Family, FamilyKind, TParam,
};

const DIMS: std::ops::RangeInclusive<usize> = 2..=8;
const FRACTIONS: [f64; 3] = [0.25, 0.5, 1.0];
const STATES_PER_CELL: u64 = 100;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T>(r: bzinfo_core::Result<T>, ctx: &str) -> Result<T, String> {
    r.map_err(|e| format!("{ctx}: {e}"))
}

fn grid_families(d: usize) -> Result<Vec<(f64, Family)>, String> {
    let grid = ok(grid_partition(&ok(gell_mann_basis(d), "basis")?), "grid")?;
    let basis = ok(gell_mann_basis(d), "basis")?;
    let tm = ok(max_t_mum(&grid), "t_max mum")?;
    let tg = ok(max_t_gsm(&basis), "t_max gsm")?;
    let mut out = Vec::new();
    for f in FRACTIONS {
        out.push((
            f,
            Family::Mum(ok(
                build_mum_from_grid(&grid, TParam::Value(f * tm)),
                "build_mum",
            )?),
        ));
        out.push((
            f,
            Family::Gsm(ok(
                build_gsm_from_basis(&basis, TParam::Value(f * tg)),
                "build_gsm",
            )?),
        ));
    }
    Ok(out)
}

struct Cell {
    d: usize,
    frac: f64,
    family: Family,
    reports: Vec<(DensityMatrix, BzReport)>,
}

/// The Ginibre ensemble over every (d, t, family) cell, computed once and
/// shared by the criteria that read it.
fn ensemble() -> &'static Result<Vec<Cell>, String> {
    static CELLS: OnceLock<Result<Vec<Cell>, String>> = OnceLock::new();
    CELLS.get_or_init(|| {
        let mut cells = Vec::new();
        for d in DIMS {
            for (frac, family) in grid_families(d)? {
                let reports = (0..STATES_PER_CELL)
                    .map(|s| {
                        let seed = 10_000 * d as u64 + s;
                        let rho = ok(random_density(d, d, seed), "state")?;
                        let r = ok(bz::bz_report(&family, &rho), "report")?;
                        Ok((rho, r))
                    })
                    .collect::<Result<Vec<_>, String>>()?;
                cells.push(Cell {
                    d,
                    frac,
                    family,
                    reports,
                });
            }
        }
        Ok(cells)
    })
}

fn criterion_1() -> Outcome {
    let mut worst = 0.0f64;
    let mut worst_kappa = 0.0f64;
    for d in DIMS {
        for (f, fam) in grid_families(d)? {
            let Family::Mum(set) = fam else { continue };
            let rep = ok(verify_mum(&set, 1e-10), "verify")?;
            ensure(rep.passed(), || format!("d={d} t={f}·t_max\n{rep}"))?;
            worst = rep.checks.iter().map(|c| c.deviation).fold(worst, f64::max);
            let formula = kappa_for(d, set.t());
            let dk = set
                .povms()
                .iter()
                .flat_map(|p| p.effects())
                .map(|e| (e.trace_product(e) - formula).abs())
                .fold((set.kappa() - formula).abs(), f64::max);
            ensure(dk < 1e-12, || format!("d={d} t={f}·t_max: κ off by {dk:e}"))?;
            worst_kappa = worst_kappa.max(dk);
        }
    }
    Ok(format!(
        "21 sets, max deviation {worst:.1e}, max κ error {worst_kappa:.1e}"
    ))
}

fn criterion_2() -> Outcome {
    let mut worst = 0.0f64;
    let mut worst_a = 0.0f64;
    for d in DIMS {
        for (f, fam) in grid_families(d)? {
            let Family::Gsm(set) = fam else { continue };
            let rep = ok(verify_gsm(&set, 1e-10), "verify")?;
            ensure(rep.passed(), || format!("d={d} t={f}·t_max\n{rep}"))?;
            worst = rep.checks.iter().map(|c| c.deviation).fold(worst, f64::max);
            let formula = a_for(d, set.t());
            let da = set
                .effects()
                .iter()
                .map(|e| (e.trace_product(e) - formula).abs())
                .fold((set.a() - formula).abs(), f64::max);
            ensure(da < 1e-12, || format!("d={d} t={f}·t_max: a off by {da:e}"))?;
            worst_a = worst_a.max(da);
        }
    }
    Ok(format!(
        "21 sets, max deviation {worst:.1e}, max a error {worst_a:.1e}"
    ))
}

fn criterion_3() -> Outcome {
    let cells = ensemble().as_ref().map_err(Clone::clone)?;
    let mut worst = 0.0f64;
    for c in cells {
        let d = c.d as f64;
        for (rho, r) in &c.reports {
            let p = rho.purity();
            let prefactor = match &c.family {
                Family::Mum(s) => (s.kappa() * d - 1.0) / (d - 1.0),
                Family::Gsm(s) => (s.a() * d * d * d - 1.0) / (d * (d * d - 1.0)),
                _ => unreachable!(),
            };
            let gap = (r.v_direct - prefactor * (d - p)).abs();
            ensure(gap < 1e-9, || {
                format!(
                    "{} d={} t={}·t_max: |ΔV| = {gap:e}",
                    c.family.kind(),
                    c.d,
                    c.frac
                )
            })?;
            worst = worst.max(gap);
        }
    }
    Ok(format!(
        "{} states, max |ΔV| {worst:.1e}",
        cells.len() as u64 * STATES_PER_CELL
    ))
}

fn criterion_4() -> Outcome {
    let cells = ensemble().as_ref().map_err(Clone::clone)?;
    let mut worst = 0.0f64;
    for c in cells {
        let d = c.d as f64;
        for (rho, r) in &c.reports {
            let p = rho.purity();
            let closed = match &c.family {
                Family::Mum(s) => {
                    ((s.kappa() * d - 1.0) * (d * p - 1.0) + d * d - 1.0) / (d * (d - 1.0))
                }
                Family::Gsm(s) => {
                    let a = s.a();
                    ((a * d * d * d - 1.0) * p + d * (1.0 - a * d)) / (d * (d * d - 1.0))
                }
                _ => unreachable!(),
            };
            let gap = (r.c_direct - closed).abs();
            ensure(gap < 1e-9, || {
                format!("{} d={}: |ΔC| = {gap:e}", c.family.kind(), c.d)
            })?;
            worst = worst.max(gap);
        }
    }
    for d in [2usize, 3, 5, 7] {
        let fam = Family::Mub(ok(build_mub(d), "mub")?);
        for s in 0..STATES_PER_CELL {
            let rho = ok(random_density(d, 1 + s as usize % d, s), "state")?;
            let c = bz::index_of_coincidence(&ok(bz::family_probs(&fam, &rho), "probs")?);
            let gap = (c - (1.0 + rho.purity())).abs();
            ensure(gap < 1e-9, || {
                format!("mub d={d}: |C − (1 + Trρ²)| = {gap:e}")
            })?;
            worst = worst.max(gap);
        }
    }
    Ok(format!(
        "MUM, GSM and MUB d∈{{2,3,5,7}}; max |ΔC| {worst:.1e}"
    ))
}

fn criterion_5() -> Outcome {
    let cells = ensemble().as_ref().map_err(Clone::clone)?;
    let mut worst = 0.0f64;
    let mut worst_mixed = 0.0f64;
    for c in cells {
        for (_, r) in &c.reports {
            let gi = (r.i_direct - (r.v_max - r.v_direct)).abs();
            let gu = (r.u_direct - (r.v_direct - r.v_min)).abs();
            ensure(gi < 1e-9 && gu < 1e-9, || {
                format!("{} d={}: ΔI={gi:e} ΔU={gu:e}", c.family.kind(), c.d)
            })?;
            worst = worst.max(gi).max(gu);
        }
        let mixed = ok(
            bz::bz_report(&c.family, &maximally_mixed(c.d)),
            "mixed report",
        )?;
        let m = mixed.i_direct.abs().max(mixed.i_closed.abs());
        ensure(m < 1e-10, || {
            format!("{} d={}: I(I/d) = {m:e}", c.family.kind(), c.d)
        })?;
        worst_mixed = worst_mixed.max(m);
    }
    let mut sharp = Vec::new();
    for d in [2usize, 3, 5, 7] {
        sharp.push(Family::Mub(ok(build_mub(d), "mub")?));
    }
    sharp.push(Family::Mum(ok(build_mum(2, TParam::Auto), "mum")?));
    let mut worst_pure = 0.0f64;
    for fam in &sharp {
        let d = fam.dim();
        let df = d as f64;
        let kappa = match fam {
            Family::Mum(s) | Family::Mub(s) => s.kappa(),
            _ => unreachable!(),
        };
        for s in 0..20 {
            let r = ok(
                bz::bz_report(fam, &ok(random_density(d, 1, 500 + s), "pure")?),
                "report",
            )?;
            let want = (kappa * df - 1.0) / (df - 1.0) * (1.0 - 1.0 / df);
            let gap = (r.i_direct - want).abs().max((r.i_closed - want).abs());
            ensure(gap < 1e-9, || {
                format!("{} d={d}: pure-state I off by {gap:e}", fam.kind())
            })?;
            worst_pure = worst_pure.max(gap);
        }
    }
    Ok(format!(
        "max |ΔI|,|ΔU| {worst:.1e}; max |I(I/d)| {worst_mixed:.1e}; max pure-state error {worst_pure:.1e}"
    ))
}

/// Eigenvalues of a 2×2 Hermitian matrix from the characteristic polynomial.
fn eig2(m: &ComplexMatrix) -> [f64; 2] {
    let (a, b, c) = (m[(0, 0)].re, m[(0, 1)], m[(1, 1)].re);
    let mean = 0.5 * (a + c);
    let rad = (0.25 * (a - c) * (a - c) + b.norm_sqr()).sqrt();
    [mean - rad, mean + rad]
}

fn criterion_6() -> Outcome {
    let sqrt2 = 2f64.sqrt();
    let basis = ok(gell_mann_basis(2), "basis")?;
    let grid = ok(grid_partition(&basis), "grid")?;

    // Oracles first: bisection on Cholesky and the explicit 2×2 spectrum.
    let want_mum = (2.0 - sqrt2) / 2.0;
    let gens: Vec<_> = mum_generators(&grid).into_iter().flatten().collect();
    let bisected = oracle::bisect_t_max(&gens, 0.5, 10.0);
    ensure((bisected - want_mum).abs() < 1e-12, || {
        format!("bisected MUM t_max {bisected}")
    })?;
    let want_gsm = 1.0 / (6.0 * 6f64.sqrt());
    let bisected = oracle::bisect_t_max(&gsm_generators(&basis), 0.25, 10.0);
    ensure((bisected - want_gsm).abs() < 1e-12, || {
        format!("bisected GSM t_max {bisected}")
    })?;

    let mum = ok(build_mum(2, TParam::Auto), "mum")?;
    let dt = (mum.t() - want_mum).abs();
    ensure(dt < 1e-12, || {
        format!("MUM t_max {} vs {want_mum}", mum.t())
    })?;
    ensure((mum.kappa() - 1.0).abs() < 1e-12, || {
        format!("MUM κ = {}", mum.kappa())
    })?;
    for e in mum.povms().iter().flat_map(|p| p.effects()) {
        let [lo, hi] = eig2(e.matrix());
        ensure(lo.abs() < 1e-12 && (hi - 1.0).abs() < 1e-12, || {
            format!("MUM effect spectrum [{lo}, {hi}]")
        })?;
    }

    let gsm = ok(build_gsm(2, TParam::Auto), "gsm")?;
    ensure((gsm.t() - want_gsm).abs() < 1e-12, || {
        format!("GSM t_max {} vs {want_gsm}", gsm.t())
    })?;
    ensure((gsm.a() - 0.25).abs() < 1e-12, || {
        format!("GSM a = {}", gsm.a())
    })?;
    for e in gsm.effects() {
        let [lo, hi] = eig2(e.matrix());
        ensure(lo.abs() < 1e-12 && (hi - 0.5).abs() < 1e-12, || {
            format!("GSM effect spectrum [{lo}, {hi}]")
        })?;
    }

    let sic = sic2_fixture();
    let e = sic.effects();
    let mut worst = 0.0f64;
    for i in 0..e.len() {
        for j in 0..i {
            // Effects are |ψ⟩⟨ψ|/2, so |⟨ψ_i|ψ_j⟩|² = 4·Tr(P_i P_j).
            let overlap = 4.0 * oracle::naive_trace_product(e[i].matrix(), e[j].matrix()).re;
            worst = worst.max((overlap - 1.0 / 3.0).abs());
        }
    }
    ensure(worst < 1e-12, || format!("SIC overlap off by {worst:e}"))?;
    Ok(format!(
        "MUM t_max err {dt:.1e}; GSM a err {:.1e}; SIC overlap err {worst:.1e}",
        (gsm.a() - 0.25).abs()
    ))
}

fn criterion_7() -> Outcome {
    for d in DIMS {
        let basis = ok(gell_mann_basis(d), "basis")?;
        let grid = ok(grid_partition(&basis), "grid")?;
        let over_mum = 1.000001 * ok(max_t_mum(&grid), "t_max")?;
        let over_gsm = 1.000001 * ok(max_t_gsm(&basis), "t_max")?;
        match build_mum_from_grid(&grid, TParam::Value(over_mum)) {
            Err(Error::Positivity { .. }) => {}
            other => return Err(format!("MUM d={d} beyond t_max: {other:?}")),
        }
        match build_gsm_from_basis(&basis, TParam::Value(over_gsm)) {
            Err(Error::Positivity { .. }) => {}
            other => return Err(format!("GSM d={d} beyond t_max: {other:?}")),
        }
        // Independent confirmation: some shifted generator is not positive definite.
        let mum_gens: Vec<_> = mum_generators(&grid).into_iter().flatten().collect();
        let fails = |gens: &[bzinfo_core::HermitianOperator], shift: f64, t: f64| {
            gens.iter().any(|g| {
                let m = &ComplexMatrix::identity(d).scale(shift) + &g.matrix().scale(t);
                !oracle::is_positive_definite(&m)
            })
        };
        ensure(fails(&mum_gens, 1.0 / d as f64, over_mum), || {
            format!("MUM d={d}: oracle finds PD")
        })?;
        let df = d as f64;
        ensure(
            fails(&gsm_generators(&basis), 1.0 / (df * df), over_gsm),
            || format!("GSM d={d}: oracle finds PD"),
        )?;
    }
    Ok("MUM and GSM builds rejected at 1.000001·t_max for d = 2..8".into())
}

fn criterion_8() -> Outcome {
    const RUNS: u64 = 100;
    const SHOTS: u64 = 100_000;
    let mut lines = Vec::new();
    for d in [2usize, 3] {
        let fam = Family::Mub(ok(build_mub(d), "mub")?);
        let states = [
            ("pure", ok(random_density(d, 1, 77 + d as u64), "pure")?),
            ("mixed", maximally_mixed(d)),
        ];
        for (label, rho) in &states {
            let truth = ok(closed_forms(d, Sharpness::of(&fam), rho.purity()), "closed")?.i;
            let mut hits = 0;
            for run in 0..RUNS {
                let est = ok(estimate_bz_info(&fam, rho, SHOTS, run * 1_000), "estimate")?;
                if (est.estimate - truth).abs() <= 3.0 * est.std_error {
                    hits += 1;
                }
            }
            ensure(hits >= 95, || {
                format!("d={d} {label}: {hits}/{RUNS} within 3 SE")
            })?;
            lines.push(format!("d={d} {label} {hits}/{RUNS}"));
        }
    }

    // Unbiasedness of the collision estimator, every family kind.
    const TABLES: u64 = 1000;
    const SMALL: u64 = 40;
    let mut families = Vec::new();
    for d in [2usize, 3] {
        families.push(Family::Mum(ok(build_mum(d, TParam::Auto), "mum")?));
        families.push(Family::Mum(ok(
            build_mum(
                d,
                TParam::Value(0.5 * ok(build_mum(d, TParam::Auto), "mum")?.t()),
            ),
            "mum",
        )?));
        families.push(Family::Gsm(ok(build_gsm(d, TParam::Auto), "gsm")?));
        families.push(Family::Mub(ok(build_mub(d), "mub")?));
    }
    families.push(Family::Sic(sic2_fixture()));
    let mut worst_z = 0.0f64;
    for fam in &families {
        let d = fam.dim();
        let rho = ok(random_density(d, d, 31 + d as u64), "state")?;
        let exact = bz::index_of_coincidence(&ok(bz::family_probs(fam, &rho), "probs")?);
        let estimates = (0..TABLES)
            .map(|s| estimate_coincidence(&sample_outcomes(fam, &rho, SMALL, 1_000_000 + s * 64)?))
            .collect::<bzinfo_core::Result<Vec<f64>>>()
            .map_err(|e| e.to_string())?;
        let n = estimates.len() as f64;
        let mean = estimates.iter().sum::<f64>() / n;
        let var = estimates.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
        let z = (mean - exact).abs() / (var / n).sqrt();
        ensure(z < 4.0, || {
            format!("{} d={d}: mean {mean} vs {exact}, z = {z:.2}", fam.kind())
        })?;
        worst_z = worst_z.max(z);
    }
    lines.push(format!(
        "unbiased over {} families, max z {worst_z:.2}",
        families.len()
    ));
    Ok(lines.join("; "))
}

/// SplitMix64, for picking round-trip cases.
struct Mix(u64);

impl Mix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    fn unit(&mut self) -> f64 {
        (self.next() >> 11) as f64 / (1u64 << 53) as f64
    }
}

fn round_trip<T: Codec + PartialEq + std::fmt::Debug>(x: &T) -> Result<T, String> {
    let back = T::decode(&x.encode()).map_err(|e| e.to_string())?;
    ensure(&back == x, || format!("round trip changed {x:?}"))?;
    Ok(back)
}

fn random_family(mix: &mut Mix) -> Result<Family, String> {
    const PRIMES: [usize; 4] = [2, 3, 5, 7];
    let frac = 0.05 + 0.95 * mix.unit();
    Ok(match mix.below(4) {
        0 => {
            let d = 2 + mix.below(5) as usize;
            let t = ok(build_mum(d, TParam::Auto), "mum")?.t();
            Family::Mum(ok(build_mum(d, TParam::Value(frac * t)), "mum")?)
        }
        1 => {
            let d = 2 + mix.below(4) as usize;
            let t = ok(build_gsm(d, TParam::Auto), "gsm")?.t();
            Family::Gsm(ok(build_gsm(d, TParam::Value(frac * t)), "gsm")?)
        }
        2 => Family::Mub(ok(build_mub(PRIMES[mix.below(4) as usize]), "mub")?),
        _ => Family::Sic(sic2_fixture()),
    })
}

fn criterion_9() -> Outcome {
    let mut mix = Mix(2024);
    let mut kinds = [0usize; 4];
    for _ in 0..100 {
        let fam = random_family(&mut mix)?;
        kinds[match fam.kind() {
            FamilyKind::Mum => 0,
            FamilyKind::Gsm => 1,
            FamilyKind::Mub => 2,
            FamilyKind::Sic => 3,
        }] += 1;
        let back = round_trip(&fam)?;
        let (before, after) = (
            ok(fam.verify(1e-10), "verify")?,
            ok(back.verify(1e-10), "verify")?,
        );
        ensure(before == after, || {
            format!("{} deviations changed:\n{before}\n{after}", fam.kind())
        })?;
        for (x, y) in before.checks.iter().zip(&after.checks) {
            ensure(x.deviation.to_bits() == y.deviation.to_bits(), || {
                format!("{} differs", x.name)
            })?;
        }

        let d = fam.dim();
        let rank = 1 + mix.below(d as u64) as usize;
        let rho = ok(random_density(d, rank, mix.next()), "state")?;
        let rho_back = round_trip(&rho)?;
        ensure(
            rho_back.purity().to_bits() == rho.purity().to_bits(),
            || "purity changed".into(),
        )?;

        let report = ok(bz::bz_report(&fam, &rho), "report")?;
        round_trip(&report)?;
        round_trip(&ok(bz::state_report(&rho), "state report")?)?;
        let again = ok(bz::bz_report(&back, &rho_back), "report")?;
        ensure(again == report, || {
            "report from decoded inputs differs".into()
        })?;

        let shots = 2 + mix.below(500);
        let table: CountTable = ok(sample_outcomes(&fam, &rho, shots, mix.next()), "sample")?;
        round_trip(&table)?;
    }

    // CSV through the binary, twice, plus once in-process.
    let dir = tempfile::TempDir::new().map_err(|e| e.to_string())?;
    let bin = env!("CARGO_BIN_EXE_bzinfo");
    let mut files = Vec::new();
    for name in ["a.csv", "b.csv"] {
        let path = dir.path().join(name);
        let status = std::process::Command::new(bin)
            .args([
                "sweep", "--dim", "3", "--states", "50", "--seed", "7", "--out",
            ])
            .arg(&path)
            .status()
            .map_err(|e| e.to_string())?;
        ensure(status.success(), || format!("sweep exited with {status}"))?;
        files.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    let fam = Family::Mum(ok(build_mum(3, TParam::Auto), "mum")?);
    let mut in_process = Vec::new();
    sweep::write_csv(
        &ok(sweep::sweep(&fam, 50, None, 7), "sweep")?,
        &mut in_process,
    )
    .map_err(|e| e.to_string())?;
    ensure(files[0] == files[1] && files[0] == in_process, || {
        "sweep CSV not byte-identical".into()
    })?;

    Ok(format!(
        "100 round trips (mum {}, gsm {}, mub {}, sic {}) with states, reports and count tables; sweep CSV {} bytes identical",
        kinds[0], kinds[1], kinds[2], kinds[3], files[0].len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("MUM construction validity", criterion_1),
        ("GSM construction validity", criterion_2),
        ("total-variance closed forms", criterion_3),
        ("coincidence identities", criterion_4),
        ("BZ relations", criterion_5),
        ("exact anchors", criterion_6),
        ("maximality of t", criterion_7),
        ("sampler statistics", criterion_8),
        ("serialization", criterion_9),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS  {}. {name} ({secs:.1}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {}. {name} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
