//! JSON file formats for states, measurement families, reports and count
//! tables.
//!
//! Complex entries are `[re, im]` pairs in row-major order. Floats are
//! written as shortest round-trip decimals and parsed exactly, so decoding an
//! encoded entity reproduces every bit. Every file carries `"v": 1`, and
//! decoded entities are revalidated before they are returned.

use bzinfo_core::bz::ReportKind;
use bzinfo_core::measurements::{self, GsmSet, MumSet, Povm};
use bzinfo_core::states::{self, DensityMatrix, RNG_ALGORITHM};
use bzinfo_core::{
    BzReport, Complex64, ComplexMatrix, CountTable, Family, FamilyKind, HermitianOperator,
};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Malformed(#[from] serde_json::Error),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("invalid entity: {0}")]
    Invalid(#[from] bzinfo_core::Error),
}

type Result<T> = std::result::Result<T, FormatError>;

type MatrixJson = Vec<Vec<[f64; 2]>>;

fn matrix_to_json(m: &ComplexMatrix) -> MatrixJson {
    m.rows()
        .map(|row| row.iter().map(|z| [z.re, z.im]).collect())
        .collect()
}

fn matrix_from_json(rows: &MatrixJson, dim: usize) -> Result<ComplexMatrix> {
    let rows: Vec<Vec<Complex64>> = rows
        .iter()
        .map(|r| r.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
        .collect();
    let m = ComplexMatrix::from_rows(&rows)?;
    if m.dim() != dim {
        return Err(FormatError::Schema(format!(
            "matrix is {}x{}, header says dim {dim}",
            m.dim(),
            m.dim()
        )));
    }
    Ok(m)
}

fn check_version(v: u32) -> Result<()> {
    if v != SCHEMA_VERSION {
        return Err(FormatError::Schema(format!(
            "unsupported schema version {v} (expected {SCHEMA_VERSION})"
        )));
    }
    Ok(())
}

/// Encode/decode to the shared JSON schemas.
pub trait Codec: Sized {
    fn encode(&self) -> String;
    fn decode(text: &str) -> Result<Self>;
}

/// Provenance of a generated state.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StateMeta {
    pub rng: String,
    pub seed: u64,
    pub rank: usize,
}

impl StateMeta {
    pub fn ginibre(seed: u64, rank: usize) -> Self {
        Self {
            rng: RNG_ALGORITHM.to_string(),
            seed,
            rank,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct StateFile {
    v: u32,
    dim: usize,
    rho: MatrixJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    meta: Option<StateMeta>,
}

pub fn encode_state_with_meta(rho: &DensityMatrix, meta: Option<StateMeta>) -> String {
    let file = StateFile {
        v: SCHEMA_VERSION,
        dim: rho.dim(),
        rho: matrix_to_json(rho.matrix()),
        meta,
    };
    serde_json::to_string(&file).expect("state serializes")
}

impl Codec for DensityMatrix {
    fn encode(&self) -> String {
        encode_state_with_meta(self, None)
    }

    fn decode(text: &str) -> Result<Self> {
        let file: StateFile = serde_json::from_str(text)?;
        check_version(file.v)?;
        let m = matrix_from_json(&file.rho, file.dim)?;
        Ok(states::validate_state(m)?)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum EffectsJson {
    Grouped(Vec<Vec<MatrixJson>>),
    Flat(Vec<MatrixJson>),
}

#[derive(Serialize, Deserialize)]
struct MeasurementFile {
    v: u32,
    kind: String,
    dim: usize,
    t: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    kappa: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    a: Option<f64>,
    effects: EffectsJson,
}

fn effects_from_json(list: &[MatrixJson], dim: usize) -> Result<Vec<HermitianOperator>> {
    list.iter()
        .map(|m| Ok(HermitianOperator::new(matrix_from_json(m, dim)?)?))
        .collect()
}

const UNIT_SHARPNESS_SLACK: f64 = 1e-9;

impl Codec for Family {
    fn encode(&self) -> String {
        let (kappa, a, effects) = match self {
            Family::Mum(m) | Family::Mub(m) => (
                Some(m.kappa()),
                None,
                EffectsJson::Grouped(
                    m.povms()
                        .iter()
                        .map(|p| {
                            p.effects()
                                .iter()
                                .map(|e| matrix_to_json(e.matrix()))
                                .collect()
                        })
                        .collect(),
                ),
            ),
            Family::Gsm(g) | Family::Sic(g) => (
                None,
                Some(g.a()),
                EffectsJson::Flat(
                    g.effects()
                        .iter()
                        .map(|e| matrix_to_json(e.matrix()))
                        .collect(),
                ),
            ),
        };
        let file = MeasurementFile {
            v: SCHEMA_VERSION,
            kind: self.kind().as_str().to_string(),
            dim: self.dim(),
            t: self.t(),
            kappa,
            a,
            effects,
        };
        serde_json::to_string(&file).expect("measurement serializes")
    }

    fn decode(text: &str) -> Result<Self> {
        let file: MeasurementFile = serde_json::from_str(text)?;
        check_version(file.v)?;
        let kind = FamilyKind::parse(&file.kind).ok_or_else(|| {
            FormatError::Schema(format!("unknown measurement kind {:?}", file.kind))
        })?;
        let d = file.dim;
        match kind {
            FamilyKind::Mum | FamilyKind::Mub => {
                let kappa = file
                    .kappa
                    .ok_or_else(|| FormatError::Schema(format!("{kind} file needs \"kappa\"")))?;
                if file.a.is_some() {
                    return Err(FormatError::Schema(format!(
                        "{kind} file must not carry \"a\""
                    )));
                }
                let EffectsJson::Grouped(groups) = &file.effects else {
                    return Err(FormatError::Schema(format!(
                        "{kind} effects must be grouped per POVM"
                    )));
                };
                let povms = groups
                    .iter()
                    .map(|g| Ok(Povm::new(d, effects_from_json(g, d)?)?))
                    .collect::<Result<Vec<_>>>()?;
                let set = MumSet::from_parts(d, file.t, kappa, povms)?;
                if kind == FamilyKind::Mub {
                    if (kappa - 1.0).abs() > UNIT_SHARPNESS_SLACK {
                        return Err(FormatError::Schema(format!(
                            "mub file has kappa {kappa}, expected 1"
                        )));
                    }
                    Ok(Family::Mub(set))
                } else {
                    Ok(Family::Mum(set))
                }
            }
            FamilyKind::Gsm | FamilyKind::Sic => {
                let a = file
                    .a
                    .ok_or_else(|| FormatError::Schema(format!("{kind} file needs \"a\"")))?;
                if file.kappa.is_some() {
                    return Err(FormatError::Schema(format!(
                        "{kind} file must not carry \"kappa\""
                    )));
                }
                let EffectsJson::Flat(list) = &file.effects else {
                    return Err(FormatError::Schema(format!(
                        "{kind} effects must be a flat list"
                    )));
                };
                let set = GsmSet::from_parts(d, file.t, a, effects_from_json(list, d)?)?;
                if kind == FamilyKind::Sic {
                    let rank_one = 1.0 / (d * d) as f64;
                    if (a - rank_one).abs() > UNIT_SHARPNESS_SLACK {
                        return Err(FormatError::Schema(format!(
                            "sic file has a {a}, expected {rank_one}"
                        )));
                    }
                    Ok(Family::Sic(set))
                } else {
                    Ok(Family::Gsm(set))
                }
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
#[allow(non_snake_case)]
struct ReportFile {
    v: u32,
    dim: usize,
    kind: String,
    parameter: Option<f64>,
    purity: f64,
    C_direct: f64,
    C_closed: f64,
    V_direct: f64,
    V_closed: f64,
    V_min_direct: f64,
    V_min: f64,
    V_max_direct: f64,
    V_max: f64,
    I_direct: f64,
    I_closed: f64,
    U_direct: f64,
    U_closed: f64,
    clamped_variances: usize,
    max_abs_discrepancy: f64,
}

impl Codec for BzReport {
    fn encode(&self) -> String {
        let file = ReportFile {
            v: SCHEMA_VERSION,
            dim: self.dim,
            kind: self.kind.as_str().to_string(),
            parameter: self.parameter,
            purity: self.purity,
            C_direct: self.c_direct,
            C_closed: self.c_closed,
            V_direct: self.v_direct,
            V_closed: self.v_closed,
            V_min_direct: self.v_min_direct,
            V_min: self.v_min,
            V_max_direct: self.v_max_direct,
            V_max: self.v_max,
            I_direct: self.i_direct,
            I_closed: self.i_closed,
            U_direct: self.u_direct,
            U_closed: self.u_closed,
            clamped_variances: self.clamped_variances,
            max_abs_discrepancy: self.max_abs_discrepancy,
        };
        serde_json::to_string(&file).expect("report serializes")
    }

    fn decode(text: &str) -> Result<Self> {
        let f: ReportFile = serde_json::from_str(text)?;
        check_version(f.v)?;
        let kind = ReportKind::parse(&f.kind)
            .ok_or_else(|| FormatError::Schema(format!("unknown report kind {:?}", f.kind)))?;
        if (kind == ReportKind::StateOnly) != f.parameter.is_none() {
            return Err(FormatError::Schema(
                "parameter must be null exactly for state-only reports".into(),
            ));
        }
        let report = BzReport {
            dim: f.dim,
            kind,
            parameter: f.parameter,
            purity: f.purity,
            c_direct: f.C_direct,
            c_closed: f.C_closed,
            v_direct: f.V_direct,
            v_closed: f.V_closed,
            v_min_direct: f.V_min_direct,
            v_min: f.V_min,
            v_max_direct: f.V_max_direct,
            v_max: f.V_max,
            i_direct: f.I_direct,
            i_closed: f.I_closed,
            u_direct: f.U_direct,
            u_closed: f.U_closed,
            clamped_variances: f.clamped_variances,
            max_abs_discrepancy: f.max_abs_discrepancy,
        };
        let recomputed = report
            .pairs()
            .iter()
            .map(|(_, a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        if recomputed != report.max_abs_discrepancy {
            return Err(FormatError::Schema(format!(
                "max_abs_discrepancy {} disagrees with fields ({recomputed})",
                report.max_abs_discrepancy
            )));
        }
        Ok(report)
    }
}

#[derive(Serialize, Deserialize)]
struct CountFile {
    v: u32,
    shots: u64,
    counts: Vec<Vec<u64>>,
}

impl Codec for CountTable {
    fn encode(&self) -> String {
        let file = CountFile {
            v: SCHEMA_VERSION,
            shots: self.shots(),
            counts: self.counts().to_vec(),
        };
        serde_json::to_string(&file).expect("count table serializes")
    }

    fn decode(text: &str) -> Result<Self> {
        let f: CountFile = serde_json::from_str(text)?;
        check_version(f.v)?;
        Ok(CountTable::new(f.shots, f.counts)?)
    }
}

/// Machine-readable verification summary.
pub fn encode_verification(kind: FamilyKind, report: &measurements::VerificationReport) -> String {
    let checks: serde_json::Map<String, serde_json::Value> = report
        .checks
        .iter()
        .map(|c| (c.name.to_string(), serde_json::Value::from(c.deviation)))
        .collect();
    serde_json::json!({
        "v": SCHEMA_VERSION,
        "kind": kind.as_str(),
        "passed": report.passed(),
        "tol": report.tol,
        "degenerate": report.degenerate,
        "checks": checks,
    })
    .to_string()
}
