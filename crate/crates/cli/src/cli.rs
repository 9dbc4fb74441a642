//! Argument parsing and subcommand dispatch.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use bzinfo_core::measurements::{self, build_gsm, build_mub, build_mum, sic2_fixture};
use bzinfo_core::states::{basis_state, maximally_mixed, random_density};
use bzinfo_core::{bz, sampler, CountTable, DensityMatrix, Family, TParam};
use clap::builder::RangedU64ValueParser;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::formats::{self, encode_state_with_meta, Codec, FormatError, StateMeta};
use crate::sweep;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "bzinfo",
    version,
    about = "Complementary measurements and BZ invariant information"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a measurement family and write it as JSON.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Density-matrix utilities.
    State {
        #[command(subcommand)]
        action: StateAction,
    },
    /// Check a measurement file against its defining relations.
    Verify {
        #[arg(long)]
        measurement: PathBuf,
        #[arg(long, default_value_t = 1e-10, value_parser = positive_f64)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Total variance, coincidence, BZ information and uncertainty of a state.
    /// Without `--measurement` the state-only forms are reported.
    Bz {
        #[arg(long)]
        measurement: Option<PathBuf>,
        #[arg(long)]
        state: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Simulate finite-shot outcomes and estimate the BZ information.
    Sample {
        #[arg(long)]
        measurement: PathBuf,
        #[arg(long)]
        state: PathBuf,
        #[arg(long, value_parser = RangedU64ValueParser::<u64>::new().range(2..))]
        shots: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Where to write the count table.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Reports over seeded random states, as CSV.
    Sweep {
        #[arg(long, value_parser = dim_parser())]
        dim: usize,
        #[arg(long, value_enum, default_value_t = SweepFamily::Mum)]
        family: SweepFamily,
        #[arg(long, default_value = "auto", value_parser = parse_t)]
        t: TParam,
        #[arg(long, value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
        states: usize,
        #[arg(long, value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
        rank: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SweepFamily {
    Mum,
    Gsm,
    Mub,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also print the JSON on stdout when `--out` is given.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
pub enum GenFamily {
    Mum {
        #[arg(long, value_parser = dim_parser())]
        dim: usize,
        #[arg(long, default_value = "auto", value_parser = parse_t)]
        t: TParam,
        #[command(flatten)]
        output: Output,
    },
    Gsm {
        #[arg(long, value_parser = dim_parser())]
        dim: usize,
        #[arg(long, default_value = "auto", value_parser = parse_t)]
        t: TParam,
        #[command(flatten)]
        output: Output,
    },
    /// Complete MUBs in prime dimension.
    Mub {
        #[arg(long, value_parser = dim_parser())]
        dim: usize,
        #[command(flatten)]
        output: Output,
    },
    /// The qubit SIC.
    Sic2 {
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Subcommand)]
pub enum StateAction {
    /// A Ginibre random state, or with `--mixed`/`--basis` a fixed one.
    Gen {
        #[arg(long, value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
        dim: usize,
        #[arg(long, value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
        rank: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// The maximally mixed state.
        #[arg(long, conflicts_with_all = ["rank", "basis"])]
        mixed: bool,
        /// The computational basis state |k⟩.
        #[arg(long, conflicts_with = "rank")]
        basis: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
}

fn dim_parser() -> RangedU64ValueParser<usize> {
    RangedU64ValueParser::<usize>::new().range(2..)
}

fn positive_f64(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if !x.is_finite() || x <= 0.0 {
        return Err(format!("{s} is not a positive finite number"));
    }
    Ok(x)
}

fn parse_t(s: &str) -> Result<TParam, String> {
    if s.eq_ignore_ascii_case("auto") {
        return Ok(TParam::Auto);
    }
    positive_f64(s).map(TParam::Value)
}

#[derive(Debug, thiserror::Error)]
enum RunError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error(transparent)]
    Core(#[from] bzinfo_core::Error),
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
    #[error("writing CSV: {0}")]
    Csv(#[from] csv::Error),
}

impl RunError {
    fn exit_code(&self) -> i32 {
        match self {
            RunError::Core(bzinfo_core::Error::Precondition(_)) => EXIT_VERIFY_FAILED,
            _ => EXIT_USAGE,
        }
    }
}

type Outcome = Result<i32, RunError>;

fn load<T: Codec>(path: &Path) -> Result<T, RunError> {
    let text = fs::read_to_string(path).map_err(|source| RunError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    T::decode(&text).map_err(|source| RunError::Format {
        path: path.to_path_buf(),
        source,
    })
}

fn store(path: &Path, text: &str) -> Result<(), RunError> {
    fs::write(path, text).map_err(|source| RunError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Write `text` to `--out` if given; print it when there is no file or
/// `--json` was passed.
fn emit(
    output: &Output,
    text: &str,
    summary: &str,
    stdout: &mut dyn Write,
) -> Result<(), RunError> {
    match &output.out {
        Some(path) => {
            store(path, text)?;
            if output.json {
                writeln!(stdout, "{text}")?;
            } else {
                writeln!(stdout, "{summary} -> {}", path.display())?;
            }
        }
        None => writeln!(stdout, "{text}")?,
    }
    Ok(())
}

fn gen(family: GenFamily, stdout: &mut dyn Write) -> Outcome {
    let (fam, output) = match family {
        GenFamily::Mum { dim, t, output } => (Family::Mum(build_mum(dim, t)?), output),
        GenFamily::Gsm { dim, t, output } => (Family::Gsm(build_gsm(dim, t)?), output),
        GenFamily::Mub { dim, output } => (Family::Mub(build_mub(dim)?), output),
        GenFamily::Sic2 { output } => (Family::Sic(sic2_fixture()), output),
    };
    let summary = format!("{} d={} t={}", fam.kind(), fam.dim(), fam.t());
    emit(&output, &fam.encode(), &summary, stdout)?;
    Ok(EXIT_OK)
}

fn state(action: StateAction, stdout: &mut dyn Write) -> Outcome {
    let StateAction::Gen {
        dim,
        rank,
        seed,
        mixed,
        basis,
        output,
    } = action;
    let (rho, meta) = if mixed {
        (maximally_mixed(dim), None)
    } else if let Some(k) = basis {
        (basis_state(dim, k)?, None)
    } else {
        let rank = rank.unwrap_or(dim);
        (
            random_density(dim, rank, seed)?,
            Some(StateMeta::ginibre(seed, rank)),
        )
    };
    let summary = format!("state d={dim} purity={}", rho.purity());
    emit(
        &output,
        &encode_state_with_meta(&rho, meta),
        &summary,
        stdout,
    )?;
    Ok(EXIT_OK)
}

fn verify(measurement: &Path, tol: f64, json: bool, stdout: &mut dyn Write) -> Outcome {
    let fam: Family = load(measurement)?;
    let report = fam.verify(tol)?;
    if json {
        writeln!(
            stdout,
            "{}",
            formats::encode_verification(fam.kind(), &report)
        )?;
    } else {
        writeln!(stdout, "{} d={}", fam.kind(), fam.dim())?;
        writeln!(stdout, "{report}")?;
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn report(measurement: Option<&Path>, state: &Path, json: bool, stdout: &mut dyn Write) -> Outcome {
    let rho: DensityMatrix = load(state)?;
    let report = match measurement {
        Some(path) => {
            let fam: Family = load(path)?;
            bz::bz_report(&fam, &rho)?
        }
        None => bz::state_report(&rho)?,
    };
    if json {
        writeln!(stdout, "{}", report.encode())?;
    } else {
        writeln!(
            stdout,
            "{} d={} purity={}",
            report.kind.as_str(),
            report.dim,
            report.purity
        )?;
        writeln!(stdout, "{:<6} {:>24} {:>24}", "", "direct", "closed")?;
        for (name, direct, closed) in report.pairs() {
            writeln!(stdout, "{name:<6} {direct:>24.16e} {closed:>24.16e}")?;
        }
        writeln!(
            stdout,
            "max_abs_discrepancy {:e}",
            report.max_abs_discrepancy
        )?;
    }
    Ok(EXIT_OK)
}

struct SampleArgs {
    measurement: PathBuf,
    state: PathBuf,
    shots: u64,
    seed: u64,
    out: Option<PathBuf>,
    json: bool,
}

fn sample(args: SampleArgs, stdout: &mut dyn Write) -> Outcome {
    let fam: Family = load(&args.measurement)?;
    let rho: DensityMatrix = load(&args.state)?;
    let table: CountTable = sampler::sample_outcomes(&fam, &rho, args.shots, args.seed)?;
    let est = sampler::estimate_bz_info_from_table(&fam, &table, args.seed)?;
    if let Some(path) = &args.out {
        store(path, &table.encode())?;
    }
    if args.json {
        let value = serde_json::json!({
            "v": formats::SCHEMA_VERSION,
            "kind": fam.kind().as_str(),
            "shots": args.shots,
            "seed": args.seed,
            "estimate": est.estimate,
            "std_error": est.std_error,
            "bootstrap_resamples": sampler::BOOTSTRAP_RESAMPLES,
        });
        writeln!(stdout, "{value}")?;
    } else {
        writeln!(
            stdout,
            "I ≈ {:.10} ± {:.2e} ({} shots per POVM, seed {})",
            est.estimate, est.std_error, args.shots, args.seed
        )?;
    }
    Ok(EXIT_OK)
}

struct SweepArgs {
    dim: usize,
    family: SweepFamily,
    t: TParam,
    states: usize,
    rank: Option<usize>,
    seed: u64,
    out: Option<PathBuf>,
}

fn run_sweep(args: SweepArgs, stdout: &mut dyn Write) -> Outcome {
    let d = args.dim;
    if let Some(r) = args.rank {
        if r > d {
            return Err(
                bzinfo_core::Error::Domain(format!("rank {r} exceeds dimension {d}")).into(),
            );
        }
    }
    let fam = match args.family {
        SweepFamily::Mum => Family::Mum(build_mum(d, args.t)?),
        SweepFamily::Gsm => Family::Gsm(build_gsm(d, args.t)?),
        SweepFamily::Mub => Family::Mub(measurements::build_mub(d)?),
    };
    let reports = sweep::sweep(&fam, args.states, args.rank, args.seed)?;
    match &args.out {
        Some(path) => {
            let file = fs::File::create(path).map_err(|source| RunError::Io {
                path: path.clone(),
                source,
            })?;
            sweep::write_csv(&reports, std::io::BufWriter::new(file))?;
        }
        None => sweep::write_csv(&reports, &mut *stdout)?,
    }
    Ok(EXIT_OK)
}

fn dispatch(cli: Cli, stdout: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Gen { family } => gen(family, stdout),
        Command::State { action } => state(action, stdout),
        Command::Verify {
            measurement,
            tol,
            json,
        } => verify(&measurement, tol, json, stdout),
        Command::Bz {
            measurement,
            state,
            json,
        } => report(measurement.as_deref(), &state, json, stdout),
        Command::Sample {
            measurement,
            state,
            shots,
            seed,
            out,
            json,
        } => sample(
            SampleArgs {
                measurement,
                state,
                shots,
                seed,
                out,
                json,
            },
            stdout,
        ),
        Command::Sweep {
            dim,
            family,
            t,
            states,
            rank,
            seed,
            out,
        } => run_sweep(
            SweepArgs {
                dim,
                family,
                t,
                states,
                rank,
                seed,
                out,
            },
            stdout,
        ),
    }
}

/// Parse `args` (including the program name) and run one subcommand.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{rendered}")
            } else {
                write!(stdout, "{rendered}")
            };
            return code;
        }
    };
    match dispatch(cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
