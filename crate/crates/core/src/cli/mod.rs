//! Command-line front end.
//!
//! Arguments are parsed with clap, validated into a [`RunManifest`], and only
//! then dispatched. Exit codes: 0 success, 1 I/O failure, 2 usage error,
//! 3 numerical failure.

pub mod output;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{
    burgers_base_dt, run_sweep, solve, Norm, ReferenceCache, Refinement, SweepSpec,
    ADVECTION_CELLS, ADVECTION_CFL, ADVECTION_T_FINAL, BURGERS_CELLS, BURGERS_DIVISORS,
    BURGERS_REFERENCE_DIVISOR, BURGERS_T_FINAL, BURGERS_VISCOSITY,
};
use crate::error::Error;
use crate::grid::Grid1D;
use crate::problems::{Problem, ProblemKind};
use crate::schemes::SchemeConfig;
use crate::stability::{
    scan_region, AxisRange, StabilityVariant, DEFAULT_BETA_RANGE, DEFAULT_RESOLUTION,
    DEFAULT_THETA_RANGE,
};

pub const EXIT_IO: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_NUMERICAL: u8 = 3;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "ICN_LAB_THREADS";

#[derive(Debug, Parser)]
#[command(name = "icn-lab", version, about = "Iterated Crank-Nicolson experiments for 1-D periodic PDEs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Integrate one problem with one scheme and write the solution as CSV.
    Run(RunArgs),
    /// Run a convergence study and write one error table per norm.
    Sweep(SweepArgs),
    /// Scan |g| over the (theta, beta) plane.
    Stability(StabilityArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProblemArg {
    Linear,
    Semilinear,
    Burgers,
}

impl From<ProblemArg> for ProblemKind {
    fn from(p: ProblemArg) -> Self {
        match p {
            ProblemArg::Linear => ProblemKind::LinearAdvection,
            ProblemArg::Semilinear => ProblemKind::SemiLinearAdvection,
            ProblemArg::Burgers => ProblemKind::Burgers,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchemeArg {
    Icn,
    Theta,
    Swapped,
    Ga,
    Aa,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NormArg {
    L1,
    L2,
    Linf,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Markdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Ga,
    Aa,
}

/// Parameters shared by `run` and `sweep`.
#[derive(Debug, Clone, Args)]
pub struct ModelArgs {
    #[arg(long, value_enum)]
    pub problem: ProblemArg,
    /// Weight for theta-ICN and swapped theta-ICN.
    #[arg(long, default_value_t = 0.6)]
    pub theta: f64,
    /// First GA weight; the second is 1/(4 theta1).
    #[arg(long, default_value_t = 0.6)]
    pub theta1: f64,
    /// AA weight on odd steps; even steps use 1 - theta_o.
    #[arg(long = "theta-o", default_value_t = 0.6)]
    pub theta_o: f64,
    /// Advection speed of the linear problem.
    #[arg(long, default_value_t = 1.0)]
    pub speed: f64,
    #[arg(long, default_value_t = BURGERS_VISCOSITY)]
    pub viscosity: f64,
    #[arg(long = "t-final")]
    pub t_final: Option<f64>,
    /// Burgers reference runs use dt / ref-divisor.
    #[arg(long = "ref-divisor", default_value_t = BURGERS_REFERENCE_DIVISOR)]
    pub ref_divisor: u32,
    /// Directory for persisted Burgers reference solutions.
    #[arg(long = "cache-dir")]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct RunArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, value_enum)]
    pub scheme: SchemeArg,
    /// Number of grid cells (defaults: 200 advection, 30 Burgers).
    #[arg(long)]
    pub n: Option<usize>,
    /// a dt / dx for the advection problems.
    #[arg(long, default_value_t = ADVECTION_CFL)]
    pub cfl: f64,
    /// Explicit time step; Burgers defaults to 0.5 dx².
    #[arg(long)]
    pub dt: Option<f64>,
    /// Output CSV path (stdout when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct SweepArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Schemes to compare, in column order.
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [SchemeArg::Icn, SchemeArg::Theta, SchemeArg::Swapped, SchemeArg::Ga, SchemeArg::Aa])]
    pub schemes: Vec<SchemeArg>,
    /// Grid sizes (advection) or time-step divisors (Burgers).
    #[arg(long, value_delimiter = ',')]
    pub resolutions: Option<Vec<u32>>,
    #[arg(long, default_value_t = ADVECTION_CFL)]
    pub cfl: f64,
    /// Grid size of the Burgers time-refinement study.
    #[arg(long)]
    pub n: Option<usize>,
    /// Undivided Burgers step (defaults to 0.5 dx²).
    #[arg(long = "dt-base")]
    pub dt_base: Option<f64>,
    #[arg(long, value_enum, default_value_t = NormArg::All)]
    pub norm: NormArg,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
    /// Output path; with several norms, `_l1`, `_l2`, `_linf` is appended
    /// to the file stem.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct StabilityArgs {
    #[arg(long, value_enum)]
    pub variant: VariantArg,
    #[arg(long = "theta-min", default_value_t = DEFAULT_THETA_RANGE.0)]
    pub theta_min: f64,
    #[arg(long = "theta-max", default_value_t = DEFAULT_THETA_RANGE.1)]
    pub theta_max: f64,
    #[arg(long = "beta-min", default_value_t = DEFAULT_BETA_RANGE.0)]
    pub beta_min: f64,
    #[arg(long = "beta-max", default_value_t = DEFAULT_BETA_RANGE.1)]
    pub beta_max: f64,
    /// Samples per axis.
    #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
    pub resolution: usize,
    #[arg(long = "theta-points")]
    pub theta_points: Option<usize>,
    #[arg(long = "beta-points")]
    pub beta_points: Option<usize>,
    /// Evaluate a single point `THETA,BETA` instead of a map.
    #[arg(long, value_name = "THETA,BETA", value_parser = parse_point)]
    pub at: Option<(f64, f64)>,
    /// CSV output path (stdout when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Optional PGM heatmap path.
    #[arg(long)]
    pub pgm: Option<PathBuf>,
}

fn parse_point(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected THETA,BETA, got {s:?}"))?;
    let parse = |v: &str| v.trim().parse::<f64>().map_err(|e| format!("{v:?}: {e}"));
    Ok((parse(a)?, parse(b)?))
}

/// A fully validated invocation.
#[derive(Debug, Clone, PartialEq)]
pub enum RunManifest {
    Run {
        problem: Problem,
        scheme: SchemeConfig,
        grid: Grid1D,
        dt: f64,
        t_final: f64,
        ref_divisor: u32,
        cache_dir: Option<PathBuf>,
        out: Option<PathBuf>,
    },
    Sweep {
        spec: SweepSpec,
        norms: Vec<Norm>,
        format: TableFormat,
        cache_dir: Option<PathBuf>,
        out: Option<PathBuf>,
    },
    Stability {
        variant: StabilityVariant,
        theta: AxisRange,
        beta: AxisRange,
        out: Option<PathBuf>,
        pgm: Option<PathBuf>,
    },
    StabilityPoint {
        variant: StabilityVariant,
        theta: f64,
        beta: f64,
        out: Option<PathBuf>,
    },
}

/// Validation failure attributed to one flag.
#[derive(Debug, Clone, PartialEq)]
pub struct UsageError {
    pub flag: &'static str,
    pub message: String,
}

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "invalid --{}: {}", self.flag, self.message)
    }
}

fn usage(flag: &'static str, message: impl ToString) -> UsageError {
    UsageError {
        flag,
        message: message.to_string(),
    }
}

fn positive(flag: &'static str, v: f64) -> Result<f64, UsageError> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(usage(flag, format!("must be a positive number, got {v}")))
    }
}

fn build_problem(model: &ModelArgs) -> Result<Problem, UsageError> {
    Ok(match model.problem {
        ProblemArg::Linear => {
            if !model.speed.is_finite() || model.speed == 0.0 {
                return Err(usage("speed", "must be finite and non-zero"));
            }
            Problem::linear_advection(model.speed)
        }
        ProblemArg::Semilinear => Problem::semilinear(),
        ProblemArg::Burgers => {
            Problem::burgers(model.viscosity).map_err(|e| usage("viscosity", e))?
        }
    })
}

fn build_scheme(arg: SchemeArg, model: &ModelArgs) -> Result<SchemeConfig, UsageError> {
    match arg {
        SchemeArg::Icn => Ok(SchemeConfig::icn()),
        SchemeArg::Theta => SchemeConfig::theta(model.theta).map_err(|e| usage("theta", e)),
        SchemeArg::Swapped => SchemeConfig::swapped(model.theta).map_err(|e| usage("theta", e)),
        SchemeArg::Ga => SchemeConfig::ga(model.theta1).map_err(|e| usage("theta1", e)),
        SchemeArg::Aa => SchemeConfig::aa(model.theta_o).map_err(|e| usage("theta-o", e)),
    }
}

fn default_t_final(kind: ProblemKind) -> f64 {
    match kind {
        ProblemKind::Burgers => BURGERS_T_FINAL,
        _ => ADVECTION_T_FINAL,
    }
}

fn t_final(model: &ModelArgs, allow_zero: bool) -> Result<f64, UsageError> {
    let t = model
        .t_final
        .unwrap_or_else(|| default_t_final(model.problem.into()));
    if t.is_finite() && (t > 0.0 || (allow_zero && t == 0.0)) {
        Ok(t)
    } else {
        Err(usage("t-final", format!("must be a non-negative number, got {t}")))
    }
}

fn ref_divisor(model: &ModelArgs) -> Result<u32, UsageError> {
    if model.ref_divisor == 0 {
        Err(usage("ref-divisor", "must be positive"))
    } else {
        Ok(model.ref_divisor)
    }
}

impl RunManifest {
    pub fn from_command(command: &Command) -> Result<Self, UsageError> {
        match command {
            Command::Run(args) => Self::from_run(args),
            Command::Sweep(args) => Self::from_sweep(args),
            Command::Stability(args) => Self::from_stability(args),
        }
    }

    fn from_run(args: &RunArgs) -> Result<Self, UsageError> {
        let model = &args.model;
        let problem = build_problem(model)?;
        let scheme = build_scheme(args.scheme, model)?;
        let kind = problem.kind();
        let n = args.n.unwrap_or(match kind {
            ProblemKind::Burgers => BURGERS_CELLS,
            _ => 200,
        });
        let grid = Grid1D::new(n).map_err(|e| usage("n", e))?;
        let dt = match (args.dt, kind) {
            (Some(dt), _) => positive("dt", dt)?,
            (None, ProblemKind::Burgers) => burgers_base_dt(&grid),
            (None, _) => positive("cfl", args.cfl)? * grid.dx() / problem.advection_speed().abs(),
        };
        let t_final = t_final(model, true)?;
        crate::analysis::step_count(t_final, dt).map_err(|e| usage("t-final", e))?;
        Ok(RunManifest::Run {
            problem,
            scheme,
            grid,
            dt,
            t_final,
            ref_divisor: ref_divisor(model)?,
            cache_dir: model.cache_dir.clone(),
            out: args.out.clone(),
        })
    }

    fn from_sweep(args: &SweepArgs) -> Result<Self, UsageError> {
        let model = &args.model;
        let problem = build_problem(model)?;
        if args.schemes.is_empty() {
            return Err(usage("schemes", "at least one scheme is required"));
        }
        let schemes = args
            .schemes
            .iter()
            .map(|&s| build_scheme(s, model))
            .collect::<Result<Vec<_>, _>>()?;
        let t_final = t_final(model, false)?;
        let refinement = match problem.kind() {
            ProblemKind::Burgers => {
                let cells = args.n.unwrap_or(BURGERS_CELLS);
                let grid = Grid1D::new(cells).map_err(|e| usage("n", e))?;
                let dt_base = match args.dt_base {
                    Some(dt) => positive("dt-base", dt)?,
                    None => burgers_base_dt(&grid),
                };
                let divisors = args
                    .resolutions
                    .clone()
                    .unwrap_or_else(|| BURGERS_DIVISORS.to_vec());
                Refinement::Temporal {
                    cells,
                    dt_base,
                    divisors,
                    reference_divisor: ref_divisor(model)?,
                }
            }
            _ => {
                let cells = args
                    .resolutions
                    .as_ref()
                    .map(|r| r.iter().map(|&n| n as usize).collect())
                    .unwrap_or_else(|| ADVECTION_CELLS.to_vec());
                Refinement::Spatial {
                    cells,
                    cfl: positive("cfl", args.cfl)?,
                }
            }
        };
        let spec = SweepSpec {
            problem,
            schemes,
            refinement,
            t_final,
        };
        spec.validate().map_err(|e| match e {
            Error::InvalidTimeStep(_) => usage("dt-base", e),
            Error::InvalidGrid(_) => usage("resolutions", e),
            _ => usage("resolutions", e),
        })?;
        let norms = match args.norm {
            NormArg::L1 => vec![Norm::L1],
            NormArg::L2 => vec![Norm::L2],
            NormArg::Linf => vec![Norm::Linf],
            NormArg::All => Norm::ALL.to_vec(),
        };
        Ok(RunManifest::Sweep {
            spec,
            norms,
            format: args.format,
            cache_dir: model.cache_dir.clone(),
            out: args.out.clone(),
        })
    }

    fn from_stability(args: &StabilityArgs) -> Result<Self, UsageError> {
        let variant = match args.variant {
            VariantArg::Ga => StabilityVariant::Ga,
            VariantArg::Aa => StabilityVariant::Aa,
        };
        if let Some((theta, beta)) = args.at {
            if !(theta.is_finite() && beta.is_finite()) {
                return Err(usage("at", "point must be finite"));
            }
            return Ok(RunManifest::StabilityPoint {
                variant,
                theta,
                beta,
                out: args.out.clone(),
            });
        }
        let theta = AxisRange::new(
            args.theta_min,
            args.theta_max,
            args.theta_points.unwrap_or(args.resolution),
        )
        .map_err(|e| usage("theta-min", e))?;
        let beta = AxisRange::new(
            args.beta_min,
            args.beta_max,
            args.beta_points.unwrap_or(args.resolution),
        )
        .map_err(|e| usage("beta-min", e))?;
        Ok(RunManifest::Stability {
            variant,
            theta,
            beta,
            out: args.out.clone(),
            pgm: args.pgm.clone(),
        })
    }
}

/// Failure of a validated run.
#[derive(Debug)]
pub enum RunFailure {
    Numerical(Error),
    Io(String),
}

impl RunFailure {
    pub fn exit_code(&self) -> u8 {
        match self {
            RunFailure::Numerical(_) => EXIT_NUMERICAL,
            RunFailure::Io(_) => EXIT_IO,
        }
    }
}

impl std::fmt::Display for RunFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunFailure::Numerical(e) => write!(f, "{e}"),
            RunFailure::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for RunFailure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(msg) => RunFailure::Io(msg),
            other => RunFailure::Numerical(other),
        }
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), RunFailure> {
    match path {
        Some(p) => {
            fs::write(p, text).map_err(|e| RunFailure::Io(format!("{}: {e}", p.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cache_for(dir: &Option<PathBuf>) -> ReferenceCache {
    match dir {
        Some(d) => ReferenceCache::persistent(d),
        None => ReferenceCache::in_memory(),
    }
}

/// Output path for one norm when several tables are written.
pub fn per_norm_path(base: &Path, norm: Norm) -> PathBuf {
    let stem = base
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let suffix = norm.name().to_lowercase();
    let name = match base.extension() {
        Some(ext) => format!("{stem}_{suffix}.{}", ext.to_string_lossy()),
        None => format!("{stem}_{suffix}"),
    };
    base.with_file_name(name)
}

/// Executes a validated manifest.
pub fn execute(manifest: &RunManifest) -> Result<(), RunFailure> {
    match manifest {
        RunManifest::Run {
            problem,
            scheme,
            grid,
            dt,
            t_final,
            ref_divisor,
            cache_dir,
            out,
        } => {
            let cache = cache_for(cache_dir);
            let solution = solve(problem, scheme, *grid, *dt, *t_final, *ref_divisor, &cache)?;
            emit(out.as_deref(), &output::solution_csv(&solution))
        }
        RunManifest::Sweep {
            spec,
            norms,
            format,
            cache_dir,
            out,
        } => {
            let cache = cache_for(cache_dir);
            let table = run_sweep(spec, &cache)?;
            let render = |norm: Norm| match format {
                TableFormat::Csv => output::sweep_csv(&table, norm),
                TableFormat::Markdown => output::sweep_markdown(&table, norm),
            };
            match out {
                Some(path) if norms.len() == 1 => emit(Some(path), &render(norms[0])),
                Some(path) => norms
                    .iter()
                    .try_for_each(|&n| emit(Some(&per_norm_path(path, n)), &render(n))),
                None => {
                    let text: Vec<String> = norms.iter().map(|&n| render(n)).collect();
                    emit(None, &text.join("\n"))
                }
            }
        }
        RunManifest::Stability {
            variant,
            theta,
            beta,
            out,
            pgm,
        } => {
            let map = scan_region(*variant, *theta, *beta);
            emit(out.as_deref(), &output::stability_csv(&map))?;
            if let Some(p) = pgm {
                emit(Some(p), &output::stability_pgm(&map))?;
            }
            Ok(())
        }
        RunManifest::StabilityPoint {
            variant,
            theta,
            beta,
            out,
        } => {
            let g = variant.amplification(*theta, *beta);
            let text = format!(
                "theta,beta,g_modulus,stable\n{},{},{},{}\n",
                output::sci6(*theta),
                output::sci6(*beta),
                output::sci6(g.modulus),
                g.is_stable()
            );
            emit(out.as_deref(), &text)
        }
    }
}

fn configure_threads() -> Result<(), UsageError> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| usage("threads", format!("{THREADS_ENV} must be a positive integer, got {raw:?}")))?;
    // A second initialisation in the same process is harmless.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
    Ok(())
}

pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {}", e.message);
        return ExitCode::from(EXIT_USAGE);
    }
    let manifest = match RunManifest::from_command(&cli.command) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match execute(&manifest) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
