//! Error norms, observed convergence orders and refinement sweeps.
//!
//! Norms of the nodal error `e = u_num - u_ref` on a grid with spacing `dx`:
//!
//! - `L1 = dx * Σ|e|`
//! - `L2 = dx * sqrt(Σ e²)`
//! - `L∞ = max |e|`
//!
//! The L2 definition carries one extra factor of `sqrt(dx)` relative to the
//! discrete RMS norm, so smooth errors of order `p` show up with L2 order
//! `p + ½` under spatial refinement.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::{Field, Grid1D};
use crate::problems::{initial_condition, Problem, ProblemKind};
use crate::schemes::{integrate, SchemeConfig};

/// Horizon used by the advection benchmarks.
pub const ADVECTION_T_FINAL: f64 = 0.5;
pub const ADVECTION_CFL: f64 = 0.5;
pub const ADVECTION_CELLS: [usize; 5] = [100, 200, 400, 800, 1600];

pub const BURGERS_T_FINAL: f64 = 1.0;
pub const BURGERS_VISCOSITY: f64 = 0.01;
pub const BURGERS_CELLS: usize = 30;
pub const BURGERS_DIVISORS: [u32; 4] = [1, 2, 4, 8];
/// The reference run uses `dt_base / 32`.
pub const BURGERS_REFERENCE_DIVISOR: u32 = 32;

/// Base step for the Burgers time-refinement study, `0.5 dx²`.
pub fn burgers_base_dt(grid: &Grid1D) -> f64 {
    0.5 * grid.dx() * grid.dx()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormTriple {
    pub l1: f64,
    pub l2: f64,
    pub linf: f64,
}

impl NormTriple {
    pub fn get(&self, norm: Norm) -> f64 {
        match norm {
            Norm::L1 => self.l1,
            Norm::L2 => self.l2,
            Norm::Linf => self.linf,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Norm {
    L1,
    L2,
    Linf,
}

impl Norm {
    pub const ALL: [Norm; 3] = [Norm::L1, Norm::L2, Norm::Linf];

    pub fn name(self) -> &'static str {
        match self {
            Norm::L1 => "L1",
            Norm::L2 => "L2",
            Norm::Linf => "Linf",
        }
    }
}

pub fn error_norms(numerical: &Field, reference: &Field) -> Result<NormTriple> {
    if numerical.grid() != reference.grid() {
        return Err(Error::GridMismatch);
    }
    let dx = numerical.grid().dx();
    let (mut abs_sum, mut sq_sum, mut max) = (0.0f64, 0.0f64, 0.0f64);
    for (a, b) in numerical.values().iter().zip(reference.values()) {
        let e = (a - b).abs();
        abs_sum += e;
        sq_sum += e * e;
        max = max.max(e);
    }
    Ok(NormTriple {
        l1: dx * abs_sum,
        l2: dx * sq_sum.sqrt(),
        linf: max,
    })
}

/// `log2(e_coarse / e_fine)` for a pair of runs one halving apart.
pub fn observed_order(e_coarse: f64, e_fine: f64) -> Result<f64> {
    observed_order_with_ratio(e_coarse, e_fine, 2.0)
}

/// Order for a refinement by an arbitrary `ratio > 1`.
pub fn observed_order_with_ratio(e_coarse: f64, e_fine: f64, ratio: f64) -> Result<f64> {
    let valid = |e: f64| e.is_finite() && e > 0.0;
    if !valid(e_coarse) || !valid(e_fine) || ratio.is_nan() || ratio <= 1.0 {
        return Err(Error::OrderUndefined {
            coarse: e_coarse,
            fine: e_fine,
        });
    }
    Ok((e_coarse / e_fine).log2() / ratio.log2())
}

/// Number of uniform steps of size `dt` that land on `t_final`.
pub fn step_count(t_final: f64, dt: f64) -> Result<usize> {
    if !(dt.is_finite() && dt > 0.0) {
        return Err(Error::InvalidTimeStep(dt));
    }
    if !(t_final.is_finite() && t_final >= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "t_final must be finite and non-negative, got {t_final}"
        )));
    }
    let steps = (t_final / dt).round();
    if (steps * dt - t_final).abs() > 1e-9 * t_final {
        return Err(Error::UnreachableHorizon { t_final, dt });
    }
    Ok(steps as usize)
}

/// How a sweep refines its runs.
#[derive(Debug, Clone, PartialEq)]
pub enum Refinement {
    /// Grid refinement at fixed CFL number; `dt = cfl * dx / |a|`.
    Spatial { cells: Vec<usize>, cfl: f64 },
    /// Step refinement on a fixed grid; `dt = dt_base / divisor`.
    Temporal {
        cells: usize,
        dt_base: f64,
        divisors: Vec<u32>,
        reference_divisor: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ResolutionLabel {
    Cells(usize),
    DtDivisor(u32),
}

impl ResolutionLabel {
    fn magnitude(self) -> f64 {
        match self {
            ResolutionLabel::Cells(n) => n as f64,
            ResolutionLabel::DtDivisor(d) => d as f64,
        }
    }
}

impl fmt::Display for ResolutionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ResolutionLabel::Cells(n) => write!(f, "{n}"),
            ResolutionLabel::DtDivisor(1) => write!(f, "Delta"),
            ResolutionLabel::DtDivisor(d) => write!(f, "Delta/{d}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub problem: Problem,
    pub schemes: Vec<SchemeConfig>,
    pub refinement: Refinement,
    pub t_final: f64,
}

/// ICN, θ-ICN(0.6), swapped θ-ICN(0.6), GA(θ₁ = 0.6), AA(θ_o = 0.6).
pub fn default_schemes() -> Vec<SchemeConfig> {
    vec![
        SchemeConfig::icn(),
        SchemeConfig::theta(0.6).unwrap(),
        SchemeConfig::swapped(0.6).unwrap(),
        SchemeConfig::ga(0.6).unwrap(),
        SchemeConfig::aa(0.6).unwrap(),
    ]
}

impl SweepSpec {
    /// Benchmark sweep for one of the three problems with the default
    /// scheme set and resolutions.
    pub fn benchmark(kind: ProblemKind) -> Self {
        match kind {
            ProblemKind::LinearAdvection | ProblemKind::SemiLinearAdvection => {
                let problem = if kind == ProblemKind::LinearAdvection {
                    Problem::linear_advection(1.0)
                } else {
                    Problem::semilinear()
                };
                Self {
                    problem,
                    schemes: default_schemes(),
                    refinement: Refinement::Spatial {
                        cells: ADVECTION_CELLS.to_vec(),
                        cfl: ADVECTION_CFL,
                    },
                    t_final: ADVECTION_T_FINAL,
                }
            }
            ProblemKind::Burgers => {
                let grid = Grid1D::new(BURGERS_CELLS).unwrap();
                Self {
                    problem: Problem::burgers(BURGERS_VISCOSITY).unwrap(),
                    schemes: default_schemes(),
                    refinement: Refinement::Temporal {
                        cells: BURGERS_CELLS,
                        dt_base: burgers_base_dt(&grid),
                        divisors: BURGERS_DIVISORS.to_vec(),
                        reference_divisor: BURGERS_REFERENCE_DIVISOR,
                    },
                    t_final: BURGERS_T_FINAL,
                }
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.t_final.is_finite() && self.t_final > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "t_final must be positive, got {}",
                self.t_final
            )));
        }
        if self.schemes.is_empty() {
            return Err(Error::InvalidParameter("no schemes selected".into()));
        }
        match &self.refinement {
            Refinement::Spatial { cells, cfl } => {
                if !self.problem.has_exact_solution() {
                    return Err(Error::InvalidParameter(
                        "spatial refinement needs a problem with an exact solution".into(),
                    ));
                }
                if !(cfl.is_finite() && *cfl > 0.0) {
                    return Err(Error::InvalidParameter(format!("cfl must be positive, got {cfl}")));
                }
                if self.problem.advection_speed() == 0.0 {
                    return Err(Error::InvalidParameter(
                        "zero advection speed gives no CFL time step".into(),
                    ));
                }
                check_refining(cells.iter().map(|&n| n as u64))?;
                for &n in cells {
                    Grid1D::new(n)?;
                }
            }
            Refinement::Temporal {
                cells,
                dt_base,
                divisors,
                reference_divisor,
            } => {
                Grid1D::new(*cells)?;
                if !(dt_base.is_finite() && *dt_base > 0.0) {
                    return Err(Error::InvalidTimeStep(*dt_base));
                }
                if divisors.contains(&0) || *reference_divisor == 0 {
                    return Err(Error::InvalidParameter("time-step divisors must be positive".into()));
                }
                check_refining(divisors.iter().map(|&d| d as u64))?;
            }
        }
        Ok(())
    }

    fn labels(&self) -> Vec<ResolutionLabel> {
        match &self.refinement {
            Refinement::Spatial { cells, .. } => {
                cells.iter().map(|&n| ResolutionLabel::Cells(n)).collect()
            }
            Refinement::Temporal { divisors, .. } => divisors
                .iter()
                .map(|&d| ResolutionLabel::DtDivisor(d))
                .collect(),
        }
    }
}

fn check_refining(values: impl Iterator<Item = u64>) -> Result<()> {
    let values: Vec<u64> = values.collect();
    if values.is_empty() {
        return Err(Error::InvalidParameter("no resolutions selected".into()));
    }
    if values.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidParameter(format!(
            "resolutions must be strictly refining, got {values:?}"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderTriple {
    pub l1: Option<f64>,
    pub l2: Option<f64>,
    pub linf: Option<f64>,
}

impl OrderTriple {
    pub fn get(&self, norm: Norm) -> Option<f64> {
        match norm {
            Norm::L1 => self.l1,
            Norm::L2 => self.l2,
            Norm::Linf => self.linf,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub label: ResolutionLabel,
    /// `None` when the integration diverged.
    pub norms: Option<NormTriple>,
    /// `None` on the first row or when either neighbour diverged.
    pub orders: Option<OrderTriple>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SchemeColumn {
    pub scheme: SchemeConfig,
    pub rows: Vec<ConvergenceRow>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub problem: Problem,
    pub t_final: f64,
    pub columns: Vec<SchemeColumn>,
}

impl SweepTable {
    pub fn column(&self, scheme: &SchemeConfig) -> Option<&SchemeColumn> {
        self.columns.iter().find(|c| &c.scheme == scheme)
    }
}

/// Integrates every (scheme, resolution) cell of `spec` and assembles the
/// error table. Cells run in parallel on the current rayon pool; the
/// result does not depend on scheduling.
pub fn run_sweep(spec: &SweepSpec, cache: &ReferenceCache) -> Result<SweepTable> {
    spec.validate()?;
    let labels = spec.labels();

    let reference = match &spec.refinement {
        Refinement::Temporal {
            cells,
            dt_base,
            reference_divisor,
            ..
        } => {
            let grid = Grid1D::new(*cells)?;
            let dt_ref = dt_base / *reference_divisor as f64;
            Some(cache.get_or_compute(&spec.problem, grid, dt_ref, spec.t_final)?)
        }
        Refinement::Spatial { .. } => None,
    };

    // Check every horizon up front so a bad spec fails as a whole.
    let plans: Vec<(Grid1D, f64, usize)> = labels
        .iter()
        .map(|&label| {
            let (grid, dt) = cell_grid_and_dt(spec, label)?;
            Ok((grid, dt, step_count(spec.t_final, dt)?))
        })
        .collect::<Result<_>>()?;

    let cells: Vec<(usize, usize)> = (0..spec.schemes.len())
        .flat_map(|s| (0..labels.len()).map(move |r| (s, r)))
        .collect();

    let outcomes: Vec<Result<Option<NormTriple>>> = cells
        .par_iter()
        .map(|&(s, r)| {
            let (grid, dt, steps) = plans[r];
            let u0 = initial_condition(grid);
            match integrate(&u0, &spec.schemes[s], &spec.problem, dt, steps) {
                Ok(u) => {
                    let reference = match &reference {
                        Some(f) => f.as_ref().clone(),
                        None => spec.problem.exact_field(grid, spec.t_final)?,
                    };
                    Ok(Some(error_norms(&u, &reference)?))
                }
                Err(e) if e.is_numerical() => Ok(None),
                Err(e) => Err(e),
            }
        })
        .collect();

    let mut outcomes = outcomes.into_iter();
    let mut columns = Vec::with_capacity(spec.schemes.len());
    for scheme in &spec.schemes {
        let mut rows: Vec<ConvergenceRow> = Vec::with_capacity(labels.len());
        for &label in &labels {
            let norms = outcomes.next().expect("one outcome per cell")?;
            let orders = match (rows.last(), norms) {
                (Some(prev), Some(fine)) => prev.norms.map(|coarse| {
                    let ratio = label.magnitude() / prev.label.magnitude();
                    let order = |n: Norm| {
                        observed_order_with_ratio(coarse.get(n), fine.get(n), ratio).ok()
                    };
                    OrderTriple {
                        l1: order(Norm::L1),
                        l2: order(Norm::L2),
                        linf: order(Norm::Linf),
                    }
                }),
                _ => None,
            };
            rows.push(ConvergenceRow {
                label,
                norms,
                orders,
            });
        }
        columns.push(SchemeColumn {
            scheme: *scheme,
            rows,
        });
    }

    Ok(SweepTable {
        problem: spec.problem,
        t_final: spec.t_final,
        columns,
    })
}

fn cell_grid_and_dt(spec: &SweepSpec, label: ResolutionLabel) -> Result<(Grid1D, f64)> {
    match (&spec.refinement, label) {
        (Refinement::Spatial { cfl, .. }, ResolutionLabel::Cells(n)) => {
            let grid = Grid1D::new(n)?;
            Ok((grid, cfl * grid.dx() / spec.problem.advection_speed().abs()))
        }
        (Refinement::Temporal { cells, dt_base, .. }, ResolutionLabel::DtDivisor(d)) => {
            Ok((Grid1D::new(*cells)?, dt_base / d as f64))
        }
        _ => unreachable!("labels are derived from the refinement"),
    }
}

/// Fine-step ICN solution of Burgers' equation from the standard initial
/// data, used in place of an exact solution.
pub fn burgers_reference(
    cells: usize,
    viscosity: f64,
    dt_fine: f64,
    t_final: f64,
) -> Result<Field> {
    let problem = Problem::burgers(viscosity)?;
    let grid = Grid1D::new(cells)?;
    reference_solution(&problem, grid, dt_fine, t_final)
}

fn reference_solution(problem: &Problem, grid: Grid1D, dt: f64, t_final: f64) -> Result<Field> {
    let steps = step_count(t_final, dt)?;
    let u0 = initial_condition(grid);
    integrate(&u0, &SchemeConfig::icn(), problem, dt, steps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct ReferenceKey {
    cells: usize,
    dt: u64,
    t_final: u64,
    viscosity: u64,
}

impl ReferenceKey {
    fn file_name(&self) -> String {
        format!(
            "burgers_ref_n{}_dt{:016x}_t{:016x}_nu{:016x}.csv",
            self.cells, self.dt, self.t_final, self.viscosity
        )
    }
}

type Slot = Arc<OnceLock<Result<Arc<Field>>>>;

/// Write-once store of reference solutions keyed by
/// (cells, dt, t_final, viscosity), optionally mirrored to CSV files.
///
/// Concurrent callers asking for the same key block on a single
/// computation.
#[derive(Debug, Default)]
pub struct ReferenceCache {
    dir: Option<PathBuf>,
    slots: Mutex<HashMap<ReferenceKey, Slot>>,
}

impl ReferenceCache {
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Cache backed by `dir`; existing reference files there are reused.
    pub fn persistent(dir: impl Into<PathBuf>) -> Self {
        Self {
            dir: Some(dir.into()),
            slots: Mutex::default(),
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn get_or_compute(
        &self,
        problem: &Problem,
        grid: Grid1D,
        dt: f64,
        t_final: f64,
    ) -> Result<Arc<Field>> {
        let Problem::Burgers { viscosity } = *problem else {
            return Err(Error::InvalidParameter(
                "reference solutions are only used for Burgers' equation".into(),
            ));
        };
        if grid.x_min() != 0.0 || grid.x_max() != 1.0 {
            return Err(Error::InvalidParameter(
                "reference solutions are computed on [0, 1)".into(),
            ));
        }
        let key = ReferenceKey {
            cells: grid.n(),
            dt: dt.to_bits(),
            t_final: t_final.to_bits(),
            viscosity: viscosity.to_bits(),
        };
        let slot = {
            let mut slots = self.slots.lock().unwrap_or_else(|e| e.into_inner());
            slots.entry(key).or_default().clone()
        };
        slot.get_or_init(|| self.load_or_compute(key, problem, grid, dt, t_final).map(Arc::new))
            .clone()
    }

    fn load_or_compute(
        &self,
        key: ReferenceKey,
        problem: &Problem,
        grid: Grid1D,
        dt: f64,
        t_final: f64,
    ) -> Result<Field> {
        let path = self.dir.as_ref().map(|d| d.join(key.file_name()));
        if let Some(path) = &path {
            if path.exists() {
                return read_reference(path, grid);
            }
        }
        let field = reference_solution(problem, grid, dt, t_final)?;
        if let Some(path) = &path {
            write_reference(path, &field)?;
        }
        Ok(field)
    }
}

/// Reference files store values in shortest round-trip notation so a reload
/// is bit-identical.
fn write_reference(path: &Path, field: &Field) -> Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    let grid = field.grid();
    let mut text = String::from("x,u\n");
    for (j, v) in field.values().iter().enumerate() {
        text.push_str(&format!("{:e},{:e}\n", grid.x(j), v));
    }
    let tmp = path.with_extension("csv.tmp");
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

fn read_reference(path: &Path, grid: Grid1D) -> Result<Field> {
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines();
    if lines.next() != Some("x,u") {
        return Err(Error::Io(format!("{}: bad header", path.display())));
    }
    let values = lines
        .map(|line| {
            line.split(',')
                .nth(1)
                .and_then(|v| v.parse::<f64>().ok())
                .ok_or_else(|| Error::Io(format!("{}: malformed row {line:?}", path.display())))
        })
        .collect::<Result<Vec<_>>>()?;
    Field::from_values(grid, values)
}

/// Numerical and reference solutions of a single run.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub numerical: Field,
    pub reference: Field,
    pub steps: usize,
}

impl Solution {
    pub fn norms(&self) -> NormTriple {
        error_norms(&self.numerical, &self.reference).expect("same grid")
    }
}

/// One integration to `t_final`, paired with the exact solution or, for
/// Burgers, an ICN run at `dt / reference_divisor`.
pub fn solve(
    problem: &Problem,
    scheme: &SchemeConfig,
    grid: Grid1D,
    dt: f64,
    t_final: f64,
    reference_divisor: u32,
    cache: &ReferenceCache,
) -> Result<Solution> {
    let steps = step_count(t_final, dt)?;
    let u0 = initial_condition(grid);
    let numerical = integrate(&u0, scheme, problem, dt, steps)?;
    let reference = if problem.has_exact_solution() {
        problem.exact_field(grid, t_final)?
    } else {
        if reference_divisor == 0 {
            return Err(Error::InvalidParameter("reference divisor must be positive".into()));
        }
        cache
            .get_or_compute(problem, grid, dt / reference_divisor as f64, t_final)?
            .as_ref()
            .clone()
    };
    Ok(Solution {
        numerical,
        reference,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn field(values: &[f64]) -> Field {
        Field::from_values(Grid1D::new(values.len()).unwrap(), values.to_vec()).unwrap()
    }

    #[test]
    fn norm_examples() {
        let n = error_norms(&field(&[0.3, 0.4, 0.0, 0.0]), &field(&[0.0; 4])).unwrap();
        assert!((n.l1 - 0.175).abs() < 1e-15);
        assert!((n.l2 - 0.125).abs() < 1e-15);
        assert_eq!(n.linf, 0.4);

        let u = field(&[0.1, -0.2, 0.3, 0.4, 0.5]);
        let z = error_norms(&u, &u).unwrap();
        assert_eq!((z.l1, z.l2, z.linf), (0.0, 0.0, 0.0));
    }

    #[test]
    fn norm_grid_mismatch() {
        assert_eq!(
            error_norms(&field(&[0.0; 4]), &field(&[0.0; 5])),
            Err(Error::GridMismatch)
        );
    }

    #[test]
    fn order_examples() {
        assert!((observed_order(1.6e-3, 7.9e-4).unwrap() - 1.0).abs() < 0.05);
        assert_eq!(observed_order(4.0e-4, 1.0e-4).unwrap(), 2.0);
        assert!((observed_order(1.5e-5, 2.6e-6).unwrap() - 2.5).abs() < 0.05);
        assert!(observed_order(0.0, 1e-4).is_err());
        assert!(observed_order(1e-4, -1.0).is_err());
    }

    #[test]
    fn step_count_checks_divisibility() {
        assert_eq!(step_count(1.0, 1.0 / 400.0).unwrap(), 400);
        assert_eq!(step_count(0.5, 0.5 / 200.0).unwrap(), 200);
        assert_eq!(step_count(0.0, 0.1).unwrap(), 0);
        assert!(matches!(
            step_count(1.0, 0.3),
            Err(Error::UnreachableHorizon { .. })
        ));
        assert!(step_count(1.0, 0.0).is_err());
    }

    #[test]
    fn burgers_reference_zero_horizon_is_initial_data() {
        let r = burgers_reference(30, 0.01, 1e-4, 0.0).unwrap();
        assert_eq!(r, initial_condition(Grid1D::new(30).unwrap()));
    }

    #[test]
    fn sweep_validation() {
        let mut spec = SweepSpec::benchmark(ProblemKind::LinearAdvection);
        spec.refinement = Refinement::Spatial {
            cells: vec![200, 100],
            cfl: 0.5,
        };
        assert!(run_sweep(&spec, &ReferenceCache::in_memory()).is_err());

        let mut spec = SweepSpec::benchmark(ProblemKind::LinearAdvection);
        spec.t_final = 0.123456789;
        assert!(matches!(
            run_sweep(&spec, &ReferenceCache::in_memory()),
            Err(Error::UnreachableHorizon { .. })
        ));

        let mut spec = SweepSpec::benchmark(ProblemKind::Burgers);
        spec.refinement = Refinement::Spatial {
            cells: vec![30, 60],
            cfl: 0.5,
        };
        assert!(spec.validate().is_err());
    }

    #[test]
    fn single_resolution_sweep_has_no_orders() {
        let mut spec = SweepSpec::benchmark(ProblemKind::LinearAdvection);
        spec.refinement = Refinement::Spatial {
            cells: vec![64],
            cfl: 0.5,
        };
        let table = run_sweep(&spec, &ReferenceCache::in_memory()).unwrap();
        assert_eq!(table.columns.len(), 5);
        for c in &table.columns {
            assert_eq!(c.rows.len(), 1);
            assert!(c.rows[0].norms.is_some());
            assert!(c.rows[0].orders.is_none());
        }
    }

    #[test]
    fn diverged_cell_does_not_abort_sweep() {
        // θ = 0 with CFL 2 is violently unstable for linear advection
        let spec = SweepSpec {
            problem: Problem::linear_advection(1.0),
            schemes: vec![SchemeConfig::icn(), SchemeConfig::theta(0.0).unwrap()],
            refinement: Refinement::Spatial {
                cells: vec![64, 128],
                cfl: 2.0,
            },
            t_final: 50.0,
        };
        let table = run_sweep(&spec, &ReferenceCache::in_memory()).unwrap();
        let theta = &table.columns[1];
        assert!(theta.rows.iter().all(|r| r.norms.is_none() && r.orders.is_none()));
    }

    #[test]
    fn cache_round_trips_through_disk() {
        let dir = tempfile::tempdir().unwrap();
        let p = Problem::burgers(0.01).unwrap();
        let g = Grid1D::new(16).unwrap();
        let dt = burgers_base_dt(&g) / 4.0;
        let first = ReferenceCache::persistent(dir.path())
            .get_or_compute(&p, g, dt, 0.25)
            .unwrap();
        let files: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
        assert_eq!(files.len(), 1);
        let again = ReferenceCache::persistent(dir.path())
            .get_or_compute(&p, g, dt, 0.25)
            .unwrap();
        assert_eq!(first, again);
        assert_eq!(*first, burgers_reference(16, 0.01, dt, 0.25).unwrap());
    }

    #[test]
    fn cache_rejects_non_burgers() {
        let g = Grid1D::new(16).unwrap();
        assert!(ReferenceCache::in_memory()
            .get_or_compute(&Problem::semilinear(), g, 0.01, 1.0)
            .is_err());
    }

    proptest! {
        #[test]
        fn norms_scale_linearly(
            v in prop::collection::vec(-1.0f64..1.0, 8),
            w in prop::collection::vec(-1.0f64..1.0, 8),
            alpha in -100.0f64..100.0,
        ) {
            let base = error_norms(&field(&v), &field(&w)).unwrap();
            let sv: Vec<f64> = v.iter().map(|x| alpha * x).collect();
            let sw: Vec<f64> = w.iter().map(|x| alpha * x).collect();
            let scaled = error_norms(&field(&sv), &field(&sw)).unwrap();
            for n in Norm::ALL {
                let expected = alpha.abs() * base.get(n);
                prop_assert!((scaled.get(n) - expected).abs() <= 1e-14 * expected.max(1e-300) * 4.0);
            }
        }

        #[test]
        fn max_dominates_mean(v in prop::collection::vec(-1.0f64..1.0, 4..50)) {
            let u = field(&v);
            let z = Field::zeros(u.grid());
            let n = error_norms(&u, &z).unwrap();
            // l1 / (N dx) is the mean absolute error; N dx = 1 here
            prop_assert!(n.linf >= n.l1 * (1.0 - 1e-15));
        }

        #[test]
        fn order_is_scale_invariant(a in 1e-10f64..1.0, b in 1e-10f64..1.0, s in 1e-3f64..1e3) {
            let o1 = observed_order(a, b).unwrap();
            let o2 = observed_order(a * s, b * s).unwrap();
            prop_assert!((o1 - o2).abs() <= 1e-9 * o1.abs().max(1.0));
        }
    }
}
