//! The ICN family of explicit steppers.
//!
//! Every variant performs one predictor and two corrector iterations over
//! a generic right-hand side `L`:
//!
//! ```text
//! p1 = u + dt L(u)            a1 = w1 p1 + (1 - w1) u
//! p2 = u + s dt L(a1)         a2 = w2 p2 + (1 - w2) u
//! u' = u + dt L(a2)
//! ```
//!
//! | variant        | w1  | s   | w2          |
//! |----------------|-----|-----|-------------|
//! | ICN            | ½   | 1   | ½           |
//! | θ-ICN          | θ   | 1   | θ           |
//! | swapped θ-ICN  | θ   | 1   | 1 − θ       |
//! | GA θ-ICN       | θ₁  | 2θ₁ | θ₂ = 1/(4θ₁)|
//! | AA θ-ICN       | θ_k | 1   | θ_k, with θ_k alternating θ_o, 1 − θ_o |
//!
//! All variants share one kernel, so the degenerate parameter choices
//! (θ = ½, θ₁ = ½, θ_o = ½) reproduce ICN bit for bit.
//!
//! For linear advection the staged updates collapse to seven-point
//! stencils; [`ga_linear_stencil`] and [`aa_linear_stencil`] evaluate those
//! closed forms directly and serve as independent checks on the steppers.

use crate::error::{Error, Result};
use crate::grid::{delta1, delta2, delta3, Field, Grid1D};
use crate::problems::SpatialOperator;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchemeVariant {
    Icn,
    ThetaIcn,
    SwappedThetaIcn,
    GeometricAveraging,
    ArithmeticAveraging,
}

impl SchemeVariant {
    pub fn name(self) -> &'static str {
        match self {
            SchemeVariant::Icn => "icn",
            SchemeVariant::ThetaIcn => "theta",
            SchemeVariant::SwappedThetaIcn => "swapped",
            SchemeVariant::GeometricAveraging => "ga",
            SchemeVariant::ArithmeticAveraging => "aa",
        }
    }
}

/// A validated scheme choice.
///
/// The second weight of GA (θ₂) and the even-step weight of AA (θ_e) are
/// always derived, never stored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchemeConfig {
    variant: SchemeVariant,
    param: f64,
}

impl SchemeConfig {
    pub fn icn() -> Self {
        Self {
            variant: SchemeVariant::Icn,
            param: 0.5,
        }
    }

    pub fn theta(theta: f64) -> Result<Self> {
        check_unit_weight(theta)?;
        Ok(Self {
            variant: SchemeVariant::ThetaIcn,
            param: theta,
        })
    }

    pub fn swapped(theta: f64) -> Result<Self> {
        check_unit_weight(theta)?;
        Ok(Self {
            variant: SchemeVariant::SwappedThetaIcn,
            param: theta,
        })
    }

    pub fn ga(theta1: f64) -> Result<Self> {
        check_theta1(theta1)?;
        Ok(Self {
            variant: SchemeVariant::GeometricAveraging,
            param: theta1,
        })
    }

    pub fn aa(theta_odd: f64) -> Result<Self> {
        check_unit_weight(theta_odd)?;
        Ok(Self {
            variant: SchemeVariant::ArithmeticAveraging,
            param: theta_odd,
        })
    }

    pub fn variant(&self) -> SchemeVariant {
        self.variant
    }

    /// θ for θ-ICN/swapped, θ₁ for GA, θ_o for AA, ½ for ICN.
    pub fn parameter(&self) -> f64 {
        self.param
    }

    /// θ₂ = 1/(4θ₁), only meaningful for GA.
    pub fn theta2(&self) -> Option<f64> {
        (self.variant == SchemeVariant::GeometricAveraging).then(|| ga_theta2(self.param))
    }

    /// θ_e = 1 − θ_o, only meaningful for AA.
    pub fn theta_even(&self) -> Option<f64> {
        (self.variant == SchemeVariant::ArithmeticAveraging).then_some(1.0 - self.param)
    }

    /// Short label used in tables, e.g. `ga(0.6)`.
    pub fn label(&self) -> String {
        match self.variant {
            SchemeVariant::Icn => "icn".to_string(),
            v => format!("{}({})", v.name(), self.param),
        }
    }

    /// Stage weights `(w1, s, w2)` for the step with the given index.
    fn stage_weights(&self, step_index: usize) -> (f64, f64, f64) {
        let p = self.param;
        match self.variant {
            SchemeVariant::Icn => (0.5, 1.0, 0.5),
            SchemeVariant::ThetaIcn => (p, 1.0, p),
            SchemeVariant::SwappedThetaIcn => (p, 1.0, 1.0 - p),
            SchemeVariant::GeometricAveraging => (p, 2.0 * p, ga_theta2(p)),
            SchemeVariant::ArithmeticAveraging => {
                let theta = aa_step_theta(p, step_index);
                (theta, 1.0, theta)
            }
        }
    }

    /// One step of the configured scheme.
    pub fn step<L>(&self, u: &Field, rhs: &L, ctx: StepContext) -> Result<Field>
    where
        L: SpatialOperator + ?Sized,
    {
        let (w1, s, w2) = self.stage_weights(ctx.step_index);
        let out = staged_step(u, rhs, ctx.dt, w1, s, w2);
        finite_or_diverged(out, Some(ctx.step_index))
    }
}

fn check_unit_weight(theta: f64) -> Result<()> {
    if (0.0..=1.0).contains(&theta) {
        Ok(())
    } else {
        Err(Error::InvalidTheta(theta))
    }
}

fn check_theta1(theta1: f64) -> Result<()> {
    if theta1.is_finite() && theta1 > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidTheta1(theta1))
    }
}

fn check_dt(dt: f64) -> Result<()> {
    if dt.is_finite() && dt > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidTimeStep(dt))
    }
}

fn ga_theta2(theta1: f64) -> f64 {
    1.0 / (4.0 * theta1)
}

/// Weight used by AA on step `step_index` (0-based). The first step of a
/// run is the "odd" step and uses θ_o.
fn aa_step_theta(theta_odd: f64, step_index: usize) -> f64 {
    if step_index.is_multiple_of(2) {
        theta_odd
    } else {
        1.0 - theta_odd
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepContext {
    pub dt: f64,
    pub step_index: usize,
}

impl StepContext {
    pub fn new(dt: f64, step_index: usize) -> Result<Self> {
        check_dt(dt)?;
        Ok(Self { dt, step_index })
    }
}

/// Halved Courant number `R = a dt / (2 dx)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CourantNumber(f64);

impl CourantNumber {
    pub fn new(speed: f64, dt: f64, grid: &Grid1D) -> Self {
        Self(speed * dt / (2.0 * grid.dx()))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

fn staged_step<L>(u: &Field, rhs: &L, dt: f64, w1: f64, scale: f64, w2: f64) -> Field
where
    L: SpatialOperator + ?Sized,
{
    let n = u.len();
    let base = u.values();
    let mut slope = vec![0.0; n];
    let mut avg = u.clone();

    rhs.apply(u, &mut slope);
    for ((a, &b), &k) in avg.values_mut().iter_mut().zip(base).zip(&slope) {
        let predicted = b + dt * k;
        *a = w1 * predicted + (1.0 - w1) * b;
    }

    rhs.apply(&avg, &mut slope);
    let dt2 = scale * dt;
    for ((a, &b), &k) in avg.values_mut().iter_mut().zip(base).zip(&slope) {
        let predicted = b + dt2 * k;
        *a = w2 * predicted + (1.0 - w2) * b;
    }

    rhs.apply(&avg, &mut slope);
    let next = base.iter().zip(&slope).map(|(&b, &k)| b + dt * k).collect();
    Field::from_raw(u.grid(), next)
}

fn finite_or_diverged(u: Field, step: Option<usize>) -> Result<Field> {
    if u.is_finite() {
        Ok(u)
    } else {
        Err(Error::StepDiverged { step })
    }
}

/// Standard ICN step (both averages weighted ½).
pub fn step_icn<L>(u: &Field, rhs: &L, dt: f64) -> Result<Field>
where
    L: SpatialOperator + ?Sized,
{
    check_dt(dt)?;
    finite_or_diverged(staged_step(u, rhs, dt, 0.5, 1.0, 0.5), None)
}

/// θ-ICN step; with `swapped` the second average uses `1 - theta` as the
/// weight of the predicted state.
pub fn step_theta_icn<L>(u: &Field, rhs: &L, dt: f64, theta: f64, swapped: bool) -> Result<Field>
where
    L: SpatialOperator + ?Sized,
{
    check_dt(dt)?;
    check_unit_weight(theta)?;
    let w2 = if swapped { 1.0 - theta } else { theta };
    finite_or_diverged(staged_step(u, rhs, dt, theta, 1.0, w2), None)
}

/// Geometric-averaging step with θ₂ = 1/(4θ₁). The second predictor
/// advances by `2 θ₁ dt`.
pub fn step_ga<L>(u: &Field, rhs: &L, dt: f64, theta1: f64) -> Result<Field>
where
    L: SpatialOperator + ?Sized,
{
    check_dt(dt)?;
    check_theta1(theta1)?;
    let out = staged_step(u, rhs, dt, theta1, 2.0 * theta1, ga_theta2(theta1));
    finite_or_diverged(out, None)
}

/// Arithmetic-averaging step. Even `step_index` values (0, 2, ...) use θ_o,
/// odd ones θ_e = 1 − θ_o.
pub fn step_aa<L>(u: &Field, rhs: &L, dt: f64, theta_odd: f64, step_index: usize) -> Result<Field>
where
    L: SpatialOperator + ?Sized,
{
    check_dt(dt)?;
    check_unit_weight(theta_odd)?;
    let theta = aa_step_theta(theta_odd, step_index);
    finite_or_diverged(staged_step(u, rhs, dt, theta, 1.0, theta), None)
}

/// Closed-form GA update for linear advection:
/// `u' = u - R δ¹u + 2θ₁θ₂R² δ²u - 2θ₁²θ₂R³ δ³u`.
pub fn ga_linear_stencil(u: &Field, courant: f64, theta1: f64, theta2: f64) -> Field {
    let r = courant;
    let c2 = 2.0 * theta1 * theta2 * r * r;
    let c3 = 2.0 * theta1 * theta1 * theta2 * r * r * r;
    u.map_nodes(|u, j| u[j] - r * delta1(u, j) + c2 * delta2(u, j) - c3 * delta3(u, j))
}

/// Closed-form single θ-ICN step (unswapped) for linear advection:
/// `u' = u - R δ¹u + θR² δ²u - θ²R³ δ³u`.
pub fn aa_linear_stencil(u: &Field, courant: f64, theta: f64) -> Field {
    let r = courant;
    let c2 = theta * r * r;
    let c3 = theta * theta * r * r * r;
    u.map_nodes(|u, j| u[j] - r * delta1(u, j) + c2 * delta2(u, j) - c3 * delta3(u, j))
}

/// Advances `u0` by `n_steps` steps of size `dt`, threading the step index
/// through for AA parity.
pub fn integrate<L>(
    u0: &Field,
    scheme: &SchemeConfig,
    rhs: &L,
    dt: f64,
    n_steps: usize,
) -> Result<Field>
where
    L: SpatialOperator + ?Sized,
{
    check_dt(dt)?;
    let mut u = u0.clone();
    for step_index in 0..n_steps {
        u = scheme.step(&u, rhs, StepContext { dt, step_index })?;
    }
    Ok(u)
}
