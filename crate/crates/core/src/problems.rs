//! Benchmark problems written as semi-discrete systems `u_t = L(u)` on a
//! periodic grid, together with their shared initial data and closed-form
//! solutions where one exists.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::grid::{delta1, second_derivative, Field, Grid1D};

/// Right-hand side of a semi-discrete system.
///
/// `apply` writes `L(u)` into `out`, which has the same length as `u`.
pub trait SpatialOperator {
    fn apply(&self, u: &Field, out: &mut [f64]);
}

impl<F> SpatialOperator for F
where
    F: Fn(&Field, &mut [f64]),
{
    fn apply(&self, u: &Field, out: &mut [f64]) {
        self(u, out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProblemKind {
    LinearAdvection,
    SemiLinearAdvection,
    Burgers,
}

impl ProblemKind {
    pub fn name(self) -> &'static str {
        match self {
            ProblemKind::LinearAdvection => "linear",
            ProblemKind::SemiLinearAdvection => "semilinear",
            ProblemKind::Burgers => "burgers",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Problem {
    /// `u_t + a u_x = 0`
    LinearAdvection { speed: f64 },
    /// `u_t + u_x = -u²`
    SemiLinearAdvection,
    /// `u_t + (u²/2)_x = ν u_xx`, flux differenced in conservation form.
    Burgers { viscosity: f64 },
}

impl Problem {
    pub fn linear_advection(speed: f64) -> Self {
        Problem::LinearAdvection { speed }
    }

    pub fn semilinear() -> Self {
        Problem::SemiLinearAdvection
    }

    pub fn burgers(viscosity: f64) -> Result<Self> {
        if !(viscosity.is_finite() && viscosity > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "Burgers viscosity must be positive, got {viscosity}"
            )));
        }
        Ok(Problem::Burgers { viscosity })
    }

    pub fn kind(&self) -> ProblemKind {
        match self {
            Problem::LinearAdvection { .. } => ProblemKind::LinearAdvection,
            Problem::SemiLinearAdvection => ProblemKind::SemiLinearAdvection,
            Problem::Burgers { .. } => ProblemKind::Burgers,
        }
    }

    /// Transport speed of the hyperbolic part.
    pub fn advection_speed(&self) -> f64 {
        match *self {
            Problem::LinearAdvection { speed } => speed,
            Problem::SemiLinearAdvection => 1.0,
            Problem::Burgers { .. } => 1.0,
        }
    }

    pub fn has_exact_solution(&self) -> bool {
        !matches!(self, Problem::Burgers { .. })
    }

    /// `L(u)` as a new field; rejects non-finite input.
    pub fn rhs(&self, u: &Field) -> Result<Field> {
        if !u.is_finite() {
            return Err(Error::NonFiniteState);
        }
        let mut out = vec![0.0; u.len()];
        self.apply(u, &mut out);
        Ok(Field::from_raw(u.grid(), out))
    }

    pub fn exact_solution(&self, x: f64, t: f64) -> Result<f64> {
        match *self {
            Problem::LinearAdvection { speed } => Ok(sin2(x - speed * t)),
            Problem::SemiLinearAdvection => {
                let s = sin2(x - t);
                Ok(s / (1.0 + t * s))
            }
            Problem::Burgers { .. } => Err(Error::NoExactSolution),
        }
    }

    /// Exact solution sampled at the nodes of `grid`.
    pub fn exact_field(&self, grid: Grid1D, t: f64) -> Result<Field> {
        let values = grid
            .nodes()
            .map(|x| self.exact_solution(x, t))
            .collect::<Result<Vec<_>>>()?;
        Field::from_values(grid, values)
    }
}

impl SpatialOperator for Problem {
    fn apply(&self, u: &Field, out: &mut [f64]) {
        let dx = u.grid().dx();
        let inv_2dx = 1.0 / (2.0 * dx);
        match *self {
            Problem::LinearAdvection { speed } => {
                for (j, o) in out.iter_mut().enumerate() {
                    *o = -speed * delta1(u, j) * inv_2dx;
                }
            }
            Problem::SemiLinearAdvection => {
                for (j, o) in out.iter_mut().enumerate() {
                    *o = -delta1(u, j) * inv_2dx - u[j] * u[j];
                }
            }
            Problem::Burgers { viscosity } => {
                let flux = |v: f64| 0.5 * v * v;
                for (j, o) in out.iter_mut().enumerate() {
                    let jj = j as isize;
                    let dflux = flux(u.at(jj + 1)) - flux(u.at(jj - 1));
                    *o = -dflux * inv_2dx + viscosity * second_derivative(u, j, dx);
                }
            }
        }
    }
}

/// `sin²(πx)` at every node; the initial data of all three problems.
pub fn initial_condition(grid: Grid1D) -> Field {
    Field::from_fn(grid, sin2)
}

fn sin2(x: f64) -> f64 {
    let s = (PI * x).sin();
    s * s
}
