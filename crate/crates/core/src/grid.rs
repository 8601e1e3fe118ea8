//! Uniform periodic grid, nodal fields and the centered difference stencils
//! shared by every scheme.
//!
//! Node `j` sits at `x_min + j * dx` for `j = 0..n`; the right endpoint is
//! identified with the left one, so there is no duplicated node.

use std::ops::Index;

use crate::error::{Error, Result};

/// Smallest grid that keeps the ±3 stencil of [`delta3`] well defined.
pub const MIN_CELLS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    n: usize,
    x_min: f64,
    x_max: f64,
}

impl Grid1D {
    /// Periodic grid on `[0, 1)` with `n` nodes.
    pub fn new(n: usize) -> Result<Self> {
        Self::with_bounds(n, 0.0, 1.0)
    }

    pub fn with_bounds(n: usize, x_min: f64, x_max: f64) -> Result<Self> {
        if n < MIN_CELLS {
            return Err(Error::InvalidGrid(format!(
                "need at least {MIN_CELLS} cells, got {n}"
            )));
        }
        if !(x_min.is_finite() && x_max.is_finite() && x_max > x_min) {
            return Err(Error::InvalidGrid(format!(
                "bounds [{x_min}, {x_max}) are not an increasing finite interval"
            )));
        }
        Ok(Self { n, x_min, x_max })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn dx(&self) -> f64 {
        (self.x_max - self.x_min) / self.n as f64
    }

    /// Coordinate of node `j` (not wrapped).
    pub fn x(&self, j: usize) -> f64 {
        self.x_min + j as f64 * self.dx()
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(|j| self.x(j))
    }
}

/// `j mod n` mapped into `[0, n)`, negatives included.
pub fn wrap_index(j: isize, n: usize) -> usize {
    debug_assert!(n >= 1);
    j.rem_euclid(n as isize) as usize
}

/// Nodal values on a [`Grid1D`].
#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    grid: Grid1D,
    values: Vec<f64>,
}

impl Field {
    pub fn from_values(grid: Grid1D, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.n() {
            return Err(Error::FieldLength {
                len: values.len(),
                n: grid.n(),
            });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFiniteState);
        }
        Ok(Self { grid, values })
    }

    /// Samples `f` at every node.
    pub fn from_fn(grid: Grid1D, f: impl Fn(f64) -> f64) -> Self {
        let values = grid.nodes().map(f).collect();
        Self { grid, values }
    }

    pub fn zeros(grid: Grid1D) -> Self {
        Self {
            grid,
            values: vec![0.0; grid.n()],
        }
    }

    /// Builds a field without the finiteness check; steppers validate
    /// their final output instead of every stage.
    pub(crate) fn from_raw(grid: Grid1D, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), grid.n());
        Self { grid, values }
    }

    pub fn grid(&self) -> Grid1D {
        self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub(crate) fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at a possibly out-of-range index, wrapped periodically.
    #[inline]
    pub fn at(&self, j: isize) -> f64 {
        self.values[wrap_index(j, self.values.len())]
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Cyclic shift: result[j] = self[j - k].
    pub fn shifted(&self, k: isize) -> Self {
        let n = self.len();
        let values = (0..n as isize).map(|j| self.at(j - k)).collect();
        Self {
            grid: self.grid,
            values,
        }
    }

    /// Nodewise map, e.g. for applying a stencil at every node.
    pub fn map_nodes(&self, f: impl Fn(&Field, usize) -> f64) -> Self {
        let values = (0..self.len()).map(|j| f(self, j)).collect();
        Self {
            grid: self.grid,
            values,
        }
    }
}

impl Index<usize> for Field {
    type Output = f64;

    fn index(&self, j: usize) -> &f64 {
        &self.values[j]
    }
}

/// `u[j+1] - u[j-1]`
#[inline]
pub fn delta1(u: &Field, j: usize) -> f64 {
    let j = j as isize;
    u.at(j + 1) - u.at(j - 1)
}

/// `u[j+2] - 2 u[j] + u[j-2]`
#[inline]
pub fn delta2(u: &Field, j: usize) -> f64 {
    let j = j as isize;
    u.at(j + 2) - 2.0 * u.at(j) + u.at(j - 2)
}

/// `u[j+3] - 3 u[j+1] + 3 u[j-1] - u[j-3]`
#[inline]
pub fn delta3(u: &Field, j: usize) -> f64 {
    let j = j as isize;
    u.at(j + 3) - 3.0 * u.at(j + 1) + 3.0 * u.at(j - 1) - u.at(j - 3)
}

/// Centered second difference `(u[j+1] - 2 u[j] + u[j-1]) / dx²`.
#[inline]
pub fn second_derivative(u: &Field, j: usize, dx: f64) -> f64 {
    let j = j as isize;
    (u.at(j + 1) - 2.0 * u.at(j) + u.at(j - 1)) / (dx * dx)
}
