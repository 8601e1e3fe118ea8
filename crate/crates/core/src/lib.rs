//! Explicit time integration of 1-D periodic PDEs with the iterated
//! Crank-Nicolson (ICN) family.
//!
//! Five steppers are provided, all with exactly two corrector iterations:
//!
//! - standard ICN (both averages weighted ½),
//! - θ-ICN (both averages weighted θ),
//! - swapped θ-ICN (θ, then 1 − θ),
//! - geometric-averaging θ-ICN, with per-iteration weights θ₁, θ₂ and
//!   θ₁θ₂ = ¼,
//! - arithmetic-averaging θ-ICN, alternating θ_o and θ_e = 1 − θ_o between
//!   consecutive steps.
//!
//! Around the steppers sit the three benchmark problems ([`problems`]),
//! von Neumann amplification factors and stability maps ([`stability`]), and
//! the convergence-study harness ([`analysis`]) that produces L1/L2/L∞ error
//! tables with observed orders.
//!
//! ```
//! use icn_lab::{grid::Grid1D, problems::{initial_condition, Problem}, schemes::{integrate, SchemeConfig}};
//!
//! let grid = Grid1D::new(200).unwrap();
//! let problem = Problem::linear_advection(1.0);
//! let u0 = initial_condition(grid);
//! let dt = 0.5 * grid.dx();
//! let u = integrate(&u0, &SchemeConfig::ga(0.6).unwrap(), &problem, dt, 200).unwrap();
//! assert_eq!(u.len(), 200);
//! ```

pub mod analysis;
pub mod cli;
pub mod error;
pub mod grid;
pub mod problems;
pub mod schemes;
pub mod stability;

pub use error::{Error, Result};
