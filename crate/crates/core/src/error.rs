use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("field length {len} does not match grid size {n}")]
    FieldLength { len: usize, n: usize },

    #[error("non-finite state")]
    NonFiniteState,

    #[error("step diverged{}", .step.map(|s| format!(" at step {s}")).unwrap_or_default())]
    StepDiverged { step: Option<usize> },

    #[error("invalid theta {0}: must lie in [0, 1]")]
    InvalidTheta(f64),

    #[error("invalid theta1 {0}: must be positive")]
    InvalidTheta1(f64),

    #[error("invalid time step {0}: must be finite and positive")]
    InvalidTimeStep(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no closed-form exact solution")]
    NoExactSolution,

    #[error("grid mismatch between fields")]
    GridMismatch,

    #[error("order undefined for errors {coarse} and {fine}")]
    OrderUndefined { coarse: f64, fine: f64 },

    #[error("t_final not reachable with uniform steps (t_final = {t_final}, dt = {dt})")]
    UnreachableHorizon { t_final: f64, dt: f64 },

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    /// True for failures caused by the numerics rather than by bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::NonFiniteState | Error::StepDiverged { .. })
    }
}
