//! Error type shared across the crate.

use std::fmt;

#[derive(Debug)]
pub enum Error {
    /// Grid construction rejected (n too small, bad mesh, ...).
    InvalidGrid(String),
    /// A scalar parameter is out of its admissible range.
    InvalidParameter(String),
    /// Two grid objects with different shapes were combined.
    ShapeMismatch { left: usize, right: usize },
    /// `normalize01` on a constant field.
    DegenerateRange,
    /// A value that must be finite is NaN or infinite.
    NonFinite(&'static str),
    /// An operation that needs a nonzero field received the zero field.
    ZeroField(&'static str),
    /// The periodic problem `(L + V) u = 1` has no solution (`mean(V) = 0`).
    SingularProblem,
    /// `effective_potential` hit `u(x) <= 0`.
    PositivityViolated { x: usize, y: usize, value: f64 },
    /// Dense oracle guard: the grid is too large to assemble.
    GridTooLarge { n: usize, limit: usize },
    /// Iterative linear solve ran out of iterations.
    NoConvergence { iterations: usize, residual: f64 },
    /// Eigensolver ran out of iterations; carries per-pair residuals.
    EigenNoConvergence {
        iterations: usize,
        residuals: Vec<f64>,
    },
    /// An aggregate over an empty collection.
    Empty(&'static str),
    Io(std::io::Error),
    /// Malformed field or CSV file.
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidGrid(msg) => write!(f, "invalid grid: {msg}"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::ShapeMismatch { left, right } => {
                write!(f, "shape mismatch: n={left} vs n={right}")
            }
            Error::DegenerateRange => write!(f, "degenerate range: field is constant"),
            Error::NonFinite(what) => write!(f, "non-finite value in {what}"),
            Error::ZeroField(what) => write!(f, "zero field passed to {what}"),
            Error::SingularProblem => {
                write!(f, "singular problem: mean(V) = 0 on the periodic grid")
            }
            Error::PositivityViolated { x, y, value } => {
                write!(f, "positivity violated: u({x},{y}) = {value} <= 0")
            }
            Error::GridTooLarge { n, limit } => {
                write!(f, "grid too large for dense assembly: n={n} > {limit}")
            }
            Error::NoConvergence {
                iterations,
                residual,
            } => write!(
                f,
                "no convergence after {iterations} iterations (residual {residual:e})"
            ),
            Error::EigenNoConvergence {
                iterations,
                residuals,
            } => {
                let worst = residuals.iter().cloned().fold(0.0_f64, f64::max);
                write!(
                    f,
                    "eigensolver did not converge after {iterations} iterations \
                     (worst residual {worst:e}, {} pairs)",
                    residuals.len()
                )
            }
            Error::Empty(what) => write!(f, "empty input to {what}"),
            Error::Io(err) => write!(f, "i/o error: {err}"),
            Error::Format(msg) => write!(f, "format error: {msg}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(err) => Some(err),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err)
    }
}
