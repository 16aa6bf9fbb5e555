use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported transform size {rows}x{cols}: both dimensions must be powers of two")]
    UnsupportedSize { rows: usize, cols: usize },

    #[error("argument {value} lies outside [{lo}, {hi}]")]
    OutOfDomain { value: f64, lo: f64, hi: f64 },

    #[error("point ({x}, {y}) lies outside the domain [{xlo}, {xhi}] x [{ylo}, {yhi}]")]
    PointOutsideDomain {
        x: f64,
        y: f64,
        xlo: f64,
        xhi: f64,
        ylo: f64,
        yhi: f64,
    },

    #[error("function is not finite at node ({k}, {j}) = ({x}, {y}): got {value}")]
    Sampling {
        k: usize,
        j: usize,
        x: f64,
        y: f64,
        value: f64,
    },

    #[error("no convergence below degree cap {max_n}: last coefficient block tail magnitude {tail:e}")]
    NoConvergence { max_n: usize, tail: f64 },

    #[error("degree must be at least 1")]
    DegenerateDegree,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
