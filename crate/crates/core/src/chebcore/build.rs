use super::sample::{coeffs_from_samples, sample_grid, sample_grid_par};
use super::{Cheb2, Domain2};
use crate::error::{Error, Result};
use crate::matrix::CoeffMatrix;

pub const DEFAULT_TOL: f64 = 1e-15;
pub const DEFAULT_INITIAL_N: usize = 8;
pub const DEFAULT_MAX_N: usize = 1024;

/// How the trim threshold is interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TolMode {
    /// Coefficients below `tol` are negligible.
    #[default]
    Absolute,
    /// Coefficients below `tol * max|f|` (over the current sample grid) are negligible.
    Relative,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BuildOptions {
    pub tol: f64,
    pub tol_mode: TolMode,
    /// Starting block size; doubled until the block tail is negligible.
    pub initial_n: usize,
    /// Largest block size attempted.
    pub max_n: usize,
    pub domain: Domain2,
    /// Sample rows concurrently. Only valid for pure functions.
    pub parallel: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            tol: DEFAULT_TOL,
            tol_mode: TolMode::Absolute,
            initial_n: DEFAULT_INITIAL_N,
            max_n: DEFAULT_MAX_N,
            domain: Domain2::unit(),
            parallel: false,
        }
    }
}

impl BuildOptions {
    fn validate(&self) -> Result<()> {
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(Error::InvalidInput(format!("tol must be positive, got {}", self.tol)));
        }
        if self.initial_n < 2 || !self.initial_n.is_power_of_two() {
            return Err(Error::InvalidInput(format!(
                "initial block size must be a power of two >= 2, got {}",
                self.initial_n
            )));
        }
        if self.max_n < self.initial_n || !self.max_n.is_power_of_two() {
            return Err(Error::InvalidInput(format!(
                "max_n must be a power of two >= {}, got {}",
                self.initial_n, self.max_n
            )));
        }
        Ok(())
    }
}

/// Largest magnitude in the last two rows and last two columns of a square block.
fn block_tail(a: &CoeffMatrix) -> f64 {
    let n = a.rows();
    let lo = n.saturating_sub(2);
    a.iter_indexed()
        .filter(|&(k, j, _)| k >= lo || j >= lo)
        .fold(0.0, |m, (_, _, v)| m.max(v.abs()))
}

/// Zeroes every entry below `tol` and drops trailing all-zero rows and columns.
fn trim_dense(a: &CoeffMatrix, tol: f64) -> CoeffMatrix {
    let mut rows = 0;
    let mut cols = 0;
    for (k, j, v) in a.iter_indexed() {
        if v.abs() >= tol && v != 0.0 {
            rows = rows.max(k + 1);
            cols = cols.max(j + 1);
        }
    }
    CoeffMatrix::from_fn(rows.max(1), cols.max(1), |k, j| {
        let v = a.get_or_zero(k, j);
        if v.abs() < tol {
            0.0
        } else {
            v
        }
    })
}

/// Adaptive construction of the approximant.
///
/// For block size `n = initial_n, 2·initial_n, ...` the function is sampled on
/// the `2n x 2n` grid and the `n x n` block of trapezoid coefficients (degrees
/// `0..n-1`) is formed. The loop stops once the last two rows and the last two
/// columns of the block are all below the threshold. Negligible coefficients
/// are then zeroed and trailing zero rows/columns removed.
pub fn build_adaptive<F>(f: F, opts: &BuildOptions) -> Result<Cheb2>
where
    F: Fn(f64, f64) -> f64 + Sync,
{
    opts.validate()?;
    let mut n = opts.initial_n;
    loop {
        let m = 2 * n;
        let grid = if opts.parallel {
            sample_grid_par(&f, m, opts.domain)?
        } else {
            sample_grid(&f, m, opts.domain)?
        };
        let block = coeffs_from_samples(&grid, n - 1)?;
        let threshold = match opts.tol_mode {
            TolMode::Absolute => opts.tol,
            TolMode::Relative => opts.tol * grid.max_abs(),
        };
        let tail = block_tail(&block);
        if tail < threshold {
            return Cheb2::new(trim_dense(&block, threshold), opts.domain, threshold);
        }
        if n * 2 > opts.max_n {
            return Err(Error::NoConvergence {
                max_n: opts.max_n,
                tail,
            });
        }
        n *= 2;
    }
}
