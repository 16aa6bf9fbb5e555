//! Bivariate Chebyshev approximants.
//!
//! An approximant on a rectangle `[xlo, xhi] x [ylo, yhi]` is the truncated series
//!
//! ```text
//! f(x, y) ≈ Σ_{k=0..n} Σ_{j=0..m} α[k, j] · T_k(u) · T_j(v)
//! ```
//!
//! where `(u, v)` is the affine image of `(x, y)` in `[-1, 1]²`. The
//! coefficients are trapezoid-rule estimates of the Fourier cosine
//! coefficients of `f(cos t, cos s)`, obtained from one two-dimensional FFT
//! per adaptive step.

mod basis;
mod build;
mod eval;
mod indicator;
mod sample;
mod sparse;

pub use basis::{cheb_t, cheb_vector, clenshaw};
pub use build::{build_adaptive, BuildOptions, TolMode, DEFAULT_INITIAL_N, DEFAULT_MAX_N, DEFAULT_TOL};
pub use eval::{evaluate_clenshaw, evaluate_matrix};
pub use indicator::parseval_indicator;
pub use sample::{
    chebyshev_angle_nodes, coeffs_by_quadrature, coeffs_from_samples, sample_grid, sample_grid_par, SampleGrid,
};
pub use sparse::{trim, DocumentError, SparseCoeffs};

use crate::error::{Error, Result};
use crate::matrix::CoeffMatrix;

/// Slack allowed when a point sits marginally outside the domain.
pub const DOMAIN_SLACK: f64 = 1e-12;

/// Axis-aligned rectangle on which an approximant lives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Domain2 {
    xlo: f64,
    xhi: f64,
    ylo: f64,
    yhi: f64,
}

impl Domain2 {
    pub fn new(xlo: f64, xhi: f64, ylo: f64, yhi: f64) -> Result<Self> {
        let finite = [xlo, xhi, ylo, yhi].iter().all(|v| v.is_finite());
        if !finite || xlo >= xhi || ylo >= yhi {
            return Err(Error::InvalidInput(format!(
                "invalid domain [{xlo}, {xhi}] x [{ylo}, {yhi}]"
            )));
        }
        Ok(Domain2 { xlo, xhi, ylo, yhi })
    }

    /// The reference square `[-1, 1]²`.
    pub const fn unit() -> Self {
        Domain2 {
            xlo: -1.0,
            xhi: 1.0,
            ylo: -1.0,
            yhi: 1.0,
        }
    }

    pub fn xlo(&self) -> f64 {
        self.xlo
    }
    pub fn xhi(&self) -> f64 {
        self.xhi
    }
    pub fn ylo(&self) -> f64 {
        self.ylo
    }
    pub fn yhi(&self) -> f64 {
        self.yhi
    }

    pub fn bounds(&self) -> [f64; 4] {
        [self.xlo, self.xhi, self.ylo, self.yhi]
    }

    pub fn width(&self) -> f64 {
        self.xhi - self.xlo
    }

    pub fn height(&self) -> f64 {
        self.yhi - self.ylo
    }

    /// Maps `u ∈ [-1, 1]` to `[xlo, xhi]`.
    pub fn map_x(&self, u: f64) -> f64 {
        0.5 * (self.xhi + self.xlo) + 0.5 * (self.xhi - self.xlo) * u
    }

    /// Maps `v ∈ [-1, 1]` to `[ylo, yhi]`.
    pub fn map_y(&self, v: f64) -> f64 {
        0.5 * (self.yhi + self.ylo) + 0.5 * (self.yhi - self.ylo) * v
    }

    /// Pulls a point of the rectangle back to `[-1, 1]²`, clamping overshoot up to
    /// [`DOMAIN_SLACK`].
    pub fn to_unit(&self, x: f64, y: f64) -> Result<(f64, f64)> {
        let u = (2.0 * x - (self.xhi + self.xlo)) / (self.xhi - self.xlo);
        let v = (2.0 * y - (self.yhi + self.ylo)) / (self.yhi - self.ylo);
        let inside = |w: f64| w.abs() <= 1.0 + DOMAIN_SLACK;
        if !(inside(u) && inside(v)) {
            return Err(Error::PointOutsideDomain {
                x,
                y,
                xlo: self.xlo,
                xhi: self.xhi,
                ylo: self.ylo,
                yhi: self.yhi,
            });
        }
        Ok((u.clamp(-1.0, 1.0), v.clamp(-1.0, 1.0)))
    }
}

impl Default for Domain2 {
    fn default() -> Self {
        Domain2::unit()
    }
}

/// A bivariate Chebyshev approximant with a dense `(degree_x + 1) x (degree_y + 1)`
/// coefficient matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Cheb2 {
    coeffs: CoeffMatrix,
    domain: Domain2,
    tol: f64,
}

impl Cheb2 {
    pub fn new(coeffs: CoeffMatrix, domain: Domain2, tol: f64) -> Result<Self> {
        if coeffs.rows() == 0 || coeffs.cols() == 0 {
            return Err(Error::InvalidInput("coefficient matrix must be non-empty".into()));
        }
        if !coeffs.all_finite() {
            return Err(Error::InvalidInput("coefficients must be finite".into()));
        }
        if !(tol.is_finite() && tol >= 0.0) {
            return Err(Error::InvalidInput(format!(
                "tolerance must be finite and >= 0, got {tol}"
            )));
        }
        Ok(Cheb2 { coeffs, domain, tol })
    }

    /// Approximant on `[-1, 1]²` with zero trim tolerance.
    pub fn from_coeffs(coeffs: CoeffMatrix) -> Result<Self> {
        Self::new(coeffs, Domain2::unit(), 0.0)
    }

    /// The constant function `c`.
    pub fn constant(c: f64, domain: Domain2) -> Result<Self> {
        Self::new(CoeffMatrix::from_vec(1, 1, vec![c]), domain, 0.0)
    }

    pub fn coeffs(&self) -> &CoeffMatrix {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize, j: usize) -> f64 {
        self.coeffs.get_or_zero(k, j)
    }

    pub fn degree_x(&self) -> usize {
        self.coeffs.rows() - 1
    }

    pub fn degree_y(&self) -> usize {
        self.coeffs.cols() - 1
    }

    pub fn domain(&self) -> Domain2 {
        self.domain
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn nonzeros(&self) -> usize {
        self.coeffs.as_slice().iter().filter(|v| **v != 0.0).count()
    }

    /// Keeps the leading `(nx + 1) x (ny + 1)` block (zero-padding if the
    /// approximant is smaller).
    pub fn truncated(&self, nx: usize, ny: usize) -> Cheb2 {
        Cheb2 {
            coeffs: self.coeffs.resized(nx + 1, ny + 1),
            domain: self.domain,
            tol: self.tol,
        }
    }

    /// Same as [`evaluate_matrix`].
    pub fn evaluate(&self, x: f64, y: f64) -> Result<f64> {
        evaluate_matrix(self, x, y)
    }

    /// Lossless sparse form: every nonzero coefficient is kept.
    pub fn to_sparse(&self) -> SparseCoeffs {
        let mut s = trim(&self.coeffs, 0.0);
        s.domain = self.domain;
        s.tol = self.tol;
        s
    }

    pub fn from_sparse(s: &SparseCoeffs) -> Cheb2 {
        let mut coeffs = CoeffMatrix::zeros(s.degree_x + 1, s.degree_y + 1);
        for &(k, j, v) in &s.entries {
            coeffs[(k, j)] = v;
        }
        Cheb2 {
            coeffs,
            domain: s.domain,
            tol: s.tol,
        }
    }
}

/// Bounds on the second derivatives of `f` over the domain.
///
/// `m20 >= max|f_xx|`, `m02 >= max|f_yy|`, `m11 >= max|f_xy|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayBounds {
    pub m20: f64,
    pub m02: f64,
    pub m11: f64,
}

/// A coefficient that exceeds its decay bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayViolation {
    pub k: usize,
    pub j: usize,
    pub value: f64,
    pub bound: f64,
}

impl DecayBounds {
    pub fn new(m20: f64, m02: f64, m11: f64) -> Result<Self> {
        if [m20, m02, m11].iter().any(|m| !m.is_finite() || *m < 0.0) {
            return Err(Error::InvalidInput(format!(
                "decay bounds must be finite and nonnegative, got ({m20}, {m02}, {m11})"
            )));
        }
        Ok(DecayBounds { m20, m02, m11 })
    }

    /// Checks the edge-row and edge-column decay estimates
    ///
    /// ```text
    /// |α[n,0]| <= 2 M20 / (n-1)²     |α[n,1]| <= 8 M20 / (π (n-1)²)
    /// |α[0,m]| <= 2 M02 / (m-1)²     |α[1,m]| <= 8 M02 / (π (m-1)²)
    /// ```
    ///
    /// for every stored `n, m > 1`. Returns the violating entries.
    pub fn violations(&self, c: &Cheb2) -> Vec<DecayViolation> {
        use std::f64::consts::PI;
        let mut out = Vec::new();
        let mut check = |k: usize, j: usize, bound: f64| {
            let value = c.coeff(k, j);
            if value.abs() > bound {
                out.push(DecayViolation { k, j, value, bound });
            }
        };
        for n in 2..=c.degree_x() {
            let d = ((n - 1) * (n - 1)) as f64;
            check(n, 0, 2.0 * self.m20 / d);
            check(n, 1, 8.0 * self.m20 / (PI * d));
        }
        for m in 2..=c.degree_y() {
            let d = ((m - 1) * (m - 1)) as f64;
            check(0, m, 2.0 * self.m02 / d);
            check(1, m, 8.0 * self.m02 / (PI * d));
        }
        out
    }
}
