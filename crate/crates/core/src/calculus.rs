//! Spectral differentiation and integration of [`Cheb2`] approximants.
//!
//! Derivative coefficients come from the truncated triangular system
//!
//! ```text
//! b[0,j] - b[2,j]/2          = α[1,j]
//! (b[k-1,j] - b[k+1,j]) / 2k = α[k,j],   k = 2..n
//! ```
//!
//! with `b[n,j] = b[n+1,j] = 0`, solved by backward substitution:
//! `b[k,j] = 2(k+1) α[k+1,j] + b[k+2,j]` for `k = n-1..1` and
//! `b[0,j] = α[1,j] + b[2,j]/2`. The result for ∂/∂x is stored as a `Cheb2`
//! of degree `(n-1, m)`; ∂/∂y is the same solve along the second index.

use crate::chebcore::Cheb2;
use crate::matrix::CoeffMatrix;

/// Solves the derivative system for one coefficient sequence `a[0..=n]`.
fn derivative_series(a: &[f64]) -> Vec<f64> {
    let n = a.len() - 1;
    if n == 0 {
        return vec![0.0];
    }
    let mut b = vec![0.0; n + 2];
    for k in (1..n).rev() {
        b[k] = 2.0 * (k + 1) as f64 * a[k + 1] + b[k + 2];
    }
    b[0] = a[1] + 0.5 * b[2];
    b.truncate(n);
    b
}

/// ∂/∂x of the approximant. A degree-0 input yields the zero function.
pub fn diff_x(c: &Cheb2) -> Cheb2 {
    let a = c.coeffs();
    let (rows, cols) = (a.rows(), a.cols());
    let scale = 2.0 / c.domain().width();
    let out_rows = rows.saturating_sub(1).max(1);
    let mut out = CoeffMatrix::zeros(out_rows, cols);
    let mut column = vec![0.0; rows];
    for j in 0..cols {
        for (k, v) in column.iter_mut().enumerate() {
            *v = a[(k, j)];
        }
        for (k, b) in derivative_series(&column).into_iter().enumerate() {
            out[(k, j)] = scale * b;
        }
    }
    Cheb2::new(out, c.domain(), c.tol()).expect("derivative of a finite series is finite")
}

/// ∂/∂y of the approximant. A degree-0 input yields the zero function.
pub fn diff_y(c: &Cheb2) -> Cheb2 {
    let a = c.coeffs();
    let (rows, cols) = (a.rows(), a.cols());
    let scale = 2.0 / c.domain().height();
    let out_cols = cols.saturating_sub(1).max(1);
    let mut out = CoeffMatrix::zeros(rows, out_cols);
    for k in 0..rows {
        for (j, b) in derivative_series(a.row(k)).into_iter().enumerate() {
            out[(k, j)] = scale * b;
        }
    }
    Cheb2::new(out, c.domain(), c.tol()).expect("derivative of a finite series is finite")
}

/// `∫_{-1}^{1} T_k(t) dt`: `2 / (1 - k²)` for even `k`, zero for odd `k`.
fn chebyshev_moment(k: usize) -> f64 {
    if k % 2 == 1 {
        0.0
    } else {
        let k = k as f64;
        2.0 / (1.0 - k * k)
    }
}

/// Integral of the approximant over its domain:
/// `Σ_{k,j even} 4 α[k,j] / ((1-k²)(1-j²))`, times the Jacobian of the affine map.
pub fn integrate(c: &Cheb2) -> f64 {
    let a = c.coeffs();
    let mut sum = 0.0;
    for k in (0..a.rows()).step_by(2) {
        let mk = chebyshev_moment(k);
        for j in (0..a.cols()).step_by(2) {
            sum += a[(k, j)] * mk * chebyshev_moment(j);
        }
    }
    let d = c.domain();
    sum * d.width() * d.height() / 4.0
}
