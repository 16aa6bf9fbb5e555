use super::basis::{cheb_vector, clenshaw};
use super::Cheb2;
use crate::error::Result;

/// `V_n(u)ᵀ · A · V_m(v)` with `V_ν(s) = (T_0(s), ..., T_ν(s))` and `(u, v)`
/// the image of `(x, y)` in `[-1, 1]²`.
pub fn evaluate_matrix(c: &Cheb2, x: f64, y: f64) -> Result<f64> {
    let (u, v) = c.domain().to_unit(x, y)?;
    let vx = cheb_vector(c.degree_x(), u)?;
    let vy = cheb_vector(c.degree_y(), v)?;
    let a = c.coeffs();
    Ok(vx
        .iter()
        .enumerate()
        .map(|(k, tx)| tx * a.row(k).iter().zip(&vy).map(|(akj, ty)| akj * ty).sum::<f64>())
        .sum())
}

/// Nested Clenshaw recurrences: each row collapses to a scalar in `v`, then
/// the row values are summed as a series in `u`.
pub fn evaluate_clenshaw(c: &Cheb2, x: f64, y: f64) -> Result<f64> {
    let (u, v) = c.domain().to_unit(x, y)?;
    let a = c.coeffs();
    let rows: Vec<f64> = (0..a.rows()).map(|k| clenshaw(a.row(k), v)).collect();
    Ok(clenshaw(&rows, u))
}
