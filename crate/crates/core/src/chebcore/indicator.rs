use super::sample::sample_grid;
use super::Cheb2;
use crate::error::Result;

/// Grid size the builder would have used last for an approximant of this degree.
fn final_grid_size(c: &Cheb2) -> usize {
    let degree = c.degree_x().max(c.degree_y());
    2 * (degree + 1).next_power_of_two().max(super::DEFAULT_INITIAL_N)
}

/// Weighted L² mass of `f` not captured by the coefficients of `c`:
///
/// ```text
/// (1/π²) ∬ f² / (√(1-x²) √(1-y²))
///     - (α[0,0]² + ½ Σ_{k≥1} α[k,0]² + ½ Σ_{j≥1} α[0,j]² + ¼ Σ_{k,j≥1} α[k,j]²)
/// ```
///
/// The weighted integral is the `(0, 0)` trapezoid coefficient of
/// `f(cos t, cos s)²` on a grid twice as fine as the final build grid.
/// Rounding can make the result slightly negative; it is returned unchanged.
pub fn parseval_indicator<F>(c: &Cheb2, f: F) -> Result<f64>
where
    F: Fn(f64, f64) -> f64,
{
    let m = 2 * final_grid_size(c);
    let grid = sample_grid(f, m, c.domain())?;
    let mass = grid.values().iter().map(|v| v * v).sum::<f64>() / (m as f64 * m as f64);

    let captured: f64 = c
        .coeffs()
        .iter_indexed()
        .map(|(k, j, a)| {
            let w = match (k == 0, j == 0) {
                (true, true) => 1.0,
                (true, false) | (false, true) => 0.5,
                (false, false) => 0.25,
            };
            w * a * a
        })
        .sum();
    Ok(mass - captured)
}
