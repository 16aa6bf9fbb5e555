use std::f64::consts::PI;

use rayon::prelude::*;

use super::Domain2;
use crate::error::{Error, Result};
use crate::fft2d::{fft2, ComplexMatrix};
use crate::matrix::CoeffMatrix;

/// Samples of `f` on the periodicized Chebyshev grid
/// `(cos(2πk/m), cos(2πj/m))`, `k, j = 0..m-1`, mapped into the domain.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleGrid {
    size: usize,
    domain: Domain2,
    values: Vec<f64>,
}

impl SampleGrid {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn domain(&self) -> Domain2 {
        self.domain
    }

    pub fn get(&self, k: usize, j: usize) -> f64 {
        self.values[k * self.size + j]
    }

    /// Row-major values.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// `cos(2πk/m)` for `k = 0..m-1`, computed so that node `k` and node `m - k`
/// are bitwise equal and the quarter/half points are exactly `0` and `-1`.
pub fn chebyshev_angle_nodes(m: usize) -> Vec<f64> {
    let mf = m as f64;
    // cos(2πk/m) = sin(π(m - 4k) / 2m)
    let mut nodes: Vec<f64> = (0..=m / 2)
        .map(|k| ((mf - 4.0 * k as f64) * PI / (2.0 * mf)).sin())
        .collect();
    nodes.resize(m, 0.0);
    for k in m / 2 + 1..m {
        nodes[k] = nodes[m - k];
    }
    nodes
}

fn check_grid_size(m: usize) -> Result<()> {
    if m < 2 || !m.is_power_of_two() {
        return Err(Error::UnsupportedSize { rows: m, cols: m });
    }
    Ok(())
}

fn sample_row<F>(f: &F, k: usize, x: f64, ys: &[f64]) -> Result<Vec<f64>>
where
    F: Fn(f64, f64) -> f64 + ?Sized,
{
    ys.iter()
        .enumerate()
        .map(|(j, &y)| {
            let value = f(x, y);
            if value.is_finite() {
                Ok(value)
            } else {
                Err(Error::Sampling { k, j, x, y, value })
            }
        })
        .collect()
}

fn mapped_nodes(m: usize, domain: &Domain2) -> (Vec<f64>, Vec<f64>) {
    let nodes = chebyshev_angle_nodes(m);
    let xs = nodes.iter().map(|&u| domain.map_x(u)).collect();
    let ys = nodes.iter().map(|&v| domain.map_y(v)).collect();
    (xs, ys)
}

/// Samples `f` row by row on the `m x m` grid.
pub fn sample_grid<F>(f: F, m: usize, domain: Domain2) -> Result<SampleGrid>
where
    F: Fn(f64, f64) -> f64,
{
    check_grid_size(m)?;
    let (xs, ys) = mapped_nodes(m, &domain);
    let mut values = Vec::with_capacity(m * m);
    for (k, &x) in xs.iter().enumerate() {
        values.extend(sample_row(&f, k, x, &ys)?);
    }
    Ok(SampleGrid {
        size: m,
        domain,
        values,
    })
}

/// Like [`sample_grid`], but evaluates rows concurrently. `f` must be a pure
/// function; the result (including which error is reported) is identical to
/// the sequential version.
pub fn sample_grid_par<F>(f: F, m: usize, domain: Domain2) -> Result<SampleGrid>
where
    F: Fn(f64, f64) -> f64 + Sync,
{
    check_grid_size(m)?;
    let (xs, ys) = mapped_nodes(m, &domain);
    let rows: Vec<Result<Vec<f64>>> = xs
        .par_iter()
        .enumerate()
        .map(|(k, &x)| sample_row(&f, k, x, &ys))
        .collect();
    let mut values = Vec::with_capacity(m * m);
    for row in rows {
        values.extend(row?);
    }
    Ok(SampleGrid {
        size: m,
        domain,
        values,
    })
}

/// Trapezoid-rule Chebyshev coefficients of degree at most `n` in each variable.
///
/// With `g = fft2(samples) / m²`:
/// `α[0,0] = Re g[0,0]`, `α[k,0] = 2 Re g[k,0]`, `α[0,j] = 2 Re g[0,j]`,
/// `α[k,j] = 4 Re g[k,j]`. Requires `m >= 2(n + 1)` so the Nyquist index is
/// never part of the block.
pub fn coeffs_from_samples(grid: &SampleGrid, n: usize) -> Result<CoeffMatrix> {
    if n == 0 {
        return Err(Error::DegenerateDegree);
    }
    let m = grid.size;
    if m < 2 * (n + 1) {
        return Err(Error::InvalidInput(format!(
            "grid of size {m} cannot resolve degree {n}; need at least {}",
            2 * (n + 1)
        )));
    }
    let spectrum = fft2(&ComplexMatrix::from_real(m, m, &grid.values)?)?;
    let scale = 1.0 / (m as f64 * m as f64);
    Ok(CoeffMatrix::from_fn(n + 1, n + 1, |k, j| {
        let edge = match (k == 0, j == 0) {
            (true, true) => 1.0,
            (true, false) | (false, true) => 2.0,
            (false, false) => 4.0,
        };
        edge * spectrum[(k, j)].re * scale
    }))
}

/// Midpoint-rule estimate of the coefficient `α[k, j]` of `f` on `[-1, 1]²`,
/// computed straight from
///
/// ```text
/// α[k,j] = (4/π²) ∫₀^π ∫₀^π f(cos t, cos s) cos(kt) cos(js) dt ds
/// ```
///
/// (halved for `k = 0`, halved again for `j = 0`) with `nodes` points per axis.
pub fn coeffs_by_quadrature<F>(f: F, k: usize, j: usize, nodes: usize) -> Result<f64>
where
    F: Fn(f64, f64) -> f64,
{
    let needed = 4 * k.max(j) + 16;
    if nodes < needed {
        return Err(Error::InvalidInput(format!(
            "quadrature for index ({k}, {j}) needs at least {needed} nodes, got {nodes}"
        )));
    }
    let h = PI / nodes as f64;
    let angles: Vec<f64> = (0..nodes).map(|i| (i as f64 + 0.5) * h).collect();
    let mut acc = 0.0;
    for (a, &t) in angles.iter().enumerate() {
        let x = t.cos();
        let wt = (k as f64 * t).cos();
        for (b, &s) in angles.iter().enumerate() {
            let y = s.cos();
            let value = f(x, y);
            if !value.is_finite() {
                return Err(Error::Sampling {
                    k: a,
                    j: b,
                    x,
                    y,
                    value,
                });
            }
            acc += value * wt * (j as f64 * s).cos();
        }
    }
    let mut alpha = 4.0 / (PI * PI) * h * h * acc;
    if k == 0 {
        alpha *= 0.5;
    }
    if j == 0 {
        alpha *= 0.5;
    }
    Ok(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebcore::cheb_t;

    #[test]
    fn nodes_are_exactly_symmetric() {
        for m in [2, 4, 8, 64, 1024] {
            let nodes = chebyshev_angle_nodes(m);
            assert_eq!(nodes[0], 1.0);
            assert_eq!(nodes[m / 2], -1.0);
            if m >= 4 {
                assert_eq!(nodes[m / 4], 0.0);
            }
            for k in 1..m {
                assert_eq!(nodes[k].to_bits(), nodes[m - k].to_bits());
                let exact = (2.0 * PI * k as f64 / m as f64).cos();
                assert!((nodes[k] - exact).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn constant_function_samples() {
        let g = sample_grid(|_, _| 5.0, 4, Domain2::unit()).unwrap();
        assert_eq!(g.values(), &[5.0; 16]);
    }

    #[test]
    fn x_coordinate_pattern() {
        let g = sample_grid(|x, _| x, 4, Domain2::unit()).unwrap();
        for j in 0..4 {
            let column: Vec<f64> = (0..4).map(|k| g.get(k, j)).collect();
            assert_eq!(column, vec![1.0, 0.0, -1.0, 0.0]);
        }
    }

    #[test]
    fn cos_xy_matches_direct_evaluation() {
        let m = 16;
        let g = sample_grid(|x, y| (x * y).cos(), m, Domain2::unit()).unwrap();
        for k in 0..m {
            for j in 0..m {
                let x = (2.0 * PI * k as f64 / m as f64).cos();
                let y = (2.0 * PI * j as f64 / m as f64).cos();
                assert!((g.get(k, j) - (x * y).cos()).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn grid_symmetry_holds_bitwise() {
        let m = 32;
        let f = |x: f64, y: f64| (3.0 * x).sin() * (y * y).exp() + x * y;
        let g = sample_grid(f, m, Domain2::new(0.0, 2.0, -1.0, 4.0).unwrap()).unwrap();
        for k in 0..m {
            for j in 0..m {
                let v = g.get(k, j);
                assert_eq!(v, g.get((m - k) % m, j));
                assert_eq!(v, g.get(k, (m - j) % m));
            }
        }
    }

    #[test]
    fn parallel_sampling_is_identical() {
        let f = |x: f64, y: f64| (x - y).exp() * (5.0 * x * y).cos();
        let d = Domain2::new(-2.0, 1.0, 0.0, 3.0).unwrap();
        assert_eq!(sample_grid(f, 64, d).unwrap(), sample_grid_par(f, 64, d).unwrap());
    }

    #[test]
    fn sampling_errors_name_the_node() {
        let err = sample_grid(|x, _| 1.0 / x, 4, Domain2::unit()).unwrap_err();
        match err {
            Error::Sampling { k, j, x, value, .. } => {
                assert_eq!((k, j, x), (1, 0, 0.0));
                assert!(value.is_infinite());
            }
            other => panic!("unexpected {other:?}"),
        }
        let par = sample_grid_par(|x, _| 1.0 / x, 4, Domain2::unit()).unwrap_err();
        assert_eq!(par, err);
        assert!(sample_grid(|_, _| 1.0, 6, Domain2::unit()).is_err());
    }

    #[test]
    fn constant_coefficients() {
        let g = sample_grid(|_, _| 1.0, 16, Domain2::unit()).unwrap();
        let a = coeffs_from_samples(&g, 7).unwrap();
        assert!((a[(0, 0)] - 1.0).abs() < 1e-15);
        for (k, j, v) in a.iter_indexed() {
            if (k, j) != (0, 0) {
                assert!(v.abs() <= 1e-14);
            }
        }
    }

    #[test]
    fn product_polynomial_is_recovered() {
        let f = |x: f64, y: f64| cheb_t(2, x).unwrap() * cheb_t(3, y).unwrap();
        let g = sample_grid(f, 16, Domain2::unit()).unwrap();
        let a = coeffs_from_samples(&g, 7).unwrap();
        for (k, j, v) in a.iter_indexed() {
            let expected = if (k, j) == (2, 3) { 1.0 } else { 0.0 };
            assert!((v - expected).abs() <= 1e-12, "({k},{j}) = {v}");
        }
    }

    #[test]
    fn degree_must_fit_the_grid() {
        let g = sample_grid(|_, _| 1.0, 16, Domain2::unit()).unwrap();
        assert!(coeffs_from_samples(&g, 8).is_err());
        assert_eq!(coeffs_from_samples(&g, 0), Err(Error::DegenerateDegree));
    }

    #[test]
    fn quadrature_oracle_basics() {
        assert!((coeffs_by_quadrature(|_, _| 1.0, 0, 0, 16).unwrap() - 1.0).abs() < 1e-12);
        let t3 = |x: f64, _: f64| 4.0 * x * x * x - 3.0 * x;
        assert!((coeffs_by_quadrature(t3, 3, 0, 64).unwrap() - 1.0).abs() < 1e-10);
        assert!(coeffs_by_quadrature(t3, 3, 0, 20).is_err());
    }
}
