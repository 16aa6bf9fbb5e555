//! Two-dimensional discrete Fourier transform.
//!
//! The forward transform is unscaled:
//!
//! ```text
//! y[r, s] = Σ_k Σ_j x[k, j] · exp(-2πi·k·r/p) · exp(-2πi·j·s/q)
//! ```
//!
//! [`dft2_naive`] evaluates the double sum directly and serves as the
//! reference for [`fft2`], which applies radix-2 transforms along rows and
//! then along columns.

use std::f64::consts::PI;
use std::ops::{Index, IndexMut};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense row-major complex matrix holding one period of a doubly periodic array.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidInput(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::InvalidInput(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        let m = ComplexMatrix { rows, cols, data };
        m.check_finite()?;
        Ok(m)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        ComplexMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    /// Builds a complex matrix with zero imaginary parts from row-major real data.
    pub fn from_real(rows: usize, cols: usize, values: &[f64]) -> Result<Self> {
        let data = values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        Self::new(rows, cols, data)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for k in 0..rows {
            for j in 0..cols {
                data.push(f(k, j));
            }
        }
        Self::new(rows, cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    fn check_finite(&self) -> Result<()> {
        match self.data.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            None => Ok(()),
            Some(idx) => Err(Error::InvalidInput(format!(
                "non-finite entry {} at ({}, {})",
                self.data[idx],
                idx / self.cols,
                idx % self.cols
            ))),
        }
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (k, j): (usize, usize)) -> &Complex64 {
        assert!(k < self.rows && j < self.cols, "index ({k}, {j}) out of bounds");
        &self.data[k * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (k, j): (usize, usize)) -> &mut Complex64 {
        assert!(k < self.rows && j < self.cols, "index ({k}, {j}) out of bounds");
        &mut self.data[k * self.cols + j]
    }
}

/// exp(-2πi·num/den), with `num` already reduced modulo `den`.
fn unit_root(num: usize, den: usize) -> Complex64 {
    let theta = -2.0 * PI * (num as f64) / (den as f64);
    Complex64::new(theta.cos(), theta.sin())
}

/// Direct O((pq)²) evaluation of the double sum. Reference implementation.
pub fn dft2_naive(input: &ComplexMatrix) -> Result<ComplexMatrix> {
    input.check_finite()?;
    let (p, q) = (input.rows, input.cols);
    let row_roots: Vec<Complex64> = (0..p).map(|t| unit_root(t, p)).collect();
    let col_roots: Vec<Complex64> = (0..q).map(|t| unit_root(t, q)).collect();

    let mut out = ComplexMatrix::zeros(p, q);
    for r in 0..p {
        for s in 0..q {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..p {
                let wk = row_roots[(k * r) % p];
                for j in 0..q {
                    acc += input[(k, j)] * wk * col_roots[(j * s) % q];
                }
            }
            out[(r, s)] = acc;
        }
    }
    Ok(out)
}

/// Fast two-dimensional transform for power-of-two shapes.
///
/// Same contract as [`dft2_naive`]; other shapes are rejected with
/// [`Error::UnsupportedSize`].
pub fn fft2(input: &ComplexMatrix) -> Result<ComplexMatrix> {
    let (p, q) = (input.rows, input.cols);
    if !p.is_power_of_two() || !q.is_power_of_two() {
        return Err(Error::UnsupportedSize { rows: p, cols: q });
    }
    input.check_finite()?;

    let mut out = input.clone();
    let row_plan = Radix2::new(q);
    for row in out.data.chunks_exact_mut(q) {
        row_plan.forward(row);
    }

    let col_plan = Radix2::new(p);
    let mut column = vec![Complex64::new(0.0, 0.0); p];
    for j in 0..q {
        for (k, c) in column.iter_mut().enumerate() {
            *c = out.data[k * q + j];
        }
        col_plan.forward(&mut column);
        for (k, c) in column.iter().enumerate() {
            out.data[k * q + j] = *c;
        }
    }
    Ok(out)
}

/// Iterative radix-2 decimation-in-time transform of a fixed length.
struct Radix2 {
    len: usize,
    twiddles: Vec<Complex64>,
}

impl Radix2 {
    fn new(len: usize) -> Self {
        debug_assert!(len.is_power_of_two());
        let twiddles = (0..len / 2).map(|t| unit_root(t, len)).collect();
        Radix2 { len, twiddles }
    }

    fn forward(&self, buf: &mut [Complex64]) {
        let n = self.len;
        debug_assert_eq!(buf.len(), n);
        if n < 2 {
            return;
        }

        let bits = n.trailing_zeros();
        for i in 0..n {
            let j = i.reverse_bits() >> (usize::BITS - bits);
            if j > i {
                buf.swap(i, j);
            }
        }

        let mut half = 1;
        while half < n {
            let stride = n / (2 * half);
            for start in (0..n).step_by(2 * half) {
                for t in 0..half {
                    let w = self.twiddles[t * stride];
                    let a = buf[start + t];
                    let b = buf[start + t + half] * w;
                    buf[start + t] = a + b;
                    buf[start + t + half] = a - b;
                }
            }
            half *= 2;
        }
    }
}
