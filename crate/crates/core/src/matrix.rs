use std::ops::{Index, IndexMut};

/// Dense row-major real matrix. Row index runs over x-degree, column index over y-degree.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl CoeffMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CoeffMatrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    /// Panics if `data.len() != rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        CoeffMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        CoeffMatrix {
            rows: r,
            cols: c,
            data: rows.concat(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for k in 0..rows {
            for j in 0..cols {
                data.push(f(k, j));
            }
        }
        CoeffMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, k: usize) -> &[f64] {
        &self.data[k * self.cols..(k + 1) * self.cols]
    }

    /// Entry (k, j), or 0 outside the stored shape.
    pub fn get_or_zero(&self, k: usize, j: usize) -> f64 {
        if k < self.rows && j < self.cols {
            self.data[k * self.cols + j]
        } else {
            0.0
        }
    }

    /// Leading `rows x cols` block, zero-padded when larger than `self`.
    pub fn resized(&self, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |k, j| self.get_or_zero(k, j))
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn iter_indexed(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        let cols = self.cols;
        self.data.iter().enumerate().map(move |(i, &v)| (i / cols, i % cols, v))
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}

impl Index<(usize, usize)> for CoeffMatrix {
    type Output = f64;

    fn index(&self, (k, j): (usize, usize)) -> &f64 {
        assert!(k < self.rows && j < self.cols, "index ({k}, {j}) out of bounds");
        &self.data[k * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CoeffMatrix {
    fn index_mut(&mut self, (k, j): (usize, usize)) -> &mut f64 {
        assert!(k < self.rows && j < self.cols, "index ({k}, {j}) out of bounds");
        &mut self.data[k * self.cols + j]
    }
}
