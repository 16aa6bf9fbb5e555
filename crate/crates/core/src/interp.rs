//! Lagrange–Chebyshev interpolation on the Chebyshev–Lobatto product grid.
//!
//! On the nodes `x_k = cos(kπ/n)`, `y_l = cos(lπ/m)` the interpolant is
//! `L(x, y) = Σ_{i≤n} Σ_{j≤m} c[i,j] T_i(x) T_j(y)` with
//!
//! ```text
//! c[i,j] = 4/(nm) γ_{n,i} γ_{m,j} Σ_k Σ_l γ_{n,k} γ_{m,l} f(x_k, y_l) T_i(x_k) T_j(y_l)
//! ```
//!
//! where `γ = 1/2` at the two end nodes and `1` elsewhere.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use crate::chebcore::{Cheb2, Domain2};
use crate::error::{Error, Result};
use crate::matrix::CoeffMatrix;

/// Default bound on the fold counts `p, q` in [`aliasing_coeffs`].
pub const DEFAULT_ALIAS_CUTOFF: usize = 8;

/// Nodes `cos(iπ/n)`, `i = 0..=n`, and their discrete-orthogonality weights.
#[derive(Debug, Clone, PartialEq)]
pub struct LobattoGrid {
    n: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl LobattoGrid {
    pub fn degree(&self) -> usize {
        self.n
    }

    /// Strictly decreasing from 1 to -1.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// `γ_{n,i}`: 1/2 at `i ∈ {0, n}`, 1 otherwise.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Edge-scaling constant of the discrete orthogonality relation: the
    /// reciprocal pattern of the weights (1 at the ends, 1/2 inside), so that
    /// `Σ_k γ_k T_p(x_k) T_q(x_k) = n · edge_scale(p) · δ_pq`.
    pub fn edge_scale(&self, i: usize) -> f64 {
        if i == 0 || i == self.n {
            1.0
        } else {
            0.5
        }
    }

    /// `T_i(x_k) = cos(ikπ/n)`, evaluated with the angle reduced modulo 2π.
    fn basis_at_node(&self, i: usize, k: usize) -> f64 {
        let r = (i * k) % (2 * self.n);
        (PI * r as f64 / self.n as f64).cos()
    }
}

pub fn lobatto_grid(n: usize) -> Result<LobattoGrid> {
    if n == 0 {
        return Err(Error::DegenerateDegree);
    }
    // cos(iπ/n) = sin(π(n - 2i)/2n): exact zero at the midpoint and exact symmetry
    let nodes = (0..=n)
        .map(|i| {
            if 2 * i <= n {
                (PI * (n as f64 - 2.0 * i as f64) / (2.0 * n as f64)).sin()
            } else {
                -(PI * (2.0 * i as f64 - n as f64) / (2.0 * n as f64)).sin()
            }
        })
        .collect();
    let weights = (0..=n).map(|i| if i == 0 || i == n { 0.5 } else { 1.0 }).collect();
    Ok(LobattoGrid { n, nodes, weights })
}

/// Coefficients `c[i,j]` of a degree-`(n, m)` Chebyshev-basis polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct InterpCoeffs {
    pub c: CoeffMatrix,
}

impl InterpCoeffs {
    pub fn degree_x(&self) -> usize {
        self.c.rows() - 1
    }

    pub fn degree_y(&self) -> usize {
        self.c.cols() - 1
    }

    pub fn into_cheb2(self, domain: Domain2) -> Cheb2 {
        Cheb2::new(self.c, domain, 0.0).expect("interpolation coefficients are finite")
    }
}

/// Interpolation coefficients for `f` on `[-1, 1]²`.
pub fn lagrange_cheb_coeffs<F>(f: F, n: usize, m: usize) -> Result<InterpCoeffs>
where
    F: Fn(f64, f64) -> f64,
{
    lagrange_cheb_coeffs_on(f, n, m, Domain2::unit())
}

/// Interpolation coefficients for `f` on an arbitrary rectangle; the Lobatto
/// nodes are mapped affinely into `domain`.
pub fn lagrange_cheb_coeffs_on<F>(f: F, n: usize, m: usize, domain: Domain2) -> Result<InterpCoeffs>
where
    F: Fn(f64, f64) -> f64,
{
    let gx = lobatto_grid(n)?;
    let gy = lobatto_grid(m)?;

    let mut samples = CoeffMatrix::zeros(n + 1, m + 1);
    for (k, &u) in gx.nodes.iter().enumerate() {
        let x = domain.map_x(u);
        for (l, &v) in gy.nodes.iter().enumerate() {
            let y = domain.map_y(v);
            let value = f(x, y);
            if !value.is_finite() {
                return Err(Error::Sampling { k, j: l, x, y, value });
            }
            samples[(k, l)] = value;
        }
    }

    // inner[k, j] = Σ_l γ_l f(x_k, y_l) T_j(y_l)
    let inner = CoeffMatrix::from_fn(n + 1, m + 1, |k, j| {
        (0..=m)
            .map(|l| gy.weights[l] * samples[(k, l)] * gy.basis_at_node(j, l))
            .sum()
    });
    let scale = 4.0 / (n as f64 * m as f64);
    let c = CoeffMatrix::from_fn(n + 1, m + 1, |i, j| {
        let s: f64 = (0..=n)
            .map(|k| gx.weights[k] * gx.basis_at_node(i, k) * inner[(k, j)])
            .sum();
        scale * gx.weights[i] * gy.weights[j] * s
    });
    Ok(InterpCoeffs { c })
}

/// Series indices that alias onto index `i` on the degree-`n` Lobatto grid:
/// `2pn + i` for `p >= 0` and `2pn - i` for `p >= 1`, each listed once.
fn alias_indices(i: usize, n: usize, cutoff: usize) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for p in 0..=cutoff {
        out.insert(2 * p * n + i);
        if p >= 1 {
            out.insert(2 * p * n - i);
        }
    }
    out
}

/// Folds series coefficients onto the degree-`(n, m)` interpolation
/// coefficients:
///
/// ```text
/// c[i,j] = Σ α[2pn ± i, 2qm ± j]
/// ```
///
/// over `0 <= p, q <= cutoff`, all four sign combinations, every distinct
/// index pair counted once. Indices beyond `alpha`'s shape read as zero.
pub fn aliasing_coeffs(alpha: &CoeffMatrix, n: usize, m: usize, cutoff: usize) -> Result<InterpCoeffs> {
    if n == 0 || m == 0 {
        return Err(Error::DegenerateDegree);
    }
    let rows: Vec<BTreeSet<usize>> = (0..=n).map(|i| alias_indices(i, n, cutoff)).collect();
    let cols: Vec<BTreeSet<usize>> = (0..=m).map(|j| alias_indices(j, m, cutoff)).collect();
    let c = CoeffMatrix::from_fn(n + 1, m + 1, |i, j| {
        rows[i]
            .iter()
            .flat_map(|&k| cols[j].iter().map(move |&l| (k, l)))
            .map(|(k, l)| alpha.get_or_zero(k, l))
            .sum()
    });
    Ok(InterpCoeffs { c })
}

/// Tail mass `Σ_{i≤n, j>m} |α[i,j]| + Σ_{i>n, j≥0} |α[i,j]|`, which bounds
/// `|L_{n,m} - f_{n,m}|` uniformly on `[-1, 1]²`.
pub fn interp_error_bound_gap(alpha: &CoeffMatrix, n: usize, m: usize) -> f64 {
    alpha
        .iter_indexed()
        .filter(|&(i, j, _)| i > n || j > m)
        .map(|(_, _, v)| v.abs())
        .sum()
}
