//! Bivariate Chebyshev approximation on rectangles.
//!
//! Approximants are built adaptively from samples on the periodicized
//! Chebyshev grid through a two-dimensional FFT, stored as dense or sparse
//! coefficient matrices, and support evaluation, differentiation,
//! integration and Lagrange–Chebyshev interpolation.
//!
//! ```
//! use cheb2::chebcore::{build_adaptive, BuildOptions};
//! use cheb2::calculus::integrate;
//!
//! let f = |x: f64, y: f64| (x * y).cos();
//! let approx = build_adaptive(f, &BuildOptions::default()).unwrap();
//! assert!((approx.evaluate(0.3, -0.4).unwrap() - f(0.3, -0.4)).abs() < 1e-14);
//! assert!((integrate(&approx) - 3.784332281468732).abs() < 1e-12);
//! ```

pub mod calculus;
pub mod chebcore;
pub mod error;
pub mod expr;
pub mod fft2d;
pub mod interp;
pub mod matrix;

pub use chebcore::{Cheb2, Domain2, SparseCoeffs};
pub use error::{Error, Result};
pub use matrix::CoeffMatrix;
