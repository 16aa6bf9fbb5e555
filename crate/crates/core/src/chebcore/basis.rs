use crate::error::{Error, Result};

const ARG_SLACK: f64 = 1e-12;

fn check_arg(x: f64) -> Result<f64> {
    if x.is_finite() && x.abs() <= 1.0 + ARG_SLACK {
        Ok(x.clamp(-1.0, 1.0))
    } else {
        Err(Error::OutOfDomain {
            value: x,
            lo: -1.0,
            hi: 1.0,
        })
    }
}

/// Chebyshev polynomial `T_k(x)` by the three-term recurrence.
pub fn cheb_t(k: usize, x: f64) -> Result<f64> {
    let x = check_arg(x)?;
    let (mut prev, mut cur) = (1.0, x);
    if k == 0 {
        return Ok(prev);
    }
    for _ in 1..k {
        let next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `[T_0(x), T_1(x), ..., T_n(x)]`.
pub fn cheb_vector(n: usize, x: f64) -> Result<Vec<f64>> {
    let x = check_arg(x)?;
    let mut v = Vec::with_capacity(n + 1);
    v.push(1.0);
    if n >= 1 {
        v.push(x);
    }
    for k in 2..=n {
        let next = 2.0 * x * v[k - 1] - v[k - 2];
        v.push(next);
    }
    Ok(v)
}

/// Evaluates `Σ c[k] T_k(x)` by Clenshaw's backward recurrence.
///
/// No domain check: `x` is expected in `[-1, 1]`.
pub fn clenshaw(c: &[f64], x: f64) -> f64 {
    let (mut b1, mut b2) = (0.0, 0.0);
    for &ck in c.iter().skip(1).rev() {
        let b0 = ck + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    match c.first() {
        Some(&c0) => c0 + x * b1 - b2,
        None => 0.0,
    }
}
