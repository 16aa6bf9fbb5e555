//! Acceptance suite. Each criterion prints one `PASS`/`FAIL` line; the process
//! exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cheb2::calculus::{diff_x, diff_y, integrate};
use cheb2::chebcore::{build_adaptive, coeffs_by_quadrature, parseval_indicator, BuildOptions, DecayBounds};
use cheb2::fft2d::{dft2_naive, fft2, ComplexMatrix};
use cheb2::interp::{
    aliasing_coeffs, interp_error_bound_gap, lagrange_cheb_coeffs, lobatto_grid, DEFAULT_ALIAS_CUTOFF,
};
use cheb2::{Cheb2, CoeffMatrix, Domain2, SparseCoeffs};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn cos_xy(x: f64, y: f64) -> f64 {
    (x * y).cos()
}

fn example2(x: f64, y: f64) -> f64 {
    (10.0 * x * y * y).cos() + (-x * x).exp()
}

fn build(f: fn(f64, f64) -> f64) -> Cheb2 {
    build_adaptive(f, &BuildOptions::default()).expect("build converges")
}

fn check(ok: bool, msg: String) -> Outcome {
    if ok {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn within_time(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    check(t < limit, format!("{t:?}"))
        .map(|_| ())
        .map_err(|t| format!("took {t}, limit {limit:?}"))
}

/// `linspace(lo, hi, n)` per axis.
fn grid(lo: f64, hi: f64, n: usize) -> Vec<(f64, f64)> {
    let pts: Vec<f64> = (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect();
    pts.iter().flat_map(|&x| pts.iter().map(move |&y| (x, y))).collect()
}

fn max_error(c: &Cheb2, f: impl Fn(f64, f64) -> f64, pts: &[(f64, f64)]) -> f64 {
    pts.iter()
        .map(|&(x, y)| (c.evaluate(x, y).unwrap() - f(x, y)).abs())
        .fold(0.0, f64::max)
}

fn coefficient_table() -> Outcome {
    let start = Instant::now();
    let c = build(cos_xy);
    within_time(Duration::from_secs(1), start)?;
    let expected = [
        ((0, 0), 0.880725579),
        ((2, 0), -0.117388011),
        ((0, 2), -0.117388011),
        ((2, 2), -0.114883808),
        ((4, 0), 0.001873213),
        ((0, 4), 0.001873213),
        ((4, 2), 0.002484444),
        ((2, 4), 0.002484444),
        ((4, 4), 0.000603385),
    ];
    let table_err = expected
        .iter()
        .map(|&((k, j), v)| (c.coeff(k, j) - v).abs())
        .fold(0.0, f64::max);
    let odd_max = c
        .coeffs()
        .iter_indexed()
        .filter(|&(k, j, _)| k % 2 == 1 || j % 2 == 1)
        .map(|(_, _, v)| v.abs())
        .fold(0.0, f64::max);
    check(
        table_err <= 1e-6 && odd_max <= 1e-12,
        format!("max table deviation {table_err:.3e}, max odd-index entry {odd_max:.3e}"),
    )
}

fn truncation_error() -> Outcome {
    let start = Instant::now();
    let c = build(cos_xy);
    let pts = grid(0.0, 1.0, 50);
    let truncated = max_error(&c.truncated(4, 4), cos_xy, &pts);
    let full = max_error(&c, cos_xy, &pts);
    within_time(Duration::from_secs(1), start)?;
    check(
        (truncated - 0.000082141).abs() <= 2e-5 && full <= 1e-10,
        format!("5x5 max error {truncated:.6e}, full max error {full:.3e}"),
    )
}

fn quadrature() -> Outcome {
    let start = Instant::now();
    let exact = 3.78433228147;
    let i1 = integrate(&build(cos_xy));
    let i2 = integrate(&build(example2));
    within_time(Duration::from_secs(2), start)?;
    check(
        (i1 - exact).abs() <= 1e-4 && (3.784330902f64 - exact).abs() <= 1e-4 && (i2 - 4.590369905).abs() <= 1e-6,
        format!("cos(xy) {i1:.12}, example 2 {i2:.10}"),
    )
}

fn adaptive_sizing() -> Outcome {
    let c = build(example2);
    let (dx, dy) = (c.degree_x(), c.degree_y());
    let band = 25..=70;
    check(
        band.contains(&dx) && band.contains(&dy),
        format!("retained block {}x{} (degrees {dx}, {dy})", dx + 1, dy + 1),
    )
}

fn indicator() -> Outcome {
    let c = build(cos_xy).truncated(4, 4);
    let truncated = parseval_indicator(&c, cos_xy).map_err(|e| e.to_string())?;
    let ratio = truncated / 3.97247e-10;
    let full = parseval_indicator(&build(example2), example2).map_err(|e| e.to_string())?;
    check(
        (0.1..=10.0).contains(&ratio) && full <= 1e-12,
        format!("truncated cos(xy) {truncated:.5e}, example 2 {full:.3e}"),
    )
}

fn fft_vs_naive() -> Result<f64, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst: f64 = 0.0;
    for p in (0..=6).map(|e| 1usize << e) {
        for q in (0..=6).map(|e| 1usize << e) {
            let a = ComplexMatrix::from_fn(p, q, |_, _| {
                Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
            })
            .map_err(|e| e.to_string())?;
            let (fast, slow) = (fft2(&a).unwrap(), dft2_naive(&a).unwrap());
            for (u, v) in fast.as_slice().iter().zip(slow.as_slice()) {
                worst = worst.max((u - v).norm());
            }
        }
    }
    Ok(worst)
}

fn fft_vs_quadrature() -> f64 {
    let cases: [fn(f64, f64) -> f64; 3] = [cos_xy, |x, y| (x * y).exp(), |x, y| x.powi(3) * y * y];
    let mut worst: f64 = 0.0;
    for f in cases {
        let c = build(f);
        for k in 0..=c.degree_x().min(12) {
            for j in 0..=c.degree_y().min(12) {
                worst = worst.max((c.coeff(k, j) - coeffs_by_quadrature(f, k, j, 512).unwrap()).abs());
            }
        }
    }
    worst
}

fn recurrence_residual(c: &Cheb2) -> f64 {
    let (bx, by) = (diff_x(c), diff_y(c));
    let mut worst: f64 = 0.0;
    for j in 0..=c.degree_y() {
        worst = worst.max((bx.coeff(0, j) - bx.coeff(2, j) / 2.0 - c.coeff(1, j)).abs());
        for k in 2..=c.degree_x() {
            let lhs = (bx.coeff(k - 1, j) - bx.coeff(k + 1, j)) / (2 * k) as f64;
            worst = worst.max((lhs - c.coeff(k, j)).abs());
        }
    }
    for k in 0..=c.degree_x() {
        worst = worst.max((by.coeff(k, 0) - by.coeff(k, 2) / 2.0 - c.coeff(k, 1)).abs());
        for j in 2..=c.degree_y() {
            let lhs = (by.coeff(k, j - 1) - by.coeff(k, j + 1)) / (2 * j) as f64;
            worst = worst.max((lhs - c.coeff(k, j)).abs());
        }
    }
    worst
}

fn mixed_partial_gap(c: &Cheb2) -> f64 {
    let (xy, yx) = (diff_y(&diff_x(c)), diff_x(&diff_y(c)));
    xy.coeffs()
        .iter_indexed()
        .map(|(k, j, v)| (v - yx.coeff(k, j)).abs())
        .fold(0.0, f64::max)
}

fn node_residual() -> f64 {
    let f = |x: f64, y: f64| (x * y).cos() + (x - 2.0 * y).sin();
    let mut worst: f64 = 0.0;
    for (n, m) in [(1, 1), (3, 5), (8, 8), (16, 9), (32, 32)] {
        let c = lagrange_cheb_coeffs(f, n, m).unwrap().into_cheb2(Domain2::unit());
        for &x in lobatto_grid(n).unwrap().nodes() {
            for &y in lobatto_grid(m).unwrap().nodes() {
                worst = worst.max((c.evaluate(x, y).unwrap() - f(x, y)).abs());
            }
        }
    }
    worst
}

fn aliasing_gap() -> f64 {
    let cases: [fn(f64, f64) -> f64; 2] = [cos_xy, |x, y| (x + 0.5 * y).exp()];
    let mut worst: f64 = 0.0;
    for f in cases {
        let alpha = build(f).coeffs().clone();
        for (n, m) in [(2, 2), (4, 4), (3, 6), (8, 5)] {
            let folded = aliasing_coeffs(&alpha, n, m, DEFAULT_ALIAS_CUTOFF).unwrap().c;
            let direct = lagrange_cheb_coeffs(f, n, m).unwrap().c;
            for (k, j, v) in direct.iter_indexed() {
                worst = worst.max((v - folded[(k, j)]).abs());
            }
        }
    }
    worst
}

fn round_trip_is_bitwise() -> bool {
    [build(cos_xy), build(example2)].iter().all(|c| {
        let sparse = c.to_sparse();
        let doc = sparse.to_document();
        let back = SparseCoeffs::from_document(&doc).unwrap();
        let bits = |s: &SparseCoeffs| {
            s.entries
                .iter()
                .map(|&(k, j, v)| (k, j, v.to_bits()))
                .collect::<Vec<_>>()
        };
        bits(&back) == bits(&sparse) && back.to_document() == doc && Cheb2::from_sparse(&back).coeffs() == c.coeffs()
    })
}

fn property_suite() -> Outcome {
    let start = Instant::now();
    let fft = fft_vs_naive()?;
    let quad = fft_vs_quadrature();
    let decay = build(cos_xy);
    let violations = DecayBounds::new(1.0, 1.0, 1.0).unwrap().violations(&decay);
    let smooth = build_adaptive(|x, y| (x + 0.5 * y).exp() * (2.0 * y).sin(), &BuildOptions::default()).unwrap();
    let recurrence = recurrence_residual(&decay).max(recurrence_residual(&smooth));
    let mixed = mixed_partial_gap(&decay).max(mixed_partial_gap(&smooth));
    let nodes = node_residual();
    let alias = aliasing_gap();
    let bitwise = round_trip_is_bitwise();
    within_time(Duration::from_secs(30), start)?;
    let msg = format!(
        "fft {fft:.1e}, quadrature {quad:.1e}, decay violations {}, recurrence {recurrence:.1e}, \
         mixed {mixed:.1e}, nodes {nodes:.1e}, aliasing {alias:.1e}, bitwise round trip {bitwise}",
        violations.len()
    );
    check(
        fft <= 1e-10
            && quad <= 1e-8
            && violations.is_empty()
            && recurrence <= 1e-12
            && mixed <= 1e-10
            && nodes <= 1e-11
            && alias <= 1e-9
            && bitwise,
        msg,
    )
}

fn convergence_checks() -> Outcome {
    let full = build(cos_xy);
    let alpha: CoeffMatrix = full.coeffs().clone();
    let pts = grid(-1.0, 1.0, 101);
    let mut series_err = Vec::new();
    let mut interp_err = Vec::new();
    let mut bound_ok = true;
    for n in [4, 8, 16] {
        let fnn = full.truncated(n, n);
        let lnn = lagrange_cheb_coeffs(cos_xy, n, n).unwrap().into_cheb2(Domain2::unit());
        series_err.push(max_error(&fnn, cos_xy, &pts));
        interp_err.push(max_error(&lnn, cos_xy, &pts));
        let gap = max_error(&lnn, |x, y| fnn.evaluate(x, y).unwrap(), &pts);
        bound_ok &= gap <= interp_error_bound_gap(&alpha, n, n) + 1e-12;
    }
    let monotone = |e: &[f64]| e.windows(2).all(|w| w[1] <= w[0] + 1e-14);
    let show = |e: &[f64]| e.iter().map(|v| format!("{v:.2e}")).collect::<Vec<_>>().join(" > ");
    check(
        monotone(&series_err) && monotone(&interp_err) && bound_ok,
        format!(
            "series errors {}, interpolation errors {}, gap bound holds {bound_ok}",
            show(&series_err),
            show(&interp_err)
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 coefficient table", coefficient_table),
        ("2 truncation error", truncation_error),
        ("3 quadrature", quadrature),
        ("4 adaptive sizing", adaptive_sizing),
        ("5 indicator", indicator),
        ("6 property suite", property_suite),
        ("7 convergence checks", convergence_checks),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(msg) => println!("PASS  {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  {name}: {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
