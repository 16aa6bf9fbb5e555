use std::fmt::Write as _;
use std::fs::{self, File};
use std::io::{self, BufReader, Write};
use std::path::Path;
use std::time::Instant;

use cheb2::calculus::{diff_x, diff_y, integrate as integrate_cheb};
use cheb2::chebcore::{build_adaptive, parseval_indicator, trim, BuildOptions, TolMode};
use cheb2::expr::{parse_str, Expr};
use cheb2::interp::{lagrange_cheb_coeffs_on, lobatto_grid};
use cheb2::{Cheb2, Domain2, Error, SparseCoeffs};

use crate::error::CliError;
use crate::{ApproxArgs, Axis, BuildArgs, DiffArgs, EvalArgs, ExportArgs, IntegrateArgs, InterpArgs};

/// Interpolants must reproduce f at the nodes to this relative accuracy.
const NODE_RESIDUAL_TOL: f64 = 1e-11;

/// 17 significant digits.
fn real(v: f64) -> String {
    format!("{v:.16e}")
}

/// Replaces a sampling failure by the expression error behind it.
fn explain(expr: &Expr, e: Error) -> CliError {
    if let Error::Sampling { x, y, .. } = e {
        if let Err(err) = expr.eval(x, y) {
            return err.into();
        }
    }
    e.into()
}

fn build(expr: &Expr, b: &BuildArgs) -> Result<Cheb2, CliError> {
    let opts = BuildOptions {
        tol: b.tol,
        tol_mode: if b.relative {
            TolMode::Relative
        } else {
            TolMode::Absolute
        },
        max_n: b.max_n,
        domain: b.domain,
        parallel: b.pure,
        ..Default::default()
    };
    build_adaptive(expr.as_fn(), &opts).map_err(|e| explain(expr, e))
}

fn load(path: &Path) -> Result<Cheb2, CliError> {
    let file = File::open(path).map_err(|e| CliError::io(path, e))?;
    let sparse = SparseCoeffs::load(BufReader::new(file)).map_err(|source| CliError::Document {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(Cheb2::from_sparse(&sparse))
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| CliError::io(path, e)),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::io("<stdout>", e))
        }
    }
}

/// Notes go to stdout when the main result went to a file, to stderr otherwise.
fn report(to_stdout: bool, text: &str) {
    if to_stdout {
        print!("{text}");
    } else {
        eprint!("{text}");
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| {
            if i + 1 == n {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            }
        })
        .collect()
}

fn grid_points(d: Domain2, resolution: usize) -> Vec<(f64, f64)> {
    let ys = linspace(d.ylo(), d.yhi(), resolution);
    linspace(d.xlo(), d.xhi(), resolution)
        .into_iter()
        .flat_map(|x| ys.iter().map(move |&y| (x, y)))
        .collect()
}

fn read_points(path: &Path) -> Result<Vec<(f64, f64)>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let mut points = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .collect();
        let parsed: Option<Vec<f64>> = fields.iter().map(|s| s.parse().ok()).collect();
        match parsed.as_deref() {
            Some(&[x, y]) if x.is_finite() && y.is_finite() => points.push((x, y)),
            _ => {
                return Err(CliError::Usage(format!(
                    "{}:{}: expected a point x,y, got {line:?}",
                    path.display(),
                    n + 1
                )))
            }
        }
    }
    Ok(points)
}

pub fn approx(a: ApproxArgs) -> Result<(), CliError> {
    let expr = parse_str(&a.expr)?;
    let start = Instant::now();
    let mut c = build(&expr, &a.build)?;
    if let Some((nx, ny)) = a.truncate {
        c = c.truncated(nx, ny);
    }
    let indicator = parseval_indicator(&c, expr.as_fn()).map_err(|e| explain(&expr, e))?;
    let elapsed = start.elapsed();

    let sparse = c.to_sparse();
    emit(a.output.as_deref(), &sparse.to_document())?;
    report(
        a.output.is_some(),
        &format!(
            "degree_x {}\ndegree_y {}\nnonzeros {}\nindicator {}\n",
            sparse.degree_x,
            sparse.degree_y,
            sparse.entries.len(),
            real(indicator)
        ),
    );
    eprintln!("wall_time {elapsed:.3?}");
    Ok(())
}

pub fn eval(a: EvalArgs) -> Result<(), CliError> {
    let c = load(&a.coeffs)?;
    let mut points = a.point;
    if let Some(path) = &a.points {
        points.extend(read_points(path)?);
    }
    if let Some(d) = a.grid {
        points.extend(grid_points(d, a.resolution));
    }
    if points.is_empty() {
        return Err(CliError::Usage(
            "no points given; use --point, --points or --grid".into(),
        ));
    }
    let reference = a.compare_expr.as_deref().map(parse_str).transpose()?;

    let mut out = String::new();
    let mut max_err: f64 = 0.0;
    for (x, y) in points {
        let v = c.evaluate(x, y)?;
        let _ = writeln!(out, "{},{},{}", real(x), real(y), real(v));
        if let Some(r) = &reference {
            max_err = max_err.max((v - r.eval(x, y)?).abs());
        }
    }
    if reference.is_some() {
        let _ = writeln!(out, "max_abs_error,{}", real(max_err));
    }
    emit(None, &out)
}

pub fn integrate(a: IntegrateArgs) -> Result<(), CliError> {
    let c = match (&a.coeffs, &a.expr) {
        (Some(path), _) => load(path)?,
        (None, Some(src)) => build(&parse_str(src)?, &a.build)?,
        (None, None) => return Err(CliError::Usage("give --coeffs or --expr".into())),
    };
    emit(None, &format!("{}\n", real(integrate_cheb(&c))))
}

pub fn diff(a: DiffArgs) -> Result<(), CliError> {
    let c = load(&a.coeffs)?;
    let d = match a.axis {
        Axis::X => diff_x(&c),
        Axis::Y => diff_y(&c),
    };
    emit(a.output.as_deref(), &d.to_sparse().to_document())
}

pub fn interp(a: InterpArgs) -> Result<(), CliError> {
    let expr = parse_str(&a.expr)?;
    let coeffs = lagrange_cheb_coeffs_on(expr.as_fn(), a.n, a.m, a.domain).map_err(|e| explain(&expr, e))?;
    let mut sparse = trim(&coeffs.c, a.tol);
    sparse.domain = a.domain;
    sparse.tol = a.tol;

    if a.verify {
        let c = Cheb2::from_sparse(&sparse);
        let (gx, gy) = (lobatto_grid(a.n)?, lobatto_grid(a.m)?);
        let mut residual: f64 = 0.0;
        let mut scale: f64 = 1.0;
        for &u in gx.nodes() {
            for &v in gy.nodes() {
                let (x, y) = (a.domain.map_x(u), a.domain.map_y(v));
                let f = expr.eval(x, y)?;
                scale = scale.max(f.abs());
                residual = residual.max((c.evaluate(x, y)? - f).abs());
            }
        }
        report(a.output.is_some(), &format!("max_node_residual {}\n", real(residual)));
        if residual > NODE_RESIDUAL_TOL * scale {
            return Err(CliError::Verification(format!(
                "interpolant misses f by {residual:e} at the nodes"
            )));
        }
    }
    emit(a.output.as_deref(), &sparse.to_document())
}

pub fn export(a: ExportArgs) -> Result<(), CliError> {
    let c = load(&a.coeffs)?;
    let reference = a.reference_expr.as_deref().map(parse_str).transpose()?;
    let domain = a.grid.unwrap_or(c.domain());

    let mut out = String::from(if reference.is_some() {
        "x,y,value,reference,abs_error\n"
    } else {
        "x,y,value\n"
    });
    for (x, y) in grid_points(domain, a.resolution) {
        let v = c.evaluate(x, y)?;
        let _ = write!(out, "{},{},{}", real(x), real(y), real(v));
        if let Some(r) = &reference {
            let f = r.eval(x, y)?;
            let _ = write!(out, ",{},{}", real(f), real((v - f).abs()));
        }
        out.push('\n');
    }
    emit(a.output.as_deref(), &out)
}
