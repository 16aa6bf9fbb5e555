//! `cheb2`: build, evaluate, differentiate, integrate and interpolate bivariate
//! Chebyshev approximants from the command line.

mod commands;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cheb2::chebcore::{DEFAULT_MAX_N, DEFAULT_TOL};
use cheb2::Domain2;

#[derive(Debug, Parser)]
#[command(name = "cheb2", version, about = "Bivariate Chebyshev approximation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build an adaptive approximant of an expression and write its coefficients.
    Approx(ApproxArgs),
    /// Evaluate a coefficient file at points.
    Eval(EvalArgs),
    /// Integrate an approximant over its domain.
    Integrate(IntegrateArgs),
    /// Differentiate a coefficient file along one axis.
    Diff(DiffArgs),
    /// Lagrange-Chebyshev interpolation on the Chebyshev-Lobatto grid.
    Interp(InterpArgs),
    /// Write values over a uniform grid as CSV.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Args)]
struct BuildArgs {
    /// Rectangle as xlo,xhi,ylo,yhi.
    #[arg(long, value_parser = parse_domain, allow_hyphen_values = true, default_value = "-1,1,-1,1")]
    domain: Domain2,

    /// Coefficient threshold.
    #[arg(long, env = "CHEB2_TOL", default_value_t = DEFAULT_TOL, value_parser = parse_tol)]
    tol: f64,

    /// Scale the threshold by the largest sample magnitude.
    #[arg(long)]
    relative: bool,

    /// Largest block size tried before giving up.
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,

    /// Declare the expression pure so sampling may run in parallel.
    #[arg(long)]
    pure: bool,
}

#[derive(Debug, Args)]
struct ApproxArgs {
    /// Formula in x and y, e.g. "cos(x*y)".
    #[arg(long, short = 'e', allow_hyphen_values = true)]
    expr: String,

    #[command(flatten)]
    build: BuildArgs,

    /// Keep only degrees up to nx,ny.
    #[arg(long, value_parser = parse_degrees)]
    truncate: Option<(usize, usize)>,

    /// Coefficient file to write; the document goes to stdout otherwise.
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EvalArgs {
    /// Coefficient file.
    #[arg(long, short = 'c')]
    coeffs: PathBuf,

    /// Point x,y; may be repeated.
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    point: Vec<(f64, f64)>,

    /// File with one x,y pair per line; blank lines and lines starting with # are skipped.
    #[arg(long)]
    points: Option<PathBuf>,

    /// Uniform grid over xlo,xhi,ylo,yhi.
    #[arg(long, value_parser = parse_domain, allow_hyphen_values = true)]
    grid: Option<Domain2>,

    /// Points per axis for --grid.
    #[arg(long, default_value_t = 50, value_parser = parse_resolution)]
    resolution: usize,

    /// Compare against this formula and report the largest absolute difference.
    #[arg(long, allow_hyphen_values = true)]
    compare_expr: Option<String>,
}

#[derive(Debug, Args)]
struct IntegrateArgs {
    /// Coefficient file.
    #[arg(long, short = 'c', conflicts_with = "expr", required_unless_present = "expr")]
    coeffs: Option<PathBuf>,

    /// Formula to approximate and integrate.
    #[arg(long, short = 'e', allow_hyphen_values = true)]
    expr: Option<String>,

    #[command(flatten)]
    build: BuildArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Axis {
    X,
    Y,
}

#[derive(Debug, Args)]
struct DiffArgs {
    /// Coefficient file.
    #[arg(long, short = 'c')]
    coeffs: PathBuf,

    #[arg(long, value_enum)]
    axis: Axis,

    /// Output file; stdout otherwise.
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct InterpArgs {
    /// Formula in x and y.
    #[arg(long, short = 'e', allow_hyphen_values = true)]
    expr: String,

    /// Degree in x.
    #[arg(short = 'n', long = "nx")]
    n: usize,

    /// Degree in y.
    #[arg(short = 'm', long = "ny")]
    m: usize,

    #[arg(long, value_parser = parse_domain, allow_hyphen_values = true, default_value = "-1,1,-1,1")]
    domain: Domain2,

    /// Coefficients below this magnitude are not written.
    #[arg(long, env = "CHEB2_TOL", default_value_t = DEFAULT_TOL, value_parser = parse_tol)]
    tol: f64,

    /// Re-evaluate the interpolant at every node and fail if it misses f.
    #[arg(long)]
    verify: bool,

    /// Output file; stdout otherwise.
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ExportArgs {
    /// Coefficient file.
    #[arg(long, short = 'c')]
    coeffs: PathBuf,

    /// Grid rectangle; defaults to the approximant's domain.
    #[arg(long, value_parser = parse_domain, allow_hyphen_values = true)]
    grid: Option<Domain2>,

    /// Points per axis.
    #[arg(long, default_value_t = 50, value_parser = parse_resolution)]
    resolution: usize,

    /// Adds reference and abs_error columns.
    #[arg(long, allow_hyphen_values = true)]
    reference_expr: Option<String>,

    /// CSV file; stdout otherwise.
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
}

fn parse_reals<const N: usize>(s: &str) -> Result<[f64; N], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(format!("expected {N} comma-separated numbers, got {:?}", s));
    }
    let mut out = [0.0; N];
    for (slot, p) in out.iter_mut().zip(parts) {
        let v: f64 = p.parse().map_err(|_| format!("{p:?} is not a number"))?;
        if !v.is_finite() {
            return Err(format!("{p:?} is not finite"));
        }
        *slot = v;
    }
    Ok(out)
}

fn parse_domain(s: &str) -> Result<Domain2, String> {
    let [xlo, xhi, ylo, yhi] = parse_reals::<4>(s)?;
    Domain2::new(xlo, xhi, ylo, yhi).map_err(|e| e.to_string())
}

fn parse_point(s: &str) -> Result<(f64, f64), String> {
    parse_reals::<2>(s).map(|[x, y]| (x, y))
}

fn parse_degrees(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected nx,ny, got {s:?}"))?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("{t:?} is not a degree"));
    Ok((parse(a)?, parse(b)?))
}

fn parse_tol(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("tolerance must be a positive number, got {s:?}")),
    }
}

fn parse_resolution(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(v) if v >= 2 => Ok(v),
        _ => Err(format!("resolution must be an integer of at least 2, got {s:?}")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Approx(a) => commands::approx(a),
        Command::Eval(a) => commands::eval(a),
        Command::Integrate(a) => commands::integrate(a),
        Command::Diff(a) => commands::diff(a),
        Command::Interp(a) => commands::interp(a),
        Command::Export(a) => commands::export(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
