use std::ffi::OsString;
use std::io::{ErrorKind, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use super::{emit_csv, emit_surface, make_table, validate_suite, Grid};
use crate::ara::{ara_monomial, ara_numeric, AraConfig};
use crate::error::{Error, Result};
use crate::fmt::sig_digits;
use crate::solver::{builtin_example, solve, ExampleParams, PdeSpec, DEFAULT_ORDER};
use crate::special::pow_frac;

macro_rules! out {
    ($($arg:tt)*) => {
        writeln!(std::io::stdout(), $($arg)*).map_err(|e| Error::io("<stdout>", e))?
    };
}

/// Overrides the default output directory (`.`) for generated files.
pub const OUT_DIR_ENV: &str = "ARA_RPSM_OUT_DIR";

#[derive(Parser, Debug)]
#[command(name = "ara-rpsm", version, about = "Residual power series solver for time-fractional PDEs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute series coefficients and optionally evaluate the solution.
    Solve(SolveArgs),
    /// Regenerate an error table (series vs closed form) as CSV.
    Table(TableArgs),
    /// Compare the numerical ARA transform of t^p with its closed form.
    Transform(TransformArgs),
    /// Run the oracle and invariant suites.
    Validate,
    /// Write x t y surface data for several fractional orders.
    Surface(SurfaceArgs),
}

#[derive(Args, Debug, Clone)]
struct ExampleArgs {
    /// Builtin example (1-4).
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    example: Option<u8>,
    /// Example 2 wave speed.
    #[arg(long)]
    gamma: Option<f64>,
    /// Example 1 coefficient v.
    #[arg(long)]
    v: Option<f64>,
    /// Example 1 coefficient w.
    #[arg(long)]
    w: Option<f64>,
    /// Example 1 amplitude lambda.
    #[arg(long)]
    lambda: Option<f64>,
}

impl ExampleArgs {
    fn params(&self, id: u8) -> Result<ExampleParams> {
        let kg = [self.v, self.w, self.lambda].iter().any(Option::is_some);
        match (ExampleParams::default_for(id)?, kg, self.gamma) {
            (ExampleParams::KleinGordon { v, w, lambda }, _, None) => Ok(ExampleParams::KleinGordon {
                v: self.v.unwrap_or(v),
                w: self.w.unwrap_or(w),
                lambda: self.lambda.unwrap_or(lambda),
            }),
            (ExampleParams::Boussinesq { gamma }, false, g) => {
                Ok(ExampleParams::Boussinesq { gamma: g.unwrap_or(gamma) })
            }
            (p @ ExampleParams::None, false, None) => Ok(p),
            _ => Err(Error::ParamsMismatch {
                id,
                reason: "--gamma belongs to example 2, --v/--w/--lambda to example 1".into(),
            }),
        }
    }

    fn require(&self) -> Result<(u8, ExampleParams)> {
        let id = self.example.ok_or_else(|| Error::Config("--example is required".into()))?;
        Ok((id, self.params(id)?))
    }
}

#[derive(Args, Debug)]
struct SolveArgs {
    /// JSON PDE spec; alternative to --example.
    #[arg(long, conflicts_with = "example")]
    spec: Option<PathBuf>,
    #[command(flatten)]
    example: ExampleArgs,
    /// Fractional order; defaults to the spec's value, or 1 for examples.
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
    /// Evaluation point `x:t`; repeatable.
    #[arg(long = "at", value_parser = parse_point)]
    at: Vec<(f64, f64)>,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[command(flatten)]
    example: ExampleArgs,
    #[arg(long, default_value_t = 1.0)]
    alpha: f64,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
    /// Output CSV path; defaults to `table_ex{N}.csv` in the output directory.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct TransformArgs {
    /// Test function `t^p` (also accepts `1` and `t`).
    #[arg(long = "fn", value_parser = parse_power)]
    function: f64,
    /// Transform order.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    n: u8,
    #[arg(long)]
    s: f64,
}

#[derive(Args, Debug)]
struct SurfaceArgs {
    #[command(flatten)]
    example: ExampleArgs,
    /// Comma-separated fractional orders.
    #[arg(long, value_delimiter = ',', default_values_t = [0.25, 0.5, 0.75, 1.0])]
    alphas: Vec<f64>,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
    /// x range `lo:hi`.
    #[arg(long, value_parser = parse_point, default_value = "-1:1")]
    x_range: (f64, f64),
    /// t range `lo:hi`.
    #[arg(long, value_parser = parse_point, default_value = "0:1")]
    t_range: (f64, f64),
    /// Points per axis.
    #[arg(long, default_value_t = 21)]
    points: usize,
    /// Output directory; defaults to the global output directory.
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

fn parse_point(s: &str) -> std::result::Result<(f64, f64), String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("expected `a:b`, got {s:?}"))?;
    let a = a.trim().parse::<f64>().map_err(|e| e.to_string())?;
    let b = b.trim().parse::<f64>().map_err(|e| e.to_string())?;
    Ok((a, b))
}

fn parse_power(s: &str) -> std::result::Result<f64, String> {
    let s = s.trim();
    let p = match s {
        "1" => 0.0,
        "t" => 1.0,
        _ => s
            .strip_prefix("t^")
            .ok_or_else(|| format!("expected `t^p`, got {s:?}"))?
            .parse::<f64>()
            .map_err(|e| e.to_string())?,
    };
    if p >= 0.0 {
        Ok(p)
    } else {
        Err(format!("exponent must be >= 0, got {p}"))
    }
}

fn out_dir() -> PathBuf {
    std::env::var_os(OUT_DIR_ENV).map_or_else(|| PathBuf::from("."), PathBuf::from)
}

fn g(v: f64) -> String {
    sig_digits(v, 10)
}

fn cmd_solve(args: SolveArgs) -> Result<()> {
    let spec = match (&args.spec, args.example.example) {
        (Some(path), _) => {
            let spec = PdeSpec::from_path(path)?;
            match args.alpha {
                Some(a) => spec.with_alpha(a)?,
                None => spec,
            }
        }
        (None, Some(_)) => {
            let (id, params) = args.example.require()?;
            builtin_example(id, &params, args.alpha.unwrap_or(1.0))?
        }
        (None, None) => return Err(Error::Config("give either --spec FILE or --example N".into())),
    };
    let result = solve(&spec, args.order)?;
    out!("alpha = {}, time order = {}, K = {}", spec.alpha, spec.time_order, args.order);
    for (n, c) in result.series.coeffs().iter().enumerate() {
        out!("c{n}(x) = {c}");
    }
    out!("max residual coefficient = {:.3e}", result.max_residual());
    for (x, t) in args.at {
        out!("y({}, {}) = {}", g(x), g(t), g(result.series.eval(x, t)?));
    }
    Ok(())
}

fn cmd_table(args: TableArgs) -> Result<()> {
    let (id, params) = args.example.require()?;
    let rows = make_table(id, &params, args.alpha, args.order, &Grid::reference_table())?;
    let path = args.output.unwrap_or_else(|| out_dir().join(format!("table_ex{id}.csv")));
    emit_csv(&rows, &path)?;
    let worst = rows.iter().map(|r| r.abs_error()).fold(0.0, f64::max);
    out!("wrote {} rows to {}", rows.len(), path.display());
    out!("max abs error = {worst:.6e}");
    Ok(())
}

fn cmd_transform(args: TransformArgs) -> Result<()> {
    let p = args.function;
    let num = ara_numeric(|t| pow_frac(t, p), args.n, args.s, &AraConfig::default())?;
    let exact = ara_monomial(p, args.n, args.s)?;
    out!("G{}[t^{}](s = {})", args.n, p, args.s);
    out!("numeric = {}", sig_digits(num.value, 15));
    out!("exact   = {}", sig_digits(exact, 15));
    out!("rel error = {:.3e} (quadrature estimate {:.1e})", ((num.value - exact) / exact).abs(), num.error);
    if num.tail_warning {
        out!("warning: truncated tail may exceed tolerance ({:.1e})", num.tail_bound);
    }
    Ok(())
}

fn cmd_surface(args: SurfaceArgs) -> Result<()> {
    let (id, params) = args.example.require()?;
    let grid = Grid::uniform(args.x_range, args.t_range, args.points)?;
    let dir = args.out_dir.unwrap_or_else(out_dir);
    for path in emit_surface(id, &params, &args.alphas, args.order, &grid, &dir)? {
        out!("wrote {}", path.display());
    }
    Ok(())
}

fn cmd_validate() -> Result<bool> {
    let report = validate_suite();
    for c in &report.checks {
        out!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    out!("{} checks in {:.1}s", report.checks.len(), report.seconds);
    Ok(report.passed())
}

/// Entry point shared by the binary and the tests. Returns the process exit
/// code: 0 on success, 1 on validation or I/O failure, 2 on bad usage or input.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Table(a) => cmd_table(a),
        Command::Transform(a) => cmd_transform(a),
        Command::Surface(a) => cmd_surface(a),
        Command::Validate => match cmd_validate() {
            Ok(passed) => return if passed { 0 } else { 1 },
            Err(e) => Err(e),
        },
    };
    match outcome {
        Ok(()) => 0,
        Err(Error::Io { source, .. }) if source.kind() == ErrorKind::BrokenPipe => 0,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Io { .. } | Error::NonConvergence { .. } => 1,
                _ => 2,
            }
        }
    }
}
