//! Reproduction harness: error tables, CSV output, surface data, validation
//! suite and the command-line front end.

mod cli;
mod validate;

pub use cli::{run, OUT_DIR_ENV};
pub use validate::{validate_suite, Check, ValidationReport};

use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fmt::sig_digits;
use crate::solver::{builtin_example, exact_solution, solve, ExampleParams};

/// Significant digits used for CSV and surface output.
pub const OUTPUT_DIGITS: usize = 15;
pub const CSV_HEADER: &str = "x,t,exact,numeric,abs_error";

/// Evaluation points, iterated t-major (all x for the first t, then the next t).
#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    pub xs: Vec<f64>,
    pub ts: Vec<f64>,
}

impl Grid {
    pub fn new(xs: Vec<f64>, ts: Vec<f64>) -> Result<Self> {
        if xs.is_empty() || ts.is_empty() {
            return Err(Error::Config("grid needs at least one x and one t".into()));
        }
        if ts.iter().any(|&t| !(t >= 0.0)) || xs.iter().any(|x| !x.is_finite()) {
            return Err(Error::Config("grid needs finite x and t >= 0".into()));
        }
        Ok(Grid { xs, ts })
    }

    /// x ∈ {0, 2, …, 10} × t ∈ {0.25, 0.5, 0.75, 1}: the 24-row error tables.
    pub fn reference_table() -> Self {
        Grid { xs: (0..=5).map(|i| 2.0 * i as f64).collect(), ts: vec![0.25, 0.5, 0.75, 1.0] }
    }

    /// `n` equally spaced points on each of `[x0, x1]` and `[t0, t1]`.
    pub fn uniform(x: (f64, f64), t: (f64, f64), n: usize) -> Result<Self> {
        let lin = |(a, b): (f64, f64)| -> Vec<f64> {
            if n == 1 {
                return vec![a];
            }
            (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()
        };
        if n == 0 {
            return Err(Error::Config("grid needs at least one point per axis".into()));
        }
        Grid::new(lin(x), lin(t))
    }

    /// x ∈ [−1, 1] × t ∈ [0, 1] on a 21 × 21 lattice.
    pub fn surface() -> Self {
        Grid::uniform((-1.0, 1.0), (0.0, 1.0), 21).expect("static grid is valid")
    }

    pub fn points(&self) -> Vec<(f64, f64)> {
        self.ts.iter().flat_map(|&t| self.xs.iter().map(move |&x| (x, t))).collect()
    }

    pub fn len(&self) -> usize {
        self.xs.len() * self.ts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TableRow {
    pub x: f64,
    pub t: f64,
    pub exact: f64,
    pub numeric: f64,
}

impl TableRow {
    pub fn abs_error(&self) -> f64 {
        (self.exact - self.numeric).abs()
    }
}

/// Everything one table or surface run needs.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub example: u8,
    pub params: ExampleParams,
    pub alphas: Vec<f64>,
    pub order: usize,
    pub grid: Grid,
    pub out_dir: PathBuf,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.alphas.is_empty() {
            return Err(Error::Config("at least one alpha is required".into()));
        }
        if self.grid.is_empty() {
            return Err(Error::Config("grid is empty".into()));
        }
        for &alpha in &self.alphas {
            let spec = builtin_example(self.example, &self.params, alpha)?;
            if self.order < spec.time_order as usize {
                return Err(Error::Config(format!("order {} is below the time order {}", self.order, spec.time_order)));
            }
        }
        Ok(())
    }
}

/// Series solution against the closed form on every grid point, t-major.
pub fn make_table(id: u8, params: &ExampleParams, alpha: f64, order: usize, grid: &Grid) -> Result<Vec<TableRow>> {
    let series = solve(&builtin_example(id, params, alpha)?, order)?.series;
    grid.points()
        .into_par_iter()
        .map(|(x, t)| {
            Ok(TableRow { x, t, exact: exact_solution(id, params, alpha, x, t, None)?, numeric: series.eval(x, t)? })
        })
        .collect()
}

fn create(path: &Path) -> Result<BufWriter<fs::File>> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    Ok(BufWriter::new(file))
}

fn num(v: f64) -> String {
    sig_digits(v, OUTPUT_DIGITS)
}

pub fn render_csv(rows: &[TableRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let fields = [r.x, r.t, r.exact, r.numeric, r.abs_error()].map(num);
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

pub fn emit_csv(rows: &[TableRow], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut w = create(path)?;
    w.write_all(render_csv(rows).as_bytes()).and_then(|_| w.flush()).map_err(|e| Error::io(path, e))
}

/// Parse CSV produced by [`emit_csv`]; the stored error column is ignored.
pub fn parse_csv(text: &str) -> Result<Vec<TableRow>> {
    let mut lines = text.lines();
    if lines.next() != Some(CSV_HEADER) {
        return Err(Error::Config("missing or unexpected CSV header".into()));
    }
    lines
        .map(|line| {
            let f: Vec<f64> = line
                .split(',')
                .map(|s| s.parse::<f64>().map_err(|e| Error::Config(format!("bad CSV field {s:?}: {e}"))))
                .collect::<Result<_>>()?;
            if f.len() != 5 {
                return Err(Error::Config(format!("expected 5 CSV fields, got {}", f.len())));
            }
            Ok(TableRow { x: f[0], t: f[1], exact: f[2], numeric: f[3] })
        })
        .collect()
}

fn alpha_tag(alpha: f64) -> String {
    format!("alpha_{alpha}")
}

fn write_surface(path: &Path, grid: &Grid, values: &[f64]) -> Result<()> {
    let mut w = create(path)?;
    for ((x, t), y) in grid.points().into_iter().zip(values) {
        writeln!(w, "{} {} {}", num(x), num(t), num(*y)).map_err(|e| Error::io(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

/// Writes `ex{id}_alpha_{α}.dat` for every α plus `ex{id}_exact.dat` (the
/// closed form at α = 1) into `dir`, each holding `x t y` lines in grid order.
pub fn emit_surface(
    id: u8,
    params: &ExampleParams,
    alphas: &[f64],
    order: usize,
    grid: &Grid,
    dir: impl AsRef<Path>,
) -> Result<Vec<PathBuf>> {
    let dir = dir.as_ref();
    let points = grid.points();
    let mut written = Vec::with_capacity(alphas.len() + 1);
    for &alpha in alphas {
        let series = solve(&builtin_example(id, params, alpha)?, order)?.series;
        let values: Vec<f64> = points.par_iter().map(|&(x, t)| series.eval(x, t)).collect::<Result<_>>()?;
        let path = dir.join(format!("ex{id}_{}.dat", alpha_tag(alpha)));
        write_surface(&path, grid, &values)?;
        written.push(path);
    }
    let exact: Vec<f64> =
        points.par_iter().map(|&(x, t)| exact_solution(id, params, 1.0, x, t, None)).collect::<Result<_>>()?;
    let path = dir.join(format!("ex{id}_exact.dat"));
    write_surface(&path, grid, &exact)?;
    written.push(path);
    Ok(written)
}

/// Parse `x t y` triples written by [`emit_surface`].
pub fn parse_surface(text: &str) -> Result<Vec<(f64, f64, f64)>> {
    text.lines()
        .map(|line| {
            let f: Vec<f64> = line
                .split_whitespace()
                .map(|s| s.parse::<f64>().map_err(|e| Error::Config(format!("bad field {s:?}: {e}"))))
                .collect::<Result<_>>()?;
            match f[..] {
                [x, t, y] => Ok((x, t, y)),
                _ => Err(Error::Config(format!("expected 3 fields, got {}", f.len()))),
            }
        })
        .collect()
}
