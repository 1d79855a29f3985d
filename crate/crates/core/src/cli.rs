//! Command-line front end: `solve`, `zeros`, `coeffs` and `list`.
//!
//! Solver settings resolve as registry defaults, then an optional TOML file
//! (`--config`), then flags. Output is CSV or JSON, to stdout or `--out`.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagnostics::{error_table, first_zero, ErrorRow, ReferenceSource, DEFAULT_BRACKET_HI};
use crate::error::Error;
use crate::format::sig10;
use crate::problems::{
    lookup, polytrope_entry, published_table, registry, standard_lane_emden, SolveConfig, FIRST_ZEROS,
};
use crate::solver::{solve, NewtonStep, Start};

#[derive(Debug, Parser)]
#[command(name = "lane-emden", version, about = "Hermite-function collocation for Lane-Emden equations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve a registered problem and tabulate it against its reference values
    Solve {
        /// Registry id, e.g. example1-m3 or isothermal
        problem: String,
        #[command(flatten)]
        settings: Settings,
        /// `paper` (the published x grid), a list `0.1,0.5,1` or a range `start:step:stop`
        #[arg(long, default_value = "paper")]
        grid: String,
        #[command(flatten)]
        output: Output,
    },
    /// First zeros of the standard equation
    Zeros {
        /// Polytropic indices; defaults to the published set
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        m: Vec<f64>,
        #[command(flatten)]
        settings: Settings,
        /// Upper end of the search bracket
        #[arg(long, default_value_t = DEFAULT_BRACKET_HI)]
        bracket_hi: f64,
        /// Solve the rows in parallel
        #[arg(long)]
        sweep: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Spectral coefficients of a solved problem
    Coeffs {
        problem: String,
        #[command(flatten)]
        settings: Settings,
        #[command(flatten)]
        output: Output,
    },
    /// Registered problems and their default settings
    List {
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Clone, Default, Args)]
pub struct Settings {
    /// Truncation order
    #[arg(long = "N")]
    pub n: Option<usize>,
    /// Map steepness
    #[arg(long)]
    pub k: Option<f64>,
    /// Domain scale
    #[arg(long)]
    pub l: Option<f64>,
    #[arg(long)]
    pub newton_tol: Option<f64>,
    #[arg(long)]
    pub residual_tol: Option<f64>,
    #[arg(long)]
    pub max_iters: Option<usize>,
    /// TOML file with any of N, k, l, newton_tol, residual_tol, max_iters
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Solver(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {message}")]
    ConfigFile { path: String, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Solver(Error::NoConvergence { .. }) => 2,
            CliError::Solver(Error::SingularJacobian { .. }) => 3,
            CliError::Solver(Error::NoSignChange { .. }) => 4,
            _ => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Solver(e) => match e {
                Error::Domain { .. } => "domain",
                Error::InvalidConfig(_) => "invalid-config",
                Error::QuadratureNotConverged { .. } => "quadrature-not-converged",
                Error::NoConvergence { .. } => "no-convergence",
                Error::SingularJacobian { .. } => "singular-jacobian",
                Error::NoSignChange { .. } => "no-sign-change",
                Error::UnknownProblem(_) => "unknown-problem",
                Error::NoReferenceTable(_) => "no-reference-table",
            },
            CliError::Io { .. } => "io",
            CliError::ConfigFile { .. } => "config-file",
        }
    }

    /// Machine-readable description of the failure, printed to stderr by the binary.
    pub fn failure_record(&self) -> serde_json::Value {
        let mut rec = serde_json::json!({
            "status": "error",
            "kind": self.kind(),
            "exit_code": self.exit_code(),
            "message": self.to_string(),
        });
        if let CliError::Solver(Error::NoConvergence { iterations, residual, trace }) = self {
            rec["iterations"] = serde_json::json!(iterations);
            rec["residual"] = serde_json::json!(residual);
            rec["newton_trace"] = serde_json::json!(trace);
        }
        rec
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileSettings {
    #[serde(rename = "N")]
    n: Option<usize>,
    k: Option<f64>,
    l: Option<f64>,
    newton_tol: Option<f64>,
    residual_tol: Option<f64>,
    max_iters: Option<usize>,
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

impl Settings {
    /// Applies the config file, then the flags, on top of `base`.
    pub fn resolve(&self, base: SolveConfig) -> CliResult<SolveConfig> {
        let mut c = base;
        if let Some(path) = &self.config {
            let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path_str(path), source })?;
            let f: FileSettings = toml::from_str(&text)
                .map_err(|e| CliError::ConfigFile { path: path_str(path), message: e.message().to_string() })?;
            overlay(&mut c, f.n, f.k, f.l, f.newton_tol, f.residual_tol, f.max_iters);
        }
        overlay(&mut c, self.n, self.k, self.l, self.newton_tol, self.residual_tol, self.max_iters);
        c.validate()?;
        Ok(c)
    }
}

fn overlay(
    c: &mut SolveConfig,
    n: Option<usize>,
    k: Option<f64>,
    l: Option<f64>,
    newton_tol: Option<f64>,
    residual_tol: Option<f64>,
    max_iters: Option<usize>,
) {
    c.n = n.unwrap_or(c.n);
    c.k = k.unwrap_or(c.k);
    c.l = l.unwrap_or(c.l);
    c.newton_tol = newton_tol.unwrap_or(c.newton_tol);
    c.residual_tol = residual_tol.unwrap_or(c.residual_tol);
    c.max_iters = max_iters.unwrap_or(c.max_iters);
}

/// Parses `paper`, `a,b,c` or `start:step:stop` into sorted non-negative abscissae.
pub fn parse_grid(spec: &str, problem: &str) -> CliResult<Vec<f64>> {
    let bad = |msg: String| CliError::Solver(Error::InvalidConfig(msg));
    let num = |s: &str| s.trim().parse::<f64>().map_err(|_| bad(format!("bad grid value `{s}`")));
    let mut xs = if spec == "paper" {
        published_table(problem)?.rows.iter().map(|r| r.0).collect()
    } else if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        let [start, step, stop] = parts[..] else {
            return Err(bad(format!("range grid must be start:step:stop, got `{spec}`")));
        };
        let (start, step, stop) = (num(start)?, num(step)?, num(stop)?);
        if !(step > 0.0) || stop < start {
            return Err(bad(format!("empty or unbounded range `{spec}`")));
        }
        let count = ((stop - start) / step + 1e-9).floor() as usize;
        (0..=count).map(|i| start + i as f64 * step).collect()
    } else {
        spec.split(',').map(num).collect::<CliResult<Vec<f64>>>()?
    };
    if let Some(&x) = xs.iter().find(|x| !(**x >= 0.0 && x.is_finite())) {
        return Err(bad(format!("grid abscissae must be non-negative, got {x}")));
    }
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    Ok(xs)
}

#[derive(Debug, Serialize)]
struct SolveOutput<'a> {
    problem: &'a str,
    config: SolveConfig,
    converged: bool,
    iterations: usize,
    residual_max: f64,
    start: Start,
    source: ReferenceSource,
    rows: &'a [ErrorRow],
    newton_trace: &'a [NewtonStep],
}

#[derive(Debug, Serialize)]
struct CoefficientRow {
    i: usize,
    a_i: f64,
    abs_a_i: f64,
}

#[derive(Debug, Clone, Serialize)]
struct ZeroRow {
    m: f64,
    #[serde(rename = "N")]
    n: usize,
    k: f64,
    l: f64,
    zero: f64,
}

#[derive(Debug, Serialize)]
struct ListRow {
    id: &'static str,
    example: u8,
    #[serde(rename = "N")]
    n: usize,
    k: f64,
    l: f64,
    exact: bool,
    table: bool,
    description: &'static str,
}

fn emit(output: &Output, stdout: &mut dyn Write, csv: impl FnOnce(&mut dyn Write) -> io::Result<()>, json: serde_json::Value) -> CliResult<()> {
    let mut buf = Vec::new();
    match output.format {
        Format::Csv => csv(&mut buf),
        Format::Json => serde_json::to_writer_pretty(&mut buf, &json)
            .map_err(io::Error::from)
            .and_then(|_| writeln!(buf)),
    }
    .map_err(|source| CliError::Io { path: "<buffer>".into(), source })?;
    match &output.out {
        Some(path) => fs::write(path, &buf).map_err(|source| CliError::Io { path: path_str(path), source }),
        None => stdout.write_all(&buf).map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

fn to_json<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("output types serialize")
}

pub fn run(cli: &Cli, stdout: &mut dyn Write) -> CliResult<()> {
    match &cli.command {
        Command::Solve { problem, settings, grid, output } => {
            let entry = lookup(problem)?;
            let config = settings.resolve(entry.config)?;
            let xs = parse_grid(grid, entry.id)?;
            let report = solve(&entry.problem, &config)?;
            let table = error_table(&entry.problem, &report, &xs)?;
            let json = to_json(&SolveOutput {
                problem: entry.id,
                config,
                converged: report.converged,
                iterations: report.iterations,
                residual_max: report.residual_max,
                start: report.start,
                source: table.source,
                rows: &table.rows,
                newton_trace: &report.newton_trace,
            });
            emit(output, stdout, |w| table.write_csv(w), json)
        }
        Command::Coeffs { problem, settings, output } => {
            let entry = lookup(problem)?;
            let config = settings.resolve(entry.config)?;
            let report = solve(&entry.problem, &config)?;
            let rows: Vec<CoefficientRow> = report
                .approximant
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, &a)| CoefficientRow { i, a_i: a, abs_a_i: a.abs() })
                .collect();
            let json = serde_json::json!({ "problem": entry.id, "config": config, "coefficients": rows });
            emit(output, stdout, |w| report.approximant.write_coefficients_csv(w), json)
        }
        Command::Zeros { m, settings, bracket_hi, sweep, output } => {
            let ms: Vec<f64> = if m.is_empty() { FIRST_ZEROS.iter().map(|r| r.m).collect() } else { m.clone() };
            let row = |&m: &f64| -> CliResult<ZeroRow> {
                let (problem, base) = match polytrope_entry(m) {
                    Some(e) => (e.problem, e.config),
                    None => (standard_lane_emden(m), SolveConfig::new(30, 2.0, 2.0)),
                };
                let c = settings.resolve(base)?;
                let report = solve(&problem, &c)?;
                let zero = first_zero(&report, *bracket_hi)?;
                Ok(ZeroRow { m, n: c.n, k: c.k, l: c.l, zero })
            };
            let rows: Vec<ZeroRow> = if *sweep {
                ms.par_iter().map(row).collect::<Vec<_>>().into_iter().collect::<CliResult<_>>()?
            } else {
                ms.iter().map(row).collect::<CliResult<_>>()?
            };
            let json = serde_json::json!({ "rows": rows });
            emit(
                output,
                stdout,
                |w| {
                    writeln!(w, "m,N,k,l,zero")?;
                    for r in &rows {
                        writeln!(w, "{},{},{},{},{}", r.m, r.n, sig10(r.k), sig10(r.l), sig10(r.zero))?;
                    }
                    Ok(())
                },
                json,
            )
        }
        Command::List { output } => {
            let rows: Vec<ListRow> = registry()
                .into_iter()
                .map(|e| ListRow {
                    id: e.id,
                    example: e.example,
                    n: e.config.n,
                    k: e.config.k,
                    l: e.config.l,
                    exact: e.problem.exact.is_some(),
                    table: published_table(e.id).is_ok(),
                    description: e.description,
                })
                .collect();
            let json = serde_json::json!({ "problems": rows });
            emit(
                output,
                stdout,
                |w| {
                    writeln!(w, "id,example,N,k,l,exact,table,description")?;
                    for r in &rows {
                        writeln!(
                            w,
                            "{},{},{},{},{},{},{},\"{}\"",
                            r.id,
                            r.example,
                            r.n,
                            sig10(r.k),
                            sig10(r.l),
                            r.exact,
                            r.table,
                            r.description
                        )?;
                    }
                    Ok(())
                },
                json,
            )
        }
    }
}
