//! Post-solution analysis: first zeros, error tables, coefficient decay and the
//! weighted projection onto the mapped basis.

use std::f64::consts::PI;
use std::io::{self, Write};

use serde::Serialize;

use crate::basis::{gauss_rule, hermite_function_batch};
use crate::error::{Error, Result};
use crate::format::sig10;
use crate::mapping::DomainMap;
use crate::problems::{published_table, LaneEmdenProblem};
use crate::solver::SolveReport;

pub const DEFAULT_BRACKET_HI: f64 = 20.0;
const SCAN_START: f64 = 1e-3;
const SCAN_STEP: f64 = 0.05;
const BISECTION_WIDTH: f64 = 1e-12;

/// Smallest zero of `f` in `(lo, hi)` located by a fixed-step scan, bisection and one
/// secant step.
pub fn first_zero_of<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64) -> Result<f64> {
    let mut a = lo;
    let mut fa = f(a);
    if fa == 0.0 {
        return Ok(a);
    }
    let mut bracket = None;
    while a < hi {
        let b = (a + SCAN_STEP).min(hi);
        let fb = f(b);
        if fb == 0.0 {
            return Ok(b);
        }
        if fa.signum() != fb.signum() && fa.is_finite() && fb.is_finite() {
            bracket = Some((a, fa, b, fb));
            break;
        }
        a = b;
        fa = fb;
    }
    let Some((mut a, mut fa, mut b, mut fb)) = bracket else {
        return Err(Error::NoSignChange { lo, hi });
    };
    while b - a > BISECTION_WIDTH {
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 {
            return Ok(m);
        }
        if fm.signum() == fa.signum() {
            (a, fa) = (m, fm);
        } else {
            (b, fb) = (m, fm);
        }
    }
    let secant = b - fb * (b - a) / (fb - fa);
    let mid = 0.5 * (a + b);
    Ok(if secant.is_finite() && (a..=b).contains(&secant) && f(secant).abs() <= f(mid).abs() {
        secant
    } else {
        mid
    })
}

/// First zero of the solution in a report, scanning `(10⁻³, bracket_hi)`.
pub fn first_zero(report: &SolveReport, bracket_hi: f64) -> Result<f64> {
    first_zero_of(|x| report.value(x).unwrap_or(f64::NAN), SCAN_START, bracket_hi)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReferenceSource {
    Exact,
    PublishedTable,
    None,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorRow {
    pub x: f64,
    pub computed: f64,
    pub reference: Option<f64>,
    pub abs_error: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorTable {
    pub problem: String,
    pub source: ReferenceSource,
    pub rows: Vec<ErrorRow>,
}

impl ErrorTable {
    pub fn max_abs_error(&self) -> Option<f64> {
        self.rows.iter().filter_map(|r| r.abs_error).reduce(f64::max)
    }

    /// Writes `x,computed,reference,abs_error`; missing references leave the last two empty.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "x,computed,reference,abs_error")?;
        for r in &self.rows {
            let opt = |v: Option<f64>| v.map(sig10).unwrap_or_default();
            writeln!(out, "{},{},{},{}", sig10(r.x), sig10(r.computed), opt(r.reference), opt(r.abs_error))?;
        }
        Ok(())
    }
}

/// Compares the solution with the exact solution when the problem has one, and otherwise
/// with the published reference column (matched on `x`).
pub fn error_table(problem: &LaneEmdenProblem, report: &SolveReport, xs: &[f64]) -> Result<ErrorTable> {
    let mut xs = xs.to_vec();
    xs.sort_by(f64::total_cmp);
    let table = match &problem.exact {
        Some(_) => None,
        None => published_table(&problem.name).ok(),
    };
    let source = match (&problem.exact, &table) {
        (Some(_), _) => ReferenceSource::Exact,
        (None, Some(_)) => ReferenceSource::PublishedTable,
        (None, None) => ReferenceSource::None,
    };
    let mut rows = Vec::with_capacity(xs.len());
    for x in xs {
        let computed = report.value(x)?;
        let reference = match (&problem.exact, &table) {
            (Some(exact), _) => Some(exact(x)),
            (None, Some(t)) => t.rows.iter().find(|r| (r.0 - x).abs() <= 1e-12).map(|r| r.2),
            (None, None) => None,
        };
        let abs_error = reference.map(|r| (computed - r).abs());
        rows.push(ErrorRow { x, computed, reference, abs_error });
    }
    Ok(ErrorTable { problem: problem.name.clone(), source, rows })
}

/// `(i, |a_i|)` in index order.
pub fn coefficient_decay(report: &SolveReport) -> Vec<(usize, f64)> {
    report.approximant.coeffs().iter().map(|a| a.abs()).enumerate().collect()
}

/// Expansion coefficients `f_k = ⟨f, Ĥ_k⟩_w / ‖Ĥ_k‖²_w`, `k = 0..=n`, of `f` in the basis
/// `Ĥ_k(x/l)`, computed with a `quad_order` Hermite-Gauss rule after the substitution
/// `ω = φ(x/l)`.
pub fn project<F: Fn(f64) -> f64>(f: F, n: usize, map: &DomainMap, quad_order: usize) -> Result<Vec<f64>> {
    let rule = gauss_rule(quad_order)?;
    let mut out = vec![0.0; n + 1];
    for (&omega, &w) in rule.nodes().iter().zip(rule.weights()) {
        let fx = f(map.l() * map.inverse(omega));
        let h = hermite_function_batch(n, omega);
        for (acc, hk) in out.iter_mut().zip(h) {
            *acc += fx * hk * w;
        }
    }
    let norm = PI.sqrt();
    out.iter_mut().for_each(|c| *c /= norm);
    Ok(out)
}

/// `Σ_k c_k Ĥ_k(x/l)`.
pub fn reconstruct(coeffs: &[f64], map: &DomainMap, x: f64) -> Result<f64> {
    if coeffs.is_empty() {
        return Ok(0.0);
    }
    let omega = map.forward(x / map.l())?;
    let h = hermite_function_batch(coeffs.len() - 1, omega);
    Ok(h.iter().zip(coeffs).map(|(a, b)| a * b).sum())
}
