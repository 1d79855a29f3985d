//! Collocation at mapped Hermite-Gauss points and Newton iteration for the coefficients.
//!
//! The residual is forced to zero at the `N + 1` points `φ⁻¹(x_j)` where `x_j` are the
//! roots of `H_{N+1}`. Points are not rescaled by `l`; the scale only enters the
//! approximant's argument.
//!
//! Newton starts from zero coefficients (the approximant is then the ray `A + Bx`). If that
//! fails it is retried with step halving, and finally from an interpolant of a marching
//! Runge-Kutta solution of the initial value problem.

use serde::Serialize;

use crate::approximant::{basis_matrices, BasisMatrices, SpectralApproximant};
use crate::basis::gauss_rule;
use crate::error::{Error, Result};
use crate::linalg::{linear_solve, Matrix};
use crate::mapping::DomainMap;
use crate::problems::{LaneEmdenProblem, SolveConfig, Substitution};

/// Residuals below this are treated as converged regardless of the step size.
const RESIDUAL_FLOOR: f64 = 1e-12;
const MAX_HALVINGS: usize = 8;
/// Largest Runge-Kutta step used by the warm start.
const RK_MAX_STEP: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NewtonStep {
    pub iteration: usize,
    /// `‖Δa‖∞` of the step actually taken.
    pub step_norm: f64,
    /// `max_j |Res(x_j)|` after the step.
    pub residual_norm: f64,
}

/// Which starting iterate produced the reported solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Start {
    Zero,
    DampedZero,
    WarmStart,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveReport {
    pub approximant: SpectralApproximant,
    pub residual_max: f64,
    pub newton_trace: Vec<NewtonStep>,
    pub converged: bool,
    pub iterations: usize,
    pub start: Start,
    pub substitution: Option<Substitution>,
    pub collocation_points: Vec<f64>,
}

impl SolveReport {
    /// The solution `y(x)` for `x ≥ 0`, undoing any substitution.
    pub fn value(&self, x: f64) -> Result<f64> {
        let u = if x == 0.0 {
            self.approximant.value_at_origin()
        } else {
            self.approximant.evaluate(x)?
        };
        Ok(match self.substitution {
            Some(Substitution::LogTransform) => u.exp(),
            None => u,
        })
    }
}

/// `Res(x) = u'' + (α/x) u' + f(x) g(u) − h(x)` for the approximant `u`.
pub fn residual(problem: &LaneEmdenProblem, approx: &SpectralApproximant, x: f64) -> Result<f64> {
    let (u, du, ddu) = approx.evaluate_derivatives(x)?;
    Ok(problem.residual_at(x, u, du, ddu))
}

/// The discretised problem: collocation points plus the basis matrices evaluated there.
pub struct CollocationSystem<'a> {
    problem: &'a LaneEmdenProblem,
    map: DomainMap,
    points: Vec<f64>,
    matrices: BasisMatrices,
}

pub fn assemble_system<'a>(problem: &'a LaneEmdenProblem, config: &SolveConfig) -> Result<CollocationSystem<'a>> {
    config.validate()?;
    let map = DomainMap::new(config.k, config.l)?;
    let rule = gauss_rule(config.n)?;
    let points = map.transform_nodes(&rule);
    let matrices = basis_matrices(&map, config.n, &points)?;
    Ok(CollocationSystem { problem, map, points, matrices })
}

impl CollocationSystem<'_> {
    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn map(&self) -> &DomainMap {
        &self.map
    }

    pub fn matrices(&self) -> &BasisMatrices {
        &self.matrices
    }

    pub fn approximant(&self, coeffs: Vec<f64>) -> SpectralApproximant {
        SpectralApproximant::new(coeffs, self.problem.initial_value, self.problem.initial_slope, self.map)
    }

    /// `(u, u', u'')` at every collocation point.
    fn state(&self, a: &[f64]) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
        let (p, m) = (self.problem, &self.matrices);
        let u = m.value.mul_vec(a).iter().zip(&self.points).map(|(v, x)| p.initial_value + p.initial_slope * x + v).collect();
        let du = m.first.mul_vec(a).iter().map(|v| p.initial_slope + v).collect();
        (u, du, m.second.mul_vec(a))
    }

    pub fn residual_vector(&self, a: &[f64]) -> Vec<f64> {
        let (u, du, ddu) = self.state(a);
        (0..self.points.len())
            .map(|j| self.problem.residual_at(self.points[j], u[j], du[j], ddu[j]))
            .collect()
    }

    /// Analytic Jacobian `∂Res(x_j)/∂a_i`.
    pub fn jacobian(&self, a: &[f64]) -> Matrix {
        let (u, du, _) = self.state(a);
        let m = &self.matrices;
        let n = a.len();
        let mut jac = Matrix::zeros(self.points.len(), n);
        for (j, &x) in self.points.iter().enumerate() {
            let (c0, c1, c2) = self.problem.residual_partials(x, u[j], du[j]);
            let (r0, r1, r2) = (m.value.row(j), m.first.row(j), m.second.row(j));
            for (i, out) in jac.row_mut(j).iter_mut().enumerate() {
                *out = c2 * r2[i] + c1 * r1[i] + c0 * r0[i];
            }
        }
        jac
    }

    /// Central-difference Jacobian, for checking [`jacobian`](Self::jacobian).
    pub fn jacobian_fd(&self, a: &[f64], h: f64) -> Matrix {
        let mut jac = Matrix::zeros(self.points.len(), a.len());
        let mut probe = a.to_vec();
        for i in 0..a.len() {
            let step = h * a[i].abs().max(1.0);
            probe[i] = a[i] + step;
            let plus = self.residual_vector(&probe);
            probe[i] = a[i] - step;
            let minus = self.residual_vector(&probe);
            probe[i] = a[i];
            for j in 0..self.points.len() {
                jac[(j, i)] = (plus[j] - minus[j]) / (2.0 * step);
            }
        }
        jac
    }
}

fn inf_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| if x.is_nan() { f64::NAN } else { m.max(x.abs()) })
}

struct Attempt {
    coeffs: Vec<f64>,
    trace: Vec<NewtonStep>,
    residual: f64,
    converged: bool,
}

fn newton(sys: &CollocationSystem, config: &SolveConfig, a0: Vec<f64>, damped: bool) -> Result<Attempt> {
    let mut a = a0;
    let mut r = sys.residual_vector(&a);
    let mut rn = inf_norm(&r);
    let mut trace = Vec::new();
    for iteration in 1..=config.max_iters {
        let delta = linear_solve(&sys.jacobian(&a), &r)?;
        let mut lambda = 1.0;
        let mut trial: Vec<f64> = a.iter().zip(&delta).map(|(x, d)| x - d).collect();
        let mut r_trial = sys.residual_vector(&trial);
        let mut rn_trial = inf_norm(&r_trial);
        if damped {
            let mut halvings = 0;
            while !(rn_trial <= rn) && halvings < MAX_HALVINGS {
                lambda *= 0.5;
                trial = a.iter().zip(&delta).map(|(x, d)| x - lambda * d).collect();
                r_trial = sys.residual_vector(&trial);
                rn_trial = inf_norm(&r_trial);
                halvings += 1;
            }
        }
        let step_norm = lambda * inf_norm(&delta);
        trace.push(NewtonStep { iteration, step_norm, residual_norm: rn_trial });
        if !step_norm.is_finite() || !rn_trial.is_finite() {
            return Ok(Attempt { coeffs: a, trace, residual: rn_trial, converged: false });
        }
        let scale = inf_norm(&trial).max(1.0);
        let settled = step_norm <= config.newton_tol * scale || rn_trial <= RESIDUAL_FLOOR || rn_trial > 0.5 * rn;
        a = trial;
        r = r_trial;
        rn = rn_trial;
        if sys.problem.linear || (rn <= config.residual_tol && settled) {
            return Ok(Attempt { coeffs: a, trace, residual: rn, converged: rn <= config.residual_tol });
        }
    }
    Ok(Attempt { coeffs: a, trace, residual: rn, converged: false })
}

/// Marches the initial value problem with RK4 and returns `u` at the collocation points.
fn ivp_values(problem: &LaneEmdenProblem, points: &[f64]) -> Option<Vec<f64>> {
    let (a, b, alpha) = (problem.initial_value, problem.initial_slope, problem.alpha);
    let log = problem.substitution == Some(Substitution::LogTransform);
    // u ≈ A + Bx + c x² near the singular point
    let c = ((problem.h)(0.0) - (problem.f)(0.0) * (problem.g)(a) - if log { b * b } else { 0.0 }) / (2.0 * (1.0 + alpha));
    let taylor = |x: f64| (a + b * x + c * x * x, b + 2.0 * c * x);
    let rhs = |x: f64, u: f64, du: f64| {
        let mut dd = (problem.h)(x) - (problem.f)(x) * (problem.g)(u) - alpha / x * du;
        if log {
            dd -= du * du;
        }
        dd
    };

    let x0 = RK_MAX_STEP.min(points[0] / 2.0);
    let (mut x, (mut u, mut du)) = (x0, taylor(x0));
    let mut out = Vec::with_capacity(points.len());
    for &target in points {
        let span = target - x;
        let steps = (span / RK_MAX_STEP).ceil().max(1.0) as usize;
        let h = span / steps as f64;
        for _ in 0..steps {
            let k1 = (du, rhs(x, u, du));
            let k2 = (du + 0.5 * h * k1.1, rhs(x + 0.5 * h, u + 0.5 * h * k1.0, du + 0.5 * h * k1.1));
            let k3 = (du + 0.5 * h * k2.1, rhs(x + 0.5 * h, u + 0.5 * h * k2.0, du + 0.5 * h * k2.1));
            let k4 = (du + h * k3.1, rhs(x + h, u + h * k3.0, du + h * k3.1));
            u += h / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0);
            du += h / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1);
            x += h;
        }
        x = target;
        if !u.is_finite() {
            return None;
        }
        out.push(u);
    }
    Some(out)
}

fn warm_start(sys: &CollocationSystem) -> Result<Option<Vec<f64>>> {
    let p = sys.problem;
    let Some(values) = ivp_values(p, &sys.points) else {
        return Ok(None);
    };
    let rhs: Vec<f64> = values
        .iter()
        .zip(&sys.points)
        .map(|(u, x)| u - p.initial_value - p.initial_slope * x)
        .collect();
    Ok(Some(linear_solve(&sys.matrices.value, &rhs)?))
}

/// Solves the collocation system by Newton iteration.
pub fn solve(problem: &LaneEmdenProblem, config: &SolveConfig) -> Result<SolveReport> {
    let sys = assemble_system(problem, config)?;
    let zero = vec![0.0; config.n + 1];

    let finish = |attempt: Attempt, start: Start| SolveReport {
        approximant: sys.approximant(attempt.coeffs),
        residual_max: attempt.residual,
        iterations: attempt.trace.len(),
        newton_trace: attempt.trace,
        converged: true,
        start,
        substitution: problem.substitution,
        collocation_points: sys.points.clone(),
    };

    if problem.linear {
        let attempt = newton(&sys, config, zero, false)?;
        if attempt.converged {
            return Ok(finish(attempt, Start::Zero));
        }
        return Err(Error::NoConvergence { iterations: 1, residual: attempt.residual, trace: attempt.trace });
    }

    let mut last_err = None;
    let mut total = 0;
    let mut record = |res: Result<Attempt>, total: &mut usize| -> Option<Attempt> {
        match res {
            Ok(a) if a.converged => Some(a),
            Ok(a) => {
                *total += a.trace.len();
                last_err = Some(Error::NoConvergence { iterations: a.trace.len(), residual: a.residual, trace: a.trace });
                None
            }
            Err(e) => {
                last_err = Some(e);
                None
            }
        }
    };

    if let Some(a) = record(newton(&sys, config, zero.clone(), false), &mut total) {
        return Ok(finish(a, Start::Zero));
    }
    if let Some(a) = record(newton(&sys, config, zero, true), &mut total) {
        return Ok(finish(a, Start::DampedZero));
    }
    match warm_start(&sys) {
        Ok(Some(a0)) => {
            if let Some(a) = record(newton(&sys, config, a0, true), &mut total) {
                return Ok(finish(a, Start::WarmStart));
            }
        }
        Ok(None) => {}
        Err(e) => {
            record(Err(e), &mut total);
        }
    }
    Err(match last_err {
        Some(Error::NoConvergence { residual, trace, .. }) => {
            Error::NoConvergence { iterations: total, residual, trace }
        }
        Some(e) => e,
        None => unreachable!("every failed attempt records an error"),
    })
}
