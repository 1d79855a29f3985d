//! Normalized Hermite functions and the Hermite-Gauss rule built on them.
//!
//! All evaluation happens in damped form, `H̃_n(x) = e^{-x²/2} H_n(x) / sqrt(2ⁿ n!)`,
//! via the three-term recurrence
//!
//! ```text
//! H̃_0 = e^{-x²/2},   H̃_1 = √2 x e^{-x²/2},
//! H̃_{n+1} = x √(2/(n+1)) H̃_n − √(n/(n+1)) H̃_{n−1}.
//! ```
//!
//! The functions satisfy `∫ H̃_m H̃_n dx = √π δ_mn` on the real line.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Largest truncation `gauss_rule` accepts.
pub const MAX_ORDER: usize = 200;

const NODE_TOL: f64 = 1e-12;
const NEWTON_MAX_ITERS: usize = 100;

/// Evaluates `H̃_n(x)`.
pub fn hermite_function(n: usize, x: f64) -> f64 {
    let h0 = (-0.5 * x * x).exp();
    if n == 0 {
        return h0;
    }
    let mut prev = h0;
    let mut cur = std::f64::consts::SQRT_2 * x * h0;
    for j in 1..n {
        let next = step(j, x, cur, prev);
        prev = cur;
        cur = next;
    }
    cur
}

#[inline]
fn step(n: usize, x: f64, cur: f64, prev: f64) -> f64 {
    let nf = n as f64;
    x * (2.0 / (nf + 1.0)).sqrt() * cur - (nf / (nf + 1.0)).sqrt() * prev
}

/// Evaluates `H̃_0(x), ..., H̃_{n_max}(x)` in a single upward pass.
pub fn hermite_function_batch(n_max: usize, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push((-0.5 * x * x).exp());
    if n_max == 0 {
        return out;
    }
    out.push(std::f64::consts::SQRT_2 * x * out[0]);
    for j in 1..n_max {
        let next = step(j, x, out[j], out[j - 1]);
        out.push(next);
    }
    out
}

/// Evaluates `H̃'_n(x) = √(n/2) H̃_{n−1}(x) − √((n+1)/2) H̃_{n+1}(x)`.
pub fn hermite_function_derivative(n: usize, x: f64) -> f64 {
    let h = hermite_function_batch(n + 1, x);
    let nf = n as f64;
    let lower = if n == 0 { 0.0 } else { (nf / 2.0).sqrt() * h[n - 1] };
    lower - ((nf + 1.0) / 2.0).sqrt() * h[n + 1]
}

/// Values, first and second derivatives of `H̃_0..=H̃_{n_max}` at `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteTable {
    pub value: Vec<f64>,
    pub first: Vec<f64>,
    pub second: Vec<f64>,
}

/// Fills a [`HermiteTable`] at `x`.
///
/// First derivatives use `H̃'_n = √(2n) H̃_{n−1} − x H̃_n`; second derivatives use the
/// Hermite function equation `H̃''_n = (x² − 2n − 1) H̃_n`.
pub fn hermite_table(n_max: usize, x: f64) -> HermiteTable {
    let value = hermite_function_batch(n_max, x);
    let first = (0..=n_max)
        .map(|n| {
            let lower = if n == 0 { 0.0 } else { (2.0 * n as f64).sqrt() * value[n - 1] };
            lower - x * value[n]
        })
        .collect();
    let second = (0..=n_max)
        .map(|n| (x * x - 2.0 * n as f64 - 1.0) * value[n])
        .collect();
    HermiteTable { value, first, second }
}

/// Hermite-Gauss nodes and weights for the normalized functions.
///
/// With `N = order`, the `N + 1` nodes are the roots of `H_{N+1}` and the weights are
/// `√π / ((N+1) H̃_N(x_j)²)`, so that `Σ_j H̃_m(x_j) H̃_n(x_j) w_j = √π δ_mn` for `m, n ≤ N`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    order: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Ascending abscissae.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `Σ_j f(x_j) w_j`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| f(x) * w)
            .sum()
    }
}

/// Builds the Hermite-Gauss rule with `order + 1` points.
///
/// Roots are found by Newton iteration on `H̃_{N+1}` from asymptotic starting guesses,
/// largest root first; the negative half is filled in by symmetry.
pub fn gauss_rule(order: usize) -> Result<QuadratureRule> {
    if order > MAX_ORDER {
        return Err(Error::InvalidConfig(format!(
            "quadrature order {order} exceeds the supported maximum {MAX_ORDER}"
        )));
    }
    let n = order + 1;
    let half = n.div_ceil(2);
    let nf = n as f64;
    let mut roots: Vec<f64> = Vec::with_capacity(half);

    for i in 0..half {
        if n % 2 == 1 && i == half - 1 {
            roots.push(0.0);
            break;
        }
        let mut z = match i {
            0 => (2.0 * nf + 1.0).sqrt() - 1.85575 * (2.0 * nf + 1.0).powf(-1.0 / 6.0),
            1 => roots[0] - 1.14 * nf.powf(0.426) / roots[0],
            2 => 1.86 * roots[1] - 0.86 * roots[0],
            3 => 1.91 * roots[2] - 0.91 * roots[1],
            _ => 2.0 * roots[i - 1] - roots[i - 2],
        };
        let mut converged = false;
        for _ in 0..NEWTON_MAX_ITERS {
            let h = hermite_function_batch(n, z);
            let deriv = (2.0 * nf).sqrt() * h[n - 1] - z * h[n];
            let dz = h[n] / deriv;
            z -= dz;
            if dz.abs() <= 4.0 * f64::EPSILON * z.abs().max(1.0) {
                converged = true;
                break;
            }
        }
        if !converged || !z.is_finite() || hermite_function(n, z).abs() > NODE_TOL {
            return Err(Error::QuadratureNotConverged { order });
        }
        roots.push(z);
    }

    // roots holds the non-negative half in descending order
    let mut nodes = vec![0.0; n];
    for (i, &r) in roots.iter().enumerate() {
        nodes[n - 1 - i] = r;
        nodes[i] = -r;
    }
    let sqrt_pi = PI.sqrt();
    let weights = nodes
        .iter()
        .map(|&x| {
            let h = hermite_function(order, x);
            sqrt_pi / (nf * h * h)
        })
        .collect();
    Ok(QuadratureRule { order, nodes, weights })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `H_n(x) e^{-x²/2} / sqrt(2ⁿ n!)` with `H_n` from the raw polynomial recurrence.
    fn closed_form(n: usize, x: f64) -> f64 {
        let mut hm = 1.0;
        let mut h = 2.0 * x;
        if n == 0 {
            h = hm;
        } else {
            for j in 1..n {
                let next = 2.0 * x * h - 2.0 * j as f64 * hm;
                hm = h;
                h = next;
            }
        }
        let norm: f64 = (1..=n).map(|j| 2.0 * j as f64).product::<f64>().sqrt();
        h * (-0.5 * x * x).exp() / norm
    }

    #[test]
    fn small_values() {
        assert_eq!(hermite_function(0, 0.0), 1.0);
        assert_eq!(hermite_function(1, 0.0), 0.0);
        let direct = (4.0 - 2.0) * (-0.5f64).exp() / 8f64.sqrt();
        assert!((direct - 0.4288819424803531).abs() < 1e-15);
        assert!((hermite_function(2, 1.0) - direct).abs() < 1e-15);
    }

    #[test]
    fn batch_matches_single() {
        assert_eq!(hermite_function_batch(1, 0.0), vec![1.0, 0.0]);
        let b = hermite_function_batch(2, 1.0);
        assert!((b[0] - 0.6065306597126334).abs() < 1e-15);
        assert!((b[1] - 0.8577638849607068).abs() < 1e-15);
        assert!((b[2] - 0.4288819424803531).abs() < 1e-15);
        assert_eq!(hermite_function_batch(0, 5.0), vec![(-12.5f64).exp()]);
        for n in 0..30 {
            for &x in &[-4.0, -0.3, 0.0, 1.7, 6.0] {
                assert_eq!(hermite_function_batch(29, x)[n], hermite_function(n, x));
            }
        }
    }

    #[test]
    fn recurrence_matches_closed_form() {
        for n in 0..=20 {
            for i in 0..=100 {
                let x = -5.0 + 0.1 * i as f64;
                let a = hermite_function(n, x);
                let b = closed_form(n, x);
                assert!((a - b).abs() <= 1e-10 * b.abs().max(1e-6), "n={n} x={x}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn derivative_values() {
        assert_eq!(hermite_function_derivative(0, 0.0), 0.0);
        assert!((hermite_function_derivative(1, 0.0) - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn derivative_forms_agree() {
        for n in 0..=40 {
            let mut x = -10.0;
            while x <= 10.0 {
                let t = hermite_table(n, x);
                let d = hermite_function_derivative(n, x);
                assert!((t.first[n] - d).abs() <= 1e-12, "n={n} x={x}");
                x += 0.25;
            }
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let h = 1e-5;
        for n in 0..=40 {
            let mut x = -10.0;
            while x <= 10.0 {
                let fd = (hermite_function(n, x + h) - hermite_function(n, x - h)) / (2.0 * h);
                let d = hermite_function_derivative(n, x);
                assert!((fd - d).abs() <= 1e-8 * d.abs().max(1.0), "n={n} x={x}");
                x += 0.37;
            }
        }
    }

    #[test]
    fn second_derivative_by_applying_first_twice() {
        // H̃''_n = √(n/2) H̃'_{n-1} − √((n+1)/2) H̃'_{n+1}
        for n in 0..=25 {
            for &x in &[-3.0, -0.5, 0.0, 0.8, 4.2] {
                let nf = n as f64;
                let lower = if n == 0 {
                    0.0
                } else {
                    (nf / 2.0).sqrt() * hermite_function_derivative(n - 1, x)
                };
                let twice = lower - ((nf + 1.0) / 2.0).sqrt() * hermite_function_derivative(n + 1, x);
                let t = hermite_table(n, x);
                assert!((t.second[n] - twice).abs() < 1e-12, "n={n} x={x}");
            }
        }
    }

    #[test]
    fn decay_far_out() {
        for n in 0..=40 {
            assert!(hermite_function(n, 30.0).abs() <= 1e-8);
            assert!(hermite_function(n, -30.0).abs() <= 1e-8);
        }
    }

    #[test]
    fn rule_order_zero_and_one() {
        let r = gauss_rule(0).unwrap();
        assert_eq!(r.nodes(), &[0.0]);
        assert!((r.weights()[0] - PI.sqrt()).abs() < 1e-15);

        let r = gauss_rule(1).unwrap();
        let s = 0.5f64.sqrt();
        assert!((r.nodes()[0] + s).abs() < 1e-15);
        assert!((r.nodes()[1] - s).abs() < 1e-15);
        // brute-force discrete orthogonality for the two-point rule
        for m in 0..=1 {
            for n in 0..=1 {
                let sum = r.integrate(|x| hermite_function(m, x) * hermite_function(n, x));
                let expect = if m == n { PI.sqrt() } else { 0.0 };
                assert!((sum - expect).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn rule_invariants() {
        for order in [2, 5, 10, 20, 30, 31, 64, 100, 150, 200] {
            let r = gauss_rule(order).unwrap();
            assert_eq!(r.len(), order + 1);
            let x = r.nodes();
            let w = r.weights();
            for j in 0..=order {
                assert!(w[j] > 0.0);
                assert!((x[j] + x[order - j]).abs() <= 1e-13);
                assert!((w[j] - w[order - j]).abs() <= 1e-13 * w[j]);
                assert!(hermite_function(order + 1, x[j]).abs() <= 1e-12);
                if j > 0 {
                    assert!(x[j] > x[j - 1]);
                }
            }
        }
    }

    #[test]
    fn discrete_orthogonality() {
        let order = 10;
        let r = gauss_rule(order).unwrap();
        for m in 0..=order {
            for n in 0..=order {
                let sum = r.integrate(|x| hermite_function(m, x) * hermite_function(n, x));
                let expect = if m == n { PI.sqrt() } else { 0.0 };
                assert!((sum - expect).abs() < 1e-10, "m={m} n={n}: {sum}");
            }
        }
    }

    #[test]
    fn derivative_inner_products() {
        let r = gauss_rule(60).unwrap();
        let sp = PI.sqrt();
        for n in 0..=12usize {
            for m in 0..=12usize {
                let got = r.integrate(|x| hermite_function_derivative(n, x) * hermite_function_derivative(m, x));
                let nf = n as f64;
                let expect = if m == n {
                    sp * (nf + 0.5)
                } else if m + 2 == n {
                    -(nf * (nf - 1.0)).sqrt() * sp / 2.0
                } else if m == n + 2 {
                    -((nf + 1.0) * (nf + 2.0)).sqrt() * sp / 2.0
                } else {
                    0.0
                };
                assert!((got - expect).abs() < 1e-8, "n={n} m={m}: {got} vs {expect}");
            }
        }
    }

    #[test]
    fn rejects_oversized_order() {
        assert!(gauss_rule(MAX_ORDER + 1).is_err());
    }
}
