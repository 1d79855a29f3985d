//! The log-sinh map between the half line and the real line.
//!
//! `ω = φ(z) = ln(sinh(k z))` carries `(0, ∞)` onto `ℝ`. Composing Hermite functions
//! with it gives the basis `Ĥ_n = H̃_n ∘ φ`, orthogonal on `(0, ∞)` under the induced
//! weight `φ'(z) = k coth(k z)` (plain `coth` when `k = 1`).

use std::f64::consts::LN_2;

use serde::{Deserialize, Serialize};

use crate::basis::QuadratureRule;
use crate::error::{Error, Result};

/// Past this ω the inverse uses `(ω + ln 2)/k`; the neglected term is `O(e^{-2ω})`.
const INVERSE_ASYMPTOTIC_CUTOFF: f64 = 30.0;

/// Map steepness `k` and domain scale `l`.
///
/// The map functions below only involve `k`. The scale enters through the argument
/// substitution `x → x/l` performed by the approximant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DomainMap {
    k: f64,
    l: f64,
}

impl DomainMap {
    pub fn new(k: f64, l: f64) -> Result<Self> {
        if !(k.is_finite() && k > 0.0) {
            return Err(Error::InvalidConfig(format!("map steepness k must be positive, got {k}")));
        }
        if !(l.is_finite() && l > 0.0) {
            return Err(Error::InvalidConfig(format!("domain scale l must be positive, got {l}")));
        }
        Ok(Self { k, l })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn l(&self) -> f64 {
        self.l
    }

    /// `ln(sinh(k z))`, evaluated as `kz − ln 2 + ln(1 − e^{−2kz})` so it neither
    /// overflows for large `z` nor cancels for small `z`.
    pub fn forward(&self, z: f64) -> Result<f64> {
        if !(z > 0.0) {
            return Err(domain("forward map", z));
        }
        Ok(log_sinh(self.k * z))
    }

    /// `(1/k) ln(e^ω + sqrt(e^{2ω} + 1))`.
    pub fn inverse(&self, omega: f64) -> f64 {
        if omega > INVERSE_ASYMPTOTIC_CUTOFF {
            (omega + LN_2) / self.k
        } else {
            omega.exp().asinh() / self.k
        }
    }

    /// `(dω/dz, d²ω/dz²) = (k coth(kz), −k² csch²(kz))`.
    pub fn forward_derivatives(&self, z: f64) -> Result<(f64, f64)> {
        if !(z > 0.0) {
            return Err(domain("forward map derivative", z));
        }
        Ok(self.derivatives_unchecked(z))
    }

    pub(crate) fn derivatives_unchecked(&self, z: f64) -> (f64, f64) {
        let t = self.k * z;
        let csch = 1.0 / t.sinh();
        (self.k / t.tanh(), -self.k * self.k * csch * csch)
    }

    /// Induced weight of the transformed inner product, `k coth(k z)`.
    pub fn weight(&self, z: f64) -> f64 {
        self.k / (self.k * z).tanh()
    }

    /// Pulls Hermite-Gauss nodes back to the half line.
    pub fn transform_nodes(&self, rule: &QuadratureRule) -> Vec<f64> {
        rule.nodes().iter().map(|&x| self.inverse(x)).collect()
    }
}

pub(crate) fn log_sinh(t: f64) -> f64 {
    t - LN_2 + (-(-2.0 * t).exp_m1()).ln()
}

fn domain(what: &'static str, value: f64) -> Error {
    Error::Domain { what, requirement: "a positive argument", value }
}
