//! The boundary-embedding approximant
//!
//! ```text
//! u(x) = A + B x + s Σ_i a_i Ĥ_i(s),    s = x / l,    Ĥ_i = H̃_i ∘ φ,
//! ```
//!
//! which takes the value `A` and slope `B` as `x → 0⁺` for every coefficient vector,
//! since `Ĥ_i(s) → 0` there.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::basis::hermite_table;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::mapping::{log_sinh, DomainMap};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralApproximant {
    coeffs: Vec<f64>,
    value_at_origin: f64,
    slope_at_origin: f64,
    map: DomainMap,
}

/// Value and first two derivatives of `s Ĥ_i(s)`, `s = x/l`, with respect to `x`,
/// for `i = 0..=n`.
#[derive(Debug, Clone)]
pub(crate) struct TermDerivatives {
    pub value: Vec<f64>,
    pub first: Vec<f64>,
    pub second: Vec<f64>,
}

pub(crate) fn term_derivatives(map: &DomainMap, n: usize, x: f64) -> TermDerivatives {
    let l = map.l();
    let s = x / l;
    let omega = log_sinh(map.k() * s);
    let (dphi, ddphi) = map.derivatives_unchecked(s);
    let h = hermite_table(n, omega);

    let mut value = Vec::with_capacity(n + 1);
    let mut first = Vec::with_capacity(n + 1);
    let mut second = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let p = h.value[i];
        // near s = 0 the Hermite factors underflow before the map derivatives overflow
        let (dp, ddp) = if h.first[i] == 0.0 && h.second[i] == 0.0 {
            (0.0, 0.0)
        } else {
            (h.first[i] * dphi, h.second[i] * dphi * dphi + h.first[i] * ddphi)
        };
        value.push(s * p);
        first.push((p + s * dp) / l);
        second.push((2.0 * dp + s * ddp) / (l * l));
    }
    TermDerivatives { value, first, second }
}

impl SpectralApproximant {
    pub fn new(coeffs: Vec<f64>, value_at_origin: f64, slope_at_origin: f64, map: DomainMap) -> Self {
        Self { coeffs, value_at_origin, slope_at_origin, map }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// `N`, the highest basis index.
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn value_at_origin(&self) -> f64 {
        self.value_at_origin
    }

    pub fn slope_at_origin(&self) -> f64 {
        self.slope_at_origin
    }

    pub fn map(&self) -> &DomainMap {
        &self.map
    }

    pub fn evaluate(&self, x: f64) -> Result<f64> {
        Ok(self.evaluate_derivatives(x)?.0)
    }

    /// `(u(x), u'(x), u''(x))`.
    pub fn evaluate_derivatives(&self, x: f64) -> Result<(f64, f64, f64)> {
        if !(x > 0.0) {
            return Err(Error::Domain {
                what: "approximant evaluation",
                requirement: "x > 0",
                value: x,
            });
        }
        let (a, b) = (self.value_at_origin, self.slope_at_origin);
        if self.coeffs.is_empty() {
            return Ok((a + b * x, b, 0.0));
        }
        let t = term_derivatives(&self.map, self.order(), x);
        let dot = |v: &[f64]| -> f64 { v.iter().zip(&self.coeffs).map(|(p, c)| p * c).sum() };
        Ok((a + b * x + dot(&t.value), b + dot(&t.first), dot(&t.second)))
    }

    /// Writes `i,a_i,abs_a_i` rows.
    pub fn write_coefficients_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "i,a_i,abs_a_i")?;
        for (i, a) in self.coeffs.iter().enumerate() {
            writeln!(out, "{i},{},{}", crate::format::sig10(*a), crate::format::sig10(a.abs()))?;
        }
        Ok(())
    }
}

/// Per-point value, first and second derivative of each basis term `x Ĥ_i(x/l)/l`.
///
/// Row `j` holds the terms at `points[j]`; column `i` belongs to coefficient `a_i`, so an
/// approximant's non-affine part at the points is `value · a`.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisMatrices {
    pub value: Matrix,
    pub first: Matrix,
    pub second: Matrix,
}

pub fn basis_matrices(map: &DomainMap, n: usize, points: &[f64]) -> Result<BasisMatrices> {
    let rows = points.len();
    let mut value = Matrix::zeros(rows, n + 1);
    let mut first = Matrix::zeros(rows, n + 1);
    let mut second = Matrix::zeros(rows, n + 1);
    for (j, &x) in points.iter().enumerate() {
        if !(x > 0.0) {
            return Err(Error::Domain { what: "basis matrices", requirement: "positive points", value: x });
        }
        let t = term_derivatives(map, n, x);
        value.row_mut(j).copy_from_slice(&t.value);
        first.row_mut(j).copy_from_slice(&t.first);
        second.row_mut(j).copy_from_slice(&t.second);
    }
    Ok(BasisMatrices { value, first, second })
}
