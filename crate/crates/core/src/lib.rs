//! Spectral collocation for Lane-Emden type equations on the half line.
//!
//! The unknown is expanded in Hermite functions composed with the map
//! `ω = ln(sinh(kx))`, embedded so the initial conditions hold for any coefficients,
//! and the residual is collocated at mapped Hermite-Gauss points. Newton's method
//! solves for the coefficients.
//!
//! ```no_run
//! use lane_emden::{problems, solver};
//!
//! let entry = problems::lookup("example1-m3")?;
//! let report = solver::solve(&entry.problem, &entry.config)?;
//! println!("y(1) = {}", report.value(1.0)?);
//! # Ok::<(), lane_emden::Error>(())
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod approximant;
pub mod basis;
pub mod cli;
pub mod diagnostics;
pub mod error;
pub mod format;
pub mod linalg;
pub mod mapping;
pub mod problems;
pub mod solver;

pub use approximant::SpectralApproximant;
pub use error::{Error, Result};
pub use mapping::DomainMap;
pub use problems::{LaneEmdenProblem, SolveConfig};
pub use solver::{solve, SolveReport};
