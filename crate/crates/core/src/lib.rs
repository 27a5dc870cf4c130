//! Residual power series solver for time-fractional PDEs `D_t^{kα} y = N_x[y]`
//! (k ∈ {1, 2}, 0 < α ≤ 1), working in the ARA transform space.
//!
//! The building blocks, bottom-up:
//!
//! * [`special`]: Gamma function, Gamma ratios, fractional cosh/sinh partial sums.
//! * [`hypalg`]: closed algebra of combinations of `1`, `cosh(kx)`, `sinh(kx)`.
//! * [`fpseries`]: truncated fractional power series in `t^α`.
//! * [`ara`]: formal and numerical ARA transforms and their operational rules.
//! * [`caputo`]: numerical Caputo and Riemann–Liouville oracles.
//! * [`solver`]: operator trees, PDE specs, the coefficient recursion, residuals.
//! * [`bench`]: error tables, surface data, validation suite and the CLI.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod ara;
pub mod bench;
pub mod caputo;
pub mod error;
pub mod fmt;
pub mod fpseries;
pub mod hypalg;
pub mod quad;
pub mod solver;
pub mod special;

pub use error::{Error, Result};
pub use fpseries::FracSeries;
pub use hypalg::{Basis, HypExpr, Term};
