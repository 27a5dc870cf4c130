//! Numerical Riemann–Liouville integral and Caputo derivative (order m = 1).
//!
//! These are oracles for the exact series machinery, not part of the solver.

use crate::error::{Error, Result};
use crate::quad::{integrate, QuadConfig, QuadResult};
use crate::special::gamma;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CaputoConfig {
    pub quadrature_tol: f64,
    /// Relative step of the central difference: `f'(τ) ≈ (f(τ+hτ) − f(τ−hτ)) / 2hτ`.
    pub derivative_step: f64,
    pub max_panels: usize,
    /// Relative accuracy of the supplied function values.
    pub value_noise: f64,
}

impl Default for CaputoConfig {
    fn default() -> Self {
        CaputoConfig {
            quadrature_tol: 1e-12,
            derivative_step: 1e-5,
            max_panels: 1 << 16,
            value_noise: 100.0 * f64::EPSILON,
        }
    }
}

impl CaputoConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.quadrature_tol > 0.0) {
            return Err(Error::Config("quadrature_tol must be positive".into()));
        }
        if !(1e-7..=1e-3).contains(&self.derivative_step) {
            return Err(Error::Config("derivative_step must lie in [1e-7, 1e-3]".into()));
        }
        if !(self.value_noise > 0.0 && self.value_noise < 1.0) {
            return Err(Error::Config("value_noise must lie in (0, 1)".into()));
        }
        if self.max_panels == 0 {
            return Err(Error::Config("max_panels must be positive".into()));
        }
        Ok(())
    }

    fn quad(&self, abs_tol: f64) -> QuadConfig {
        QuadConfig { abs_tol, rel_tol: 0.0, max_panels: self.max_panels }
    }
}

/// Central difference with a step proportional to `t`, so `t − h` stays positive.
pub fn numeric_derivative<F: Fn(f64) -> f64>(f: &F, t: f64, cfg: &CaputoConfig) -> f64 {
    let h = cfg.derivative_step * t;
    (f(t + h) - f(t - h)) / (2.0 * h)
}

/// `J^α f(t) = (1/Γ(α)) ∫₀ᵗ (t − τ)^{α−1} f(τ) dτ`.
///
/// The interval is split at `t/2`. On the upper half the substitution
/// `τ = t − u^{1/α}` turns the kernel into the constant `1/α`.
pub fn rl_integral_numeric<F: Fn(f64) -> f64>(f: F, alpha: f64, t: f64, cfg: &CaputoConfig) -> Result<QuadResult> {
    cfg.validate()?;
    if !(alpha > 0.0) {
        return Err(Error::Domain { func: "rl_integral_numeric", arg: alpha });
    }
    if !(t > 0.0) {
        return Err(Error::Domain { func: "rl_integral_numeric", arg: t });
    }
    let g = gamma(alpha)?;
    let q = cfg.quad(0.5 * cfg.quadrature_tol * g);
    let mid = 0.5 * t;
    let lower = integrate(|tau| (t - tau).powf(alpha - 1.0) * f(tau), &[0.0, mid], &q)?;
    let inv = 1.0 / alpha;
    let upper = integrate(|u: f64| f(t - u.powf(inv)), &[0.0, mid.powf(alpha)], &q)?;
    Ok(QuadResult {
        value: (lower.value + upper.value * inv) / g,
        error: (lower.error + upper.error * inv) / g,
        panels: lower.panels + upper.panels,
    })
}

/// `D^α f(t) = J^{1−α} f'(t)` for α ∈ (0, 1); the plain derivative for α = 1.
///
/// With `β = 1 − α`, `K(τ) = (t − τ)^{−α}` and `m = t/2`, the lower half is
/// integrated by parts so that no derivative is taken near `τ = 0`:
///
/// `Γ(β) D^α f(t) = (f(m) − f(0)) K(m) − α ∫₀^m (f(τ) − f(0)) (t − τ)^{−α−1} dτ
///                 + (1/β) ∫₀^{(t−m)^β} f'(t − u^{1/β}) du`.
pub fn caputo_numeric<F: Fn(f64) -> f64>(f: F, alpha: f64, t: f64, cfg: &CaputoConfig) -> Result<f64> {
    cfg.validate()?;
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::InvalidAlpha(alpha));
    }
    if !(t > 0.0) {
        return Err(Error::Domain { func: "caputo_numeric", arg: t });
    }
    if alpha == 1.0 {
        return Ok(numeric_derivative(&f, t, cfg));
    }
    let beta = 1.0 - alpha;
    let g = gamma(beta)?;
    let m = 0.5 * t;
    let f0 = f(0.0);

    // Both halves see roundoff: ε|f| in f(τ) − f(0) below, ε|f|/h in the
    // differenced values above. Tolerances are floored at what that allows.
    let scale = f(t).abs().max(f(m).abs()).max(f0.abs()).max(1.0);
    let tol = 0.25 * cfg.quadrature_tol * g;
    let noise = cfg.value_noise * scale;
    let lower_floor = noise * (t - m).powf(-alpha) / alpha;
    let upper_floor = noise / (cfg.derivative_step * m) * (t - m).powf(beta);

    let q = cfg.quad(tol.max(lower_floor));
    let lower = integrate(|tau| (f(tau) - f0) * (t - tau).powf(-alpha - 1.0), &[0.0, m], &q)?;

    let q = cfg.quad(tol.max(upper_floor));
    let inv = 1.0 / beta;
    let upper = integrate(|u: f64| numeric_derivative(&f, t - u.powf(inv), cfg), &[0.0, (t - m).powf(beta)], &q)?;

    let boundary = (f(m) - f0) * (t - m).powf(-alpha);
    Ok((boundary - alpha * lower.value + inv * upper.value) / g)
}
