//! The residual power series engine.
//!
//! [`solve`] runs the explicit coefficient recursion in t-space:
//! `c_{n+k} = [rhs(y truncated at order n+k−1)]_n`. [`residual_check`]
//! independently rebuilds the ARA-space residual from the transform rules for
//! `𝒢₂[D^α y]` and `𝒢₂[D^{2α} y]` and reads off its coefficients.

mod ast;
mod builtin;
mod spec;

pub use ast::OperatorAst;
pub use builtin::{builtin_example, exact_solution, ExampleParams, TAIL_TOL};
pub use spec::PdeSpec;

use crate::ara::to_ara;
use crate::error::{Error, Result};
use crate::fpseries::FracSeries;
use crate::hypalg::HypExpr;

/// Truncation order used throughout the reproduction tables and figures.
pub const DEFAULT_ORDER: usize = 6;
/// Magnitude below which a residual coefficient counts as zero.
pub const RESIDUAL_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct SolveResult {
    pub series: FracSeries,
    /// `max |coeff|` of the residual coefficient at `s^{−(nα+1)}`, for n = 0..=K.
    pub residual_leading: Vec<f64>,
}

impl SolveResult {
    pub fn max_residual(&self) -> f64 {
        self.residual_leading.iter().fold(0.0, |m, &r| m.max(r))
    }
}

pub fn solve(spec: &PdeSpec, order: usize) -> Result<SolveResult> {
    spec.validate()?;
    let k = spec.time_order as usize;
    if order < k {
        return Err(Error::Config(format!("order {order} is below the time order {k}")));
    }
    let mut seed = vec![spec.ic_a.clone()];
    seed.extend(spec.ic_b.iter().cloned());
    let mut y = FracSeries::new(spec.alpha, seed)?;
    for n in 0..=order - k {
        let image = spec.rhs.apply(&y)?;
        let next = image.coeff(n).cloned().expect("rhs keeps the order of its argument");
        y.push(next);
    }
    let residual_leading =
        (0..=order).map(|n| Ok(residual_check(spec, &y, n)?.max_abs_coeff())).collect::<Result<_>>()?;
    Ok(SolveResult { series: y, residual_leading })
}

/// Coefficient of `s^{−(nα+1)}` in the ARA-space residual of `series`.
///
/// With `hₙ` the order-two image coefficients and `gₘ = (mα+1)[rhs(y)]ₘ`, the
/// transformed equation divided by `s^{kα}` reads, for k = 2,
///
/// `hₙ(1 − 2α/(nα+1)) + [n=0](2α−1)a + [n=1](α−1)b − [n≥2] g_{n−2}`
///
/// and for k = 1, `hₙ(1 − α/(nα+1)) + [n=0](α−1)a − [n≥1] g_{n−1}`.
pub fn residual_check(spec: &PdeSpec, series: &FracSeries, n: usize) -> Result<HypExpr> {
    if n > series.order() {
        return Err(Error::Config(format!("residual order {n} exceeds series order {}", series.order())));
    }
    if series.alpha() != spec.alpha {
        return Err(Error::AlphaMismatch(series.alpha(), spec.alpha));
    }
    let alpha = spec.alpha;
    let k = spec.time_order as usize;
    let kf = k as f64;
    let h = to_ara(series);
    let weight = n as f64 * alpha + 1.0;

    let mut r = h.coeffs()[n].scale(1.0 - kf * alpha / weight);
    if n == 0 {
        r += &spec.ic_a.scale(kf * alpha - 1.0);
    }
    if n == 1 {
        if let Some(b) = &spec.ic_b {
            r += &b.scale(alpha - 1.0);
        }
    }
    if n >= k {
        let m = n - k;
        let image = to_ara(&spec.rhs.apply(series)?);
        r += &(-&image.coeffs()[m]);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn none() -> ExampleParams {
        ExampleParams::None
    }

    #[test]
    fn example3_second_coefficient() {
        for alpha in [0.25, 0.5, 1.0] {
            let spec = builtin_example(3, &none(), alpha).unwrap();
            let r = solve(&spec, 2).unwrap();
            assert!(r.series.coeffs()[2].max_diff(&HypExpr::cosh(1.0, 1.0)) < 1e-14);
        }
    }

    #[test]
    fn example1_second_coefficient() {
        let p = ExampleParams::default_for(1).unwrap();
        for alpha in [0.3, 1.0] {
            let spec = builtin_example(1, &p, alpha).unwrap();
            let r = solve(&spec, 2).unwrap();
            assert!(r.series.coeffs()[2].max_diff(&HypExpr::cosh(-1.0 / 6.0, 0.5)) < 1e-14);
        }
    }

    #[test]
    fn trivial_dynamics() {
        let spec = PdeSpec {
            time_order: 1,
            alpha: 0.5,
            rhs: OperatorAst::constant(0.0),
            ic_a: HypExpr::cosh(1.0, 1.0),
            ic_b: None,
        };
        let r = solve(&spec, 5).unwrap();
        assert_eq!(r.series.order(), 5);
        assert!(r.series.coeffs()[1..].iter().all(HypExpr::is_zero));
        assert_eq!(r.max_residual(), 0.0);
    }

    #[test]
    fn residuals_vanish_and_detect_faults() {
        let spec = builtin_example(3, &none(), 0.75).unwrap();
        let r = solve(&spec, 6).unwrap();
        assert!(r.max_residual() <= RESIDUAL_TOL, "{:?}", r.residual_leading);

        let mut coeffs = r.series.coeffs().to_vec();
        coeffs[2] += &HypExpr::constant(1.0);
        let bad = FracSeries::new(0.75, coeffs).unwrap();
        assert!(residual_check(&spec, &bad, 2).unwrap().max_abs_coeff() > 0.1);
        assert!(residual_check(&spec, &bad, 7).is_err());
    }

    #[test]
    fn order_below_time_order_is_rejected() {
        let spec = builtin_example(3, &none(), 1.0).unwrap();
        assert!(solve(&spec, 1).is_err());
    }
}
