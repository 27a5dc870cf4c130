use serde::{Deserialize, Serialize};

use super::ast::OperatorAst;
use super::spec::PdeSpec;
use crate::error::{Error, Result};
use crate::fpseries::check_alpha;
use crate::hypalg::HypExpr;
use crate::special::{ml_term, pow_frac};

/// Physical parameters of the builtin examples.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExampleParams {
    /// Example 1 (Klein–Gordon type): `v, w > 0`, any real `lambda`.
    KleinGordon { v: f64, w: f64, lambda: f64 },
    /// Example 2 (Boussinesq type): wave speed `gamma`.
    Boussinesq { gamma: f64 },
    /// Examples 3 and 4 have no free parameters.
    None,
}

impl ExampleParams {
    /// `v = w = λ = 1` for example 1, `γ = 2` for example 2.
    pub fn default_for(id: u8) -> Result<Self> {
        match id {
            1 => Ok(ExampleParams::KleinGordon { v: 1.0, w: 1.0, lambda: 1.0 }),
            2 => Ok(ExampleParams::Boussinesq { gamma: 2.0 }),
            3 | 4 => Ok(ExampleParams::None),
            _ => Err(Error::UnknownExample(id)),
        }
    }

    fn check(&self, id: u8) -> Result<()> {
        let mismatch = |reason: &str| Err(Error::ParamsMismatch { id, reason: reason.into() });
        match (id, *self) {
            (1, ExampleParams::KleinGordon { v, w, lambda }) => {
                if !(v > 0.0 && w > 0.0 && v.is_finite() && w.is_finite()) {
                    return mismatch("v and w must be positive and finite");
                }
                if !lambda.is_finite() {
                    return mismatch("lambda must be finite");
                }
                Ok(())
            }
            (2, ExampleParams::Boussinesq { gamma }) => {
                if gamma.is_finite() {
                    Ok(())
                } else {
                    mismatch("gamma must be finite")
                }
            }
            (3 | 4, ExampleParams::None) => Ok(()),
            (1..=4, _) => mismatch("parameter kind does not belong to this example"),
            _ => Err(Error::UnknownExample(id)),
        }
    }
}

fn y() -> OperatorAst {
    OperatorAst::solution()
}

fn y_squared() -> OperatorAst {
    OperatorAst::pow(2, y())
}

fn y_times_yxx() -> OperatorAst {
    OperatorAst::mul(y(), OperatorAst::dx(2, y()))
}

/// The four builtin problems:
///
/// 1. `D^{2α}y = v(y²)ₓₓ − w(y²)ₓₓₓₓ`, `y(x,0) = (2λ²/3v)(1 − cosh kx)`,
///    `D^α y(x,0) = λ³/(3√(vw)) sinh kx`, with `k = √(v/w)/2`.
/// 2. `D^{2α}y = yₓₓ + (y²)ₓₓ − (y·yₓₓ)ₓₓ`, `y(x,0) = −(γ²−1)(cosh x − 1)`,
///    `D^α y(x,0) = γ(γ²−1) sinh x`.
/// 3. `D^{2α}y = −(y²)ₓₓ + (y·yₓₓ)ₓₓ`, `y(x,0) = cosh x − 1`,
///    `D^α y(x,0) = −sinh x`.
/// 4. `D^α y = (y³)ₓ − (y³)ₓₓₓ`, `y(x,0) = √(3/2) sinh(x/3)`.
pub fn builtin_example(id: u8, params: &ExampleParams, alpha: f64) -> Result<PdeSpec> {
    params.check(id)?;
    check_alpha(alpha)?;
    let spec = match *params {
        ExampleParams::KleinGordon { v, w, lambda } => {
            let k = (v / w).sqrt() / 2.0;
            let amp = 2.0 * lambda * lambda / (3.0 * v);
            PdeSpec {
                time_order: 2,
                alpha,
                rhs: OperatorAst::add(vec![
                    OperatorAst::scale(v, OperatorAst::dx(2, y_squared())),
                    OperatorAst::scale(-w, OperatorAst::dx(4, y_squared())),
                ]),
                ic_a: HypExpr::constant(amp) - HypExpr::cosh(amp, k),
                ic_b: Some(HypExpr::sinh(lambda.powi(3) / (3.0 * (v * w).sqrt()), k)),
            }
        }
        ExampleParams::Boussinesq { gamma } => {
            let r = gamma * gamma - 1.0;
            PdeSpec {
                time_order: 2,
                alpha,
                rhs: OperatorAst::add(vec![
                    OperatorAst::dx(2, y()),
                    OperatorAst::dx(2, y_squared()),
                    OperatorAst::scale(-1.0, OperatorAst::dx(2, y_times_yxx())),
                ]),
                ic_a: HypExpr::constant(r) - HypExpr::cosh(r, 1.0),
                ic_b: Some(HypExpr::sinh(gamma * r, 1.0)),
            }
        }
        ExampleParams::None if id == 3 => PdeSpec {
            time_order: 2,
            alpha,
            rhs: OperatorAst::add(vec![
                OperatorAst::scale(-1.0, OperatorAst::dx(2, y_squared())),
                OperatorAst::dx(2, y_times_yxx()),
            ]),
            ic_a: HypExpr::cosh(1.0, 1.0) - HypExpr::constant(1.0),
            ic_b: Some(HypExpr::sinh(-1.0, 1.0)),
        },
        ExampleParams::None => {
            let cube = || OperatorAst::pow(3, y());
            PdeSpec {
                time_order: 1,
                alpha,
                rhs: OperatorAst::add(vec![
                    OperatorAst::dx(1, cube()),
                    OperatorAst::scale(-1.0, OperatorAst::dx(3, cube())),
                ]),
                ic_a: HypExpr::sinh(1.5f64.sqrt(), 1.0 / 3.0),
                ic_b: None,
            }
        }
    };
    spec.validate()?;
    Ok(spec)
}

/// Largest number of series terms the automatic mode will sum.
const MAX_TERMS: usize = 4000;
/// Relative size of the first neglected term accepted as converged.
pub const TAIL_TOL: f64 = 1e-14;

/// `−A (cosh(kx) C(t) − sinh(kx) S(t) − 1)`, where `C` and `S` are the even
/// and odd parts of `Σ (ω t^α)^m / Γ(mα + 1)`.
struct Wave {
    amp: f64,
    k: f64,
    omega: f64,
}

impl Wave {
    fn for_example(id: u8, params: &ExampleParams) -> Result<Option<Wave>> {
        params.check(id)?;
        Ok(match *params {
            ExampleParams::KleinGordon { v, w, lambda } => {
                let k = (v / w).sqrt() / 2.0;
                Some(Wave { amp: 2.0 * lambda * lambda / (3.0 * v), k, omega: lambda * k })
            }
            ExampleParams::Boussinesq { gamma } => Some(Wave { amp: gamma * gamma - 1.0, k: 1.0, omega: gamma }),
            ExampleParams::None if id == 3 => Some(Wave { amp: -1.0, k: 1.0, omega: 1.0 }),
            ExampleParams::None => None,
        })
    }

    fn eval(&self, alpha: f64, x: f64, t: f64, pairs: Option<usize>) -> Result<f64> {
        let z = self.omega * pow_frac(t, alpha);
        let (mut even, mut odd) = (0.0, 0.0);
        let mut prev = f64::INFINITY;
        let limit = pairs.map_or(MAX_TERMS, |k| 2 * k + 2);
        let mut m = 0;
        while m < limit {
            let term = ml_term(z, m, alpha)?;
            if m % 2 == 0 {
                even += term;
            } else {
                odd += term;
            }
            let scale = even.abs() + odd.abs();
            if pairs.is_none() && m >= 2 && term.abs() <= prev && term.abs() <= 1e-17 * scale {
                break;
            }
            prev = term.abs();
            m += 1;
        }
        let scale = even.abs() + odd.abs();
        if m >= limit {
            let next = ml_term(z, m, alpha)?.abs();
            if next > TAIL_TOL * scale.max(f64::MIN_POSITIVE) {
                return Err(Error::SeriesTail { terms: m, tail: next / scale });
            }
        }
        let (c, s) = ((self.k * x).cosh(), (self.k * x).sinh());
        Ok(-self.amp * (c * even - s * odd - 1.0))
    }
}

/// Closed-form solution of a builtin example.
///
/// Examples 1–3 sum their fractional cosh/sinh series: with `k_eval = Some(K)`
/// exactly `K + 1` even and `K + 1` odd terms are used and a
/// [`Error::SeriesTail`] is raised if the first neglected term is not below
/// [`TAIL_TOL`] relative to the sum; with `None` terms are added until they
/// stop contributing. Example 4 is `√(3/2) sinh((x − t^α)/3)` and ignores `k_eval`.
pub fn exact_solution(
    id: u8,
    params: &ExampleParams,
    alpha: f64,
    x: f64,
    t: f64,
    k_eval: Option<usize>,
) -> Result<f64> {
    check_alpha(alpha)?;
    if !(t >= 0.0) {
        return Err(Error::Domain { func: "exact_solution", arg: t });
    }
    match Wave::for_example(id, params)? {
        Some(wave) => wave.eval(alpha, x, t, k_eval),
        None => {
            let tau = pow_frac(t, alpha) / 3.0;
            let (sx, cx) = ((x / 3.0).sinh(), (x / 3.0).cosh());
            Ok(1.5f64.sqrt() * (sx * tau.cosh() - cx * tau.sinh()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn none() -> ExampleParams {
        ExampleParams::None
    }

    #[test]
    fn builtin_initial_conditions() {
        let s3 = builtin_example(3, &none(), 0.5).unwrap();
        assert_eq!(s3.time_order, 2);
        assert_eq!(s3.ic_a, HypExpr::cosh(1.0, 1.0) - HypExpr::constant(1.0));
        assert_eq!(s3.ic_b, Some(HypExpr::sinh(-1.0, 1.0)));

        let s4 = builtin_example(4, &none(), 0.5).unwrap();
        assert_eq!(s4.time_order, 1);
        assert_eq!(s4.ic_a, HypExpr::sinh(1.5f64.sqrt(), 1.0 / 3.0));
        assert!(s4.ic_b.is_none());

        let s1 = builtin_example(1, &ExampleParams::default_for(1).unwrap(), 1.0).unwrap();
        let want = (HypExpr::constant(1.0) - HypExpr::cosh(1.0, 0.5)).scale(2.0 / 3.0);
        assert!(s1.ic_a.max_diff(&want) < 1e-16);
    }

    #[test]
    fn params_are_checked() {
        assert!(matches!(builtin_example(5, &none(), 1.0), Err(Error::UnknownExample(5))));
        assert!(matches!(builtin_example(1, &none(), 1.0), Err(Error::ParamsMismatch { id: 1, .. })));
        let bad = ExampleParams::KleinGordon { v: 0.0, w: 1.0, lambda: 1.0 };
        assert!(matches!(builtin_example(1, &bad, 1.0), Err(Error::ParamsMismatch { .. })));
        let g = ExampleParams::Boussinesq { gamma: 2.0 };
        assert!(builtin_example(3, &g, 1.0).is_err());
        assert!(builtin_example(2, &g, 0.0).is_err());
    }

    #[test]
    fn exact_values_at_alpha_one() {
        let v = exact_solution(3, &none(), 1.0, 10.0, 1.0, None).unwrap();
        let closed = 2.0 * (0.5f64 * 9.0).sinh().powi(2);
        assert!(((v - closed) / closed).abs() < 1e-14);
        assert!((v - 4050.542025).abs() < 5e-6);

        let v = exact_solution(4, &none(), 1.0, 0.0, 1.0, None).unwrap();
        assert!((v + 0.415851).abs() < 5e-6);

        let g2 = ExampleParams::Boussinesq { gamma: 2.0 };
        let v = exact_solution(2, &g2, 1.0, 2.0, 1.0, None).unwrap();
        assert!(v.abs() < 1e-12);
    }

    #[test]
    fn explicit_order_reports_large_tail() {
        let g2 = ExampleParams::Boussinesq { gamma: 2.0 };
        assert!(matches!(exact_solution(2, &g2, 1.0, 0.0, 1.0, Some(3)), Err(Error::SeriesTail { .. })));
        assert!(exact_solution(2, &g2, 1.0, 0.0, 1.0, Some(20)).is_ok());
    }
}
