use std::time::Instant;

use crate::ara::{ara_monomial, ara_numeric, from_ara, to_ara, verify_property, AraConfig, PropertyInput};
use crate::caputo::{caputo_numeric, rl_integral_numeric, CaputoConfig};
use crate::error::Result;
use crate::fpseries::FracSeries;
use crate::hypalg::HypExpr;
use crate::solver::{builtin_example, exact_solution, solve, ExampleParams, RESIDUAL_TOL};
use crate::special::{frac_cosh_series, frac_sinh_series, gamma, gamma_ratio, pow_frac};

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
    pub seconds: f64,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

type Outcome = Result<(bool, String)>;
type Suite = (&'static str, fn() -> Outcome);
type TimeFn = Box<dyn Fn(f64) -> f64 + Sync>;

fn within(name: &str, worst: f64, tol: f64) -> Outcome {
    Ok((worst <= tol, format!("{name} {worst:.3e} (tol {tol:.0e})")))
}

fn rel(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        ((a - b) / b).abs()
    }
}

fn gamma_recurrence() -> Outcome {
    let mut worst = 0.0f64;
    for i in 0..=400 {
        let x = 0.1 + i as f64 * (99.9 / 400.0);
        worst = worst.max(rel(gamma(x + 1.0)?, x * gamma(x)?));
    }
    within("max rel", worst, 1e-12)
}

fn gamma_ratio_reciprocity() -> Outcome {
    let mut worst = 0.0f64;
    for p in [0.3f64, 1.7, 12.5, 88.8, 170.0, 250.3, 299.9] {
        for d in [-0.2f64, 0.45, 3.5, -17.25] {
            let q: f64 = (p + d).max(0.05);
            worst = worst.max((gamma_ratio(p, q)? * gamma_ratio(q, p)? - 1.0).abs());
        }
    }
    within("max |r·r' − 1|", worst, 1e-11)
}

fn hyperbolic_partial_sums() -> Outcome {
    let mut worst = 0.0f64;
    for a in [-2.5, -1.0, 0.5, 2.0, 5.0] {
        for t in [0.0, 0.3, 1.0] {
            let s = frac_cosh_series(1.0, a, t, 25)? + frac_sinh_series(1.0, a, t, 25)?;
            worst = worst.max(rel(s, (a * t).exp()));
        }
    }
    within("max rel vs exp", worst, 1e-10)
}

fn sample_exprs() -> Vec<HypExpr> {
    vec![
        HypExpr::cosh(1.0, 0.5) - HypExpr::constant(2.0),
        HypExpr::sinh(-0.7, 1.3) + HypExpr::cosh(0.2, 2.9),
        HypExpr::constant(1.5) + HypExpr::sinh(3.0, 0.1),
    ]
}

fn hyperbolic_products() -> Outcome {
    let exprs = sample_exprs();
    let mut worst = 0.0f64;
    for a in &exprs {
        for b in &exprs {
            let ab = a * b;
            for i in 0..=20 {
                let x = -5.0 + i as f64 * 0.5;
                let want = a.eval(x) * b.eval(x);
                worst = worst.max((ab.eval(x) - want).abs() / want.abs().max(1.0));
            }
            let leibniz = (&a.diff(1) * b) + (a * &b.diff(1));
            worst = worst.max(ab.diff(1).max_diff(&leibniz));
        }
    }
    within("max product/Leibniz error", worst, 1e-11)
}

fn sample_series(alpha: f64) -> Result<FracSeries> {
    let exprs = sample_exprs();
    FracSeries::new(alpha, (0..5).map(|n| exprs[n % 3].scale(1.0 / (n + 1) as f64)).collect())
}

fn series_product_pointwise() -> Outcome {
    let mut worst = 0.0f64;
    for alpha in [0.3, 0.5, 0.9, 1.0] {
        let a = sample_series(alpha)?;
        let b = FracSeries::new(alpha, a.coeffs().iter().rev().cloned().collect())?;
        let ab = a.mul(&b)?;
        let t = 0.01;
        let bound = 10.0 * pow_frac(t, (ab.order() + 1) as f64 * alpha);
        for x in [-1.0, 0.0, 2.0] {
            let gap = (ab.eval(x, t)? - a.eval(x, t)? * b.eval(x, t)?).abs();
            worst = worst.max(gap / bound);
        }
    }
    within("max gap / 10·t^{(K+1)α}", worst, 1.0)
}

fn caputo_against_series() -> Outcome {
    let cfg = CaputoConfig::default();
    let mut worst = 0.0f64;
    for alpha in [0.3, 0.5, 0.75, 1.0] {
        let s = sample_series(alpha)?;
        let d = s.caputo()?;
        for x in [-0.5, 1.0] {
            for t in [0.2, 0.7] {
                let f = |tau: f64| s.eval(x, tau).unwrap_or(f64::NAN);
                worst = worst.max((caputo_numeric(f, alpha, t, &cfg)? - d.eval(x, t)?).abs());
            }
        }
    }
    within("max |numeric − series|", worst, 1e-5)
}

fn caputo_left_inverse() -> Outcome {
    let cfg = CaputoConfig::default();
    let mut worst = 0.0f64;
    for alpha in [0.3, 0.6, 0.9] {
        let f = |t: f64| (0.5 * t).cosh() + t;
        let jf = |t: f64| {
            if t <= 0.0 {
                0.0
            } else {
                rl_integral_numeric(f, alpha, t, &cfg).map_or(f64::NAN, |r| r.value)
            }
        };
        for t in [0.3, 1.0] {
            worst = worst.max((caputo_numeric(jf, alpha, t, &cfg)? - f(t)).abs());
        }
    }
    within("max |D^α J^α f − f|", worst, 1e-5)
}

fn caputo_monomials() -> Outcome {
    let cfg = CaputoConfig::default();
    let mut worst = 0.0f64;
    for alpha in [0.3, 0.5, 0.9] {
        for m in 1..=3 {
            let p = m as f64 * alpha;
            let t: f64 = 0.8;
            let want = gamma(p + 1.0)? / gamma(p - alpha + 1.0)? * t.powf(p - alpha);
            let got = caputo_numeric(|s: f64| s.powf(p), alpha, t, &cfg)?;
            worst = worst.max(rel(got, want));
        }
    }
    within("max rel", worst, 1e-5)
}

fn ara_round_trip() -> Outcome {
    let mut worst = 0.0f64;
    for alpha in [0.25, 0.5, 0.75, 1.0] {
        let s = sample_series(alpha)?;
        let back = from_ara(&to_ara(&s));
        for (a, b) in s.coeffs().iter().zip(back.coeffs()) {
            worst = worst.max(a.max_diff(b) / a.max_abs_coeff().max(f64::MIN_POSITIVE));
        }
    }
    within("max rel", worst, 1e-15)
}

fn ara_monomial_quadrature() -> Outcome {
    let cfg = AraConfig::default();
    let mut worst = 0.0f64;
    for p in [0.0, 0.5, 1.0, 1.5, 2.0] {
        for n in [1u8, 2] {
            for s in [1.0, 2.0, 5.0, 10.0] {
                let num = ara_numeric(|t| pow_frac(t, p), n, s, &cfg)?.value;
                worst = worst.max(rel(num, ara_monomial(p, n, s)?));
            }
        }
    }
    within("max rel", worst, 1e-8)
}

fn ara_properties() -> Outcome {
    let mut worst = 0.0f64;
    let mut failures = Vec::new();
    for alpha in [0.5, 1.0] {
        let fns: [(&str, TimeFn); 4] = [
            ("1", Box::new(|_| 1.0)),
            ("t", Box::new(|t| t)),
            ("t^a", Box::new(move |t| pow_frac(t, alpha))),
            ("t^2a", Box::new(move |t| pow_frac(t, 2.0 * alpha))),
        ];
        for (name, f) in &fns {
            let g = |t: f64| 1.0 + t * t;
            let input = PropertyInput { g: &g, a: 2.0, b: -3.0, ..PropertyInput::new(f.as_ref(), alpha) };
            for id in [1, 3, 4, 5, 7] {
                let r = verify_property(id, &input, &[1.0, 2.0, 5.0])?;
                if r.max_discrepancy > 1e-6 {
                    failures.push(format!("P{id}[{name}, α={alpha}]"));
                }
                worst = worst.max(r.max_discrepancy);
            }
        }
    }
    let (ok, detail) = within("max discrepancy", worst, 1e-6)?;
    Ok((ok, if failures.is_empty() { detail } else { format!("{detail}; failing {}", failures.join(" ")) }))
}

fn solver_residuals() -> Outcome {
    let mut worst = 0.0f64;
    for id in 1..=4u8 {
        let mut params = vec![ExampleParams::default_for(id)?];
        if id == 2 {
            params.push(ExampleParams::Boussinesq { gamma: 0.5 });
        }
        for p in &params {
            for alpha in [0.25, 0.5, 0.75, 1.0] {
                worst = worst.max(solve(&builtin_example(id, p, alpha)?, 6)?.max_residual());
            }
        }
    }
    within("max residual coefficient", worst, RESIDUAL_TOL)
}

fn travelling_waves() -> Outcome {
    let p1 = ExampleParams::default_for(1)?;
    let p2 = ExampleParams::Boussinesq { gamma: 2.0 };
    let none = ExampleParams::None;
    let mut worst = 0.0f64;
    for x in [0.0, 2.0, 4.0] {
        for t in [0.25, 1.0] {
            let cases = [
                (exact_solution(1, &p1, 1.0, x, t, None)?, -(2.0 / 3.0) * (((x - t) / 2.0).cosh() - 1.0)),
                (exact_solution(2, &p2, 1.0, x, t, None)?, -3.0 * ((x - 2.0 * t).cosh() - 1.0)),
                (exact_solution(3, &none, 1.0, x, t, None)?, 2.0 * ((x - t) / 2.0).sinh().powi(2)),
                (exact_solution(4, &none, 1.0, x, t, None)?, 1.5f64.sqrt() * ((x - t) / 3.0).sinh()),
            ];
            for (got, want) in cases {
                worst = worst.max((got - want).abs() / want.abs().max(1.0));
            }
        }
    }
    within("max rel vs travelling wave", worst, 1e-13)
}

/// Run every invariant suite and collect one [`Check`] per suite.
pub fn validate_suite() -> ValidationReport {
    let start = Instant::now();
    let suites: [Suite; 14] = [
        ("gamma recurrence", gamma_recurrence),
        ("gamma ratio reciprocity", gamma_ratio_reciprocity),
        ("fractional cosh + sinh = exp", hyperbolic_partial_sums),
        ("hyperbolic products and Leibniz rule", hyperbolic_products),
        ("series product vs pointwise", series_product_pointwise),
        ("numeric Caputo vs series Caputo", caputo_against_series),
        ("Caputo left-inverts RL integral", caputo_left_inverse),
        ("Caputo monomial law", caputo_monomials),
        ("ARA round trip", ara_round_trip),
        ("ARA quadrature vs monomial closed form", ara_monomial_quadrature),
        ("ARA operational properties 1,3,4,5,7", ara_properties),
        ("solver residuals", solver_residuals),
        ("closed forms at alpha = 1", travelling_waves),
        ("gamma ratio large arguments", || within("rel", rel(gamma_ratio(300.5, 299.5)?, 299.5), 1e-12)),
    ];
    let checks = suites
        .iter()
        .map(|(name, run)| {
            let (passed, detail) = match run() {
                Ok(r) => r,
                Err(e) => (false, format!("error: {e}")),
            };
            Check { name: name.to_string(), passed, detail }
        })
        .collect();
    ValidationReport { checks, seconds: start.elapsed().as_secs_f64() }
}
