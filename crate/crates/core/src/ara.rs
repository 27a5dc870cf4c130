//! The ARA transform `𝒢ₙ[y](s) = s ∫₀^∞ t^{n−1} e^{−st} y(t) dt`.
//!
//! [`AraSeries`] is the formal order-two image `Σ hₙ(x) / s^{nα+1}` of a
//! [`FracSeries`], with `hₙ = (nα + 1) cₙ`. [`ara_numeric`] evaluates the
//! defining integral by quadrature, and [`verify_property`] checks the
//! operational rules against it.

use crate::caputo::{caputo_numeric, CaputoConfig};
use crate::error::{Error, Result};
use crate::fpseries::{check_alpha, FracSeries};
use crate::hypalg::HypExpr;
use crate::quad::{integrate, QuadConfig};
use crate::special::{gamma, pow_frac};

#[derive(Clone, Debug, PartialEq)]
pub struct AraSeries {
    alpha: f64,
    coeffs: Vec<HypExpr>,
}

impl AraSeries {
    pub fn new(alpha: f64, coeffs: Vec<HypExpr>) -> Result<Self> {
        check_alpha(alpha)?;
        if coeffs.is_empty() {
            return Err(Error::Config("an ARA series needs at least h_0".into()));
        }
        Ok(AraSeries { alpha, coeffs })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[HypExpr] {
        &self.coeffs
    }

    fn weight(&self, n: usize) -> f64 {
        n as f64 * self.alpha + 1.0
    }

    /// `Σ hₙ(x) / s^{nα+1}`.
    pub fn eval_order_two(&self, x: f64, s: f64) -> f64 {
        self.coeffs.iter().enumerate().map(|(n, h)| h.eval(x) / s.powf(self.weight(n))).sum()
    }

    /// `Σ hₙ(x) / ((nα+1) s^{nα})`, the order-one image.
    pub fn eval_order_one(&self, x: f64, s: f64) -> f64 {
        self.coeffs.iter().enumerate().map(|(n, h)| h.eval(x) / (self.weight(n) * s.powf(n as f64 * self.alpha))).sum()
    }

    /// Coefficients `hₙ / (nα + 1)` of the order-one image in powers of `s^{−α}`.
    pub fn order_one_coeffs(&self) -> Vec<HypExpr> {
        self.coeffs.iter().enumerate().map(|(n, h)| h.scale(1.0 / self.weight(n))).collect()
    }
}

pub fn to_ara(s: &FracSeries) -> AraSeries {
    let alpha = s.alpha();
    AraSeries { alpha, coeffs: s.coeffs().iter().enumerate().map(|(n, c)| c.scale(n as f64 * alpha + 1.0)).collect() }
}

pub fn from_ara(a: &AraSeries) -> FracSeries {
    let coeffs = a.coeffs.iter().enumerate().map(|(n, h)| h.scale(1.0 / a.weight(n))).collect();
    FracSeries::new(a.alpha, coeffs).expect("alpha and length already validated")
}

/// Exact `𝒢ₙ[t^p](s) = Γ(p+n) / s^{p+n−1}`.
pub fn ara_monomial(p: f64, n: u8, s: f64) -> Result<f64> {
    check_order(n)?;
    if !(p >= 0.0) {
        return Err(Error::Domain { func: "ara_monomial", arg: p });
    }
    if !(s > 0.0) {
        return Err(Error::Domain { func: "ara_monomial", arg: s });
    }
    let e = p + n as f64;
    Ok(gamma(e)? / s.powf(e - 1.0))
}

fn check_order(n: u8) -> Result<()> {
    if n == 1 || n == 2 {
        Ok(())
    } else {
        Err(Error::Config(format!("ARA transform order must be 1 or 2, got {n}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AraConfig {
    /// Truncation horizon `T`; defaults to `HORIZON_SCALE / s`.
    pub horizon: Option<f64>,
    pub quad: QuadConfig,
}

/// `e^{−60}` is about `1e-26`, leaving room for polynomial growth of `f`.
pub const HORIZON_SCALE: f64 = 60.0;

impl Default for AraConfig {
    fn default() -> Self {
        AraConfig { horizon: None, quad: QuadConfig::with_abs_tol(1e-10) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AraValue {
    pub value: f64,
    /// Quadrature error estimate on `[0, T]`.
    pub error: f64,
    /// Heuristic size of the neglected `∫_T^∞` part, `2 T^{n−1} e^{−sT} |f(T)|`.
    pub tail_bound: f64,
    /// Set when `tail_bound` exceeds the requested absolute tolerance.
    pub tail_warning: bool,
}

/// `s ∫₀^T t^{n−1} e^{−st} f(t) dt` by adaptive quadrature with breakpoints at
/// `1/s`, `4/s` and `16/s`.
pub fn ara_numeric<F: Fn(f64) -> f64>(f: F, n: u8, s: f64, cfg: &AraConfig) -> Result<AraValue> {
    check_order(n)?;
    if !(s > 0.0) {
        return Err(Error::Domain { func: "ara_numeric", arg: s });
    }
    let horizon = cfg.horizon.unwrap_or(HORIZON_SCALE / s);
    if !(horizon > 0.0) {
        return Err(Error::Config("ARA horizon must be positive".into()));
    }
    let mut points = vec![0.0];
    points.extend([1.0 / s, 4.0 / s, 16.0 / s].into_iter().filter(|&p| p < horizon));
    points.push(horizon);

    let k = (n - 1) as i32;
    let integrand = |t: f64| s * t.powi(k) * (-s * t).exp() * f(t);
    let r = integrate(integrand, &points, &cfg.quad)?;
    let tail_bound = 2.0 * horizon.powi(k) * (-s * horizon).exp() * f(horizon).abs();
    Ok(AraValue { value: r.value, error: r.error, tail_bound, tail_warning: tail_bound > cfg.quad.abs_tol })
}

/// `Σ wᵢ t^{pᵢ}` with `pᵢ ≥ 0`: the test functions used for the property checks.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSum {
    pub terms: Vec<(f64, f64)>,
}

impl PowerSum {
    pub fn monomial(p: f64) -> Self {
        PowerSum { terms: vec![(1.0, p)] }
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.terms.iter().map(|&(w, p)| w * pow_frac(t, p)).sum()
    }

    /// Exact `𝒢ₙ` image via [`ara_monomial`].
    pub fn ara_exact(&self, n: u8, s: f64) -> Result<f64> {
        self.terms.iter().map(|&(w, p)| Ok(w * ara_monomial(p, n, s)?)).sum()
    }
}

/// One side-by-side comparison of an identity at a given `s`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PropertySample {
    pub s: f64,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PropertyReport {
    pub id: u8,
    pub samples: Vec<PropertySample>,
    /// Extrapolated `s → ∞` value for the limit identities.
    pub limit: Option<f64>,
    pub max_discrepancy: f64,
}

/// Inputs to [`verify_property`]. `g`, `a` and `b` are only used by the
/// linearity check.
pub struct PropertyInput<'a> {
    pub f: &'a (dyn Fn(f64) -> f64 + Sync),
    pub g: &'a (dyn Fn(f64) -> f64 + Sync),
    pub alpha: f64,
    pub a: f64,
    pub b: f64,
    pub ara: AraConfig,
    pub caputo: CaputoConfig,
}

impl<'a> PropertyInput<'a> {
    pub fn new(f: &'a (dyn Fn(f64) -> f64 + Sync), alpha: f64) -> Self {
        PropertyInput { f, g: f, alpha, a: 1.0, b: 1.0, ara: AraConfig::default(), caputo: CaputoConfig::default() }
    }
}

/// Sample points for the limit identities.
pub const LIMIT_SAMPLES: [f64; 6] = [10.0, 20.0, 40.0, 80.0, 160.0, 320.0];

/// The `count` smallest distinct exponents `iα + j` (i, j ≥ 0, not both 0).
pub fn limit_exponents(alpha: f64, count: usize) -> Vec<f64> {
    let mut e: Vec<f64> =
        (0..=count).flat_map(|i| (0..=count).map(move |j| i as f64 * alpha + j as f64)).filter(|&e| e > 0.0).collect();
    e.sort_by(f64::total_cmp);
    e.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
    e.truncate(count);
    e
}

/// Generalised Richardson extrapolation: fits `v(s) = L + Σₖ cₖ s^{−eₖ}`
/// exactly through the samples and returns `L`. Needs one more sample than
/// exponents.
pub fn extrapolate_limit(s: &[f64], v: &[f64], exponents: &[f64]) -> f64 {
    let m = exponents.len() + 1;
    assert!(s.len() == m && v.len() == m, "need exponents.len() + 1 samples");
    let mut a: Vec<Vec<f64>> = s
        .iter()
        .zip(v)
        .map(|(&si, &vi)| {
            let mut row = vec![1.0];
            row.extend(exponents.iter().map(|&e| si.powf(-e)));
            row.push(vi);
            row
        })
        .collect();
    for col in 0..m {
        let pivot = (col..m).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs())).expect("non-empty");
        a.swap(col, pivot);
        let (top, rest) = a.split_at_mut(col + 1);
        let p = &top[col];
        for row in rest {
            let f = row[col] / p[col];
            for (x, y) in row[col..].iter_mut().zip(&p[col..]) {
                *x -= f * y;
            }
        }
    }
    let mut x = vec![0.0; m];
    for r in (0..m).rev() {
        let tail: f64 = (r + 1..m).map(|c| a[r][c] * x[c]).sum();
        x[r] = (a[r][m] - tail) / a[r][r];
    }
    x[0]
}

/// Check operational rule `id` (1..=7) at each `s` in `samples`.
///
/// The limit identities (2 and 7) ignore `samples` and use [`LIMIT_SAMPLES`]
/// with [`extrapolate_limit`] over the exponents `iα + j`. Caputo derivatives on the left-hand sides of
/// rules 3, 5 and 6 come from [`caputo_numeric`]; rule 6 nests it twice.
pub fn verify_property(id: u8, input: &PropertyInput<'_>, samples: &[f64]) -> Result<PropertyReport> {
    check_alpha(input.alpha)?;
    let alpha = input.alpha;
    let f = input.f;
    let cc = &input.caputo;
    let g1 = |h: &dyn Fn(f64) -> f64, s: f64| Ok::<_, Error>(ara_numeric(h, 1, s, &input.ara)?.value);
    let g2 = |h: &dyn Fn(f64) -> f64, s: f64| Ok::<_, Error>(ara_numeric(h, 2, s, &input.ara)?.value);
    // Inner Caputo failures become NaN here and surface as NonConvergence.
    let dalpha = |h: &dyn Fn(f64) -> f64, t: f64| caputo_numeric(h, alpha, t, cc).unwrap_or(f64::NAN);
    let f0 = f(0.0);

    let limit_report = |id: u8, scale: f64, order: u8| -> Result<PropertyReport> {
        let mut out = Vec::new();
        for &s in &LIMIT_SAMPLES {
            let v = ara_numeric(f, order, s, &input.ara)?.value;
            out.push(PropertySample { s, lhs: v * s.powf(scale), rhs: f0 });
        }
        let v: Vec<f64> = out.iter().map(|p| p.lhs).collect();
        let limit = extrapolate_limit(&LIMIT_SAMPLES, &v, &limit_exponents(alpha, LIMIT_SAMPLES.len() - 1));
        Ok(PropertyReport { id, samples: out, limit: Some(limit), max_discrepancy: (limit - f0).abs() })
    };

    let samples_for = |lhs: &dyn Fn(f64) -> Result<f64>, rhs: &dyn Fn(f64) -> Result<f64>| -> Result<PropertyReport> {
        let mut out = Vec::new();
        for &s in samples {
            out.push(PropertySample { s, lhs: lhs(s)?, rhs: rhs(s)? });
        }
        let max = out.iter().map(|p| (p.lhs - p.rhs).abs()).fold(0.0, f64::max);
        Ok(PropertyReport { id, samples: out, limit: None, max_discrepancy: max })
    };

    match id {
        1 => {
            let (a, b, g) = (input.a, input.b, input.g);
            let combo = |t: f64| a * f(t) + b * g(t);
            samples_for(&|s| g2(&combo, s), &|s| Ok(a * g2(f, s)? + b * g2(g, s)?))
        }
        2 => limit_report(2, 0.0, 1),
        3 => {
            let df = |t: f64| dalpha(f, t);
            samples_for(&|s| g1(&df, s), &|s| {
                let sa = s.powf(alpha);
                Ok(sa * g1(f, s)? - sa * f0)
            })
        }
        4 => {
            let exact = |s: f64| ara_monomial(alpha, 2, s);
            let t_alpha = |t: f64| pow_frac(t, alpha);
            samples_for(&|s| g2(&t_alpha, s), &exact)
        }
        5 => {
            let df = |t: f64| dalpha(f, t);
            samples_for(&|s| g2(&df, s), &|s| {
                let sa1 = s.powf(alpha - 1.0);
                Ok(s.powf(alpha) * g2(f, s)? - alpha * sa1 * g1(f, s)? + (alpha - 1.0) * sa1 * f0)
            })
        }
        6 => {
            // D^α f at t = 0 taken as the right limit, approached at 1e-9.
            let df0 = dalpha(f, 1e-9);
            let df = |t: f64| if t > 0.0 { dalpha(f, t) } else { df0 };
            // The inner derivative is only as accurate as its own quadrature, and
            // its roundoff grows like t^{-α} near the origin.
            let ddf = |t: f64| {
                let noise = cc.value_noise.max(10.0 * cc.quadrature_tol) * t.powf(-alpha).max(1.0);
                let outer = CaputoConfig {
                    quadrature_tol: cc.quadrature_tol * 1e3,
                    derivative_step: cc.derivative_step.max(1e-4),
                    value_noise: noise.min(0.5),
                    ..*cc
                };
                caputo_numeric(df, alpha, t, &outer).unwrap_or(f64::NAN)
            };
            let loose = AraConfig {
                quad: QuadConfig { abs_tol: input.ara.quad.abs_tol.max(1e-7), rel_tol: 1e-7, max_panels: 4096 },
                ..input.ara
            };
            samples_for(&|s| Ok(ara_numeric(ddf, 2, s, &loose)?.value), &|s| {
                let s2a1 = s.powf(2.0 * alpha - 1.0);
                Ok(s.powf(2.0 * alpha) * g2(f, s)? - 2.0 * alpha * s2a1 * g1(f, s)?
                    + (2.0 * alpha - 1.0) * s2a1 * f0
                    + (alpha - 1.0) * s.powf(alpha - 1.0) * df0)
            })
        }
        7 => limit_report(7, 1.0, 2),
        _ => Err(Error::UnknownProperty(id)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn to_ara_examples() {
        let a = HypExpr::cosh(1.0, 1.0) - HypExpr::constant(1.0);
        let s = FracSeries::constant(0.5, a.clone(), 0).unwrap();
        assert_eq!(to_ara(&s).coeffs()[0], a);

        let b = HypExpr::sinh(1.0, 1.0);
        let s = FracSeries::new(1.0, vec![HypExpr::zero(), b.clone()]).unwrap();
        assert_eq!(to_ara(&s).coeffs()[1], b.scale(2.0));

        let z = FracSeries::zero(0.3, 4).unwrap();
        assert!(to_ara(&z).coeffs().iter().all(HypExpr::is_zero));
    }

    #[test]
    fn from_ara_examples() {
        let h = AraSeries::new(0.5, vec![HypExpr::zero(), HypExpr::sinh(1.5, 1.0)]).unwrap();
        let c = from_ara(&h);
        assert!(c.coeffs()[1].max_diff(&HypExpr::sinh(1.0, 1.0)) < 1e-16);
    }

    #[test]
    fn order_one_view() {
        let h = AraSeries::new(0.5, vec![HypExpr::constant(2.0), HypExpr::constant(3.0)]).unwrap();
        let s: f64 = 4.0;
        assert!((h.eval_order_one(0.0, s) - (2.0 + 3.0 / (1.5 * 2.0))).abs() < 1e-15);
        assert!((h.eval_order_two(0.0, s) - (2.0 / 4.0 + 3.0 / 8.0)).abs() < 1e-15);
        assert_eq!(h.order_one_coeffs()[1], HypExpr::constant(2.0));
    }

    #[test]
    fn monomial_examples() {
        assert_eq!(ara_monomial(0.0, 1, 3.7).unwrap(), 1.0);
        assert_eq!(ara_monomial(1.0, 2, 1.0).unwrap(), 2.0);
        assert_eq!(ara_monomial(1.0, 2, 2.0).unwrap(), 0.5);
        assert!((ara_monomial(0.5, 1, 4.0).unwrap() - 0.443_113_462_726_379_1).abs() < 1e-15);
        assert!(ara_monomial(1.0, 3, 1.0).is_err());
    }

    #[test]
    fn numeric_examples() {
        let cfg = AraConfig::default();
        for s in [0.5, 1.0, 7.0] {
            let r = ara_numeric(|_| 1.0, 1, s, &cfg).unwrap();
            assert!((r.value - 1.0).abs() < 1e-10);
        }
        let r = ara_numeric(|t| t, 2, 2.0, &cfg).unwrap();
        assert!((r.value - 0.5).abs() < 1e-10);
        let r = ara_numeric(f64::sqrt, 2, 1.0, &cfg).unwrap();
        assert!((r.value - 1.329_340_388_179_137).abs() < 1e-9);
        assert!(!r.tail_warning);
    }

    #[test]
    fn short_horizon_warns() {
        let cfg = AraConfig { horizon: Some(2.0), ..AraConfig::default() };
        let r = ara_numeric(|_| 1.0, 1, 1.0, &cfg).unwrap();
        assert!(r.tail_warning);
    }

    #[test]
    fn richardson_is_exact_on_mixed_powers() {
        let e = limit_exponents(0.75, 5);
        assert_eq!(e, vec![0.75, 1.0, 1.5, 1.75, 2.0]);
        assert_eq!(limit_exponents(1.0, 3), vec![1.0, 2.0, 3.0]);
        let v: Vec<f64> =
            LIMIT_SAMPLES.iter().map(|s: &f64| 3.0 - 2.0 * s.powf(-0.75) + 5.0 / s - s.powf(-1.75)).collect();
        assert!((extrapolate_limit(&LIMIT_SAMPLES, &v, &e) - 3.0).abs() < 1e-11);
    }

    #[test]
    fn property_examples() {
        let f = |t: f64| t;
        let g = |t: f64| t * t;
        let input = PropertyInput { g: &g, a: 2.0, b: 3.0, ..PropertyInput::new(&f, 1.0) };
        let r = verify_property(1, &input, &[1.0, 2.0, 5.0]).unwrap();
        assert!(r.max_discrepancy <= 1e-9, "{r:?}");

        let c = |t: f64| 2.5 + t;
        let r = verify_property(7, &PropertyInput::new(&c, 1.0), &[]).unwrap();
        assert!(r.max_discrepancy <= 1e-6, "{r:?}");

        let h = |t: f64| 1.0 + t.sqrt();
        let r = verify_property(6, &PropertyInput::new(&h, 0.5), &[1.0, 3.0]).unwrap();
        assert!(r.max_discrepancy <= 1e-5, "{r:?}");

        let f = |t: f64| t.powf(1.5);
        let r = verify_property(3, &PropertyInput::new(&f, 0.5), &[2.0, 4.0, 8.0]).unwrap();
        assert!(r.max_discrepancy <= 1e-8, "{r:?}");

        assert!(matches!(verify_property(8, &PropertyInput::new(&f, 0.5), &[1.0]), Err(Error::UnknownProperty(8))));
    }
}
