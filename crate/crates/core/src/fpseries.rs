//! Truncated fractional power series in `t^α` with [`HypExpr`] coefficients.
//!
//! A series stores `c_n(x) = D_t^{nα} y(x, 0)` (sequential Caputo powers), so it
//! represents `Σ c_n(x) t^{nα} / Γ(nα + 1)`. In this basis the Caputo
//! derivative is a left shift and the Riemann–Liouville integral a right shift.
//! Products carry the weights `Γ(nα+1) / (Γ(mα+1) Γ(jα+1))`, which reduce to
//! binomial coefficients when α = 1.

use crate::error::{Error, Result};
use crate::hypalg::HypExpr;
use crate::special::{gamma, pow_frac};

#[derive(Clone, Debug, PartialEq)]
pub struct FracSeries {
    alpha: f64,
    coeffs: Vec<HypExpr>,
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha <= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidAlpha(alpha))
    }
}

/// Γ(nα + 1) for n = 0..=order.
fn gamma_table(alpha: f64, order: usize) -> Result<Vec<f64>> {
    (0..=order).map(|n| gamma(n as f64 * alpha + 1.0)).collect()
}

impl FracSeries {
    /// Build from `c_0 ..= c_K`; `coeffs` must be non-empty.
    pub fn new(alpha: f64, coeffs: Vec<HypExpr>) -> Result<Self> {
        check_alpha(alpha)?;
        if coeffs.is_empty() {
            return Err(Error::Config("a series needs at least the c_0 coefficient".into()));
        }
        Ok(FracSeries { alpha, coeffs })
    }

    pub fn zero(alpha: f64, order: usize) -> Result<Self> {
        FracSeries::new(alpha, vec![HypExpr::zero(); order + 1])
    }

    /// The time-independent series `c_0 = value`, padded with zeros to `order`.
    pub fn constant(alpha: f64, value: HypExpr, order: usize) -> Result<Self> {
        let mut coeffs = vec![HypExpr::zero(); order + 1];
        coeffs[0] = value;
        FracSeries::new(alpha, coeffs)
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

    pub fn coeff(&self, n: usize) -> Option<&HypExpr> {
        self.coeffs.get(n)
    }

    /// Keep `c_0 ..= c_order`, zero-padding if the series is shorter.
    pub fn with_order(&self, order: usize) -> FracSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, HypExpr::zero());
        FracSeries { alpha: self.alpha, coeffs }
    }

    pub(crate) fn push(&mut self, c: HypExpr) {
        self.coeffs.push(c);
    }

    fn same_alpha(&self, other: &FracSeries) -> Result<()> {
        if self.alpha == other.alpha {
            Ok(())
        } else {
            Err(Error::AlphaMismatch(self.alpha, other.alpha))
        }
    }

    /// `D_t^α`: drops `c_0` and shifts every coefficient down one slot.
    pub fn caputo(&self) -> Result<FracSeries> {
        if self.order() == 0 {
            return Err(Error::DegenerateOrder);
        }
        Ok(FracSeries { alpha: self.alpha, coeffs: self.coeffs[1..].to_vec() })
    }

    /// `J_t^α`: shifts every coefficient up one slot, order grows by one.
    pub fn rl_integral(&self) -> FracSeries {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(HypExpr::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        FracSeries { alpha: self.alpha, coeffs }
    }

    pub fn add(&self, other: &FracSeries) -> Result<FracSeries> {
        self.same_alpha(other)?;
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|n| &self.coeffs[n] + &other.coeffs[n]).collect();
        Ok(FracSeries { alpha: self.alpha, coeffs })
    }

    pub fn scale(&self, c: f64) -> FracSeries {
        FracSeries { alpha: self.alpha, coeffs: self.coeffs.iter().map(|e| e.scale(c)).collect() }
    }

    /// Product truncated to the smaller of the two orders.
    pub fn mul(&self, other: &FracSeries) -> Result<FracSeries> {
        self.same_alpha(other)?;
        let order = self.order().min(other.order());
        let g = gamma_table(self.alpha, order)?;
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = Vec::new();
            for m in 0..=n {
                let j = n - m;
                let (a, b) = (&self.coeffs[m], &other.coeffs[j]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let w = g[n] / (g[m] * g[j]);
                acc.extend((a * b).terms().iter().map(|t| {
                    let mut t = *t;
                    t.coeff *= w;
                    t
                }));
            }
            coeffs.push(HypExpr::from_terms(acc));
        }
        Ok(FracSeries { alpha: self.alpha, coeffs })
    }

    /// `p`-th power by repeated multiplication (p >= 1).
    pub fn pow(&self, p: u32) -> Result<FracSeries> {
        if p == 0 {
            return Err(Error::IllFormedAst("series power exponent must be >= 1".into()));
        }
        let mut out = self.clone();
        for _ in 1..p {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// `∂_x^m` applied coefficient-wise.
    pub fn spatial_diff(&self, m: u32) -> FracSeries {
        FracSeries { alpha: self.alpha, coeffs: self.coeffs.iter().map(|c| c.diff(m)).collect() }
    }

    /// Σ c_n(x) t^{nα} / Γ(nα + 1), with 0^0 = 1.
    pub fn eval(&self, x: f64, t: f64) -> Result<f64> {
        if t < 0.0 {
            return Err(Error::Domain { func: "series_eval", arg: t });
        }
        let mut sum = 0.0;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = n as f64 * self.alpha;
            sum += c.eval(x) * pow_frac(t, e) / gamma(e + 1.0)?;
        }
        Ok(sum)
    }

    /// Largest coefficient-wise difference over the common order.
    pub fn max_diff(&self, other: &FracSeries) -> f64 {
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.max_diff(b)).fold(0.0, f64::max)
    }
}
