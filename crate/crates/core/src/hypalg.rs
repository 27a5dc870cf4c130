//! Exact algebra over finite combinations of `1`, `cosh(kx)` and `sinh(kx)`.
//!
//! Every spatial coefficient the solver produces lives in this span: products
//! fold back into it through the product-to-sum identities, and derivatives
//! just swap `cosh`/`sinh` and pick up powers of the frequency.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::fmt::sig_digits;

/// Frequencies closer than this are treated as the same basis function.
pub const FREQ_MERGE_TOL: f64 = 1e-12;
/// Coefficients below this fraction of the largest one are dropped.
pub const PRUNE_REL: f64 = 1e-15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Const,
    Cosh,
    Sinh,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub kind: Basis,
    #[serde(default)]
    pub freq: f64,
    pub coeff: f64,
}

impl Term {
    pub fn new(kind: Basis, freq: f64, coeff: f64) -> Self {
        Term { kind, freq, coeff }
    }

    fn basis_value(&self, x: f64) -> f64 {
        match self.kind {
            Basis::Const => 1.0,
            Basis::Cosh => (self.freq * x).cosh(),
            Basis::Sinh => (self.freq * x).sinh(),
        }
    }

    /// Fold negative/zero frequencies so the term is in canonical kind.
    fn normalized(self) -> Option<Term> {
        let Term { kind, freq, coeff } = self;
        match kind {
            Basis::Const => Some(Term::new(Basis::Const, 0.0, coeff)),
            _ if freq.abs() <= FREQ_MERGE_TOL => match kind {
                Basis::Cosh => Some(Term::new(Basis::Const, 0.0, coeff)),
                _ => None,
            },
            Basis::Cosh => Some(Term::new(Basis::Cosh, freq.abs(), coeff)),
            Basis::Sinh if freq < 0.0 => Some(Term::new(Basis::Sinh, -freq, -coeff)),
            Basis::Sinh => Some(Term::new(Basis::Sinh, freq, coeff)),
        }
    }
}

/// A canonical element of span{1, cosh(kx), sinh(kx)}.
///
/// Terms are sorted by `(kind, freq)`, hold at most one entry per basis
/// function, and never carry a zero coefficient. The empty expression is zero.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "Vec<Term>", into = "Vec<Term>")]
pub struct HypExpr {
    terms: Vec<Term>,
}

impl From<Vec<Term>> for HypExpr {
    fn from(terms: Vec<Term>) -> Self {
        HypExpr::from_terms(terms)
    }
}

impl From<HypExpr> for Vec<Term> {
    fn from(e: HypExpr) -> Self {
        e.terms
    }
}

impl HypExpr {
    pub fn zero() -> Self {
        HypExpr::default()
    }

    pub fn constant(c: f64) -> Self {
        HypExpr::from_terms([Term::new(Basis::Const, 0.0, c)])
    }

    /// `coeff * cosh(freq * x)`
    pub fn cosh(coeff: f64, freq: f64) -> Self {
        HypExpr::from_terms([Term::new(Basis::Cosh, freq, coeff)])
    }

    /// `coeff * sinh(freq * x)`
    pub fn sinh(coeff: f64, freq: f64) -> Self {
        HypExpr::from_terms([Term::new(Basis::Sinh, freq, coeff)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = Term>) -> Self {
        let mut raw: Vec<Term> = terms.into_iter().filter_map(Term::normalized).collect();
        raw.sort_by(|a, b| a.kind.cmp(&b.kind).then(a.freq.partial_cmp(&b.freq).unwrap_or(Ordering::Equal)));
        let mut merged: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match merged.last_mut() {
                Some(last) if last.kind == t.kind && (t.freq - last.freq).abs() <= FREQ_MERGE_TOL => {
                    last.coeff += t.coeff;
                }
                _ => merged.push(t),
            }
        }
        let max = merged.iter().fold(0.0f64, |m, t| m.max(t.coeff.abs()));
        merged.retain(|t| t.coeff != 0.0 && t.coeff.abs() >= PRUNE_REL * max);
        HypExpr { terms: merged }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.iter().fold(0.0, |m, t| m.max(t.coeff.abs()))
    }

    /// Coefficient of one basis function, zero if absent.
    pub fn coeff_of(&self, kind: Basis, freq: f64) -> f64 {
        self.terms
            .iter()
            .find(|t| t.kind == kind && (kind == Basis::Const || (t.freq - freq).abs() <= FREQ_MERGE_TOL))
            .map_or(0.0, |t| t.coeff)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.terms.iter().map(|t| t.coeff * t.basis_value(x)).sum()
    }

    pub fn scale(&self, c: f64) -> Self {
        HypExpr::from_terms(self.terms.iter().map(|t| Term { coeff: t.coeff * c, ..*t }))
    }

    /// `m`-fold derivative in x.
    pub fn diff(&self, m: u32) -> Self {
        if m == 0 {
            return self.clone();
        }
        HypExpr::from_terms(self.terms.iter().filter_map(|t| {
            let kind = match (t.kind, m % 2) {
                (Basis::Const, _) => return None,
                (k, 0) => k,
                (Basis::Cosh, _) => Basis::Sinh,
                (Basis::Sinh, _) => Basis::Cosh,
            };
            Some(Term::new(kind, t.freq, t.coeff * t.freq.powi(m as i32)))
        }))
    }

    /// Largest coefficient-wise difference against `other`.
    pub fn max_diff(&self, other: &HypExpr) -> f64 {
        (self - other).max_abs_coeff()
    }
}

fn product(a: &Term, b: &Term, out: &mut Vec<Term>) {
    use Basis::*;
    let c = a.coeff * b.coeff;
    let (sum, dif) = (a.freq + b.freq, a.freq - b.freq);
    match (a.kind, b.kind) {
        (Const, _) => out.push(Term { coeff: c, ..*b }),
        (_, Const) => out.push(Term { coeff: c, ..*a }),
        (Cosh, Cosh) => {
            out.push(Term::new(Cosh, sum, 0.5 * c));
            out.push(Term::new(Cosh, dif, 0.5 * c));
        }
        (Sinh, Sinh) => {
            out.push(Term::new(Cosh, sum, 0.5 * c));
            out.push(Term::new(Cosh, dif, -0.5 * c));
        }
        (Sinh, Cosh) => {
            out.push(Term::new(Sinh, sum, 0.5 * c));
            out.push(Term::new(Sinh, dif, 0.5 * c));
        }
        (Cosh, Sinh) => {
            out.push(Term::new(Sinh, sum, 0.5 * c));
            out.push(Term::new(Sinh, -dif, 0.5 * c));
        }
    }
}

impl<'a> Add<&'a HypExpr> for &'a HypExpr {
    type Output = HypExpr;
    fn add(self, rhs: &HypExpr) -> HypExpr {
        HypExpr::from_terms(self.terms.iter().chain(rhs.terms.iter()).copied())
    }
}

impl Add for HypExpr {
    type Output = HypExpr;
    fn add(self, rhs: HypExpr) -> HypExpr {
        &self + &rhs
    }
}

impl AddAssign<&HypExpr> for HypExpr {
    fn add_assign(&mut self, rhs: &HypExpr) {
        *self = &*self + rhs;
    }
}

impl<'a> Sub<&'a HypExpr> for &'a HypExpr {
    type Output = HypExpr;
    fn sub(self, rhs: &HypExpr) -> HypExpr {
        HypExpr::from_terms(self.terms.iter().copied().chain(rhs.terms.iter().map(|t| Term { coeff: -t.coeff, ..*t })))
    }
}

impl Sub for HypExpr {
    type Output = HypExpr;
    fn sub(self, rhs: HypExpr) -> HypExpr {
        &self - &rhs
    }
}

impl Neg for &HypExpr {
    type Output = HypExpr;
    fn neg(self) -> HypExpr {
        self.scale(-1.0)
    }
}

impl Neg for HypExpr {
    type Output = HypExpr;
    fn neg(self) -> HypExpr {
        self.scale(-1.0)
    }
}

impl<'a> Mul<&'a HypExpr> for &'a HypExpr {
    type Output = HypExpr;
    fn mul(self, rhs: &HypExpr) -> HypExpr {
        let mut out = Vec::with_capacity(2 * self.terms.len() * rhs.terms.len());
        for a in &self.terms {
            for b in &rhs.terms {
                product(a, b, &mut out);
            }
        }
        HypExpr::from_terms(out)
    }
}

impl Mul for HypExpr {
    type Output = HypExpr;
    fn mul(self, rhs: HypExpr) -> HypExpr {
        &self * &rhs
    }
}

impl Mul<f64> for &HypExpr {
    type Output = HypExpr;
    fn mul(self, rhs: f64) -> HypExpr {
        self.scale(rhs)
    }
}

impl fmt::Display for HypExpr {
    /// e.g. `-0.666667 + 0.666667*cosh(0.5*x)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let mag = if i == 0 { t.coeff } else { t.coeff.abs() };
            if i > 0 {
                f.write_str(if t.coeff < 0.0 { " - " } else { " + " })?;
            }
            let c = sig_digits(mag, 6);
            match t.kind {
                Basis::Const => f.write_str(&c)?,
                Basis::Cosh => write!(f, "{c}*cosh({}*x)", sig_digits(t.freq, 6))?,
                Basis::Sinh => write!(f, "{c}*sinh({}*x)", sig_digits(t.freq, 6))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &HypExpr, b: &HypExpr, tol: f64) -> bool {
        a.max_diff(b) <= tol
    }

    #[test]
    fn add_examples() {
        let c = HypExpr::cosh(1.0, 1.0);
        assert!((&c + &(-&c)).is_zero());

        let s = HypExpr::constant(1.0) + HypExpr::cosh(1.0, 2.0);
        assert_eq!(s.terms(), &[Term::new(Basis::Const, 0.0, 1.0), Term::new(Basis::Cosh, 2.0, 1.0)]);

        let sh = HypExpr::sinh(1.0, 1.0);
        assert_eq!(&sh + &sh, HypExpr::sinh(2.0, 1.0));
    }

    #[test]
    fn mul_examples() {
        let ch = HypExpr::cosh(1.0, 0.5);
        let want = HypExpr::constant(0.5) + HypExpr::cosh(0.5, 1.0);
        assert!(close(&(&ch * &ch), &want, 0.0));

        let c = HypExpr::cosh(1.0, 1.0);
        let s = HypExpr::sinh(1.0, 1.0);
        let pyth = &(&c * &c) - &(&s * &s);
        assert_eq!(pyth, HypExpr::constant(1.0));

        let p = &s * &HypExpr::cosh(1.0, 2.0);
        let want = HypExpr::sinh(0.5, 3.0) + HypExpr::sinh(-0.5, 1.0);
        assert_eq!(p, want);
    }

    #[test]
    fn diff_examples() {
        let k = 1.7;
        assert_eq!(HypExpr::cosh(1.0, k).diff(2), HypExpr::cosh(k * k, k));
        assert!(HypExpr::constant(1.0).diff(1).is_zero());
        let d = HypExpr::sinh(1.0, 1.0 / 3.0).diff(3);
        assert!(close(&d, &HypExpr::cosh(1.0 / 27.0, 1.0 / 3.0), 1e-17));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(HypExpr::cosh(1.0, 0.5).eval(0.0), 1.0);
        let e = (HypExpr::cosh(1.0, 0.5) - HypExpr::constant(1.0)).scale(-2.0 / 3.0);
        let want = -(2.0 / 3.0) * (1f64.cosh() - 1.0);
        assert!((e.eval(2.0) - want).abs() < 1e-15);
        assert!((e.eval(2.0) + 0.362_053_756_543_495_8).abs() < 1e-15);
        assert_eq!(HypExpr::sinh(1.5f64.sqrt(), 1.0 / 3.0).eval(0.0), 0.0);
    }

    #[test]
    fn canonical_form_folds_signs_and_merges() {
        let e = HypExpr::from_terms([
            Term::new(Basis::Sinh, -2.0, 1.0),
            Term::new(Basis::Cosh, -2.0, 3.0),
            Term::new(Basis::Cosh, 2.0 + 1e-14, 1.0),
            Term::new(Basis::Cosh, 0.0, 4.0),
            Term::new(Basis::Sinh, 0.0, 9.0),
            Term::new(Basis::Const, 0.0, 0.0),
        ]);
        assert_eq!(
            e.terms(),
            &[Term::new(Basis::Const, 0.0, 4.0), Term::new(Basis::Cosh, 2.0, 4.0), Term::new(Basis::Sinh, 2.0, -1.0),]
        );
    }

    #[test]
    fn pruning_is_relative() {
        let e = HypExpr::from_terms([Term::new(Basis::Const, 0.0, 1.0), Term::new(Basis::Cosh, 1.0, 1e-16)]);
        assert_eq!(e.terms().len(), 1);
        // a lone tiny coefficient is kept: it is the whole expression
        assert_eq!(HypExpr::cosh(1e-20, 1.0).terms().len(), 1);
    }

    #[test]
    fn display_format() {
        let e = (HypExpr::cosh(1.0, 0.5) - HypExpr::constant(1.0)).scale(2.0 / 3.0);
        assert_eq!(e.to_string(), "-0.666667 + 0.666667*cosh(0.5*x)");
        assert_eq!(HypExpr::zero().to_string(), "0");
        let s = HypExpr::sinh(-1.0, 1.0 / 3.0);
        assert_eq!(s.to_string(), "-1*sinh(0.333333*x)");
        let mixed = HypExpr::cosh(2.0, 1.0) - HypExpr::sinh(0.25, 1.0);
        assert_eq!(mixed.to_string(), "2*cosh(1*x) - 0.25*sinh(1*x)");
    }
}
