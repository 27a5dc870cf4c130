use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fpseries::FracSeries;
use crate::hypalg::HypExpr;

/// Spatial operator `N_x[y]`, polynomial in `y` and its x-derivatives.
///
/// In JSON each node is an object tagged by `"op"`:
///
/// ```json
/// {"op": "dx", "order": 2, "child": {"op": "pow", "exponent": 2, "child": {"op": "solution"}}}
/// ```
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase", deny_unknown_fields)]
pub enum OperatorAst {
    Solution,
    Const { value: f64 },
    Add { terms: Vec<OperatorAst> },
    Scale { factor: f64, child: Box<OperatorAst> },
    Mul { left: Box<OperatorAst>, right: Box<OperatorAst> },
    Pow { exponent: u32, child: Box<OperatorAst> },
    Dx { order: u32, child: Box<OperatorAst> },
}

impl OperatorAst {
    pub fn solution() -> Self {
        OperatorAst::Solution
    }

    pub fn constant(value: f64) -> Self {
        OperatorAst::Const { value }
    }

    pub fn add(terms: Vec<OperatorAst>) -> Self {
        OperatorAst::Add { terms }
    }

    pub fn scale(factor: f64, child: OperatorAst) -> Self {
        OperatorAst::Scale { factor, child: Box::new(child) }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(left: OperatorAst, right: OperatorAst) -> Self {
        OperatorAst::Mul { left: Box::new(left), right: Box::new(right) }
    }

    pub fn pow(exponent: u32, child: OperatorAst) -> Self {
        OperatorAst::Pow { exponent, child: Box::new(child) }
    }

    pub fn dx(order: u32, child: OperatorAst) -> Self {
        OperatorAst::Dx { order, child: Box::new(child) }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            OperatorAst::Solution => Ok(()),
            OperatorAst::Const { value } => finite(*value, "const value"),
            OperatorAst::Add { terms } => {
                if terms.is_empty() {
                    return Err(Error::IllFormedAst("add node with no terms".into()));
                }
                terms.iter().try_for_each(OperatorAst::validate)
            }
            OperatorAst::Scale { factor, child } => {
                finite(*factor, "scale factor")?;
                child.validate()
            }
            OperatorAst::Mul { left, right } => {
                left.validate()?;
                right.validate()
            }
            OperatorAst::Pow { exponent, child } => {
                if *exponent < 2 {
                    return Err(Error::IllFormedAst(format!("pow exponent {exponent} < 2")));
                }
                child.validate()
            }
            OperatorAst::Dx { order, child } => {
                if *order < 1 {
                    return Err(Error::IllFormedAst("dx order must be >= 1".into()));
                }
                child.validate()
            }
        }
    }

    /// Apply the operator to a truncated series; the output has `y`'s order.
    pub fn apply(&self, y: &FracSeries) -> Result<FracSeries> {
        match self {
            OperatorAst::Solution => Ok(y.clone()),
            OperatorAst::Const { value } => FracSeries::constant(y.alpha(), HypExpr::constant(*value), y.order()),
            OperatorAst::Add { terms } => {
                let mut iter = terms.iter();
                let first = iter.next().ok_or_else(|| Error::IllFormedAst("add node with no terms".into()))?;
                iter.try_fold(first.apply(y)?, |acc, t| acc.add(&t.apply(y)?))
            }
            OperatorAst::Scale { factor, child } => Ok(child.apply(y)?.scale(*factor)),
            OperatorAst::Mul { left, right } => left.apply(y)?.mul(&right.apply(y)?),
            OperatorAst::Pow { exponent, child } => {
                if *exponent < 2 {
                    return Err(Error::IllFormedAst(format!("pow exponent {exponent} < 2")));
                }
                child.apply(y)?.pow(*exponent)
            }
            OperatorAst::Dx { order, child } => {
                if *order < 1 {
                    return Err(Error::IllFormedAst("dx order must be >= 1".into()));
                }
                Ok(child.apply(y)?.spatial_diff(*order))
            }
        }
    }
}

fn finite(v: f64, what: &str) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::IllFormedAst(format!("{what} is not finite")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let ast = OperatorAst::add(vec![
            OperatorAst::dx(2, OperatorAst::solution()),
            OperatorAst::scale(
                -1.0,
                OperatorAst::dx(
                    2,
                    OperatorAst::mul(OperatorAst::solution(), OperatorAst::dx(2, OperatorAst::solution())),
                ),
            ),
            OperatorAst::pow(3, OperatorAst::constant(0.5)),
        ]);
        let json = serde_json::to_string(&ast).unwrap();
        assert!(json.contains(r#""op":"dx""#));
        let back: OperatorAst = serde_json::from_str(&json).unwrap();
        assert_eq!(back, ast);
    }

    #[test]
    fn validation() {
        assert!(OperatorAst::pow(1, OperatorAst::solution()).validate().is_err());
        assert!(OperatorAst::dx(0, OperatorAst::solution()).validate().is_err());
        assert!(OperatorAst::add(vec![]).validate().is_err());
        assert!(OperatorAst::constant(f64::NAN).validate().is_err());
        assert!(OperatorAst::pow(2, OperatorAst::dx(1, OperatorAst::solution())).validate().is_ok());
        assert!(serde_json::from_str::<OperatorAst>(r#"{"op":"sin"}"#).is_err());
    }

    #[test]
    fn apply_matches_direct_arithmetic() {
        let y = FracSeries::new(0.5, vec![HypExpr::cosh(1.0, 1.0), HypExpr::sinh(2.0, 1.0), HypExpr::constant(1.0)])
            .unwrap();
        let ast = OperatorAst::dx(2, OperatorAst::pow(2, OperatorAst::solution()));
        let want = y.mul(&y).unwrap().spatial_diff(2);
        assert_eq!(ast.apply(&y).unwrap(), want);

        let c = OperatorAst::constant(3.0).apply(&y).unwrap();
        assert_eq!(c.order(), 2);
        assert_eq!(c.coeffs()[0], HypExpr::constant(3.0));
        assert!(c.coeffs()[1].is_zero());
    }
}
