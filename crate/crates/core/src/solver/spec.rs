use std::path::Path;

use serde::{Deserialize, Serialize};

use super::ast::OperatorAst;
use crate::error::{Error, Result};
use crate::fpseries::check_alpha;
use crate::hypalg::HypExpr;

/// `D_t^{kα} y = rhs[y]` with `y(x,0) = ic_a` and, for k = 2, `D_t^α y(x,0) = ic_b`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PdeSpec {
    pub time_order: u8,
    pub alpha: f64,
    pub rhs: OperatorAst,
    pub ic_a: HypExpr,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ic_b: Option<HypExpr>,
}

impl PdeSpec {
    pub fn validate(&self) -> Result<()> {
        check_alpha(self.alpha)?;
        match (self.time_order, &self.ic_b) {
            (1, None) | (2, Some(_)) => {}
            (1, Some(_)) => return Err(Error::InvalidSpec("time_order 1 takes no ic_b".into())),
            (2, None) => return Err(Error::InvalidSpec("time_order 2 requires ic_b".into())),
            (k, _) => return Err(Error::InvalidSpec(format!("time_order must be 1 or 2, got {k}"))),
        }
        self.rhs.validate()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: PdeSpec = serde_json::from_str(text)?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        PdeSpec::from_json(&text)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn with_alpha(&self, alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        Ok(PdeSpec { alpha, ..self.clone() })
    }
}
