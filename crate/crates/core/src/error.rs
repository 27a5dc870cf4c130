use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("argument {arg} outside the domain of {func}")]
    Domain { func: &'static str, arg: f64 },

    #[error("{func}({arg}) overflows f64")]
    Overflow { func: &'static str, arg: f64 },

    #[error("fractional order {0} is outside (0, 1]")]
    InvalidAlpha(f64),

    #[error("series orders disagree on alpha ({0} vs {1})")]
    AlphaMismatch(f64, f64),

    #[error("operation needs a series of order >= 1")]
    DegenerateOrder,

    #[error("invalid operator tree: {0}")]
    IllFormedAst(String),

    #[error("invalid PDE spec: {0}")]
    InvalidSpec(String),

    #[error("unknown builtin example {0} (expected 1..=4)")]
    UnknownExample(u8),

    #[error("parameters do not match example {id}: {reason}")]
    ParamsMismatch { id: u8, reason: String },

    #[error("quadrature did not converge after {panels} panels (error estimate {error:e})")]
    NonConvergence { panels: usize, error: f64 },

    #[error("series tail {tail:e} still above tolerance after {terms} terms")]
    SeriesTail { terms: usize, tail: f64 },

    #[error("unknown ARA property {0} (expected 1..=7)")]
    UnknownProperty(u8),

    #[error("{0}")]
    Config(String),

    #[error("failed to parse PDE spec: {0}")]
    Json(#[from] serde_json::Error),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}
