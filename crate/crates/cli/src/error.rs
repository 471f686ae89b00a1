use thiserror::Error;

use crate::syntax::{ParseError, Pos};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error at {0}")]
    Parse(#[from] ParseError),
    #[error("{pos}: {message}")]
    Semantic { pos: Pos, message: String },
    #[error(transparent)]
    Engine(#[from] mixprod::Error),
    #[error("{0}")]
    Input(String),
}

impl CliError {
    pub(crate) fn semantic(pos: Pos, message: impl Into<String>) -> Self {
        CliError::Semantic {
            pos,
            message: message.into(),
        }
    }

    pub fn is_resource_bound(&self) -> bool {
        matches!(self, CliError::Engine(mixprod::Error::ResourceBound { .. }))
    }

    /// 3 for an exceeded resource bound, 2 for every other input problem.
    pub fn exit_code(&self) -> i32 {
        if self.is_resource_bound() {
            3
        } else {
            2
        }
    }

    pub fn status(&self) -> &'static str {
        if self.is_resource_bound() {
            "resource_bound"
        } else {
            "input_error"
        }
    }
}
