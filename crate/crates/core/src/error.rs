use thiserror::Error;

use crate::sork::CertificateDefect;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system type: {0}")]
    InvalidType(String),

    #[error("dimension mismatch: {left} vs {right}")]
    Dimension { left: usize, right: usize },

    #[error("{root} is not a root of {system}")]
    Membership { root: String, system: String },

    #[error("invalid certificate: {0}")]
    Certificate(CertificateDefect),

    #[error("invalid real form: {0}")]
    InvalidRealForm(String),

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("rule not applicable ({rule}): {reason}")]
    RuleNotApplicable { rule: &'static str, reason: String },

    #[error("shape error: {0}")]
    Shape(String),
}

pub type Result<T> = std::result::Result<T, Error>;
