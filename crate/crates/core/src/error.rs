use thiserror::Error;

use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series has zero constant term and no reciprocal")]
    ZeroConstantTerm,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("double sum has nonzero imaginary part {im} at n = {n}")]
    NonzeroImaginaryPart { n: usize, im: Rational },

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
