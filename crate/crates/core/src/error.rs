use thiserror::Error;

use crate::series::PartialSum;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("cannot parse {0:?} as a rational number")]
    Parse(String),

    #[error("unknown identity tag {0:?}")]
    UnknownIdentity(String),

    #[error(
        "series did not reach the requested width after {} terms",
        .0.terms_used
    )]
    Unconverged(Box<PartialSum>),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
