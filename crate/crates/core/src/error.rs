use thiserror::Error;

/// Errors produced by the scheme, the attack and the serialization layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Honest decryption needs at least `required` shared attributes.
    #[error("insufficient attribute overlap: {found} shared, {required} required")]
    InsufficientOverlap { found: usize, required: usize },

    #[error("insufficient key shares: {found} available, {required} required")]
    InsufficientShares { found: usize, required: usize },

    /// A key-extraction query the challenger refused to answer.
    #[error("key query rejected: overlap {overlap} with the target reaches threshold {threshold}")]
    QueryRejected { overlap: usize, threshold: usize },

    #[error("malformed encoding: {0}")]
    Decode(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

pub(crate) fn decode_err(msg: impl Into<String>) -> Error {
    Error::Decode(msg.into())
}
