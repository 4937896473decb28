//! Error type shared by every module of the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes of the numerical kernel.
///
/// All functions are total on their documented domains; anything outside is
/// rejected eagerly with one of these variants instead of returning NaN.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Argument outside the mathematical domain of the function.
    #[error("domain error: {0}")]
    Domain(String),
    /// The quantity diverges at the requested argument (e.g. K(1)).
    #[error("divergence: {0}")]
    Divergent(String),
    /// The operation is not defined for the given domain variant.
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    /// The bound formula carries no information at these parameters.
    #[error("bound undefined: {0}")]
    BoundUndefined(String),
    /// The parameters violate the validity range of the underlying theorem.
    #[error("outside validity range: {0}")]
    ValidityRange(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
