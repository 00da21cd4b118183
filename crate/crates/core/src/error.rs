use thiserror::Error;

/// Failure modes shared by every module.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands that cannot be combined (mismatched universes, lengths, shapes).
    #[error("structural error: {0}")]
    Structural(String),
    /// A documented precondition was violated by the caller.
    #[error("contract violation: {0}")]
    Contract(String),
    /// The request lies outside the supported size or algebra range.
    #[error("capability exceeded: {0}")]
    Capability(String),
}

pub type Result<T> = std::result::Result<T, Error>;
