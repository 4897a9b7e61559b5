use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid order {0}: a ring needs at least two elements")]
    InvalidOrder(usize),

    #[error("invalid characteristic {0}: not a prime")]
    InvalidCharacteristic(u64),

    #[error("size limit exceeded: {what} would have {size} elements (limit {limit})")]
    SizeLimit {
        what: &'static str,
        size: u128,
        limit: usize,
    },

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("quotient by the whole ring is the zero ring")]
    TrivialQuotient,

    #[error("ring is not local")]
    NotLocal,

    #[error("invalid ring tables: {0}")]
    InvalidTables(String),

    #[error("not a ring homomorphism: {0}")]
    InvalidHom(String),

    #[error("invalid extension: {0}")]
    InvalidExtension(String),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("invalid ideal family: {0}")]
    InvalidFamily(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("classification failure: {0}")]
    ClassificationFailure(String),

    #[error("formula violation: {0}")]
    FormulaViolation(String),

    #[error("unreachable case: {0}")]
    UnreachableCase(String),

    #[error("combinatorial bound exceeded: {0}")]
    Bound(String),
}

impl Error {
    /// Whether the error comes from a size or enumeration bound rather than
    /// from malformed input.
    pub fn is_size_limit(&self) -> bool {
        matches!(self, Error::SizeLimit { .. } | Error::Bound(_))
    }

    /// Whether the error signals an internal inconsistency (a structural check
    /// that failed) rather than a user mistake.
    pub fn is_verification_failure(&self) -> bool {
        matches!(
            self,
            Error::ClassificationFailure(_) | Error::FormulaViolation(_)
        )
    }
}
