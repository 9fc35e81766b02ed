use thiserror::Error;

/// Errors raised by constructors and fallible operations.
///
/// Verification failures of mathematical identities (axiom checks, Green
/// functor checks) are reported as data, not through this type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("multiplication table is not associative at ({0}*{1})*{2}")]
    NotAssociative(usize, usize, usize),
    #[error("multiplication table has no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NotInvertible(usize),
    #[error("malformed multiplication table: {0}")]
    BadTable(String),
    #[error("group order {order} exceeds the configured cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("bad permutation: {0}")]
    BadPermutation(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
    #[error("objects live over different groups")]
    GroupMismatch,
    #[error("module is not over the Weyl group W_G H of the requested subgroup")]
    WeylMismatch,
    #[error("{0} is not a subgroup")]
    NotSubgroup(String),
    #[error("{0} is not a normal subgroup")]
    NotNormal(String),
    #[error("element {0} is not a member of {1}")]
    NotMember(usize, String),
    #[error("Burnside element is not idempotent")]
    NotIdempotent,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid representation: {0}")]
    BadRepresentation(String),
    #[error("not equivariant: {0}")]
    NotEquivariant(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
