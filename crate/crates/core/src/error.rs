use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed token {token:?} at offset {offset}")]
    MalformedToken { token: String, offset: usize },
    #[error("label {label} occurs {count} times; labels must occur exactly twice")]
    LabelCountError { label: u32, count: usize },
    #[error("not a permutation: {0}")]
    NotPermutation(String),
    #[error("not an involution: {0}")]
    NotInvolution(String),
    #[error("involution {0} has fixed points")]
    NotFixedPointFree(String),
    #[error("length {got} does not match the family, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("signatures differ: {0:?} vs {1:?}")]
    SignatureMismatch((usize, usize), (usize, usize)),
    #[error("parameter is not valid for {0}")]
    FamilyMismatch(String),
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("signed permutation has an odd number of negative entries")]
    OddSignCount,
    #[error("invalid generator {0}")]
    InvalidGenerator(String),
    #[error("parameters are not comparable in the closure order")]
    NotComparable,
    #[error("pattern {0} is not an involution")]
    PatternNotInvolution(String),
    #[error("clan contains the pattern (1212)")]
    Contains1212,
    #[error("{which} = {perm} is not Grassmannian at position {p}")]
    GrassmannianViolation { which: &'static str, perm: String, p: usize },
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
