use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown Cartan type `{0}`")]
    UnknownType(String),
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("root closure exceeded {cap} roots; matrix is not of finite type")]
    NotFiniteType { cap: usize },
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("simple index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("word {0} is not reduced")]
    NotReduced(String),
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("resource cap exceeded: {what} > {cap}")]
    ResourceCap { what: &'static str, cap: usize },
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("ideals live in different rings")]
    RingMismatch,
    #[error("ideal is not monomial")]
    NotMonomial,
    #[error("ideal is not homogeneous for the requested grading")]
    NotHomogeneous,
    #[error("complex has {0} vertices; at most 25 are supported")]
    TooManyVertices(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("component mismatch in {what}: expected {expected}, found {found}")]
    MatchFailure { what: String, expected: String, found: String },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
