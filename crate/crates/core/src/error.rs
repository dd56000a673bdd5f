use thiserror::Error;

/// Errors raised anywhere in the analysis pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not a prime below 2^63")]
    NotPrime(u64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("matrix is singular")]
    SingularMap,

    #[error("map is not a projective involution")]
    NotInvolution,

    #[error("zero vector has no projective class")]
    ZeroVector,

    #[error("image of base point {0} under the quadratic involution is undefined")]
    UndefinedImage(String),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("no real root in the bracket")]
    NoRootInBracket,

    #[error("requested {requested} exceeds cap {cap}")]
    CapExceeded { requested: usize, cap: usize },

    #[error("orbit data is indeterminate: {0}")]
    Indeterminate(String),

    #[error("action does not preserve the intersection form: {0}")]
    GramNotPreserved(String),

    #[error("valency bound violated at vertex {vertex}: valency {valency}")]
    ValencyViolation { vertex: usize, valency: u32 },

    #[error("edge inside one side of the bipartition between vertices {0} and {1}")]
    IntraSideEdge(usize, usize),

    #[error("odd cycle of length {0}")]
    OddCycle(usize),

    #[error("polynomial is not self-reciprocal")]
    NotReciprocal,

    #[error("polynomial is not of Salem type: {0}")]
    NotSalem(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
