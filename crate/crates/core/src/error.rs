use thiserror::Error;

/// Errors raised by group construction, character table computation and
/// catalog ingestion.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("permutation closure exceeded the order cap of {cap}")]
    ClosureExceedsCap { cap: usize },

    #[error("group order {order} exceeds the order cap of {cap}")]
    OrderCapExceeded { order: usize, cap: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("group is not abelian")]
    NotAbelian,

    #[error("generalized dihedral group of an elementary abelian 2-group is degenerate")]
    ElementaryAbelianTwo,

    #[error("abelian group has even order")]
    EvenOrder,

    #[error("element {0} is not an involution")]
    NotAnInvolution(usize),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("conductor {from} does not divide {to}")]
    IncompatibleConductor { from: u32, to: u32 },

    #[error("{0} is not coprime to the conductor")]
    NotCoprime(i64),

    #[error("no suitable prime below 2^31 for exponent {exponent}")]
    NoSuitablePrime { exponent: usize },

    #[error("character table lift inconsistent: {0}")]
    LiftInconsistent(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("group spec error: {0}")]
    Spec(String),

    #[error("record {name}: closure has order {actual}, expected {expected}")]
    OrderMismatch {
        name: String,
        expected: usize,
        actual: usize,
    },

    #[error("io error on {path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
