use thiserror::Error;

use crate::scalar::Field;

/// Every failure the engine can report.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ForgeError {
    #[error("prime {0} is not supported (use 2, 3, 5 or 7)")]
    UnsupportedPrime(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalars from different fields: {0} and {1}")]
    FieldMismatch(Field, Field),
    #[error("non-canonical scalar {0:?}")]
    NonCanonicalScalar(String),
    #[error("unknown map {0:?}")]
    UnknownMap(String),
    #[error("unknown space {0:?}")]
    UnknownSpace(String),
    #[error("shape mismatch for {name}: expected {expected:?}, found {actual:?}")]
    ShapeMismatch {
        name: String,
        expected: Vec<usize>,
        actual: Vec<usize>,
    },
    #[error("index {index} out of range for {name} (dim {dim})")]
    IndexOutOfRange {
        name: String,
        index: usize,
        dim: usize,
    },
    #[error("arity mismatch: {0}")]
    Arity(String),
    #[error("unknown condition set {0:?}")]
    UnknownConditionSet(String),
    #[error("role {0:?} is not bound")]
    MissingRole(String),
    #[error("unknown role {0:?}")]
    UnknownRole(String),
    #[error("identity syntax error in {id}: {msg}")]
    Syntax { id: String, msg: String },
    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse {
        line: usize,
        column: usize,
        msg: String,
    },
    #[error("invalid structure file: {0}")]
    Format(String),
    #[error("duplicate entry {index:?} in map {map:?}")]
    DuplicateEntry { map: String, index: Vec<usize> },
    #[error("name clash: {0:?}")]
    NameClash(String),
    #[error("kind mismatch: {0}")]
    KindMismatch(String),
    #[error("precondition failed: {what} at basis tuple {tuple:?}")]
    Precondition { what: String, tuple: Vec<usize> },
    #[error("reconstruction mismatch: {0}")]
    Reconstruction(String),
    #[error("exhaustive search needs a finite field, found {0}")]
    InfiniteSearch(Field),
    #[error("search space of {size} candidates exceeds the budget of {budget}")]
    BudgetExceeded { size: u128, budget: u128 },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownFixture(String),
}

pub type Result<T> = std::result::Result<T, ForgeError>;
