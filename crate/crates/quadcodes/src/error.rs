//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by deck, code, search, and square operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bit length {0} outside 1..=64")]
    LengthOutOfRange(usize),
    #[error("bits set above position {len} in a word of length {len}")]
    BitsOutOfRange { len: usize },
    #[error("row of length {found} in a matrix of width {expected}")]
    RowLengthMismatch { expected: usize, found: usize },
    #[error("vector length {found} does not match matrix width {expected}")]
    VectorLengthMismatch { expected: usize, found: usize },
    #[error("matrix dimension {0} outside 1..=30")]
    MatrixDimOutOfRange(usize),
    #[error("deck dimension {0} outside 0..=30")]
    DeckDimOutOfRange(u32),
    #[error("card {value} outside the deck of dimension {dim}")]
    CardOutOfRange { value: u64, dim: u32 },
    #[error("duplicate card {0}")]
    DuplicateCard(u32),
    #[error("cards from decks of different dimensions: {0} and {1}")]
    MixedDecks(u32, u32),
    #[error("at most 64 cards form a code; got {0}")]
    TooManyCards(usize),
    #[error("empty card sequence")]
    EmptyCardSequence,
    #[error("bad quaternary string {string:?} for deck dimension {dim}: {reason}")]
    BadQuaternary { string: String, dim: u32, reason: String },
    #[error("bad card token {0:?}")]
    BadCardToken(String),
    #[error("expected deck dimension {expected}, got {found}")]
    DimensionMismatch { expected: u32, found: u32 },
    #[error("dimension {dim} exceeds the enumeration budget of {max}")]
    EnumerationBudget { dim: usize, max: usize },
    #[error("the zero code has no minimum weight")]
    ZeroCode,
    #[error("not a quad code: {0}")]
    NotAQuadCode(String),
    #[error("code of length {len} and dimension {dim} needs deck dimension at least {needed}, got {given}")]
    NotRealizable { len: usize, dim: usize, needed: u32, given: u32 },
    #[error("not a code distribution: transform coefficient {index} is {value} before division by 2^{dim}")]
    NotACodeDistribution { index: usize, value: String, dim: u32 },
    #[error("weight distribution sums to {found}, expected 2^{dim}")]
    InconsistentDistribution { found: u128, dim: u32 },
    #[error("position {pos} out of range for length {len}")]
    PositionOutOfRange { pos: usize, len: usize },
    #[error("cannot puncture a code of length 1")]
    PunctureTooShort,
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
