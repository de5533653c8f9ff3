use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building index sets, parsing the set
/// grammar, or applying a formula outside its hypotheses.
///
/// Internal invariant violations (an inexact division inside a fraction-free
/// step, a nullspace vector that fails to annihilate its matrix) are bugs,
/// not user errors, and panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative index {value} at position {position}")]
    NegativeIndex { position: usize, value: i64 },

    #[error("duplicate index {value} at position {position}")]
    DuplicateIndex { position: usize, value: i64 },

    #[error("indices not strictly increasing at position {position}: {value} after {previous}")]
    NotIncreasing {
        position: usize,
        value: i64,
        previous: i64,
    },

    #[error("index set must be non-empty here")]
    EmptySet,

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("cannot shift down by {shift}: minimum element is {min}")]
    ShiftTooLarge { shift: i64, min: i64 },

    #[error("cannot reflect at {point}: maximum element is {max}")]
    ReflectTooSmall { point: i64, max: i64 },

    #[error("element {value} not present in the set")]
    MissingElement { value: i64 },

    #[error("{name} = {value} out of range [{lo}, {hi}]")]
    OutOfRange {
        name: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },

    #[error("column set must be componentwise <= row set")]
    NotDominated,

    #[error("rows must form an unpunctured interval")]
    NotInterval,

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("rows of the matrix have unequal lengths: {first} vs {other}")]
    RaggedMatrix { first: usize, other: usize },

    #[error("cofactor expansion is limited to 8x8, got {n}x{n}")]
    CofactorTooLarge { n: usize },

    #[error("matrix must be non-empty")]
    EmptyMatrix,

    #[error("expansion needs {terms} terms, exceeding the cap of {cap}")]
    TermCapExceeded { terms: u128, cap: u64 },

    #[error("method {method} does not apply here: {reason}")]
    MethodInapplicable {
        method: &'static str,
        reason: &'static str,
    },

    #[error("matrix rank is {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("unknown suite '{name}'")]
    UnknownSuite { name: String },

    #[error("unknown method '{name}'")]
    UnknownMethod { name: String },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}
