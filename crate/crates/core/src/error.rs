use thiserror::Error;

/// Errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid symbol {0:?}: bit sequences are written over {{'0','1'}}")]
    InvalidSymbol(char),
    #[error("invalid bit value {0}: expected 0 or 1")]
    InvalidBit(u8),
    #[error("index {index} out of range (valid: {min}..={max})")]
    IndexOutOfRange { index: usize, min: usize, max: usize },
    #[error("cannot delete from the empty sequence")]
    EmptySequence,
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("rank mismatch: operator has rank {operator}, element has rank {element}")]
    RankMismatch { operator: usize, element: usize },
    #[error("invalid signed permutation window {0:?}")]
    InvalidSignedPerm(Vec<i32>),
    #[error("generator s_{index} does not exist in rank {rank}")]
    InvalidGenerator { index: i64, rank: usize },
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("vector entry {0}/2 is not +1/2 or -1/2")]
    NotHalfVector(i64),
    #[error("sequence {x} has length {len} and weight {weight}, expected length {expected_len} and weight {expected_weight}")]
    ShapeMismatch {
        x: String,
        len: usize,
        weight: usize,
        expected_len: usize,
        expected_weight: usize,
    },
    #[error("sequence has length {actual}, expected {expected}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("enumeration of {what} refused: size {size} exceeds the bound {bound}")]
    SizeGuard { what: String, size: usize, bound: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("insertion family has no operators")]
    EmptyFamily,
    #[error("value {0} is not in the family's {1}")]
    NotInFamily(String, &'static str),
    #[error("insertion family violates its axioms: {0}")]
    AxiomViolation(String),
    #[error("no codeword found for {0}")]
    NoCandidate(String),
    #[error("{received} decodes ambiguously to {candidates:?}")]
    MultipleCandidates { received: String, candidates: Vec<String> },
    #[error("{0} is not in any balanced-adjacent insertion sphere of the given sequence")]
    NotDecomposable(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
}

pub type Result<T> = std::result::Result<T, Error>;
