use thiserror::Error;

use crate::shapes::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts {0:?} are not weakly decreasing")]
    NotDecreasing(Vec<usize>),

    #[error("partition parts must be positive, got {0:?}")]
    ZeroPart(Vec<usize>),

    #[error("index {index} is out of range for a composition with {len} parts")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("cannot decrement part {index}: it is already zero")]
    ZeroAtIndex { index: usize },

    #[error("weight mismatch: expected {expected}, got {actual}")]
    WeightMismatch { expected: usize, actual: usize },

    #[error("rows {0:?} do not form a semistandard tableau")]
    InvalidTableau(Vec<Vec<usize>>),

    #[error("entry {entry} exceeds the alphabet size {h}")]
    EntryOutOfAlphabet { entry: usize, h: usize },

    #[error("letters must be positive")]
    ZeroLetter,

    #[error("cell ({}, {}) is not a removable corner", .0.row, .0.col)]
    NotRemovableCorner(Cell),

    #[error("tableau count overflowed a 64-bit counter")]
    CountOverflow,

    #[error("could not start worker pool: {0}")]
    ThreadPool(String),

    #[error("insertion bijection broken: {0}")]
    BijectionBroken(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
