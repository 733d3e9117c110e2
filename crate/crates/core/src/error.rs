use thiserror::Error;

use crate::combinat::Composition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),
    #[error("invalid strict partition {0:?}: parts must be positive and strictly decreasing")]
    InvalidStrictPartition(Vec<usize>),
    #[error("invalid composition {0:?}: parts must be positive")]
    InvalidComposition(Vec<usize>),
    #[error("invalid permutation {0:?}: must contain each of 1..=n exactly once")]
    InvalidPermutation(Vec<usize>),
    #[error("{op}: index {index} outside the allowed range for n = {n}")]
    IndexOutOfRange {
        op: &'static str,
        index: usize,
        n: usize,
    },
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("not in the image of the column-sorting map: {0}")]
    NotInImage(String),
    #[error("{relation} move {index} sent {element} outside its carrier")]
    LeftCarrier {
        relation: String,
        element: String,
        index: usize,
    },
    #[error("not symmetric: monomial coefficients of {left} and {right} differ")]
    NotSymmetric {
        left: Composition,
        right: Composition,
    },
    #[error("not in the span of the family: {0}")]
    NotInSpan(String),
    #[error("expansion routes disagree: {0}")]
    Inconsistent(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
