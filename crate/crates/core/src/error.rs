use thiserror::Error;

use crate::basis::BasisId;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("unknown basis {0:?}")]
    UnknownBasis(String),

    #[error("singular matrix: zero diagonal entry at index {0}")]
    Singular(usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension must be at least 1")]
    EmptyDimension,

    #[error("entry ({row}, {col}) below the diagonal is nonzero")]
    NotUpperTriangular { row: usize, col: usize },

    #[error("input is not square: {count} vectors of length {len}")]
    NotSquare { count: usize, len: usize },

    #[error("no exchange basis: left domain is {left_domain} but right range is {right_range}")]
    ExchangeMismatch {
        left_domain: BasisId,
        right_range: BasisId,
    },

    #[error("coordinate vector is tagged {found} but the matrix expects {expected}")]
    BasisMismatch { expected: BasisId, found: BasisId },

    #[error("subspace filter mismatch between {0} and {1}")]
    FilterMismatch(BasisId, BasisId),

    #[error("{0} has no definite parity, so a parity subspace is not spanned by its vectors")]
    NoDefiniteParity(String),

    #[error("index ({n}, {k}) outside the coefficient function range 0 <= k <= {max}")]
    IndexOutOfRange { n: usize, k: usize, max: usize },

    #[error("{0}")]
    UnsupportedParity(String),

    #[error("coefficient function must be of beta kind")]
    NotBetaKind,

    #[error("case 3 requires the range-side coefficient function to vanish at odd k, but f({n}, 1) = {value}")]
    Case3Precondition { n: usize, value: Rational },

    #[error("invalid compression: {0}")]
    InvalidCompression(String),

    #[error("lossy compression: excluded entry ({row}, {col}) = {value} is nonzero")]
    LossyCompression {
        row: usize,
        col: usize,
        value: Rational,
    },

    #[error("malformed matrix document: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
