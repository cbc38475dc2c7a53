use thiserror::Error;

use crate::basis::{Basis, Generator};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("basis mismatch: expected {expected}, found {found}")]
    BasisMismatch { expected: Basis, found: Basis },

    #[error("generator {generator} does not belong to basis {basis}")]
    UnknownGenerator { generator: Generator, basis: Basis },

    #[error("{what} index {index} out of range {min}..={max}")]
    IndexOutOfRange {
        what: &'static str,
        index: i64,
        min: i64,
        max: i64,
    },

    #[error("product of two non-constant affine expressions")]
    NonLinearProduct,

    #[error("marked set of size {size} is not a boundary label for b = {b}")]
    MarkedSetSize { size: usize, b: u32 },

    #[error("marked set element {element} outside 1..={b}")]
    MarkedSetElement { element: u32, b: u32 },

    #[error("marked sets over different b ({0} and {1})")]
    MismatchedMarkedSets(u32, u32),

    #[error("b must be at least 4, got {0}")]
    TooFewPoints(u32),

    #[error("division by zero")]
    DivisionByZero,

    #[error("delta_0 coefficient is zero; slope undefined")]
    ZeroBoundaryCoefficient,

    #[error("coefficient of {0} is symbolic")]
    SymbolicCoefficient(Generator),

    #[error("slope formula has a pole at k = {k}, s = {s}")]
    Pole { k: u32, s: String },

    #[error("closed form and substitution route disagree for {0}")]
    RouteMismatch(String),

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("invalid generator name {0:?}")]
    ParseGenerator(String),

    #[error("external coefficients incomplete or inconsistent: {0}")]
    ExternalCoeffs(String),

    #[error("{0} requires k >= {1}")]
    KTooSmall(&'static str, u32),
}
