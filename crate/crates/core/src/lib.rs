//! Exact divisor-class computations for trigonal-style covers of genus `2k`
//! curves: boundary combinatorics on the moduli of marked rational curves,
//! trace and reduced-trace curve pullbacks to the Hurwitz space, push-forward
//! to the moduli of curves, and the resulting slope bounds.

pub mod affine;
pub mod basis;
pub mod boundary;
pub mod class;
pub mod combinatorics;
pub mod error;
pub mod genus;
pub mod m0n;
pub mod map;
pub mod pushforward;
pub mod rational;
pub mod reduced;
pub mod slope;
pub mod trace;
pub mod verify;

pub use affine::{AffineExpr, ExtSymbol, Family};
pub use basis::{Basis, Generator};
pub use class::DivisorClass;
pub use error::{Error, Result};
pub use map::ClassMap;
pub use pushforward::{ExternalCoeffs, Normalization};
pub use rational::Rational;
