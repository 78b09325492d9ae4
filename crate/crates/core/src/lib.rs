//! Exact Riordan-array machinery for Laurent biorthogonal polynomials with
//! constant recurrence coefficients, their associated orthogonal families,
//! moments, Hankel transforms and continued fractions.
//!
//! All arithmetic is over arbitrary-precision rationals.

pub mod families;
pub mod linalg;
pub mod moments;
pub mod rat;
pub mod riordan;
pub mod series;
pub mod triangle;

pub use rat::{parse_rat, rat, ratio, Rat};
pub use riordan::{Generator, ProductionMatrix, RiordanArray, RiordanError, SeqPair};
pub use series::{Poly, RatFunc, Series, SeriesError};
pub use triangle::Triangle;
