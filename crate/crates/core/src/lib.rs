//! Interlace numbers, circle numbers and related invariants of trim palindromic and
//! self-inversive polynomials.

pub mod algebra;
pub mod circle;
pub mod dynamics;
pub mod error;
pub mod families;
pub mod foic;
pub mod interlace;
pub mod numeric;
pub mod polycore;

pub use error::{Error, Result};
pub use numeric::{ComplexScalar, Precision, Real, Scalar};
pub use polycore::{AlphaPolynomial, Polynomial, SigmaRep};
