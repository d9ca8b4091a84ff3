//! Numeric tracks: exact rationals, multi-precision reals and complex values.

pub mod complex;
pub mod real;
pub mod scalar;

pub use complex::CReal;
pub use real::{Precision, Real};
pub use scalar::{ComplexScalar, Scalar};
