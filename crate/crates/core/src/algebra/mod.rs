//! Exact and numeric polynomial algebra used by the analysis modules.

pub mod det;
pub mod ratpoly;
pub mod roots;
pub mod sturm;

pub use ratpoly::RatPoly;
