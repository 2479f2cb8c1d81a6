//! Exact arithmetic over ℚ and over quadratic extensions ℚ(c).

pub mod det;
mod ext_poly;
pub mod hermite;
pub(crate) mod modular;
mod poly;
mod quad;
mod ratfunc;

pub use det::{determinant, wronskian, wronskian_with, DetMethod};
pub use ext_poly::ExtPoly;
pub use hermite::{conjugate_hermite, hermite};
pub use poly::Poly;
pub use quad::{is_rational_square, QuadExt};
pub use ratfunc::{ExtRatFn, PolyRing, RatFn, RationalFunction};

/// Exact rational number with a positive reduced denominator.
pub type Rational = num_rational::BigRational;
