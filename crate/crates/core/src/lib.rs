//! Exact computations on the flag threefold `F = {p.l = 0}` in `P2 x P2`.
//!
//! The arithmetic core ([`exact`]) is generic over any [`Field`]; the geometry
//! and linear-system layers are instantiated at the Gaussian rationals
//! [`GaussRat`], which is closed under the conjugation the twistor structure
//! needs.

pub mod bipoly;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod systems;

use num_complex::Complex;
use num_rational::BigRational;

pub use error::{Error, Result};
pub use exact::{Conjugate, Field};

/// Arbitrary-precision rational.
pub type Rational = BigRational;
/// Element of `Q(i)`, stored as a pair of reduced rationals.
pub type GaussRat = Complex<BigRational>;
pub type ExactMatrix = exact::Matrix<GaussRat>;
pub type HomogPoly3 = exact::TernaryForm<GaussRat>;
pub type BiForm = bipoly::Bihomog<GaussRat>;
pub type CurveParam = bipoly::RationalCurve<GaussRat>;
