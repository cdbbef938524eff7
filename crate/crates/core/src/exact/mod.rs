//! Exact arithmetic substrate: fields, dense matrices, polynomial gcds.

pub mod field;
pub mod matrix;
pub mod poly;
pub mod ternary;

pub use field::{gauss, gi, rat, Conjugate, Field, GaussRatRepr};
pub use matrix::{Echelon, Matrix};
pub use poly::{GcdDomain, Poly};
pub use ternary::{gcd_homog, Exp3, TernaryForm};
