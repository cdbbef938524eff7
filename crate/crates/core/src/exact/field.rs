//! Scalar traits shared by the exact linear algebra and polynomial code.
//!
//! Everything downstream only needs exact field operations and an exact zero
//! test, so the algorithms are written against [`Field`] and instantiated at
//! [`Rational`](crate::Rational) and [`GaussRat`](crate::GaussRat).
//! Floating-point types are deliberately not implementors: rank decisions
//! require an exact zero test.

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{Num, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::GaussRat;

/// An exact field with a cheap size measure used for pivot selection.
///
/// `Int` is a ring of integers with fraction field `Self`, so elimination can
/// run fraction-free and only divide at the very end.
pub trait Field: Clone + Eq + fmt::Debug + Num + Neg<Output = Self> + Send + Sync {
    type Int: Clone + Num + Neg<Output = Self::Int> + fmt::Debug + Send + Sync;

    /// Approximate bit size of the representation.
    fn bit_size(&self) -> u64;

    /// A positive integer `k` with `k * self` integral.
    fn denominator(&self) -> BigInt;

    /// `k * self`, which must be integral.
    fn scale_to_int(&self, k: &BigInt) -> Self::Int;

    fn from_ratio(num: &Self::Int, den: &Self::Int) -> Self;

    fn from_bigint(k: &BigInt) -> Self;

    fn int_bits(n: &Self::Int) -> u64;

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    fn from_count(n: u32) -> Self {
        (0..n).fold(Self::zero(), |acc, _| acc + Self::one())
    }
}

/// Fields carrying an involutive automorphism (complex conjugation).
pub trait Conjugate {
    fn conjugate(&self) -> Self;
}

impl Field for BigRational {
    type Int = BigInt;

    fn bit_size(&self) -> u64 {
        self.numer().bits() + self.denom().bits()
    }

    fn denominator(&self) -> BigInt {
        self.denom().clone()
    }

    fn scale_to_int(&self, k: &BigInt) -> BigInt {
        let x = self * BigRational::from_integer(k.clone());
        debug_assert!(x.is_integer());
        x.to_integer()
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Self {
        BigRational::new(num.clone(), den.clone())
    }

    fn from_bigint(k: &BigInt) -> Self {
        BigRational::from_integer(k.clone())
    }

    fn int_bits(n: &BigInt) -> u64 {
        n.bits()
    }
}

impl Conjugate for BigRational {
    fn conjugate(&self) -> Self {
        self.clone()
    }
}

impl<T> Field for Complex<T>
where
    T: Field,
{
    type Int = Complex<T::Int>;

    fn bit_size(&self) -> u64 {
        self.re.bit_size() + self.im.bit_size()
    }

    fn denominator(&self) -> BigInt {
        self.re.denominator().lcm(&self.im.denominator())
    }

    fn scale_to_int(&self, k: &BigInt) -> Self::Int {
        Complex::new(self.re.scale_to_int(k), self.im.scale_to_int(k))
    }

    fn from_ratio(num: &Self::Int, den: &Self::Int) -> Self {
        let n = num.clone() * den.conj();
        let norm = den.norm_sqr();
        Complex::new(T::from_ratio(&n.re, &norm), T::from_ratio(&n.im, &norm))
    }

    fn from_bigint(k: &BigInt) -> Self {
        Complex::new(T::from_bigint(k), T::zero())
    }

    fn int_bits(n: &Self::Int) -> u64 {
        T::int_bits(&n.re) + T::int_bits(&n.im)
    }
}

impl<T: Clone + Num + Neg<Output = T>> Conjugate for Complex<T> {
    fn conjugate(&self) -> Self {
        self.conj()
    }
}

/// Rational `num/den`; panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Gaussian rational `re_num/re_den + (im_num/im_den) i`.
pub fn gauss(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> GaussRat {
    Complex::new(rat(re_num, re_den), rat(im_num, im_den))
}

/// Gaussian integer `re + im i`.
pub fn gi(re: i64, im: i64) -> GaussRat {
    gauss(re, 1, im, 1)
}

pub fn is_real_nonnegative(x: &GaussRat) -> bool {
    x.im.is_zero() && !x.re.is_negative()
}

fn fraction_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn parse_fraction(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let den: BigInt = den.parse().map_err(|_| format!("bad denominator in {s:?}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    // BigRational::new reduces, so non-reduced input is accepted silently.
    Ok(BigRational::new(num, den))
}

/// Wire form of a Gaussian rational: `{"re": "num/den", "im": "num/den"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaussRatRepr {
    pub re: String,
    pub im: String,
}

impl From<&GaussRat> for GaussRatRepr {
    fn from(x: &GaussRat) -> Self {
        GaussRatRepr {
            re: fraction_string(&x.re),
            im: fraction_string(&x.im),
        }
    }
}

impl TryFrom<&GaussRatRepr> for GaussRat {
    type Error = String;

    fn try_from(r: &GaussRatRepr) -> Result<Self, Self::Error> {
        Ok(Complex::new(parse_fraction(&r.re)?, parse_fraction(&r.im)?))
    }
}

/// Compact human-readable rendering, e.g. `3/5+4/5i`, `-2`, `i`.
pub fn display_gauss(x: &GaussRat) -> String {
    let re = &x.re;
    let im = &x.im;
    if im.is_zero() {
        return re.to_string();
    }
    let im_part = if im.is_one() {
        "i".to_string()
    } else if (-im.clone()).is_one() {
        "-i".to_string()
    } else {
        format!("{im}i")
    };
    if re.is_zero() {
        im_part
    } else if im.is_negative() {
        format!("{re}{im_part}")
    } else {
        format!("{re}+{im_part}")
    }
}
