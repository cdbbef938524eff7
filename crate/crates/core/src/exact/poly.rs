//! Dense univariate polynomials over a gcd domain, with the subresultant
//! polynomial remainder sequence for gcds.
//!
//! Nesting `Poly<Poly<F>>` gives bivariate polynomials over a field, which is
//! how the homogeneous gcd in three variables is computed after
//! dehomogenization.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::field::Field;

/// Integral domain with exact division and a gcd (unique up to units).
pub trait GcdDomain:
    Clone
    + Eq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// `Some(q)` with `self = q * divisor` when the division is exact.
    fn div_exact(&self, divisor: &Self) -> Option<Self>;

    fn gcd(&self, other: &Self) -> Self;
}

impl<F: Field> GcdDomain for F {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            None
        } else {
            Some(self.clone() / divisor.clone())
        }
    }

    fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() && other.is_zero() {
            F::zero()
        } else {
            F::one()
        }
    }
}

/// Coefficients stored from the constant term upward; never has trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: GcdDomain> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl<R: GcdDomain> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    fn shift_scale(&self, c: &R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().map(|a| a.clone() * c.clone()));
        Self::new(coeffs)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * self.clone())
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn prem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-division by zero");
        let Some(da) = self.degree() else {
            return Self::zero();
        };
        if da < db {
            return self.clone();
        }
        let lb = b.lc();
        let mut r = self.clone();
        let mut e = da - db + 1;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let s = b.shift_scale(&r.lc(), dr - db);
            r = r.scale(&lb) - s;
            e -= 1;
        }
        let mut factor = R::one();
        for _ in 0..e {
            factor = factor * lb.clone();
        }
        r.scale(&factor)
    }

    pub fn content(&self) -> R {
        self.coeffs
            .iter()
            .fold(R::zero(), |g, c| if g.is_zero() { c.clone() } else { g.gcd(c) })
    }

    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() {
            return self.clone();
        }
        self.div_scalar(&c).expect("content divides every coefficient")
    }

    fn div_scalar(&self, c: &R) -> Option<Self> {
        self.coeffs
            .iter()
            .map(|a| a.div_exact(c))
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    fn subresultant_gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = if a.degree() >= b.degree() {
            (a.primitive_part(), b.primitive_part())
        } else {
            (b.primitive_part(), a.primitive_part())
        };
        let mut g = R::one();
        let mut h = R::one();
        loop {
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let r = a.prem(&b);
            match r.degree() {
                None => return b.primitive_part(),
                Some(0) => return Self::one(),
                Some(_) => {}
            }
            let mut denom = g.clone();
            for _ in 0..delta {
                denom = denom * h.clone();
            }
            a = b;
            b = r.div_scalar(&denom).expect("subresultant division is exact");
            g = a.lc();
            h = if delta == 0 {
                h
            } else {
                let mut num = R::one();
                for _ in 0..delta {
                    num = num * g.clone();
                }
                let mut den = R::one();
                for _ in 1..delta {
                    den = den * h.clone();
                }
                num.div_exact(&den).expect("subresultant h update is exact")
            };
        }
    }
}

impl<R: GcdDomain> GcdDomain for Poly<R> {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let db = divisor.degree()?;
        let lb = divisor.lc();
        let mut q = Self::zero();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let c = r.lc().div_exact(&lb)?;
            r = r - divisor.shift_scale(&c, dr - db);
            q = q + Self::monomial(c, dr - db);
        }
        Some(q)
    }

    fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let c = self.content().gcd(&other.content());
        Self::subresultant_gcd(self, other).scale(&c)
    }
}

impl<R: GcdDomain> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: GcdDomain> One for Poly<R> {
    fn one() -> Self {
        Self::constant(R::one())
    }
}

impl<R: GcdDomain> Add for Poly<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(R::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(R::zero);
            out.push(a + b);
        }
        Self::new(out)
    }
}

impl<R: GcdDomain> Neg for Poly<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<R: GcdDomain> Sub for Poly<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: GcdDomain> Mul for Poly<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::{gi, rat};
    use crate::{GaussRat, Rational};

    fn p(cs: &[i64]) -> Poly<Rational> {
        Poly::new(cs.iter().map(|&c| rat(c, 1)).collect())
    }

    #[test]
    fn univariate_gcd() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = p(&[-2, 1, 1]);
        let b = p(&[3, -4, 1]);
        let g = a.gcd(&b);
        assert_eq!(g.degree(), Some(1));
        assert!(a.div_exact(&g).is_some());
        assert!(b.div_exact(&g).is_some());
    }

    #[test]
    fn coprime_is_unit() {
        let g = p(&[1, 1]).gcd(&p(&[2, 1]));
        assert_eq!(g.degree(), Some(0));
    }

    #[test]
    fn gaussian_gcd() {
        // (x - i)(x + 1) and (x - i)(x - 2i)
        let xi = Poly::new(vec![gi(0, -1), gi(1, 0)]);
        let a = xi.clone() * Poly::new(vec![gi(1, 0), gi(1, 0)]);
        let b = xi.clone() * Poly::new(vec![gi(0, -2), gi(1, 0)]);
        let g: Poly<GaussRat> = a.gcd(&b);
        assert_eq!(g.degree(), Some(1));
        assert!(g.div_exact(&xi).is_some());
    }

    #[test]
    fn bivariate_gcd() {
        // over Q[x][y]: (y + x)(y - 1) and (y + x)(x y + 1)
        let x = Poly::new(vec![rat(0, 1), rat(1, 1)]);
        let one = Poly::<Rational>::one();
        let yx = Poly::new(vec![x.clone(), one.clone()]);
        let a = yx.clone() * Poly::new(vec![-one.clone(), one.clone()]);
        let b = yx.clone() * Poly::new(vec![one.clone(), x.clone()]);
        let g = a.gcd(&b);
        assert_eq!(g.degree(), Some(1));
        assert!(g.div_exact(&yx).is_some());
        assert!(yx.div_exact(&g).is_some());
    }

    #[test]
    fn prem_identity() {
        let a = p(&[1, 2, 3, 4]);
        let b = p(&[1, 0, 2]);
        let r = a.prem(&b);
        assert!(r.degree() < b.degree());
    }
}
