//! Points of `P2`, the flag threefold, its two projections and the twistor
//! projection, conics `L(q,m)` and their incidence structure.

mod config;
mod conic;
pub mod random;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{field::display_gauss, Conjugate, GaussRatRepr};
use crate::{Error, GaussRat, Result};

pub use config::{classify_config, random_config, ConfigFile, ConicRepr, Configuration, Mode};
pub use conic::{
    are_disjoint, collinear_triple, conic_param, connecting_curves, make_twistor_fiber, Conic,
    FiberCurve, FiberKind,
};

pub type Vec3 = [GaussRat; 3];

pub fn dot(a: &Vec3, b: &Vec3) -> GaussRat {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone() + a[2].clone() * b[2].clone()
}

pub fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

pub fn det3(a: &Vec3, b: &Vec3, c: &Vec3) -> GaussRat {
    dot(a, &cross(b, c))
}

pub fn conj3(a: &Vec3) -> Vec3 {
    [0, 1, 2].map(|i| a[i].conjugate())
}

pub fn is_zero3(a: &Vec3) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Positive rational multiple of `a` with Gaussian-integer coordinates whose
/// real and imaginary parts have no common integer factor. Used to keep
/// parametrizations, and hence condition matrices, small.
pub fn integral(a: &Vec3) -> Vec3 {
    let parts = || a.iter().flat_map(|x| [&x.re, &x.im]);
    let den = parts().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let scaled: Vec<BigInt> = parts().map(|q| (q * BigRational::from_integer(den.clone())).to_integer()).collect();
    let g = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return a.clone();
    }
    let k = BigRational::new(den, g);
    a.clone().map(|x| x * GaussRat::new(k.clone(), BigRational::zero()))
}

/// A point of `P2`, stored with its first nonzero coordinate equal to 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    coords: Vec3,
}

impl ProjPoint {
    pub fn new(coords: Vec3) -> Result<Self> {
        let k = coords.iter().position(|x| !x.is_zero()).ok_or(Error::ZeroVector)?;
        let inv = GaussRat::one() / coords[k].clone();
        Ok(ProjPoint {
            coords: coords.map(|x| x * inv.clone()),
        })
    }

    /// Coordinate vector `e_i`.
    pub fn e(i: usize) -> Self {
        let mut c = [GaussRat::zero(), GaussRat::zero(), GaussRat::zero()];
        c[i] = GaussRat::one();
        ProjPoint { coords: c }
    }

    pub fn coords(&self) -> &Vec3 {
        &self.coords
    }

    pub fn conj(&self) -> Self {
        ProjPoint::new(conj3(&self.coords)).expect("conjugate of a nonzero vector is nonzero")
    }

    pub fn dot(&self, other: &ProjPoint) -> GaussRat {
        dot(&self.coords, &other.coords)
    }

    /// `None` when the two points coincide.
    pub fn cross(&self, other: &ProjPoint) -> Option<ProjPoint> {
        ProjPoint::new(cross(&self.coords, &other.coords)).ok()
    }

    /// Index of the normalized coordinate.
    pub fn pivot(&self) -> usize {
        self.coords.iter().position(|x| !x.is_zero()).unwrap()
    }

    /// Deterministic basis `{u, v}` of the plane `{x : x . self = 0}`: with
    /// `k` the pivot and `i < j` the other indices, `u = e_i - c_i e_k`,
    /// `v = e_j - c_j e_k`.
    pub fn orthogonal_basis(&self) -> (Vec3, Vec3) {
        let k = self.pivot();
        let others: Vec<usize> = (0..3).filter(|&x| x != k).collect();
        let make = |i: usize| {
            let mut u = [GaussRat::zero(), GaussRat::zero(), GaussRat::zero()];
            u[i] = GaussRat::one();
            u[k] = -self.coords[i].clone();
            u
        };
        (make(others[0]), make(others[1]))
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(display_gauss).collect();
        write!(f, "[{}]", c.join(":"))
    }
}

/// Wire form: three Gaussian rationals.
pub type PointRepr = [GaussRatRepr; 3];

impl From<&ProjPoint> for PointRepr {
    fn from(p: &ProjPoint) -> Self {
        [0, 1, 2].map(|i| GaussRatRepr::from(&p.coords[i]))
    }
}

pub fn parse_point(r: &PointRepr) -> std::result::Result<ProjPoint, String> {
    let mut c = Vec::with_capacity(3);
    for x in r {
        c.push(GaussRat::try_from(x)?);
    }
    let c: Vec3 = c.try_into().unwrap();
    ProjPoint::new(c).map_err(|e| e.to_string())
}

/// A point `(p, l)` of `P2 x P2`, usually on the flag threefold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "FlagPointRepr", try_from = "FlagPointRepr")]
pub struct FlagPoint {
    pub p: ProjPoint,
    pub l: ProjPoint,
}

#[derive(Serialize, Deserialize)]
struct FlagPointRepr {
    p: PointRepr,
    l: PointRepr,
}

impl From<FlagPoint> for FlagPointRepr {
    fn from(x: FlagPoint) -> Self {
        FlagPointRepr {
            p: (&x.p).into(),
            l: (&x.l).into(),
        }
    }
}

impl TryFrom<FlagPointRepr> for FlagPoint {
    type Error = String;
    fn try_from(r: FlagPointRepr) -> std::result::Result<Self, String> {
        Ok(FlagPoint {
            p: parse_point(&r.p)?,
            l: parse_point(&r.l)?,
        })
    }
}

impl FlagPoint {
    /// Checks `p . l = 0`.
    pub fn new(p: ProjPoint, l: ProjPoint) -> Result<Self> {
        if !p.dot(&l).is_zero() {
            return Err(Error::NotOnFlag);
        }
        Ok(FlagPoint { p, l })
    }

    /// The fixed-point-free involution `(p, l) -> (conj l, conj p)`.
    pub fn j(&self) -> FlagPoint {
        FlagPoint {
            p: self.l.conj(),
            l: self.p.conj(),
        }
    }

    pub fn on_conic(&self, c: &Conic) -> bool {
        self.p.dot(c.m()).is_zero() && c.q().dot(&self.l).is_zero()
    }

    pub fn on_fiber(&self, f: &FiberCurve) -> bool {
        match f.kind {
            FiberKind::Pi2 => self.l == f.base,
            FiberKind::Pi1 => self.p == f.base,
        }
    }
}

/// Twistor projection `(p, l) -> conj(p) x l`.
pub fn twistor_project(p: &ProjPoint, l: &ProjPoint) -> Result<ProjPoint> {
    if !p.dot(l).is_zero() {
        return Err(Error::NotOnFlag);
    }
    ProjPoint::new(cross(&conj3(p.coords()), l.coords())).map_err(|_| Error::DegenerateCross)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::{gauss, gi};

    fn pt(c: [(i64, i64); 3]) -> ProjPoint {
        ProjPoint::new(c.map(|(a, b)| gi(a, b))).unwrap()
    }

    #[test]
    fn canonical_form() {
        let a = pt([(0, 0), (2, 0), (0, 2)]);
        assert_eq!(a, pt([(0, 0), (1, 0), (0, 1)]));
        assert_eq!(ProjPoint::new([gi(0, 0), gi(0, 0), gi(0, 0)]), Err(Error::ZeroVector));
    }

    #[test]
    fn projection_examples() {
        let q = twistor_project(&ProjPoint::e(0), &ProjPoint::e(2)).unwrap();
        assert_eq!(q, ProjPoint::e(1));
        let p = pt([(1, 0), (-1, 0), (0, 0)]);
        let q = twistor_project(&p, &ProjPoint::e(2)).unwrap();
        assert_eq!(q, pt([(1, 0), (1, 0), (0, 0)]));
        assert_eq!(
            twistor_project(&ProjPoint::e(0), &ProjPoint::e(0)),
            Err(Error::NotOnFlag)
        );
    }

    #[test]
    fn orthogonal_basis_is_orthogonal() {
        let m = pt([(0, 0), (3, 1), (-2, 5)]);
        let (u, v) = m.orthogonal_basis();
        assert!(dot(&u, m.coords()).is_zero());
        assert!(dot(&v, m.coords()).is_zero());
        assert!(!is_zero3(&cross(&u, &v)));
    }

    #[test]
    fn integral_scaling() {
        let a = [gauss(1, 2, 0, 1), gauss(-3, 4, 1, 6), gauss(0, 1, 0, 1)];
        let b = integral(&a);
        assert_eq!(b, [gi(6, 0), gi(-9, 2), gi(0, 0)]);
    }
}
