use std::fmt;

use num_traits::Zero;

use super::{cross, det3, integral, is_zero3, ProjPoint};
use crate::bipoly::CoordMap;
use crate::{BiForm, CurveParam, Error, Result};

/// Smooth bidegree-(1,1) curve `L(q,m) = {(p,l) in F : p.m = 0, q.l = 0}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Conic {
    q: ProjPoint,
    m: ProjPoint,
    twistor: bool,
}

impl Conic {
    pub fn new(q: ProjPoint, m: ProjPoint) -> Result<Self> {
        if q.dot(&m).is_zero() {
            return Err(Error::NotSmooth);
        }
        let twistor = m == q.conj();
        Ok(Conic { q, m, twistor })
    }

    pub fn q(&self) -> &ProjPoint {
        &self.q
    }

    pub fn m(&self) -> &ProjPoint {
        &self.m
    }

    pub fn is_twistor(&self) -> bool {
        self.twistor
    }

    /// The unique (0,1) surface `q.l = 0` containing the conic.
    pub fn l_form(&self) -> BiForm {
        BiForm::l_linear(self.q.coords())
    }

    /// The unique (1,0) surface `p.m = 0` containing the conic.
    pub fn p_form(&self) -> BiForm {
        BiForm::p_linear(self.m.coords())
    }

    pub fn param(&self) -> CurveParam {
        conic_param(self)
    }
}

impl fmt::Debug for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L(q={}, m={}{})", self.q, self.m, if self.twistor { ", twistor" } else { "" })
    }
}

/// The twistor fiber `L(q, conj q)`; always smooth since `q . conj q > 0`.
pub fn make_twistor_fiber(q: ProjPoint) -> Conic {
    let m = q.conj();
    Conic::new(q, m).expect("q . conj(q) is a positive real")
}

/// `p(s,t) = s u + t v` with `{u, v}` the deterministic basis of `m`'s
/// orthogonal plane, and `l(s,t) = p(s,t) x q`. `u`, `v` and `q` are first
/// rescaled to Gaussian-integer vectors.
pub fn conic_param(c: &Conic) -> CurveParam {
    let (u, v) = c.m.orthogonal_basis();
    let (u, v) = (integral(&u), integral(&v));
    let q = integral(c.q.coords());
    CurveParam {
        p: CoordMap::linear(&u, &v),
        l: CoordMap::linear(&cross(&u, &q), &cross(&v, &q)),
    }
}

/// A common point must have `l ~ q1 x q2` and `p ~ m1 x m2`, and it lies on
/// `F` iff their dot product vanishes. Parallel `q`'s or `m`'s give a whole
/// fiber worth of candidates, one of which always meets both conics.
pub fn are_disjoint(c1: &Conic, c2: &Conic) -> Result<bool> {
    if c1 == c2 {
        return Err(Error::SameConic);
    }
    let l = cross(c1.q.coords(), c2.q.coords());
    let p = cross(c1.m.coords(), c2.m.coords());
    if is_zero3(&l) || is_zero3(&p) {
        return Ok(false);
    }
    Ok(!super::dot(&p, &l).is_zero())
}

/// Whether a single (1,0) curve meets all three conics, i.e. the three
/// `q`'s are collinear.
pub fn collinear_triple(c1: &Conic, c2: &Conic, c3: &Conic) -> Result<bool> {
    if c1.q == c2.q || c1.q == c3.q || c2.q == c3.q {
        return Err(Error::RepeatedConic);
    }
    Ok(det3(c1.q.coords(), c2.q.coords(), c3.q.coords()).is_zero())
}

/// Which projection a fiber belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FiberKind {
    /// `{(p, base) : p . base = 0}`, bidegree (1,0).
    Pi2,
    /// `{(base, l) : base . l = 0}`, bidegree (0,1).
    Pi1,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiberCurve {
    pub kind: FiberKind,
    pub base: ProjPoint,
}

impl FiberCurve {
    pub fn pi2(base: ProjPoint) -> Self {
        FiberCurve {
            kind: FiberKind::Pi2,
            base,
        }
    }

    pub fn pi1(base: ProjPoint) -> Self {
        FiberCurve {
            kind: FiberKind::Pi1,
            base,
        }
    }

    /// A `Pi2` fiber meets `L(q,m)` iff `q . base = 0`; a `Pi1` fiber iff
    /// `base . m = 0`.
    pub fn meets(&self, c: &Conic) -> bool {
        match self.kind {
            FiberKind::Pi2 => c.q.dot(&self.base).is_zero(),
            FiberKind::Pi1 => self.base.dot(&c.m).is_zero(),
        }
    }

    /// The free coordinate runs linearly over the line orthogonal to the base.
    pub fn param(&self) -> CurveParam {
        let (u, v) = self.base.orthogonal_basis();
        let moving = CoordMap::linear(&integral(&u), &integral(&v));
        let fixed = CoordMap::constant(&integral(self.base.coords()));
        match self.kind {
            FiberKind::Pi2 => CurveParam { p: moving, l: fixed },
            FiberKind::Pi1 => CurveParam { p: fixed, l: moving },
        }
    }

    /// Image under `j`, which swaps the two projections and conjugates.
    pub fn j(&self) -> FiberCurve {
        FiberCurve {
            kind: match self.kind {
                FiberKind::Pi2 => FiberKind::Pi1,
                FiberKind::Pi1 => FiberKind::Pi2,
            },
            base: self.base.conj(),
        }
    }
}

/// `L = Pi2 fiber over q1 x q2` and `R = Pi1 fiber over m1 x m2`, the two
/// fibers meeting both conics.
pub fn connecting_curves(c1: &Conic, c2: &Conic) -> Result<(FiberCurve, FiberCurve)> {
    let l = c1.q.cross(&c2.q).ok_or(Error::ParallelData)?;
    let r = c1.m.cross(&c2.m).ok_or(Error::ParallelData)?;
    Ok((FiberCurve::pi2(l), FiberCurve::pi1(r)))
}
