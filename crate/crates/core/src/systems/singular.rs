//! Containment of curves, pointwise singularity, and sampling of surface
//! points.

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::geometry::{cross, dot, integral, is_zero3, random, Conic, FlagPoint, ProjPoint, Vec3};
use crate::bipoly::Monomial;
use crate::{BiForm, CurveParam, Error, Field, GaussRat, Result};

const MAX_SAMPLES: usize = 1000;

/// Exact: the restriction along the parametrization is the zero form.
pub fn contains_curve(f: &BiForm, curve: &CurveParam) -> bool {
    curve.restrict(f).is_zero()
}

pub fn contains_conic(f: &BiForm, c: &Conic) -> bool {
    contains_curve(f, &c.param())
}

/// The divisor `{F = 0}` of the smooth threefold is singular at `x` iff
/// `dF` is proportional to `dPhi = (l, p)` there.
pub fn is_singular_at(f: &BiForm, x: &FlagPoint) -> Result<bool> {
    singular_at(f, x.p.coords(), x.l.coords())
}

fn singular_at(f: &BiForm, p: &Vec3, l: &Vec3) -> Result<bool> {
    singular_with(f, &f.gradient6(), p, l)
}

type GaussInt = Complex<BigInt>;

/// A form with denominators cleared, for evaluation at Gaussian-integer
/// points without any rational normalization.
struct IntegralForm {
    terms: Vec<(Monomial, GaussInt)>,
    degree: (u32, u32),
}

impl IntegralForm {
    fn denominator(f: &BiForm) -> BigInt {
        f.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(&c.denominator()))
    }

    /// `den * f`; `den` must clear every denominator of `f`.
    fn scaled(f: &BiForm, den: &BigInt) -> Self {
        IntegralForm {
            terms: f.terms().map(|(m, c)| (*m, c.scale_to_int(den))).collect(),
            degree: f.bidegree(),
        }
    }

    fn evaluate(&self, p: &[GaussInt; 3], l: &[GaussInt; 3]) -> GaussInt {
        let table = |x: &[GaussInt; 3], d: u32| -> Vec<Vec<GaussInt>> {
            x.iter()
                .map(|xi| {
                    let mut v = vec![GaussInt::one()];
                    for _ in 0..d {
                        let next = v.last().unwrap() * xi;
                        v.push(next);
                    }
                    v
                })
                .collect()
        };
        let powers = [table(p, self.degree.0), table(l, self.degree.1)];
        let mut acc = GaussInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (k, exps) in [&m.p, &m.l].into_iter().enumerate() {
                for (i, &e) in exps.iter().enumerate() {
                    if e > 0 {
                        t *= &powers[k][i][e as usize];
                    }
                }
            }
            acc += t;
        }
        acc
    }
}

fn to_gauss_int(x: &Vec3) -> [GaussInt; 3] {
    let v = integral(x);
    [0, 1, 2].map(|i| v[i].scale_to_int(&BigInt::one()))
}

/// The test is projective, so points and forms are scaled to Gaussian
/// integers first.
pub(crate) fn singular_with(f: &BiForm, gradient: &[BiForm; 6], p: &Vec3, l: &Vec3) -> Result<bool> {
    if !dot(p, l).is_zero() {
        return Err(Error::NotOnFlag);
    }
    let (p, l) = (to_gauss_int(p), to_gauss_int(l));
    // one scale for all six partials, which keeps the gradient's direction;
    // it clears theirs because differentiation only multiplies by integers
    let den = IntegralForm::denominator(f);
    if !IntegralForm::scaled(f, &den).evaluate(&p, &l).is_zero() {
        return Err(Error::NotOnSurface);
    }
    let grad: Vec<GaussInt> = gradient
        .iter()
        .map(|g| IntegralForm::scaled(g, &den).evaluate(&p, &l))
        .collect();
    let dphi: Vec<GaussInt> = l.iter().chain(p.iter()).cloned().collect();
    for i in 0..6 {
        for j in i + 1..6 {
            let minor = &grad[i] * &dphi[j] - &grad[j] * &dphi[i];
            if !minor.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Singular at each of the points `[1:t]`, `t = 0..k`, of a curve inside
/// the surface.
pub fn singular_along(f: &BiForm, curve: &CurveParam, k: usize) -> Result<bool> {
    if !contains_curve(f, curve) {
        return Err(Error::NotOnSurface);
    }
    let s = GaussRat::from(crate::Rational::from_integer(1.into()));
    let gradient = f.gradient6();
    for t in 0..k {
        let t = GaussRat::from(crate::Rational::from_integer((t as i64).into()));
        let (p, l) = curve.at(&s, &t);
        if !singular_with(f, &gradient, &p, &l)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For `F = p . A(l)`: random `l`, then `p = l x A(l)` satisfies both
/// `p . l = 0` and `p . A(l) = 0`. Redrawn when `A(l)` is parallel to `l`.
pub fn sample_surface_point(f: &BiForm, seed: u64) -> Result<FlagPoint> {
    let (a, b) = f.bidegree();
    if a != 1 {
        return Err(Error::BadBidegree((a, b), "expected first degree 1"));
    }
    let nf = f.normal_form();
    if nf.is_zero() {
        return Err(Error::ZeroOnFlag);
    }
    let coeffs = nf.p_coefficients().expect("first degree is 1");
    let mut rng = random::rng(seed);
    for _ in 0..MAX_SAMPLES {
        let l = random::point(&mut rng);
        let av: Vec3 = [0, 1, 2].map(|i| coeffs[i].evaluate(l.coords()));
        let p = cross(l.coords(), &av);
        if is_zero3(&p) {
            continue;
        }
        let p = ProjPoint::new(p).expect("nonzero");
        return FlagPoint::new(p, l);
    }
    Err(Error::ExhaustedRetries(MAX_SAMPLES))
}
