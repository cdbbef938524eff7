//! Seeded sampling of Gaussian rationals, points and flag points.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{cross, FlagPoint, ProjPoint, Vec3};
use crate::GaussRat;

pub const NUM_RANGE: i64 = 20;
pub const DEN_MAX: i64 = 10;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent per-trial seed: the `index`-th stream of the base seed.
pub fn trial_seed(seed: u64, index: u64) -> u64 {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(index);
    r.next_u64()
}

fn pool_rational<R: Rng>(rng: &mut R) -> BigRational {
    let num = rng.gen_range(-NUM_RANGE..=NUM_RANGE);
    let den = rng.gen_range(1..=DEN_MAX);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Real and imaginary parts `a/b` with `a` in `[-20, 20]`, `b` in `[1, 10]`.
pub fn gauss<R: Rng>(rng: &mut R) -> GaussRat {
    Complex::new(pool_rational(rng), pool_rational(rng))
}

/// Gaussian integer with both parts in `[-k, k]`.
pub fn small_gauss_int<R: Rng>(rng: &mut R, k: i64) -> GaussRat {
    Complex::new(
        BigRational::from_integer(rng.gen_range(-k..=k).into()),
        BigRational::from_integer(rng.gen_range(-k..=k).into()),
    )
}

pub fn vector<R: Rng>(rng: &mut R) -> Vec3 {
    [gauss(rng), gauss(rng), gauss(rng)]
}

pub fn point<R: Rng>(rng: &mut R) -> ProjPoint {
    loop {
        if let Ok(p) = ProjPoint::new(vector(rng)) {
            return p;
        }
    }
}

/// Random point on the line `{x : x . base = 0}`.
pub fn point_on_line<R: Rng>(rng: &mut R, base: &ProjPoint) -> ProjPoint {
    let (u, v) = base.orthogonal_basis();
    loop {
        let s = gauss(rng);
        let t = gauss(rng);
        let x = [0, 1, 2].map(|i| s.clone() * u[i].clone() + t.clone() * v[i].clone());
        if let Ok(p) = ProjPoint::new(x) {
            return p;
        }
    }
}

/// Random point of the flag threefold: random `p`, then `l = p x r`.
pub fn flag_point<R: Rng>(rng: &mut R) -> FlagPoint {
    let p = point(rng);
    loop {
        let l = cross(p.coords(), &vector(rng));
        if l.iter().all(|x| x.is_zero()) {
            continue;
        }
        let l = ProjPoint::new(l).unwrap();
        return FlagPoint::new(p, l).expect("p x r is orthogonal to p");
    }
}
