#![allow(dead_code)]

use flagtwist_core::bipoly::monomial_basis;
use flagtwist_core::exact::{gauss, TernaryForm};
use flagtwist_core::geometry::random;
use flagtwist_core::{BiForm, GaussRat, HomogPoly3};
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    random::rng(seed)
}

/// Small Gaussian rational, zero about a quarter of the time.
pub fn coeff(rng: &mut ChaCha8Rng) -> GaussRat {
    if rng.gen_range(0..4) == 0 {
        return GaussRat::zero();
    }
    gauss(rng.gen_range(-9..=9), rng.gen_range(1..=4), rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

pub fn biform(rng: &mut ChaCha8Rng, a: u32, b: u32) -> BiForm {
    BiForm::from_terms((a, b), monomial_basis(a, b).into_iter().map(|m| (m, coeff(rng))))
}

pub fn ternary(rng: &mut ChaCha8Rng, d: u32) -> HomogPoly3 {
    let mut terms = Vec::new();
    for i in 0..=d {
        for j in 0..=d - i {
            terms.push(([i, j, d - i - j], coeff(rng)));
        }
    }
    TernaryForm::from_terms(d, terms)
}

pub fn nonzero_scalar(rng: &mut ChaCha8Rng) -> GaussRat {
    loop {
        let c = coeff(rng);
        if !c.is_zero() {
            return c;
        }
    }
}
