mod common;

use flagtwist_core::bipoly::{monomial_basis, reduced_basis, BinaryForm, CoordMap, Monomial};
use flagtwist_core::exact::{gauss, gi};
use flagtwist_core::geometry::{make_twistor_fiber, random, Conic, ProjPoint, Vec3};
use flagtwist_core::{BiForm, CurveParam, GaussRat};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::Rng;

fn v3(c: [(i64, i64); 3]) -> Vec3 {
    c.map(|(a, b)| gi(a, b))
}


#[test]
fn basis_sizes() {
    assert_eq!(monomial_basis(1, 1).len(), 9);
    assert_eq!(monomial_basis(1, 2).len(), 18);
    assert_eq!(monomial_basis(0, 3).len(), 10);
    for a in 0..=4u32 {
        for b in 0..=4u32 {
            let expected = ((a + 1) * (b + 1) * (a + b + 2) / 2) as usize;
            assert_eq!(reduced_basis(a, b).len(), expected, "({a},{b})");
            let c = |n: u32| ((n + 2) * (n + 1) / 2) as usize;
            assert_eq!(monomial_basis(a, b).len(), c(a) * c(b));
        }
    }
}

#[test]
fn evaluate_examples() {
    let phi = BiForm::phi();
    assert!(phi.evaluate(&v3([(1, 0), (0, 0), (0, 0)]), &v3([(0, 0), (0, 0), (1, 0)])).is_zero());
    assert_eq!(phi.evaluate(&v3([(1, 0), (0, 0), (0, 0)]), &v3([(1, 0), (0, 0), (0, 0)])), gi(1, 0));
    let f = BiForm::p(1).mul(&BiForm::l(1)).sub(&BiForm::p(2).mul(&BiForm::l(2)));
    assert_eq!(f.evaluate(&v3([(0, 0), (1, 0), (-1, 0)]), &v3([(0, 0), (1, 0), (1, 0)])), gi(2, 0));
}

#[test]
fn multiply_examples() {
    let phi = BiForm::phi();
    assert_eq!(phi.mul(&BiForm::constant(gi(1, 0))), phi);
    let f = BiForm::l(0).mul(&BiForm::p(2));
    assert_eq!(f.bidegree(), (1, 1));
    assert_eq!(f.terms().count(), 1);
    let g = BiForm::l(0).mul(&BiForm::l(1));
    assert_eq!(g.bidegree(), (0, 2));
    let m = Monomial { p: [0, 0, 0], l: [1, 1, 0] };
    assert_eq!(g.coeff(&m), gi(1, 0));
}

#[test]
fn normal_form_examples() {
    assert!(BiForm::phi().normal_form().is_zero());
    let p0l0 = BiForm::p(0).mul(&BiForm::l(0));
    let expected = BiForm::p(1).mul(&BiForm::l(1)).add(&BiForm::p(2).mul(&BiForm::l(2))).neg();
    assert_eq!(p0l0.normal_form(), expected);
}

#[test]
fn j_image_examples() {
    assert_eq!(BiForm::phi().j_image(), BiForm::phi());
    for lambda in [gi(-1, 0), gi(3, 0), gauss(2, 7, 0, 1)] {
        let f = BiForm::p(1).mul(&BiForm::l(1)).add(&BiForm::p(2).mul(&BiForm::l(2)).scale(&lambda));
        assert_eq!(f.j_image(), f);
    }
    let f = BiForm::p(0).mul(&BiForm::l(1)).scale(&gi(0, 1));
    let expected = BiForm::p(1).mul(&BiForm::l(0)).scale(&gi(0, -1));
    assert_eq!(f.j_image(), expected);
}

#[test]
fn gradient_examples() {
    let g = BiForm::phi().gradient6();
    for i in 0..3 {
        assert_eq!(g[i], BiForm::l(i));
        assert_eq!(g[i + 3], BiForm::p(i));
    }
    let g = BiForm::p(2).mul(&BiForm::l(0)).gradient6();
    assert!(g[0].is_zero() && g[1].is_zero() && g[4].is_zero() && g[5].is_zero());
    assert_eq!(g[2], BiForm::l(0));
    assert_eq!(g[3], BiForm::p(2));
}

#[test]
fn restriction_examples() {
    let c = make_twistor_fiber(ProjPoint::e(0));
    let param = c.param();
    assert!(param.restrict(&BiForm::phi()).is_zero());
    assert!(param.restrict(&c.l_form()).is_zero());
    let mut rng = common::rng(3);
    let f = common::biform(&mut rng, 1, 2);
    let r = param.restrict(&f);
    assert_eq!(r.degree(), 3);
    assert_eq!(r.coeffs().len(), 4);
    assert_eq!(param.restrict(&common::biform(&mut rng, 1, 1)).coeffs().len(), 3);
}

/// The conic over `q = m = e0`: `p = [0:s:t]`, `l = [0:t:-s]`.
#[test]
fn explicit_parametrization() {
    let param = make_twistor_fiber(ProjPoint::e(0)).param();
    for (s, t) in [(1, 0), (0, 1), (2, 3), (-1, 5)] {
        let (s, t) = (gi(s, 0), gi(t, 0));
        let (p, l) = param.at(&s, &t);
        let p = ProjPoint::new(p).unwrap();
        let l = ProjPoint::new(l).unwrap();
        let want_p = ProjPoint::new([gi(0, 0), s.clone(), t.clone()]).unwrap();
        let want_l = ProjPoint::new([gi(0, 0), t.clone(), -s.clone()]).unwrap();
        assert_eq!((p, l), (want_p, want_l));
    }
}

fn random_curve(rng: &mut rand_chacha::ChaCha8Rng) -> CurveParam {
    CurveParam {
        p: CoordMap::linear(&random::vector(rng), &random::vector(rng)),
        l: CoordMap::linear(&random::vector(rng), &random::vector(rng)),
    }
}

fn random_conic(rng: &mut rand_chacha::ChaCha8Rng) -> Conic {
    loop {
        if let Ok(c) = Conic::new(random::point(rng), random::point(rng)) {
            return c;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn normal_form_idempotent_linear_and_phi_blind(seed in any::<u64>(), a in 0u32..3, b in 0u32..3) {
        let mut rng = common::rng(seed);
        let f = common::biform(&mut rng, a, b);
        let g = common::biform(&mut rng, a, b);
        let c = common::coeff(&mut rng);
        let nf = f.normal_form();
        prop_assert_eq!(nf.normal_form(), nf.clone());
        prop_assert!(nf.terms().all(|(m, _)| !m.hits_flag_relation()));
        prop_assert_eq!(
            f.scale(&c).add(&g).normal_form(),
            nf.scale(&c).add(&g.normal_form())
        );
        if a >= 1 && b >= 1 {
            let k = common::biform(&mut rng, a - 1, b - 1);
            prop_assert_eq!(f.add(&BiForm::phi().mul(&k)).normal_form(), nf.clone());
        }
        // same values on the flag threefold
        for _ in 0..3 {
            let x = random::flag_point(&mut rng);
            prop_assert_eq!(f.evaluate(x.p.coords(), x.l.coords()), nf.evaluate(x.p.coords(), x.l.coords()));
        }
    }

    #[test]
    fn multiply_evaluates_pointwise(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let (a, b, c, d) = (rng.gen_range(0..3), rng.gen_range(0..3), rng.gen_range(0..3), rng.gen_range(0..3));
        let f = common::biform(&mut rng, a, b);
        let g = common::biform(&mut rng, c, d);
        let h = f.mul(&g);
        prop_assert_eq!(h.bidegree(), (a + c, b + d));
        let (p, l) = (random::vector(&mut rng), random::vector(&mut rng));
        prop_assert_eq!(h.evaluate(&p, &l), f.evaluate(&p, &l) * g.evaluate(&p, &l));
    }

    #[test]
    fn j_image_laws(seed in any::<u64>(), a in 0u32..3, b in 0u32..3) {
        let mut rng = common::rng(seed);
        let f = common::biform(&mut rng, a, b);
        let c = common::coeff(&mut rng);
        let j = f.j_image();
        prop_assert_eq!(j.bidegree(), (b, a));
        prop_assert_eq!(j.j_image(), f.clone());
        prop_assert_eq!(f.scale(&c).j_image(), j.scale(&c.conj()));
        let (p, l) = (random::vector(&mut rng), random::vector(&mut rng));
        let conj = |v: &Vec3| v.clone().map(|x| x.conj());
        prop_assert_eq!(j.evaluate(&p, &l), f.evaluate(&conj(&l), &conj(&p)).conj());
    }

    #[test]
    fn euler_identities(seed in any::<u64>(), a in 0u32..4, b in 0u32..4) {
        let mut rng = common::rng(seed);
        let f = common::biform(&mut rng, a, b);
        let g = f.gradient6();
        let (p, l) = (random::vector(&mut rng), random::vector(&mut rng));
        let fx = f.evaluate(&p, &l);
        let ep = (0..3).fold(GaussRat::zero(), |s, i| s + p[i].clone() * g[i].evaluate(&p, &l));
        let el = (0..3).fold(GaussRat::zero(), |s, i| s + l[i].clone() * g[i + 3].evaluate(&p, &l));
        prop_assert_eq!(ep, fx.clone() * gi(a as i64, 0));
        prop_assert_eq!(el, fx * gi(b as i64, 0));
    }

    #[test]
    fn restriction_linear_and_multiplicative(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let curve = if rng.gen_bool(0.5) { random_conic(&mut rng).param() } else { random_curve(&mut rng) };
        let (a, b) = (rng.gen_range(0..3), rng.gen_range(0..3));
        let f = common::biform(&mut rng, a, b);
        let g = common::biform(&mut rng, a, b);
        let (c0, d0) = (rng.gen_range(0..2), rng.gen_range(0..2));
        let h = common::biform(&mut rng, c0, d0);
        let c = common::coeff(&mut rng);
        let rf = curve.restrict(&f);
        prop_assert_eq!(curve.restrict(&f.scale(&c).add(&g)), rf.scale(&c).add(&curve.restrict(&g)));
        prop_assert_eq!(curve.restrict(&f.mul(&h)), rf.mul(&curve.restrict(&h)));
        // oracle: direct evaluation at parameter values
        for t in 0..3 {
            let (s, t) = (GaussRat::one(), gi(t, 1));
            let (p, l) = curve.at(&s, &t);
            prop_assert_eq!(rf.evaluate(&s, &t), f.evaluate(&p, &l));
        }
    }

    #[test]
    fn phi_restricts_to_zero_on_conics(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let c = random_conic(&mut rng);
        let param = c.param();
        prop_assert!(param.lies_on_flag());
        prop_assert!(param.restrict(&BiForm::phi()).is_zero());
        prop_assert!(param.restrict(&c.l_form()).is_zero());
        prop_assert!(param.restrict(&c.p_form()).is_zero());
    }
}

#[test]
fn binary_form_product_degree() {
    let a = BinaryForm::new(vec![gi(1, 0), gi(2, 0)]);
    let b = BinaryForm::new(vec![gi(0, 1), gi(0, 0), gi(3, 0)]);
    let ab = a.mul(&b);
    assert_eq!(ab.degree(), 3);
    let (s, t) = (gi(2, 0), gi(-1, 1));
    assert_eq!(ab.evaluate(&s, &t), a.evaluate(&s, &t) * b.evaluate(&s, &t));
}
