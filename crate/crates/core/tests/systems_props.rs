mod common;

use flagtwist_core::bipoly::flag_h0;
use flagtwist_core::exact::{gi, Matrix};
use flagtwist_core::geometry::{
    classify_config, connecting_curves, cross, make_twistor_fiber, random, random_config, Conic,
    Configuration, FlagPoint, Mode, ProjPoint,
};
use flagtwist_core::systems::*;
use flagtwist_core::{BiForm, Error, GaussRat};
use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;

fn pt(c: [(i64, i64); 3]) -> ProjPoint {
    ProjPoint::new(c.map(|(a, b)| gi(a, b))).unwrap()
}

fn tw(c: [(i64, i64); 3]) -> Conic {
    make_twistor_fiber(pt(c))
}

fn collinear_triple_config() -> Configuration {
    classify_config(vec![tw([(1, 0), (0, 0), (0, 0)]), tw([(0, 0), (1, 0), (0, 0)]), tw([(1, 0), (1, 0), (0, 0)])]).unwrap()
}

fn coordinate_triple() -> Configuration {
    classify_config((0..3).map(|i| make_twistor_fiber(ProjPoint::e(i))).collect()).unwrap()
}

/// First T(4)- draw whose members lie on no (1,1) surface.
fn t4_minus(seed: u64) -> Configuration {
    (seed..)
        .map(|s| random_config(4, Mode::Collinear, true, s).unwrap())
        .find(|a| ideal_dims(a, (1, 1)).unwrap().h0 == 0)
        .unwrap()
}

fn dims(h0: u64, h1: u64, chi: i64) -> Dims {
    Dims { h0, h1, chi }
}

#[test]
fn ideal_dims_examples() {
    let one = classify_config(vec![make_twistor_fiber(ProjPoint::e(0))]).unwrap();
    assert_eq!(ideal_dims(&one, (1, 1)).unwrap(), dims(5, 0, 5));
    assert_eq!(ideal_dims(&one, (0, 1)).unwrap(), dims(1, 0, 1));
    assert_eq!(ideal_dims(&coordinate_triple(), (1, 2)).unwrap(), dims(3, 0, 3));
    assert_eq!(ideal_dims(&coordinate_triple(), (1, 1)).unwrap().h0, 0);
    assert_eq!(ideal_dims(&collinear_triple_config(), (1, 1)).unwrap(), dims(1, 2, -1));
    let t4 = random_config(4, Mode::General, true, 2).unwrap();
    assert!(t4.in_t_star());
    assert_eq!(ideal_dims(&t4, (1, 2)).unwrap(), dims(0, 1, -1));
}

#[test]
fn not_disjoint_rejected() {
    let a = make_twistor_fiber(ProjPoint::e(0));
    let c = Conic::new(pt([(1, 0), (1, 0), (0, 0)]), pt([(1, 0), (0, 0), (1, 0)])).unwrap();
    let cfg = classify_config(vec![a, c]).unwrap();
    assert_eq!(ideal_dims(&cfg, (1, 1)), Err(Error::NotDisjoint));
}

#[test]
fn system_basis_examples() {
    let b = system_basis(&collinear_triple_config(), (1, 1)).unwrap();
    assert_eq!(b.len(), 1);
    assert!(b[0].proportional(&b[0].j_image()));
    assert!(is_irreducible(&b[0]).unwrap());
    assert_eq!(system_basis(&Configuration::empty(), (1, 1)).unwrap().len(), 8);
    let a = t4_minus(0);
    let pencil = system_basis(&a, (1, 2)).unwrap();
    assert_eq!(pencil.len(), 2);
    for seed in 0..20 {
        let f = random_member(&pencil, seed).unwrap();
        assert!(a.conics().iter().all(|c| contains_conic(&f, c)));
    }
    assert_eq!(random_member(&[], 0), Err(Error::EmptySystem));
    let single = random_member(&b, 4).unwrap();
    assert!(single.proportional(&b[0]));
}

#[test]
fn basis_members_vanish_and_are_independent() {
    for seed in 0..4 {
        let a = random_config(2 + seed as usize % 2, Mode::General, true, seed).unwrap();
        let s = LinearSystem::new(&a, (1, 2)).unwrap();
        for f in &s.basis {
            assert!(a.conics().iter().all(|c| contains_conic(f, c)));
            assert!(s.contains(f));
        }
        let reduced = flagtwist_core::bipoly::reduced_basis(1, 2);
        let rows = s.basis.iter().map(|f| f.to_vector(&reduced)).collect();
        assert_eq!(Matrix::from_rows(reduced.len(), rows).rank(), s.basis.len());
    }
}

#[test]
fn empty_configuration_dimensions() {
    for a in 0..=3u32 {
        for b in 0..=3u32 {
            let d = ideal_dims(&Configuration::empty(), (a, b)).unwrap();
            assert_eq!(d.h0, u64::from((a + 1) * (b + 1) * (a + b + 2) / 2));
            assert_eq!(d.h1, 0);
        }
    }
}

#[test]
fn dimension_formulas_instance_level() {
    for d in 1..=3u32 {
        for seed in 0..5 {
            // n <= d+1 in general position: nonspecial
            let n = d as usize + 1;
            let a = random_config(n, Mode::General, true, seed).unwrap();
            let s = ideal_dims(&a, (1, d)).unwrap();
            assert_eq!(s.h1, 0, "T*({n}) at (1,{d})");
            assert_eq!(s.h0 as i64, ((d + 1) * (d + 3)) as i64 - (n as i64) * (d + 2) as i64);
            if d >= 2 {
                let b = random_config(n, Mode::Collinear, true, seed).unwrap();
                assert!(ideal_dims(&b, (1, d)).unwrap().h1 > 0, "collinear {n} at (1,{d})");
            }
        }
    }
}

#[test]
fn collinear_obstruction_bound() {
    for n in 3..=6usize {
        for d in 1..=3u32 {
            let a = random_config(n, Mode::Collinear, true, (n * 10) as u64 + d as u64).unwrap();
            let h1 = ideal_dims(&a, (1, d)).unwrap().h1 as i64;
            let bound = n as i64 - 2 + 0.max(n as i64 - (d as i64 + 1));
            assert!(h1 >= bound, "n={n} d={d}: h1={h1} < {bound}");
        }
    }
}

#[test]
fn c02_zero_first_degree() {
    for n in 1..=4usize {
        for d in 1..=4u32 {
            let a = random_config(n, Mode::General, false, (n as u64) << 8 | d as u64).unwrap();
            let got = ideal_dims(&a, (0, d)).unwrap();
            let k = d as i64 - n as i64 + 2;
            let expected_h0 = if k >= 2 { (k * (k - 1) / 2) as u64 } else { 0 };
            assert_eq!(got.h0, expected_h0, "n={n} d={d}");
            assert_eq!(got.chi, ((d + 1) * (d + 2) / 2) as i64 - n as i64 * (d as i64 + 1));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn h0_routes_agree(seed in any::<u64>(), n in 1usize..5, a in 0u32..3, b in 0u32..3, twistor: bool) {
        prop_assume!((a, b) != (0, 0));
        let cfg = random_config(n, Mode::General, twistor, seed).unwrap();
        let s = LinearSystem::new(&cfg, (a, b)).unwrap();
        prop_assert_eq!(s.h0(), s.h0_from_full_matrix());
        prop_assert_eq!(s.chi(), flag_h0(a, b) as i64 - (n as i64) * (a + b + 1) as i64);
        prop_assert_eq!(s.h0() as i64 - s.h1() as i64, s.chi());
    }

    #[test]
    fn adding_a_conic_is_monotone(seed in any::<u64>(), n in 1usize..4, a in 0u32..3, b in 1u32..3) {
        let cfg = random_config(n, Mode::General, true, seed).unwrap();
        let smaller = cfg.without(n - 1);
        let h_big = ideal_dims(&cfg, (a, b)).unwrap().h0;
        let h_small = ideal_dims(&smaller, (a, b)).unwrap().h0;
        prop_assert!(h_big <= h_small);
        prop_assert!(h_small - h_big <= u64::from(a + b + 1));
    }
}

#[test]
fn divides_examples() {
    let f = BiForm::p(2).mul(&BiForm::l(0));
    assert_eq!(divides(&BiForm::l(0), &f).unwrap(), Some(BiForm::p(2)));
    let g = BiForm::p(1).mul(&BiForm::l(1)).sub(&BiForm::p(2).mul(&BiForm::l(2)));
    assert_eq!(divides(&BiForm::l(0), &g).unwrap(), None);
    assert_eq!(divides(&BiForm::phi(), &f), Err(Error::ZeroDivisor));
}

#[test]
fn divides_recovers_constructed_quotients() {
    let mut rng = common::rng(31);
    for _ in 0..10 {
        let g = common::biform(&mut rng, 0, 1);
        let h = common::biform(&mut rng, 1, 1);
        let k = common::biform(&mut rng, 0, 1);
        if g.vanishes_on_flag() {
            continue;
        }
        let f = g.mul(&h).add(&BiForm::phi().mul(&k));
        let q = divides(&g, &f).unwrap().expect("constructed as a multiple");
        assert_eq!(g.mul(&q).normal_form(), f.normal_form());
    }
}

#[test]
fn vertical_gcd_soundness() {
    let mut rng = common::rng(8);
    for i in 0..12 {
        let d = 1 + i % 3;
        let k = 1 + rng.gen_range(0..d);
        // product of a pullback of degree k and a (1, d-k) form
        let y = common::biform(&mut rng, 0, k);
        let w = common::biform(&mut rng, 1, d - k);
        let f = y.mul(&w);
        if f.vanishes_on_flag() || y.vanishes_on_flag() {
            continue;
        }
        let g = vertical_gcd(&f).unwrap();
        assert!(!g.is_constant());
        assert!(!is_irreducible(&f).unwrap());
        let v = confirm_vertical_factor(&f, &g).unwrap().expect("factor divides");
        assert!(v.power >= 1);
    }
    // whenever g is nonconstant the division succeeds, on random members too
    for seed in 0..6 {
        let a = random_config(3, Mode::Collinear, true, seed).unwrap();
        let basis = system_basis(&a, (1, 2)).unwrap();
        let f = random_member(&basis, seed).unwrap();
        let g = vertical_gcd(&f).unwrap();
        if !g.is_constant() {
            assert!(confirm_vertical_factor(&f, &g).unwrap().is_some());
        }
    }
}

#[test]
fn vertical_examples() {
    let f = BiForm::l(0).mul(&BiForm::p(2));
    assert!(!is_irreducible(&f).unwrap());
    let g = BiForm::p(1).mul(&BiForm::l(1)).sub(&BiForm::p(2).mul(&BiForm::l(2)));
    assert!(is_irreducible(&g).unwrap());
    assert_eq!(vertical_gcd(&BiForm::phi()), Err(Error::ZeroOnFlag));
}

/// Rank of `[grad F; grad Phi]` at `x`, computed independently.
fn jacobian_rank(f: &BiForm, x: &FlagPoint) -> usize {
    let (p, l) = (x.p.coords(), x.l.coords());
    let row = |h: &BiForm| h.gradient6().iter().map(|g| g.evaluate(p, l)).collect::<Vec<GaussRat>>();
    Matrix::from_rows(6, vec![row(f), row(&BiForm::phi())]).rank()
}

#[test]
fn singularity_matches_jacobian_rank() {
    let mut rng = common::rng(100);
    let mut singular = 0;
    for i in 0..100 {
        let (f, x) = if i % 2 == 0 {
            // product X Y at a point of X n Y
            let a = random::vector(&mut rng);
            let b = random::vector(&mut rng);
            let f = BiForm::p_linear(&a).mul(&BiForm::l_linear(&b));
            let p = ProjPoint::new(cross(&a, &random::vector(&mut rng))).unwrap();
            let l = ProjPoint::new(cross(p.coords(), &b)).unwrap();
            (f, FlagPoint::new(p, l).unwrap())
        } else {
            let d = rng.gen_range(1..=2);
            let f = common::biform(&mut rng, 1, d);
            if f.vanishes_on_flag() {
                continue;
            }
            let x = sample_surface_point(&f, rng.gen()).unwrap();
            (f, x)
        };
        let s = is_singular_at(&f, &x).unwrap();
        assert_eq!(s, jacobian_rank(&f, &x) <= 1);
        singular += usize::from(s);
    }
    assert!(singular >= 50);
}

#[test]
fn singularity_examples() {
    let f = BiForm::p(1).mul(&BiForm::l(1)).sub(&BiForm::p(2).mul(&BiForm::l(2)));
    let x = FlagPoint::new(pt([(0, 0), (1, 0), (1, 0)]), ProjPoint::e(0)).unwrap();
    assert!(!is_singular_at(&f, &x).unwrap());
    assert_eq!(jacobian_rank(&f, &x), 2);
}

#[test]
fn sampled_points_satisfy_euler() {
    let mut rng = common::rng(5);
    for _ in 0..10 {
        let f = common::biform(&mut rng, 1, 2);
        let x = sample_surface_point(&f, rng.gen()).unwrap();
        let (p, l) = (x.p.coords(), x.l.coords());
        assert!(f.evaluate(p, l).is_zero());
        assert!(x.p.dot(&x.l).is_zero());
        let g = f.gradient6();
        let euler = (0..3).fold(GaussRat::zero(), |s, i| s + p[i].clone() * g[i].evaluate(p, l));
        assert!(euler.is_zero());
    }
    let f = BiForm::p(2).mul(&BiForm::l(0));
    let x = sample_surface_point(&f, 1).unwrap();
    assert!(f.evaluate(x.p.coords(), x.l.coords()).is_zero());
}

#[test]
fn base_locus_of_two_fibers() {
    let mut rng = common::rng(66);
    for seed in 0..5 {
        let a = random_config(2, Mode::General, true, seed).unwrap();
        let basis = system_basis(&a, (1, 1)).unwrap();
        assert_eq!(basis.len(), 2);
        let (l, r) = connecting_curves(&a.conics()[0], &a.conics()[1]).unwrap();
        for f in &basis {
            assert!(a.conics().iter().all(|c| contains_conic(f, c)));
            assert!(contains_curve(f, &l.param()) && contains_curve(f, &r.param()));
        }
        for _ in 0..20 {
            let x = random::flag_point(&mut rng);
            let off = !a.conics().iter().any(|c| x.on_conic(c)) && !x.on_fiber(&l) && !x.on_fiber(&r);
            assert!(off);
            assert!(basis.iter().any(|f| !f.evaluate(x.p.coords(), x.l.coords()).is_zero()));
        }
    }
}

#[test]
fn reducible_members_of_the_pencil() {
    let a = t4_minus(3);
    let red = reducible_members(&a, (1, 2)).unwrap();
    assert_eq!(red.len(), 4);
    for i in 0..4 {
        assert!(!is_irreducible(&red[i]).unwrap());
        for j in i + 1..4 {
            assert!(!red[i].proportional(&red[j]));
        }
    }
    let witness = a.collinear_witness.clone().unwrap();
    let pencil = system_basis(&a, (1, 2)).unwrap();
    for seed in 0..3 {
        let f = random_member(&pencil, seed).unwrap();
        assert!(singular_along(&f, &witness.param(), 5).unwrap());
    }
    assert!(matches!(
        reducible_members(&coordinate_triple(), (1, 2)),
        Err(Error::HypothesisFailed(_))
    ));
}

#[test]
fn analysis_of_a_product() {
    let y = BiForm::l_linear(&[gi(1, 0), gi(0, 1), gi(2, 0)]);
    let s = BiForm::p(1).mul(&BiForm::l(1)).sub(&BiForm::p(2).mul(&BiForm::l(2)));
    let r = analyze_surface(&y.mul(&s), 5, 3).unwrap();
    assert!(!r.irreducible);
    assert_eq!(r.vertical_factor.unwrap().power, 1);
    assert_eq!(r.samples_checked, 5);
}

#[test]
fn intersection_bidegrees() {
    assert_eq!(bidegree_of_intersection((1, 1), (1, 1)), (3, 3));
    assert_eq!(bidegree_of_intersection((1, 2), (1, 1)), (5, 4));
    assert_eq!(bidegree_of_intersection((1, 0), (0, 1)), (1, 1));
}
