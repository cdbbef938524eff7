//! The scenario registry. Each entry pairs a declarative list of
//! expectations with an observation routine that computes the named
//! quantities for one seeded trial.

use flagtwist_core::bipoly::monomial_basis;
use flagtwist_core::exact::{gauss, Matrix};
use flagtwist_core::geometry::{
    are_disjoint, classify_config, connecting_curves, cross, make_twistor_fiber, random,
    random_config, twistor_project, Conic, Configuration, FiberCurve, Mode, ProjPoint,
};
use flagtwist_core::systems::{
    analyze_surface, confirm_vertical_factor, contains_conic, contains_curve, is_irreducible, random_member,
    reducible_members, singular_along, vertical_gcd, LinearSystem,
};
use flagtwist_core::{BiForm, Error, GaussRat};
use num_traits::{One, Zero};
use rand::Rng;

use crate::expect::{Expectation, Observation};

/// Why a trial produced no verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Skip {
    /// The draw missed an open condition the statement assumes; retried.
    Hypothesis(String),
    /// A computation failed; counted as a failed trial.
    Error(String),
}

impl From<Error> for Skip {
    fn from(e: Error) -> Self {
        match e {
            Error::HypothesisFailed(_) | Error::ExhaustedRetries(_) => Skip::Hypothesis(e.to_string()),
            e => Skip::Error(e.to_string()),
        }
    }
}

pub type Observed = std::result::Result<Observation, Skip>;

pub struct Scenario {
    pub name: &'static str,
    /// Short description of the statement being checked; unique per entry.
    pub anchor: &'static str,
    pub default_d: u32,
    pub default_n: usize,
    /// Pins `d` (e.g. statements about one bidegree).
    pub fixed_d: Option<u32>,
    /// `n` as a function of `d` when the statement fixes it.
    pub fixed_n: Option<fn(u32) -> usize>,
    pub check: fn(u32, usize) -> std::result::Result<(), String>,
    pub expect: fn(u32, usize) -> Vec<Expectation>,
    pub observe: fn(u32, usize, u64) -> Observed,
}

impl std::fmt::Debug for Scenario {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Scenario").field("name", &self.name).finish_non_exhaustive()
    }
}

pub fn registry() -> &'static [Scenario] {
    &REGISTRY
}

pub fn find(name: &str) -> Option<&'static Scenario> {
    REGISTRY.iter().find(|s| s.name == name)
}

fn any(_: u32, _: usize) -> std::result::Result<(), String> {
    Ok(())
}

fn need(cond: bool, msg: &str) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

static REGISTRY: [Scenario; 22] = [
    Scenario {
        name: "eqdims",
        anchor: "sections of O(a,b) on the flag threefold number (a+1)(b+1)(a+b+2)/2",
        default_d: 4,
        default_n: 0,
        fixed_d: None,
        fixed_n: Some(|_| 0),
        check: any,
        expect: eqdims_expect,
        observe: eqdims_observe,
    },
    Scenario {
        name: "c02",
        anchor: "n disjoint conics: h0 and h1 of I_A(0,d) from n and d alone",
        default_d: 2,
        default_n: 2,
        fixed_d: None,
        fixed_n: None,
        check: |_, n| need(n >= 1, "needs n >= 1"),
        expect: c02_expect,
        observe: c02_observe,
    },
    Scenario {
        name: "cor1",
        anchor: "up to d+1 general twistor fibers impose independent conditions on (1,d)",
        default_d: 2,
        default_n: 2,
        fixed_d: None,
        fixed_n: None,
        check: |d, n| need(n <= d as usize + 1, "needs n <= d+1"),
        expect: |d, n| vec![Expectation::eq("h0", expected_h0_1d(d, n)), Expectation::eq("h1", 0i64)],
        observe: |d, n, seed| {
            let a = draw(n, Mode::General, true, seed)?;
            dims_of(&a, (1, d))
        },
    },
    Scenario {
        name: "c01-star",
        anchor: "conics with no three on a (1,0) curve give h1(I_A(1,d)) = 0 for n <= d+1",
        default_d: 2,
        default_n: 3,
        fixed_d: None,
        fixed_n: None,
        check: |d, n| need((1..=d as usize + 1).contains(&n), "needs 1 <= n <= d+1"),
        expect: |_, _| vec![Expectation::eq("h1", 0i64), Expectation::eq("in_c_star", true)],
        observe: |d, n, seed| {
            let a = draw(n, Mode::General, false, seed)?;
            let mut o = dims_of(&a, (1, d))?;
            o.insert("in_c_star".into(), a.in_c_star.into());
            Ok(o)
        },
    },
    Scenario {
        name: "c01-collinear",
        anchor: "three or more conics on one (1,0) curve obstruct (1,d): h1 > 0",
        default_d: 2,
        default_n: 3,
        fixed_d: None,
        fixed_n: None,
        check: |d, n| need((3..=d as usize + 1).contains(&n), "needs 3 <= n <= d+1"),
        expect: |_, _| vec![Expectation::ge("h1", 1i64)],
        observe: |d, n, seed| {
            let a = draw(n, Mode::Collinear, false, seed)?;
            dims_of(&a, (1, d))
        },
    },
    Scenario {
        name: "ii1",
        anchor: "d+2 conics with no three on a (1,0) curve have h1(I_A(1,d)) <= 1",
        default_d: 2,
        default_n: 4,
        fixed_d: None,
        fixed_n: Some(|d| d as usize + 2),
        check: any,
        expect: |_, _| vec![Expectation::le("h1", 1i64)],
        observe: |d, n, seed| {
            let a = draw(n, Mode::General, false, seed)?;
            dims_of(&a, (1, d))
        },
    },
    Scenario {
        name: "u6",
        anchor: "no (1,d) surface at all passes through d+2 general twistor fibers",
        default_d: 2,
        default_n: 4,
        fixed_d: None,
        fixed_n: Some(|d| d as usize + 2),
        check: any,
        expect: |_, _| vec![Expectation::eq("h0", 0i64)],
        observe: |d, n, seed| {
            let a = draw(n, Mode::General, true, seed)?;
            dims_of(&a, (1, d))
        },
    },
    Scenario {
        name: "top-count",
        anchor: "d+2 general twistor fibers: (h0, h1) of I_A(1,d) is exactly (0, 1)",
        default_d: 2,
        default_n: 4,
        fixed_d: None,
        fixed_n: Some(|d| d as usize + 2),
        check: any,
        expect: |_, _| vec![Expectation::eq("h0", 0i64), Expectation::eq("h1", 1i64)],
        observe: |d, n, seed| {
            let a = draw(n, Mode::General, true, seed)?;
            dims_of(&a, (1, d))
        },
    },
    Scenario {
        name: "u5-exist",
        anchor: "up to d+1 general twistor fibers lie on an irreducible (1,d) surface",
        default_d: 2,
        default_n: 3,
        fixed_d: None,
        fixed_n: None,
        check: |d, n| need(n <= d as usize + 1, "needs n <= d+1"),
        expect: |d, n| {
            vec![
                Expectation::eq("h0", expected_h0_1d(d, n)),
                Expectation::eq("member_irreducible", true),
                Expectation::eq("member_contains_A", true),
            ]
        },
        observe: |d, n, seed| {
            let a = draw(n, Mode::General, true, seed)?;
            let s = system(&a, (1, d))?;
            let mut o = dims_obs(&s);
            let f = random_member(&s.basis, seed)?;
            o.insert("member_irreducible".into(), is_irreducible(&f)?.into());
            o.insert("member_contains_A".into(), contains_all(&f, &a).into());
            Ok(o)
        },
    },
    Scenario {
        name: "no2",
        anchor: "n >= 3 twistor fibers on one (1,0) curve: h1 >= n-2+max(0, n-d-1)",
        default_d: 2,
        default_n: 4,
        fixed_d: None,
        fixed_n: None,
        check: |_, n| need(n >= 3, "needs n >= 3"),
        expect: |d, n| {
            let n = n as i64;
            vec![Expectation::ge("h1", n - 2 + 0.max(n - d as i64 - 1))]
        },
        observe: |d, n, seed| {
            let a = draw(n, Mode::Collinear, true, seed)?;
            dims_of(&a, (1, d))
        },
    },
    Scenario {
        name: "nok1",
        anchor: "d+2 general twistor fibers on one (1,0) curve: h0 >= d, general member irreducible",
        default_d: 2,
        default_n: 4,
        fixed_d: None,
        fixed_n: Some(|d| d as usize + 2),
        check: |d, _| need(d >= 2, "needs d >= 2"),
        expect: |d, _| {
            vec![
                Expectation::ge("h0", d as i64),
                Expectation::eq("member_irreducible", true),
            ]
        },
        observe: |d, n, seed| {
            let a = draw(n, Mode::Collinear, true, seed)?;
            let s = system(&a, (1, d))?;
            let mut o = dims_obs(&s);
            if s.h0() > 0 {
                let f = random_member(&s.basis, seed)?;
                o.insert("member_irreducible".into(), is_irreducible(&f)?.into());
            }
            Ok(o)
        },
    },
    Scenario {
        name: "remmmm",
        anchor: "three collinear twistor fibers lie on exactly one (1,1) surface, irreducible and j-invariant",
        default_d: 1,
        default_n: 3,
        fixed_d: Some(1),
        fixed_n: Some(|_| 3),
        check: any,
        expect: |_, _| {
            vec![
                Expectation::eq("h0", 1i64),
                Expectation::eq("h1", 2i64),
                Expectation::eq("member_irreducible", true),
                Expectation::eq("member_j_invariant", true),
            ]
        },
        observe: |_, n, seed| {
            let a = draw(n, Mode::Collinear, true, seed)?;
            let s = system(&a, (1, 1))?;
            let mut o = dims_obs(&s);
            if let [f] = s.basis.as_slice() {
                o.insert("member_irreducible".into(), is_irreducible(f)?.into());
                let j = f.j_image().normal_form();
                o.insert("member_j_invariant".into(), f.normal_form().proportional(&j).into());
            }
            Ok(o)
        },
    },
    Scenario {
        name: "n3",
        anchor: "three conics on a (1,1) surface: h1(I_A(1,2)) = 1 and base locus A+L+R",
        default_d: 2,
        default_n: 3,
        fixed_d: Some(2),
        fixed_n: Some(|_| 3),
        check: any,
        expect: |_, _| {
            vec![
                Expectation::eq("h1", 1i64),
                Expectation::eq("R_meets_all", true),
                Expectation::eq("L_in_every_member", true),
                Expectation::eq("R_in_every_member", true),
                Expectation::eq("member_irreducible", true),
            ]
        },
        observe: |_, n, seed| {
            let a = draw(n, Mode::Collinear, true, seed)?;
            let h11 = system(&a, (1, 1))?.h0();
            if h11 == 0 {
                return Err(Skip::Hypothesis("no (1,1) surface through the triple".into()));
            }
            let l = a.collinear_witness.clone().ok_or_else(|| Skip::Error("no witness".into()))?;
            let r = l.j();
            let s = system(&a, (1, 2))?;
            let mut o = dims_obs(&s);
            o.insert("R_meets_all".into(), a.conics().iter().all(|c| r.meets(c)).into());
            o.insert("L_in_every_member".into(), in_every(&s.basis, &l).into());
            o.insert("R_in_every_member".into(), in_every(&s.basis, &r).into());
            let f = random_member(&s.basis, seed)?;
            o.insert("member_irreducible".into(), is_irreducible(&f)?.into());
            Ok(o)
        },
    },
    Scenario {
        name: "ee1",
        anchor: "two disjoint conics: the (1,1) pencil has base locus exactly A+L+R",
        default_d: 1,
        default_n: 2,
        fixed_d: Some(1),
        fixed_n: Some(|_| 2),
        check: any,
        expect: |_, _| {
            vec![
                Expectation::eq("h0", 2i64),
                Expectation::eq("members_contain_A_L_R", true),
                Expectation::eq("off_locus_points_in_base_locus", 0i64),
                Expectation::eq("member_irreducible", true),
            ]
        },
        observe: |_, n, seed| {
            let a = draw(n, Mode::General, true, seed)?;
            let s = system(&a, (1, 1))?;
            let mut o = dims_obs(&s);
            let (l, r) = connecting_curves(&a.conics()[0], &a.conics()[1])?;
            let contain = s
                .basis
                .iter()
                .all(|f| contains_all(f, &a) && contains_fiber(f, &l) && contains_fiber(f, &r));
            o.insert("members_contain_A_L_R".into(), contain.into());
            let mut rng = random::rng(seed);
            let mut in_base = 0i64;
            let mut tested = 0;
            while tested < OFF_LOCUS_POINTS {
                let x = random::flag_point(&mut rng);
                if a.conics().iter().any(|c| x.on_conic(c)) || x.on_fiber(&l) || x.on_fiber(&r) {
                    continue;
                }
                tested += 1;
                if s.basis.iter().all(|f| f.evaluate(x.p.coords(), x.l.coords()).is_zero()) {
                    in_base += 1;
                }
            }
            o.insert("off_locus_points_in_base_locus".into(), in_base.into());
            let f = random_member(&s.basis, seed)?;
            o.insert("member_irreducible".into(), is_irreducible(&f)?.into());
            Ok(o)
        },
    },
    Scenario {
        name: "ee2",
        anchor: "two twistor fibers impose independent conditions on (1,2) and the general member is smooth",
        default_d: 2,
        default_n: 2,
        fixed_d: Some(2),
        fixed_n: Some(|_| 2),
        check: any,
        expect: |_, _| {
            vec![
                Expectation::eq("h0", 7i64),
                Expectation::eq("h1", 0i64),
                Expectation::eq("L_in_every_member", true),
                Expectation::eq("sampled_points", SMOOTHNESS_SAMPLES as i64),
                Expectation::eq("sampled_singular_points", 0i64),
            ]
        },
        observe: |_, n, seed| {
            let a = draw(n, Mode::General, true, seed)?;
            let s = system(&a, (1, 2))?;
            let mut o = dims_obs(&s);
            let (l, _) = connecting_curves(&a.conics()[0], &a.conics()[1])?;
            o.insert("L_in_every_member".into(), in_every(&s.basis, &l).into());
            let f = random_member(&s.basis, seed)?;
            let an = analyze_surface(&f, SMOOTHNESS_SAMPLES, seed)?;
            o.insert("sampled_points".into(), an.samples_checked.into());
            o.insert("sampled_singular_points".into(), an.singular_points_found.len().into());
            Ok(o)
        },
    },
    Scenario {
        name: "n21",
        anchor: "three twistor fibers on no (1,1) surface: a net of (1,2) surfaces, general member irreducible",
        default_d: 2,
        default_n: 3,
        fixed_d: Some(2),
        fixed_n: Some(|_| 3),
        check: any,
        expect: |_, _| {
            vec![
                Expectation::eq("h0", 3i64),
                Expectation::eq("h1", 0i64),
                Expectation::eq("member_irreducible", true),
                Expectation::eq("connecting_L_in_every_member", 3i64),
            ]
        },
        observe: |_, n, seed| {
            let a = draw(n, Mode::General, true, seed)?;
            if system(&a, (1, 1))?.h0() != 0 {
                return Err(Skip::Hypothesis("triple lies on a (1,1) surface".into()));
            }
            let s = system(&a, (1, 2))?;
            let mut o = dims_obs(&s);
            let f = random_member(&s.basis, seed)?;
            o.insert("member_irreducible".into(), is_irreducible(&f)?.into());
            let c = a.conics();
            let mut inside = 0i64;
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                let (l, _) = connecting_curves(&c[i], &c[j])?;
                inside += in_every(&s.basis, &l) as i64;
            }
            o.insert("connecting_L_in_every_member".into(), inside.into());
            Ok(o)
        },
    },
    Scenario {
        name: "bo2-aaa1",
        anchor: "four collinear twistor fibers off every (1,1) surface: a (1,2) pencil with 4 reducible members, all singular along L",
        default_d: 2,
        default_n: 4,
        fixed_d: Some(2),
        fixed_n: Some(|_| 4),
        check: any,
        expect: |_, _| {
            vec![
                Expectation::eq("h0", 2i64),
                Expectation::eq("reducible_members", 4i64),
                Expectation::eq("reducible_pairwise_distinct", true),
                Expectation::eq("member_irreducible", true),
                Expectation::eq("members_singular_along_L", 5i64),
            ]
        },
        observe: bo2_observe,
    },
    Scenario {
        name: "bo5",
        anchor: "d+3 collinear twistor fibers: every (1,d) member has a (1,1) component through four of them",
        default_d: 2,
        default_n: 5,
        fixed_d: None,
        fixed_n: Some(|d| d as usize + 3),
        check: |d, _| need(d >= 2, "needs d >= 2"),
        expect: |_, _| {
            vec![
                Expectation::ge("h0_on_circle", 1i64),
                Expectation::eq("irreducible_members", 0i64),
                Expectation::eq("members_without_11_component", 0i64),
            ]
        },
        observe: |d, n, seed| {
            let circle = circle_config(n, seed)?;
            let general = draw(n, Mode::Collinear, true, seed)?;
            let mut o = Observation::new();
            let c = system(&circle, (1, d))?;
            let g = system(&general, (1, d))?;
            o.insert("h0_on_circle".into(), c.h0().into());
            o.insert("h0_random_collinear".into(), g.h0().into());
            let (irr, bare) = reducibility(&[(&circle, &c), (&general, &g)], seed)?;
            o.insert("irreducible_members".into(), irr.into());
            o.insert("members_without_11_component".into(), bare.into());
            Ok(o)
        },
    },
    Scenario {
        name: "n6-probe",
        anchor: "no irreducible (1,2) surface through 5 twistor fibers",
        default_d: 2,
        default_n: 5,
        fixed_d: Some(2),
        fixed_n: Some(|_| 5),
        check: any,
        expect: |_, _| vec![Expectation::eq("irreducible_members", 0i64)],
        observe: probe_observe,
    },
    Scenario {
        name: "n7-probe",
        anchor: "no irreducible (1,3) surface through 6 twistor fibers",
        default_d: 3,
        default_n: 6,
        fixed_d: Some(3),
        fixed_n: Some(|_| 6),
        check: any,
        expect: |_, _| vec![Expectation::eq("irreducible_members", 0i64)],
        observe: probe_observe,
    },
    Scenario {
        name: "primo-caso",
        anchor: "p1*l1 - p2*l2 contains the twistor fibers over [0:1:w], |w| = 1, and the six coordinate fibers",
        default_d: 1,
        default_n: 0,
        fixed_d: Some(1),
        fixed_n: Some(|_| 0),
        check: any,
        expect: |_, _| {
            vec![
                Expectation::eq("listed_circle_fibers_contained", 5i64),
                Expectation::eq("coordinate_fibers_contained", 6i64),
                Expectation::eq("seeded_circle_fiber_contained", true),
                Expectation::eq("seeded_off_circle_fiber_contained", false),
            ]
        },
        observe: primo_observe,
    },
    Scenario {
        name: "fiber-consistency",
        anchor: "x and j(x) lie on the twistor fiber over the projection of x; disjointness agrees with direct incidence solving",
        default_d: 1,
        default_n: 2,
        fixed_d: None,
        fixed_n: Some(|_| 2),
        check: any,
        expect: |_, _| {
            vec![
                Expectation::eq("x_on_fiber", true),
                Expectation::eq("jx_on_fiber", true),
                Expectation::eq("disjointness_disagreements", 0i64),
            ]
        },
        observe: fiber_observe,
    },
];

const OFF_LOCUS_POINTS: usize = 20;
const SMOOTHNESS_SAMPLES: usize = 50;
const SINGULAR_CHECK_POINTS: usize = 5;

fn draw(n: usize, mode: Mode, twistor: bool, seed: u64) -> std::result::Result<Configuration, Skip> {
    Ok(random_config(n, mode, twistor, seed)?)
}

fn system(a: &Configuration, bidegree: (u32, u32)) -> std::result::Result<LinearSystem, Skip> {
    Ok(LinearSystem::new(a, bidegree)?)
}

fn dims_obs(s: &LinearSystem) -> Observation {
    let mut o = Observation::new();
    o.insert("h0".into(), s.h0().into());
    o.insert("h1".into(), s.h1().into());
    o.insert("chi".into(), s.chi().into());
    o
}

fn dims_of(a: &Configuration, bidegree: (u32, u32)) -> Observed {
    Ok(dims_obs(&system(a, bidegree)?))
}

fn expected_h0_1d(d: u32, n: usize) -> i64 {
    let d = d as i64;
    (d + 1) * (d + 3) - n as i64 * (d + 2)
}

fn contains_all(f: &BiForm, a: &Configuration) -> bool {
    a.conics().iter().all(|c| contains_conic(f, c))
}

fn contains_fiber(f: &BiForm, c: &FiberCurve) -> bool {
    contains_curve(f, &c.param())
}

fn in_every(basis: &[BiForm], c: &FiberCurve) -> bool {
    basis.iter().all(|f| contains_fiber(f, c))
}

fn eqdims_expect(d: u32, _: usize) -> Vec<Expectation> {
    let mut v = Vec::new();
    for a in 0..=d {
        for b in 0..=d {
            let (a6, b6) = (a as i64, b as i64);
            v.push(Expectation::eq(format!("h0(O({a},{b}))"), (a6 + 1) * (b6 + 1) * (a6 + b6 + 2) / 2));
        }
    }
    v
}

/// All monomials of bidegree `(a,b)` minus the rank of the multiples of
/// `p.l` among them.
fn eqdims_observe(d: u32, _: usize, _: u64) -> Observed {
    let mut o = Observation::new();
    for a in 0..=d {
        for b in 0..=d {
            let full = monomial_basis(a, b);
            let relations = if a >= 1 && b >= 1 {
                let rows = monomial_basis(a - 1, b - 1)
                    .into_iter()
                    .map(|m| BiForm::phi().mul(&BiForm::monomial(m, GaussRat::one())).to_vector(&full))
                    .collect();
                Matrix::from_rows(full.len(), rows).rank()
            } else {
                0
            };
            o.insert(format!("h0(O({a},{b}))"), (full.len() - relations).into());
        }
    }
    Ok(o)
}

fn c02_expect(d: u32, n: usize) -> Vec<Expectation> {
    let (d, n) = (d as i64, n as i64);
    let k = d - n + 2;
    let h0 = if k >= 2 { k * (k - 1) / 2 } else { 0 };
    let h1 = if n <= d + 1 {
        n * (n - 1) / 2
    } else {
        n * (d + 1) - (d + 2) * (d + 1) / 2
    };
    vec![Expectation::eq("h0", h0), Expectation::eq("h1", h1)]
}

fn c02_observe(d: u32, n: usize, seed: u64) -> Observed {
    let a = draw(n, Mode::General, false, seed)?;
    dims_of(&a, (0, d))
}

fn bo2_observe(_: u32, n: usize, seed: u64) -> Observed {
    let a = draw(n, Mode::Collinear, true, seed)?;
    if system(&a, (1, 1))?.h0() != 0 {
        return Err(Skip::Hypothesis("fibers lie on a (1,1) surface".into()));
    }
    let s = system(&a, (1, 2))?;
    let mut o = dims_obs(&s);
    if s.h0() != 2 {
        return Ok(o);
    }
    let products = reducible_members(&a, (1, 2))?;
    o.insert("reducible_members".into(), products.len().into());
    let distinct = (0..products.len())
        .all(|i| (i + 1..products.len()).all(|j| !products[i].proportional(&products[j])));
    o.insert("reducible_pairwise_distinct".into(), distinct.into());
    let f = random_member(&s.basis, seed)?;
    o.insert("member_irreducible".into(), is_irreducible(&f)?.into());
    let l = a.collinear_witness.clone().ok_or_else(|| Skip::Error("no witness".into()))?;
    let mut singular = 0i64;
    for g in products.iter().chain([&f]) {
        if singular_along(g, &l.param(), SINGULAR_CHECK_POINTS)? {
            singular += 1;
        }
    }
    o.insert("members_singular_along_L".into(), singular.into());
    Ok(o)
}

/// Twistor fibers over `[0:1:w]` with `w = ((a^2-b^2) + 2ab i)/(a^2+b^2)`,
/// all on the unit circle and hence on the surface `p1 l1 - p2 l2`.
fn circle_config(n: usize, seed: u64) -> std::result::Result<Configuration, Skip> {
    let mut rng = random::rng(seed ^ 0x636972636c65);
    let mut qs: Vec<ProjPoint> = Vec::with_capacity(n);
    while qs.len() < n {
        let q = circle_point(&mut rng);
        if !qs.contains(&q) {
            qs.push(q);
        }
    }
    Ok(classify_config(qs.into_iter().map(make_twistor_fiber).collect())?)
}

fn circle_point<R: Rng>(rng: &mut R) -> ProjPoint {
    let a: i64 = rng.gen_range(1..=12);
    let b: i64 = rng.gen_range(-12..=12);
    let r = a * a + b * b;
    let w = gauss(a * a - b * b, r, 2 * a * b, r);
    ProjPoint::new([GaussRat::zero(), GaussRat::one(), w]).expect("nonzero")
}

/// Tests every basis member and one random member of each system. Returns
/// the number of irreducible members and the number of members with no
/// (1,1) component through at least four members of the configuration.
fn reducibility(
    systems: &[(&Configuration, &LinearSystem)],
    seed: u64,
) -> std::result::Result<(i64, i64), Skip> {
    let mut irreducible = 0;
    let mut without = 0;
    for (a, s) in systems {
        if s.h0() == 0 {
            continue;
        }
        let mut members = s.basis.clone();
        members.push(random_member(&s.basis, seed)?);
        for f in &members {
            let g = vertical_gcd(f)?;
            if g.is_constant() {
                irreducible += 1;
                without += 1;
                continue;
            }
            let through = confirm_vertical_factor(f, &g)?
                .map(|v| v.quotient)
                .filter(|h| h.bidegree() == (1, 1))
                .map_or(0, |h| a.conics().iter().filter(|c| contains_conic(&h, c)).count());
            if through < 4 {
                without += 1;
            }
        }
    }
    Ok((irreducible, without))
}

/// General, collinear and on-circle draws of `n` fibers at `(1,d)`.
fn probe_observe(d: u32, n: usize, seed: u64) -> Observed {
    let general = draw(n, Mode::General, true, seed)?;
    let collinear = draw(n, Mode::Collinear, true, seed)?;
    let circle = circle_config(n, seed)?;
    let sg = system(&general, (1, d))?;
    let sc = system(&collinear, (1, d))?;
    let so = system(&circle, (1, d))?;
    let mut o = Observation::new();
    o.insert("h0_general".into(), sg.h0().into());
    o.insert("h0_collinear".into(), sc.h0().into());
    o.insert("h0_on_circle".into(), so.h0().into());
    let (irr, bare) = reducibility(&[(&general, &sg), (&collinear, &sc), (&circle, &so)], seed)?;
    o.insert("irreducible_members".into(), irr.into());
    o.insert("members_without_11_component".into(), bare.into());
    Ok(o)
}

fn primo_observe(_: u32, _: usize, seed: u64) -> Observed {
    let f = BiForm::p(1).mul(&BiForm::l(1)).sub(&BiForm::p(2).mul(&BiForm::l(2)));
    let over = |w: GaussRat| {
        let q = ProjPoint::new([GaussRat::zero(), GaussRat::one(), w]).expect("nonzero");
        contains_conic(&f, &make_twistor_fiber(q))
    };
    let listed = [gauss(1, 1, 0, 1), gauss(-1, 1, 0, 1), gauss(0, 1, 1, 1), gauss(0, 1, -1, 1), gauss(3, 5, 4, 5)];
    let listed = listed.into_iter().filter(|w| over(w.clone())).count();
    let coordinate = (0..3)
        .flat_map(|i| [FiberCurve::pi1(ProjPoint::e(i)), FiberCurve::pi2(ProjPoint::e(i))])
        .filter(|c| contains_fiber(&f, c))
        .count();
    let mut rng = random::rng(seed);
    let q = circle_point(&mut rng);
    let w = q.coords()[2].clone();
    let off = w.clone() * gauss(rng.gen_range(2..=5), 1, 0, 1);
    let mut o = Observation::new();
    o.insert("listed_circle_fibers_contained".into(), listed.into());
    o.insert("coordinate_fibers_contained".into(), coordinate.into());
    o.insert("seeded_circle_fiber_contained".into(), over(w).into());
    o.insert("seeded_off_circle_fiber_contained".into(), over(off).into());
    Ok(o)
}

/// Incidence by linear algebra: `p` ranges over the kernel of `[m1; m2]`,
/// `l` over the kernel of `[q1; q2]`, and the conics meet iff `p . l`
/// vanishes somewhere on the product. That can only fail when both kernels
/// are lines.
fn meet_by_kernels(c1: &Conic, c2: &Conic) -> bool {
    let ker = |a: &ProjPoint, b: &ProjPoint| {
        Matrix::from_rows(3, vec![a.coords().to_vec(), b.coords().to_vec()]).nullspace()
    };
    let ps = ker(c1.m(), c2.m());
    let ls = ker(c1.q(), c2.q());
    if ps.len() > 1 || ls.len() > 1 {
        return true;
    }
    let dot: GaussRat = (0..3).map(|i| ps[0][i].clone() * ls[0][i].clone()).sum();
    dot.is_zero()
}

fn random_conic<R: Rng>(rng: &mut R) -> Conic {
    loop {
        if let Ok(c) = Conic::new(random::point(rng), random::point(rng)) {
            return c;
        }
    }
}

/// A conic through a random point of `c`: `q2 . l = 0` and `p . m2 = 0`.
fn conic_meeting<R: Rng>(rng: &mut R, c: &Conic) -> Option<Conic> {
    let s = random::gauss(rng);
    let (p, l) = c.param().at(&GaussRat::one(), &s);
    let q = ProjPoint::new(cross(&l, &random::vector(rng))).ok()?;
    let m = ProjPoint::new(cross(&p, &random::vector(rng))).ok()?;
    Conic::new(q, m).ok().filter(|d| d != c)
}

fn fiber_observe(_: u32, pairs: usize, seed: u64) -> Observed {
    let mut rng = random::rng(seed);
    let x = random::flag_point(&mut rng);
    let q = twistor_project(&x.p, &x.l)?;
    let fiber = make_twistor_fiber(q);
    let mut o = Observation::new();
    o.insert("x_on_fiber".into(), x.on_conic(&fiber).into());
    o.insert("jx_on_fiber".into(), x.j().on_conic(&fiber).into());
    let mut disagreements = 0i64;
    let mut meeting = 0i64;
    for k in 0..pairs {
        let c1 = random_conic(&mut rng);
        let c2 = if k % 2 == 1 {
            match conic_meeting(&mut rng, &c1) {
                Some(c) => c,
                None => random_conic(&mut rng),
            }
        } else {
            random_conic(&mut rng)
        };
        if c1 == c2 {
            continue;
        }
        let meet = meet_by_kernels(&c1, &c2);
        meeting += meet as i64;
        if are_disjoint(&c1, &c2)? == meet {
            disagreements += 1;
        }
    }
    o.insert("pairs_meeting".into(), meeting.into());
    o.insert("disjointness_disagreements".into(), disagreements.into());
    Ok(o)
}
