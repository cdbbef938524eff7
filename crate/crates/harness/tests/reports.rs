use std::collections::HashSet;

use flagtwist::commands::{gen, load};
use flagtwist::{registry, run_scenario, Outcome, Request};
use flagtwist_core::geometry::Mode;

#[test]
fn registry_is_well_formed() {
    let r = registry();
    assert!(r.len() >= 16);
    let names: HashSet<_> = r.iter().map(|s| s.name).collect();
    let anchors: HashSet<_> = r.iter().map(|s| s.anchor).collect();
    assert_eq!(names.len(), r.len());
    assert_eq!(anchors.len(), r.len());
    for s in r {
        let d = s.fixed_d.unwrap_or(s.default_d);
        let n = s.fixed_n.map_or(s.default_n, |f| f(d));
        assert!((s.check)(d, n).is_ok(), "{} rejects its own defaults", s.name);
        assert!(!(s.expect)(d, n).is_empty(), "{} expects nothing", s.name);
    }
}

#[test]
fn reports_are_deterministic() {
    for name in ["c02", "cor1", "remmmm", "fiber-consistency"] {
        let req = Request { d: None, n: None, trials: 4, seed: 42 };
        let a = run_scenario(name, &req).unwrap();
        let b = run_scenario(name, &req).unwrap();
        assert_eq!(a.canonical_json(), b.canonical_json(), "{name}");
        assert_eq!(a.to_csv(), b.to_csv());
        assert_ne!(a.verdict.outcome, Outcome::Fail, "{}", a.to_text());
        let other = run_scenario(name, &Request { seed: 43, ..req }).unwrap();
        assert_ne!(a.canonical_json(), other.canonical_json(), "{name}: seed ignored");
    }
}

#[test]
fn report_json_round_trips() {
    let r = run_scenario("ee1", &Request { d: None, n: None, trials: 2, seed: 5 }).unwrap();
    let back: flagtwist::Report = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back, r);
}

#[test]
fn config_round_trip() {
    let dir = std::env::temp_dir().join(format!("flagtwist-reports-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (k, (mode, twistor)) in [(Mode::General, true), (Mode::Collinear, true), (Mode::General, false)].into_iter().enumerate() {
        let path = dir.join(format!("c{k}.json"));
        let a = gen(4, mode, twistor, 11 + k as u64, &path).unwrap();
        let b = load(&path).unwrap();
        assert_eq!(a.conics(), b.conics());
        assert_eq!((a.in_t_star(), a.in_t_minus()), (b.in_t_star(), b.in_t_minus()));
    }
}
