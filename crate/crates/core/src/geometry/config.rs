use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::conic::{are_disjoint, make_twistor_fiber, Conic, FiberCurve};
use super::{det3, parse_point, random, PointRepr, ProjPoint};
use crate::{Error, Result};

const MAX_ATTEMPTS: usize = 1000;

/// A finite list of conics with its classification flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    conics: Vec<Conic>,
    pub pairwise_disjoint: bool,
    pub all_twistor: bool,
    /// Disjoint and no three members met by a common (1,0) curve.
    pub in_c_star: bool,
    /// A (1,0) curve meeting every member, when one exists and `n >= 2`.
    pub collinear_witness: Option<FiberCurve>,
}

impl Configuration {
    pub fn empty() -> Self {
        Configuration {
            conics: Vec::new(),
            pairwise_disjoint: true,
            all_twistor: true,
            in_c_star: true,
            collinear_witness: None,
        }
    }

    pub fn conics(&self) -> &[Conic] {
        &self.conics
    }

    pub fn len(&self) -> usize {
        self.conics.len()
    }

    pub fn is_empty(&self) -> bool {
        self.conics.is_empty()
    }

    /// `T(n)`: disjoint twistor fibers.
    pub fn in_t(&self) -> bool {
        self.pairwise_disjoint && self.all_twistor
    }

    /// `T*(n)`.
    pub fn in_t_star(&self) -> bool {
        self.in_t() && self.in_c_star
    }

    /// `T(n)-`: disjoint twistor fibers all meeting one (1,0) curve.
    pub fn in_t_minus(&self) -> bool {
        self.in_t() && self.collinear_witness.is_some()
    }

    /// The configuration with member `i` removed.
    pub fn without(&self, i: usize) -> Configuration {
        let mut rest = self.conics.clone();
        rest.remove(i);
        if rest.is_empty() {
            return Configuration::empty();
        }
        classify_config(rest).expect("a subset of distinct conics stays distinct")
    }

    /// The configuration with `c` appended.
    pub fn with(&self, c: Conic) -> Result<Configuration> {
        let mut all = self.conics.clone();
        all.push(c);
        classify_config(all)
    }

    pub fn to_file(&self) -> ConfigFile {
        ConfigFile {
            conics: self
                .conics
                .iter()
                .map(|c| ConicRepr {
                    q: c.q().into(),
                    m: (!c.is_twistor()).then(|| c.m().into()),
                })
                .collect(),
        }
    }
}

pub fn classify_config(conics: Vec<Conic>) -> Result<Configuration> {
    if conics.is_empty() {
        return Err(Error::EmptyConfiguration);
    }
    let n = conics.len();
    let mut pairwise_disjoint = true;
    for i in 0..n {
        for j in i + 1..n {
            if !are_disjoint(&conics[i], &conics[j])? {
                pairwise_disjoint = false;
            }
        }
    }
    let all_twistor = conics.iter().all(Conic::is_twistor);
    let mut no_collinear_triple = true;
    'outer: for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if det3(conics[i].q().coords(), conics[j].q().coords(), conics[k].q().coords())
                    .is_zero()
                {
                    no_collinear_triple = false;
                    break 'outer;
                }
            }
        }
    }
    let collinear_witness = witness(&conics);
    Ok(Configuration {
        conics,
        pairwise_disjoint,
        all_twistor,
        in_c_star: pairwise_disjoint && no_collinear_triple,
        collinear_witness,
    })
}

fn witness(conics: &[Conic]) -> Option<FiberCurve> {
    if conics.len() < 2 {
        return None;
    }
    let q0 = conics[0].q();
    let base = conics[1..].iter().find_map(|c| q0.cross(c.q()))?;
    let fiber = FiberCurve::pi2(base);
    conics.iter().all(|c| fiber.meets(c)).then_some(fiber)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Disjoint, no three collinear.
    General,
    /// Disjoint, all `q`'s on one random line.
    Collinear,
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "general" => Ok(Mode::General),
            "collinear" => Ok(Mode::Collinear),
            _ => Err(format!("unknown mode {s:?} (expected general|collinear)")),
        }
    }
}

/// Seeded rejection sampler. Conics are added one at a time; a candidate is
/// redrawn whenever it breaks disjointness (or, in general mode, creates a
/// collinear triple).
pub fn random_config(n: usize, mode: Mode, twistor: bool, seed: u64) -> Result<Configuration> {
    let mut rng = random::rng(seed);
    let line = random::point(&mut rng);
    let mut conics: Vec<Conic> = Vec::with_capacity(n);
    let mut attempts = 0;
    while conics.len() < n {
        attempts += 1;
        if attempts > MAX_ATTEMPTS {
            return Err(Error::ExhaustedRetries(MAX_ATTEMPTS));
        }
        let q = match mode {
            Mode::General => random::point(&mut rng),
            Mode::Collinear => random::point_on_line(&mut rng, &line),
        };
        let candidate = if twistor {
            make_twistor_fiber(q)
        } else {
            match Conic::new(q, random::point(&mut rng)) {
                Ok(c) => c,
                Err(_) => continue,
            }
        };
        if conics.iter().any(|c| c.q() == candidate.q()) {
            continue;
        }
        if !conics
            .iter()
            .all(|c| are_disjoint(c, &candidate).unwrap_or(false))
        {
            continue;
        }
        if mode == Mode::General && creates_collinear_triple(&conics, &candidate) {
            continue;
        }
        conics.push(candidate);
    }
    if n == 0 {
        return Ok(Configuration::empty());
    }
    classify_config(conics)
}

fn creates_collinear_triple(conics: &[Conic], c: &Conic) -> bool {
    (0..conics.len()).any(|i| {
        (i + 1..conics.len()).any(|j| {
            det3(conics[i].q().coords(), conics[j].q().coords(), c.q().coords()).is_zero()
        })
    })
}

/// One conic on disk; `m` may be omitted for twistor fibers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConicRepr {
    pub q: PointRepr,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<PointRepr>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigFile {
    pub conics: Vec<ConicRepr>,
}

impl ConfigFile {
    /// Canonicalizes and classifies; errors name the offending field.
    pub fn to_configuration(&self) -> std::result::Result<Configuration, String> {
        let mut conics = Vec::with_capacity(self.conics.len());
        for (i, c) in self.conics.iter().enumerate() {
            let q = parse_point(&c.q).map_err(|e| format!("conics[{i}].q: {e}"))?;
            let conic = match &c.m {
                None => make_twistor_fiber(q),
                Some(m) => {
                    let m: ProjPoint = parse_point(m).map_err(|e| format!("conics[{i}].m: {e}"))?;
                    Conic::new(q, m).map_err(|e| format!("conics[{i}]: {e}"))?
                }
            };
            conics.push(conic);
        }
        classify_config(conics).map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::gi;

    fn tw(c: [(i64, i64); 3]) -> Conic {
        make_twistor_fiber(ProjPoint::new(c.map(|(a, b)| gi(a, b))).unwrap())
    }

    #[test]
    fn coordinate_triple_is_t_star() {
        let a = classify_config(vec![
            tw([(1, 0), (0, 0), (0, 0)]),
            tw([(0, 0), (1, 0), (0, 0)]),
            tw([(0, 0), (0, 0), (1, 0)]),
        ])
        .unwrap();
        assert!(a.in_t_star());
        assert!(a.collinear_witness.is_none());
    }

    #[test]
    fn collinear_triple_has_witness() {
        let a = classify_config(vec![
            tw([(1, 0), (0, 0), (0, 0)]),
            tw([(0, 0), (1, 0), (0, 0)]),
            tw([(1, 0), (1, 0), (0, 0)]),
        ])
        .unwrap();
        assert!(a.in_t());
        assert!(!a.in_c_star);
        assert_eq!(a.collinear_witness.unwrap().base, ProjPoint::e(2));
    }

    #[test]
    fn empty_list_rejected() {
        assert_eq!(classify_config(vec![]), Err(Error::EmptyConfiguration));
    }

    #[test]
    fn random_modes() {
        for seed in 0..5 {
            let a = random_config(3, Mode::General, true, seed).unwrap();
            assert!(a.in_t_star());
            let b = random_config(4, Mode::Collinear, true, seed).unwrap();
            assert!(b.in_t_minus());
            let c = random_config(3, Mode::General, false, seed).unwrap();
            assert!(c.in_c_star && !c.all_twistor);
        }
    }

    #[test]
    fn file_round_trip() {
        let a = random_config(3, Mode::General, false, 11).unwrap();
        let b = random_config(2, Mode::General, true, 12).unwrap();
        for cfg in [a, b] {
            let back = cfg.to_file().to_configuration().unwrap();
            assert_eq!(back, cfg);
        }
    }
}
