//! Seeded batch execution of a scenario and the report it produces.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use flagtwist_core::geometry::random::trial_seed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{HarnessError, Result};
use crate::expect::{evaluate, Check, Value};
use crate::scenarios::{find, Scenario, Skip};

pub const MAX_D: u32 = 4;
pub const MAX_N: usize = 8;
pub const MAX_TRIALS: u32 = 1000;
/// Draws per trial before it is recorded as hypothesis-not-met.
pub const MAX_ATTEMPTS: u32 = 8;

/// Requested parameters; unset values fall back to the scenario defaults.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Request {
    pub d: Option<u32>,
    pub n: Option<usize>,
    pub trials: u32,
    pub seed: u64,
}

/// Resolved parameters as recorded in the report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub d: u32,
    pub n: usize,
    pub trials: u32,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    HypothesisNotMet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub index: u32,
    /// Seed of the draw that produced the record.
    pub seed: u64,
    pub attempts: u32,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub checks: Vec<Check>,
    pub observed: BTreeMap<String, Value>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    /// No trial met the hypotheses.
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub pass: u32,
    pub fail: u32,
    pub hypothesis_not_met: u32,
}

/// Run-dependent data kept apart so the rest of the report is reproducible.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub wall_time_ms: u128,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub scenario: String,
    pub anchor: String,
    pub params: Params,
    pub trials: Vec<TrialRecord>,
    pub verdict: Verdict,
    pub envelope: Envelope,
}

pub fn resolve(s: &Scenario, req: &Request) -> Result<Params> {
    let bad = |m: String| Err(HarnessError::BadParams(format!("{}: {m}", s.name)));
    if req.trials == 0 || req.trials > MAX_TRIALS {
        return bad(format!("trials must be in 1..={MAX_TRIALS}, got {}", req.trials));
    }
    let d = match (s.fixed_d, req.d) {
        (Some(f), Some(d)) if d != f => return bad(format!("d is fixed at {f}, got {d}")),
        (Some(f), _) => f,
        (None, d) => d.unwrap_or(s.default_d),
    };
    if d > MAX_D {
        return bad(format!("d must be <= {MAX_D}, got {d}"));
    }
    let n = match (s.fixed_n, req.n) {
        (Some(f), Some(n)) if n != f(d) => return bad(format!("n is fixed at {} for d = {d}, got {n}", f(d))),
        (Some(f), _) => f(d),
        (None, n) => n.unwrap_or(s.default_n),
    };
    if n > MAX_N {
        return bad(format!("n must be <= {MAX_N}, got {n}"));
    }
    if let Err(m) = (s.check)(d, n) {
        return bad(format!("{m} (d = {d}, n = {n})"));
    }
    Ok(Params {
        d,
        n,
        trials: req.trials,
        seed: req.seed,
    })
}

pub fn run_scenario(name: &str, req: &Request) -> Result<Report> {
    let s = find(name).ok_or_else(|| HarnessError::UnknownScenario(name.to_string()))?;
    let params = resolve(s, req)?;
    let start = Instant::now();
    let trials: Vec<TrialRecord> = (0..params.trials)
        .into_par_iter()
        .map(|i| run_trial(s, &params, i))
        .collect();
    let count = |st: Status| trials.iter().filter(|t| t.status == st).count() as u32;
    let (pass, fail, skipped) = (count(Status::Pass), count(Status::Fail), count(Status::HypothesisNotMet));
    let outcome = if fail > 0 {
        Outcome::Fail
    } else if pass == 0 {
        Outcome::Inconclusive
    } else {
        Outcome::Pass
    };
    Ok(Report {
        scenario: s.name.to_string(),
        anchor: s.anchor.to_string(),
        params,
        trials,
        verdict: Verdict {
            outcome,
            pass,
            fail,
            hypothesis_not_met: skipped,
        },
        envelope: Envelope {
            wall_time_ms: start.elapsed().as_millis(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        },
    })
}

fn run_trial(s: &Scenario, p: &Params, index: u32) -> TrialRecord {
    let base = trial_seed(p.seed, index as u64);
    let expectations = (s.expect)(p.d, p.n);
    let mut last_reason = String::new();
    for attempt in 0..MAX_ATTEMPTS {
        let seed = if attempt == 0 { base } else { trial_seed(base, attempt as u64) };
        let record = |status, note, checks, observed| TrialRecord {
            index,
            seed,
            attempts: attempt + 1,
            status,
            note,
            checks,
            observed,
        };
        match (s.observe)(p.d, p.n, seed) {
            Ok(observed) => {
                let checks = evaluate(&expectations, &observed);
                let status = if checks.iter().all(|c| c.holds) {
                    Status::Pass
                } else {
                    Status::Fail
                };
                return record(status, None, checks, observed);
            }
            Err(Skip::Error(e)) => return record(Status::Fail, Some(e), Vec::new(), BTreeMap::new()),
            Err(Skip::Hypothesis(r)) => last_reason = r,
        }
    }
    TrialRecord {
        index,
        seed: base,
        attempts: MAX_ATTEMPTS,
        status: Status::HypothesisNotMet,
        note: Some(last_reason),
        checks: Vec::new(),
        observed: BTreeMap::new(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
            Format::Csv => self.to_csv(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// The report without its envelope; identical inputs give identical bytes.
    pub fn canonical_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().expect("object").remove("envelope");
        serde_json::to_string_pretty(&v).expect("value serializes") + "\n"
    }

    pub fn summary(&self) -> String {
        let v = &self.verdict;
        format!(
            "{} [d={} n={} trials={} seed={}]: {:?} (pass {}, fail {}, hypothesis not met {})",
            self.scenario,
            self.params.d,
            self.params.n,
            self.params.trials,
            self.params.seed,
            v.outcome,
            v.pass,
            v.fail,
            v.hypothesis_not_met
        )
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.summary()).unwrap();
        writeln!(out, "claim: {}", self.anchor).unwrap();
        let mut rows = vec![["trial", "status", "quantity", "rel", "expected", "actual"].map(String::from)];
        for t in &self.trials {
            let status = format!("{:?}", t.status);
            if t.checks.is_empty() {
                let note = t.note.clone().unwrap_or_default();
                rows.push([t.index.to_string(), status.clone(), note, String::new(), String::new(), String::new()]);
            }
            for c in &t.checks {
                rows.push([
                    t.index.to_string(),
                    status.clone(),
                    c.quantity.clone(),
                    c.relation.symbol().to_string(),
                    c.expected.to_string(),
                    c.actual.map_or("-".to_string(), |a| a.to_string()),
                ]);
            }
        }
        let widths: Vec<usize> = (0..6).map(|k| rows.iter().map(|r| r[k].len()).max().unwrap_or(0)).collect();
        for r in rows {
            let cells: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            writeln!(out, "{}", cells.join("  ").trim_end()).unwrap();
        }
        out
    }

    /// One row per check.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["scenario", "d", "n", "trial", "seed", "status", "quantity", "relation", "expected", "actual", "holds"])
            .unwrap();
        for t in &self.trials {
            let status = serde_json::to_value(t.status).unwrap().as_str().unwrap().to_string();
            for c in &t.checks {
                w.write_record([
                    self.scenario.clone(),
                    self.params.d.to_string(),
                    self.params.n.to_string(),
                    t.index.to_string(),
                    t.seed.to_string(),
                    status.clone(),
                    c.quantity.clone(),
                    c.relation.symbol().to_string(),
                    c.expected.to_string(),
                    c.actual.map_or(String::new(), |a| a.to_string()),
                    c.holds.to_string(),
                ])
                .unwrap();
            }
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }
}
