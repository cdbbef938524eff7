//! The non-verify subcommands, returning their printed output.

use std::fmt::Write as _;
use std::path::Path;

use flagtwist_core::bipoly::display_form;
use flagtwist_core::geometry::{random_config, ConfigFile, Configuration, Mode};
use flagtwist_core::systems::{
    analyze_surface, contains_conic, ideal_dims, random_member, system_basis,
};

use crate::error::{HarnessError, Result};

/// Samples used by `member --check singular`.
pub const SINGULAR_SAMPLES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Check {
    Irreducible,
    Singular,
    Contains,
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> HarnessError + '_ {
    move |source| HarnessError::Io {
        path: path.display().to_string(),
        source,
    }
}

pub fn gen(n: usize, mode: Mode, twistor: bool, seed: u64, out: &Path) -> Result<Configuration> {
    let a = random_config(n, mode, twistor, seed)?;
    let json = serde_json::to_string_pretty(&a.to_file()).expect("config serializes") + "\n";
    std::fs::write(out, json).map_err(io_err(out))?;
    Ok(a)
}

pub fn load(path: &Path) -> Result<Configuration> {
    let text = std::fs::read_to_string(path).map_err(io_err(path))?;
    let parse = |msg: String| HarnessError::Parse {
        path: path.display().to_string(),
        msg,
    };
    let file: ConfigFile = serde_json::from_str(&text).map_err(|e| parse(e.to_string()))?;
    file.to_configuration().map_err(parse)
}

pub fn classify(a: &Configuration) -> String {
    let mut out = String::new();
    writeln!(out, "conics: {}", a.len()).unwrap();
    writeln!(out, "pairwise_disjoint: {}", a.pairwise_disjoint).unwrap();
    writeln!(out, "all_twistor: {}", a.all_twistor).unwrap();
    writeln!(out, "C*: {}", a.in_c_star).unwrap();
    writeln!(out, "T: {}", a.in_t()).unwrap();
    writeln!(out, "T*: {}", a.in_t_star()).unwrap();
    writeln!(out, "T-: {}", a.in_t_minus()).unwrap();
    match &a.collinear_witness {
        Some(w) => writeln!(out, "collinear_witness: {}", w.base).unwrap(),
        None => writeln!(out, "collinear_witness: none").unwrap(),
    }
    out
}

pub fn dim(a: &Configuration, bidegree: (u32, u32)) -> Result<String> {
    let d = ideal_dims(a, bidegree)?;
    Ok(format!(
        "bidegree: ({},{})\nh0: {}\nh1: {}\nchi: {}\n",
        bidegree.0, bidegree.1, d.h0, d.h1, d.chi
    ))
}

pub fn member(a: &Configuration, bidegree: (u32, u32), seed: u64, checks: &[Check]) -> Result<String> {
    let basis = system_basis(a, bidegree)?;
    let f = random_member(&basis, seed)?;
    let mut out = String::new();
    writeln!(out, "member: {}", display_form(&f)).unwrap();
    for c in checks {
        match c {
            Check::Contains => {
                let all = a.conics().iter().all(|c| contains_conic(&f, c));
                writeln!(out, "contains_all_conics: {all}").unwrap();
            }
            Check::Irreducible | Check::Singular if bidegree.0 != 1 => {
                writeln!(out, "{c:?}: n/a (needs first degree 1)").unwrap();
            }
            Check::Irreducible => {
                let an = analyze_surface(&f, 0, seed)?;
                writeln!(out, "irreducible: {}", an.irreducible).unwrap();
                writeln!(out, "vertical_divisor_degree: {}", an.vertical_divisor.degree()).unwrap();
            }
            Check::Singular => {
                let an = analyze_surface(&f, SINGULAR_SAMPLES, seed)?;
                writeln!(
                    out,
                    "sampled_singular_points: {} of {} (sampled, not a proof)",
                    an.singular_points_found.len(),
                    an.samples_checked
                )
                .unwrap();
                for x in &an.singular_points_found {
                    writeln!(out, "  singular at p={} l={}", x.p, x.l).unwrap();
                }
            }
        }
    }
    Ok(out)
}

pub fn parse_bidegree(s: &str) -> std::result::Result<(u32, u32), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected a,b, got {s:?}"))?;
    let p = |x: &str| x.trim().parse::<u32>().map_err(|e| format!("{x:?}: {e}"));
    Ok((p(a)?, p(b)?))
}
