use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use flagtwist::commands::{self, parse_bidegree, Check};
use flagtwist::{registry, run_scenario, Format, Outcome, Request};
use flagtwist_core::geometry::Mode;

#[derive(Parser)]
#[command(name = "flagtwist", version, about = "Exact linear systems of surfaces in the flag threefold")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Draw a seeded configuration of disjoint conics and write it as JSON.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "general")]
        mode: Mode,
        /// Draw twistor fibers instead of arbitrary conics.
        #[arg(long)]
        twistor: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the classification flags of a configuration file.
    Classify {
        #[arg(long)]
        config: PathBuf,
    },
    /// h0, h1 and chi of the ideal sheaf twisted by a bidegree.
    Dim {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_parser = parse_bidegree)]
        bidegree: (u32, u32),
    },
    /// A seeded member of the linear system, with optional checks.
    Member {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_parser = parse_bidegree)]
        bidegree: (u32, u32),
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, value_delimiter = ',')]
        check: Vec<Check>,
    },
    /// Run a registered scenario and write its report.
    Verify {
        #[arg(long, required_unless_present = "list")]
        scenario: Option<String>,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 20)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// List the registry and exit.
        #[arg(long)]
        list: bool,
    },
}

fn run(cli: Cli) -> flagtwist::Result<ExitCode> {
    match cli.cmd {
        Cmd::Gen { n, mode, twistor, seed, out } => {
            let a = commands::gen(n, mode, twistor, seed, &out)?;
            println!("wrote {} conics to {}", a.len(), out.display());
            print!("{}", commands::classify(&a));
        }
        Cmd::Classify { config } => print!("{}", commands::classify(&commands::load(&config)?)),
        Cmd::Dim { config, bidegree } => print!("{}", commands::dim(&commands::load(&config)?, bidegree)?),
        Cmd::Member { config, bidegree, seed, check } => {
            print!("{}", commands::member(&commands::load(&config)?, bidegree, seed, &check)?)
        }
        Cmd::Verify { list: true, .. } => {
            for s in registry() {
                println!("{:<18} {}", s.name, s.anchor);
            }
        }
        Cmd::Verify { scenario, d, n, trials, seed, out, format, .. } => {
            let name = scenario.expect("required unless --list");
            let report = run_scenario(&name, &Request { d, n, trials, seed })?;
            let text = report.render(format);
            match out {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|source| flagtwist::HarnessError::Io {
                        path: path.display().to_string(),
                        source,
                    })?;
                    println!("{}", report.summary());
                }
                None => print!("{text}"),
            }
            if report.verdict.outcome == Outcome::Fail {
                return Ok(ExitCode::from(2));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
