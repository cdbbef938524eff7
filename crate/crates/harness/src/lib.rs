//! Scenario registry, seeded batch runner and report formats behind the
//! `flagtwist` command line.

pub mod commands;
pub mod error;
pub mod expect;
pub mod runner;
pub mod scenarios;

pub use error::{HarnessError, Result};
pub use expect::{Check, Expectation, Relation, Value};
pub use runner::{run_scenario, Format, Outcome, Params, Report, Request, Status};
pub use scenarios::{find, registry, Scenario};
