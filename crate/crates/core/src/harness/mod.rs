//! Verification suites and the operations behind the `gcrystal` binary.

mod act;
mod checks;
mod graph;
pub mod trop;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::charts::ChartError;
use crate::gyt::GytError;
use crate::ratfun::RatFunError;
use crate::slgroup::SlGroupError;
use crate::ud::UdError;

pub use act::{cmd_act, ActKind, ActOutcome};
pub use checks::run_suite;
pub use graph::{cmd_graph, Direction, GraphArc, GraphJson, GraphSlice};

pub const DEFAULT_SEED: u64 = 20_240_531;
pub const DEFAULT_MAX_RADIUS: usize = 4;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("suite {suite} is capped at n = {cap}, got n = {n}")]
    AboveCap { suite: Suite, n: usize, cap: usize },
    #[error("radius {radius} exceeds the cap {cap}")]
    RadiusAboveCap { radius: usize, cap: usize },
    #[error("{0}")]
    BadArgs(String),
    #[error("param {0:?} must be a nonzero rational constant")]
    BadParam(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    RatFun(#[from] RatFunError),
    #[error(transparent)]
    Group(#[from] SlGroupError),
    #[error(transparent)]
    Chart(#[from] ChartError),
    #[error(transparent)]
    Gyt(#[from] GytError),
    #[error(transparent)]
    Ud(#[from] UdError),
}

/// Outcome of one named check at one rank.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub check: String,
    pub n: usize,
    pub holds: bool,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<String>,
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.holds { "ok  " } else { "FAIL" };
        write!(f, "{status} {} (n={}, {:.1} ms)", self.check, self.n, self.elapsed_ms)?;
        if let Some(c) = &self.counterexample {
            write!(f, "\n     counterexample: {c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Verma,
    Axioms,
    Umorphism,
    FiMi,
    Prop43,
    Positivity,
    SharpAxioms,
    UdMain,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Verma,
        Suite::Axioms,
        Suite::Umorphism,
        Suite::FiMi,
        Suite::Prop43,
        Suite::Positivity,
        Suite::SharpAxioms,
        Suite::UdMain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Verma => "verma",
            Suite::Axioms => "axioms",
            Suite::Umorphism => "umorphism",
            Suite::FiMi => "fi-mi",
            Suite::Prop43 => "prop43",
            Suite::Positivity => "positivity",
            Suite::SharpAxioms => "sharp-axioms",
            Suite::UdMain => "ud-main",
            Suite::All => "all",
        }
    }

    /// Largest rank run by default.
    pub fn cap(self) -> usize {
        match self {
            Suite::Verma | Suite::Prop43 => 3,
            _ => 5,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Suite, HarnessError> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| HarnessError::UnknownSuite(s.to_string()))
    }
}

/// Settings shared by all suites.
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Replaces the per-suite rank caps when set.
    pub cap: Option<usize>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: DEFAULT_SEED,
            cap: None,
        }
    }
}
