//! Check reports: the one result shape every law and counterexample search
//! produces.
//!
//! Reports serialize to JSON for machine consumption. `elapsed` is
//! deliberately skipped there: serialized reports must be byte-identical
//! across runs with the same seed, and wall-clock time is not. The text
//! renderer includes it.

use serde::Serialize;
use std::time::Duration;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    /// The property held on every case.
    Pass,
    /// The property failed (or an expected witness never materialized).
    Fail,
    /// The property is expected to fail and a witness confirmed it.
    ExpectedFailConfirmed,
}

/// Outcome of running one law over its corpus.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub law_id: String,
    pub status: CheckStatus,
    pub cases_run: u64,
    /// First failing inputs in the external text format, if any. Witnesses
    /// replay: parsing them back and re-running the operation reproduces the
    /// failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Wall-clock time; excluded from JSON so reports stay deterministic.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.status != CheckStatus::Fail
    }

    /// Single text line: status, id, case count, witness if any, timing.
    pub fn text_line(&self) -> String {
        let status = match self.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::ExpectedFailConfirmed => "XFAIL",
        };
        let mut line = format!(
            "{status:5} {:<28} cases={:<8} {:>9.1?}",
            self.law_id, self.cases_run, self.elapsed
        );
        if let Some(w) = &self.witness {
            line.push_str("  witness: ");
            line.push_str(w);
        }
        line
    }
}
