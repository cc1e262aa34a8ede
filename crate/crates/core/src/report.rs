//! Structured verification reports: per-check records with a stable
//! machine-readable serialization, a human-readable table format, and the
//! run configuration that fully determines a report.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// The derived identity holds.
    Pass,
    /// A derived identity is broken (build-failing).
    Fail,
    /// A printed claim disagrees with the derivation; the difference is
    /// recorded and the derivation stands as ground truth.
    DiscrepancyDocumented,
    /// Explicitly skipped by configuration.
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::DiscrepancyDocumented => "documented",
            Status::Skipped => "skipped",
        };
        write!(f, "{s}")
    }
}

/// One verified statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    /// Unique, stable identifier (`suite.NN-slug`).
    pub id: String,
    /// The mathematical statement under test, self-contained.
    pub claim: String,
    pub status: Status,
    /// Counterexample, entry diff, or recorded value for non-pass checks
    /// (and for documented constants).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    /// Wall-clock time of the computation group that produced this check,
    /// in microseconds. Checks derived from one batched computation share
    /// the group measurement.
    pub elapsed_us: u64,
}

/// All checks of one suite, ordered by check id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

/// A full verification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suites: Vec<SuiteReport>,
}

impl VerificationReport {
    pub fn checks(&self) -> impl Iterator<Item = &Check> {
        self.suites.iter().flat_map(|s| s.checks.iter())
    }

    pub fn total(&self) -> usize {
        self.checks().count()
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks().filter(|c| c.status == status).count()
    }

    pub fn has_failures(&self) -> bool {
        self.count(Status::Fail) > 0
    }

    /// Every check id must be unique across the report.
    pub fn ids_unique(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.checks().all(|c| seen.insert(&c.id))
    }

    /// Canonical ordering: suites in declared order, checks by id.
    pub fn normalize(&mut self) {
        for s in &mut self.suites {
            s.checks.sort_by(|a, b| a.id.cmp(&b.id));
        }
    }

    /// Stable machine-readable serialization. With `include_timing` off,
    /// elapsed fields are zeroed, so two runs with the same configuration
    /// produce byte-identical output.
    pub fn to_json(&self, include_timing: bool) -> String {
        let mut copy = self.clone();
        copy.normalize();
        if !include_timing {
            for s in &mut copy.suites {
                for c in &mut s.checks {
                    c.elapsed_us = 0;
                }
            }
        }
        serde_json::to_string_pretty(&copy).expect("report serialization")
    }

    pub fn from_json(s: &str) -> Result<VerificationReport, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// Human-readable table: status, id, claim, and the witness for every
    /// check that is not a plain pass.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for suite in &self.suites {
            out.push_str(&format!("suite {}\n", suite.suite));
            for c in &suite.checks {
                out.push_str(&format!("  [{:>10}] {:<34} {}\n", c.status.to_string(), c.id, c.claim));
                if c.status != Status::Pass {
                    if let Some(w) = &c.witness {
                        out.push_str(&format!("               ↳ {w}\n"));
                    }
                }
            }
        }
        out.push_str(&format!(
            "total: {} checks — {} pass, {} documented, {} skipped, {} FAIL\n",
            self.total(),
            self.count(Status::Pass),
            self.count(Status::DiscrepancyDocumented),
            self.count(Status::Skipped),
            self.count(Status::Fail),
        ));
        out
    }
}

/// The verification suites, in canonical execution order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Cyclo,
    Group,
    Perm,
    Quaternion,
    Forms,
    Duality,
    Rep14,
    ModularEq,
    Haagerup,
    Macwilliams,
}

impl Suite {
    pub fn all() -> Vec<Suite> {
        vec![
            Suite::Cyclo,
            Suite::Group,
            Suite::Perm,
            Suite::Quaternion,
            Suite::Forms,
            Suite::Duality,
            Suite::Rep14,
            Suite::ModularEq,
            Suite::Haagerup,
            Suite::Macwilliams,
        ]
    }

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Cyclo => "cyclo",
            Suite::Group => "group",
            Suite::Perm => "perm",
            Suite::Quaternion => "quaternion",
            Suite::Forms => "forms",
            Suite::Duality => "duality",
            Suite::Rep14 => "rep14",
            Suite::ModularEq => "modular-eq",
            Suite::Haagerup => "haagerup",
            Suite::Macwilliams => "macwilliams",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::all().into_iter().find(|x| x.name() == s)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Run configuration; a fixed configuration fully determines the report
/// (timing aside).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub suites: Vec<Suite>,
    pub seed: u64,
    /// Decimal digits for the numeric embedding.
    pub precision: u32,
    /// Skip the group-closure enumeration and the degree-12 expansions.
    pub skip_heavy: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { suites: Suite::all(), seed: 0, precision: 60, skip_heavy: false }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        VerificationReport {
            suites: vec![SuiteReport {
                suite: "cyclo".into(),
                checks: vec![
                    Check {
                        id: "cyclo.01-x".into(),
                        claim: "x".into(),
                        status: Status::Pass,
                        witness: None,
                        elapsed_us: 123,
                    },
                    Check {
                        id: "cyclo.02-y".into(),
                        claim: "y".into(),
                        status: Status::DiscrepancyDocumented,
                        witness: Some("diff".into()),
                        elapsed_us: 4,
                    },
                ],
            }],
        }
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let parsed = VerificationReport::from_json(&r.to_json(true)).unwrap();
        assert_eq!(parsed, r);
    }

    #[test]
    fn empty_report_is_schema_valid() {
        let r = VerificationReport { suites: vec![] };
        let parsed = VerificationReport::from_json(&r.to_json(true)).unwrap();
        assert_eq!(parsed.total(), 0);
        assert!(!parsed.has_failures());
    }

    #[test]
    fn timing_exclusion_is_byte_stable() {
        let mut a = sample();
        let mut b = sample();
        b.suites[0].checks[0].elapsed_us = 999_999;
        assert_ne!(a.to_json(true), b.to_json(true));
        assert_eq!(a.to_json(false), b.to_json(false));
        a.normalize();
        assert!(a.ids_unique());
    }

    #[test]
    fn text_table_shows_witness_for_non_pass() {
        let r = sample();
        let t = r.to_text();
        assert!(t.contains("documented"));
        assert!(t.contains("↳ diff"));
        assert!(t.contains("total: 2 checks"));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::all() {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
        assert_eq!(Suite::from_name("bogus"), None);
    }
}
