//! Suite orchestration: runs the verification suites over one shared set
//! of catalogued objects, assembles the structured report, and serves the
//! dump interface for exact objects.

mod suites;

use crate::cyclo::{constants, Embedder};
use crate::invariants::forms;
use crate::matrep::catalog::Catalog;
use crate::par::{self, Mode};
use crate::permgroup::catalog::PermCatalog;
use crate::report::{RunConfig, Status, Suite, SuiteReport, VerificationReport};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HarnessError {
    EmptySuiteList,
    UnknownName(String),
    Io(String),
}

impl fmt::Display for HarnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HarnessError::EmptySuiteList => write!(f, "no suites selected"),
            HarnessError::UnknownName(s) => write!(f, "unknown object name: {s}"),
            HarnessError::Io(s) => write!(f, "io error: {s}"),
        }
    }
}

impl std::error::Error for HarnessError {}

/// Shared context for all suites: every catalogued object is built once.
pub struct Harness {
    pub cat: Catalog,
    pub perm: PermCatalog,
    pub embedder: Embedder,
    pub seed: u64,
    pub skip_heavy: bool,
    pub mode: Mode,
}

impl Harness {
    pub fn new(config: &RunConfig) -> Harness {
        Harness {
            cat: Catalog::new(),
            perm: PermCatalog::new().expect("printed permutation data parses"),
            embedder: Embedder::new(config.precision),
            seed: config.seed,
            skip_heavy: config.skip_heavy,
            mode: Mode::auto(),
        }
    }
}

/// Execute the configured suites. Suites run concurrently; the report
/// order is the canonical suite order with checks sorted by id, so the
/// result is schedule-independent.
pub fn run(config: &RunConfig) -> Result<VerificationReport, HarnessError> {
    if config.suites.is_empty() {
        return Err(HarnessError::EmptySuiteList);
    }
    let mut selected: Vec<Suite> = Suite::all()
        .into_iter()
        .filter(|s| config.suites.contains(s))
        .collect();
    selected.dedup();
    let h = Harness::new(config);
    let suite_reports = par::map_vec(h.mode, &selected, |s| run_suite(&h, *s));
    let mut report = VerificationReport { suites: suite_reports };
    report.normalize();
    debug_assert!(report.ids_unique(), "check ids must be unique");
    Ok(report)
}

fn run_suite(h: &Harness, suite: Suite) -> SuiteReport {
    match suite {
        Suite::Cyclo => suites::cyclo(h),
        Suite::Group => suites::group(h),
        Suite::Perm => suites::perm(h),
        Suite::Quaternion => suites::quaternion(h),
        Suite::Forms => suites::forms_suite(h),
        Suite::Duality => suites::duality(h),
        Suite::Rep14 => suites::rep14(h),
        Suite::ModularEq => suites::modular_eq(h),
        Suite::Haagerup => suites::haagerup(h),
        Suite::Macwilliams => suites::macwilliams(h),
    }
}

/// Serialization formats for a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmitFormat {
    Text,
    Structured,
}

pub fn emit(report: &VerificationReport, format: EmitFormat) -> String {
    match format {
        EmitFormat::Text => report.to_text(),
        EmitFormat::Structured => report.to_json(true),
    }
}

/// Exit status the report maps to: 0 on success, 1 when any check failed.
pub fn exit_code(report: &VerificationReport) -> i32 {
    if report.has_failures() {
        1
    } else {
        0
    }
}

/// Bit-exact text serialization of a catalogued object: a matrix (header
/// line with the dimension, one line per row, entries `|`-separated in the
/// scalar text format), a form (one term per line), or a named constant.
pub fn dump(name: &str) -> Result<String, HarnessError> {
    let cat = Catalog::new();
    if let Ok(m) = cat.lookup(name) {
        let mut out = format!("{}\n", m.dim());
        for i in 0..m.dim() {
            let row: Vec<String> = (0..m.dim()).map(|j| m.get(i, j).to_text()).collect();
            out.push_str(&row.join(" | "));
            out.push('\n');
        }
        return Ok(out);
    }
    if let Some(f) = forms::form_by_name(name) {
        return Ok(f.to_dump());
    }
    if let Ok(c) = constants::constant(name) {
        return Ok(format!("{}\n", c.value.to_text()));
    }
    Err(HarnessError::UnknownName(name.into()))
}

/// All names the dump interface accepts.
pub fn dump_names() -> Vec<String> {
    let mut names: Vec<String> = Catalog::names().into_iter().map(String::from).collect();
    names.extend(forms::form_names());
    names.extend(constants::catalogued_names());
    names
}

/// Map a check outcome to the process-level notion of success.
pub fn status_is_ok(status: Status) -> bool {
    status != Status::Fail
}

#[cfg(test)]
mod tests;
