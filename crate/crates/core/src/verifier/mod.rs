//! Check harness: runs every suite at a configurable cutoff and reports each
//! check as pass, fail or skipped.
//!
//! Reports are sorted by suite name and then check name. The records format
//! is one line per check with four tab-separated fields:
//!
//! ```text
//! suite <TAB> check <TAB> pass|fail|skipped <TAB> witness
//! ```
//!
//! The witness is `-` when absent; tabs, newlines and backslashes inside it
//! are escaped as `\t`, `\n` and `\\`.

pub mod dump;
pub mod oracle;
mod suites;

pub use suites::{BICOVARIANCE_SAMPLES, RANDOM_TRIPLES};

use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Algebra,
    Calculus,
    Cg,
    ClassicalLimit,
    Leibniz,
    Qlie,
    Rmatrix,
    Rtt,
    Sudbery,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Algebra,
        Suite::Calculus,
        Suite::Cg,
        Suite::ClassicalLimit,
        Suite::Leibniz,
        Suite::Qlie,
        Suite::Rmatrix,
        Suite::Rtt,
        Suite::Sudbery,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Calculus => "calculus",
            Suite::Cg => "cg",
            Suite::ClassicalLimit => "classical-limit",
            Suite::Leibniz => "leibniz",
            Suite::Qlie => "qlie",
            Suite::Rmatrix => "rmatrix",
            Suite::Rtt => "rtt",
            Suite::Sudbery => "sudbery",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown suite `{s}`")))
    }
}

/// Parses a comma-separated suite list.
pub fn parse_suites(list: &str) -> Result<BTreeSet<Suite>> {
    let out: BTreeSet<Suite> = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(Suite::from_str)
        .collect::<Result<_>>()?;
    if out.is_empty() {
        return Err(Error::Usage("empty suite list".into()));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Records,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "records" => Ok(Format::Records),
            other => Err(Error::Usage(format!("unknown format `{other}`"))),
        }
    }
}

pub const DEFAULT_SEED: u64 = 17;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_two_j: u32,
    pub suites: BTreeSet<Suite>,
    pub seed: u64,
    pub format: Format,
    pub golden_dir: PathBuf,
    pub regen_golden: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max_two_j: 4,
            suites: Suite::ALL.into_iter().collect(),
            seed: DEFAULT_SEED,
            format: Format::Text,
            golden_dir: default_golden_dir(),
            regen_golden: false,
        }
    }
}

/// `golden/` next to this crate's manifest.
pub fn default_golden_dir() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/golden"))
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_two_j < 2 {
            return Err(Error::Usage(format!(
                "--max-two-j must be at least 2 (the adjoint), got {}",
                self.max_two_j
            )));
        }
        if self.suites.is_empty() {
            return Err(Error::Usage("no suites selected".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub suite: Suite,
    pub check: String,
    pub status: Status,
    /// Counterexample on failure, reason when skipped, optional detail on pass.
    pub witness: Option<String>,
    pub elapsed: Duration,
}

/// Outcome of one check body: `Ok(detail)` passes, `Err(witness)` fails.
pub(crate) type Verdict = std::result::Result<Option<String>, String>;

pub(crate) fn ensure(cond: bool, witness: impl FnOnce() -> String) -> Verdict {
    if cond {
        Ok(None)
    } else {
        Err(witness())
    }
}

pub(crate) struct Recorder {
    suite: Suite,
    reports: Vec<CheckReport>,
}

impl Recorder {
    fn new(suite: Suite) -> Self {
        Self {
            suite,
            reports: Vec::new(),
        }
    }

    /// Runs `body`, turning cutoff errors into skips and other errors into
    /// failures.
    pub(crate) fn check(&mut self, name: impl Into<String>, body: impl FnOnce() -> Result<Verdict>) {
        let start = Instant::now();
        let (status, witness) = match body() {
            Ok(Ok(detail)) => (Status::Pass, detail),
            Ok(Err(w)) => (Status::Fail, Some(w)),
            Err(e @ Error::Cutoff { .. }) => (Status::Skipped, Some(e.to_string())),
            Err(e) => (Status::Fail, Some(format!("error: {e}"))),
        };
        self.reports.push(CheckReport {
            suite: self.suite,
            check: name.into(),
            status,
            witness,
            elapsed: start.elapsed(),
        });
    }
}

/// Runs the selected suites, concurrently, and returns the sorted reports.
pub fn run(config: &VerifyConfig) -> Result<Vec<CheckReport>> {
    config.validate()?;
    let ctx = suites::Context::new(config);
    let mut reports: Vec<CheckReport> = std::thread::scope(|scope| {
        let handles: Vec<_> = config
            .suites
            .iter()
            .map(|&suite| {
                let ctx = &ctx;
                std::thread::Builder::new()
                    .name(suite.name().into())
                    .stack_size(64 << 20)
                    .spawn_scoped(scope, move || {
                        let mut rec = Recorder::new(suite);
                        suites::run_suite(ctx, &mut rec);
                        rec.reports
                    })
                    .expect("spawn suite thread")
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("suite thread panicked"))
            .collect()
    });
    reports.sort_by(|a, b| (a.suite, &a.check).cmp(&(b.suite, &b.check)));
    Ok(reports)
}

/// 0 when every non-skipped check passed, 1 otherwise.
pub fn exit_status(reports: &[CheckReport]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else {
        0
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('\t', "\\t").replace('\n', "\\n")
}

/// Renders reports without timings, so equal configs give equal bytes.
pub fn render(reports: &[CheckReport], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Records => {
            for r in reports {
                let w = r.witness.as_deref().map(escape).unwrap_or_else(|| "-".into());
                out.push_str(&format!("{}\t{}\t{}\t{}\n", r.suite, escape(&r.check), r.status, w));
            }
        }
        Format::Text => {
            for r in reports {
                let tag = match r.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skipped => "SKIP",
                };
                out.push_str(&format!("{tag}  {}: {}\n", r.suite, r.check));
                if let Some(w) = &r.witness {
                    for line in w.lines() {
                        out.push_str(&format!("        {line}\n"));
                    }
                }
            }
            let count = |s| reports.iter().filter(|r| r.status == s).count();
            out.push_str(&format!(
                "{} passed, {} failed, {} skipped\n",
                count(Status::Pass),
                count(Status::Fail),
                count(Status::Skipped)
            ));
        }
    }
    out
}

pub fn total_elapsed(reports: &[CheckReport]) -> Duration {
    reports.iter().map(|r| r.elapsed).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn only(suites: &[Suite]) -> VerifyConfig {
        VerifyConfig {
            suites: suites.iter().copied().collect(),
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn suite_names_round_trip_in_sorted_order() {
        let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!(matches!("bogus".parse::<Suite>(), Err(Error::Usage(_))));
        assert_eq!(parse_suites("rtt, algebra").unwrap().len(), 2);
        assert!(parse_suites(" , ").is_err());
    }

    #[test]
    fn small_cutoff_is_a_usage_error() {
        let cfg = VerifyConfig {
            max_two_j: 1,
            ..VerifyConfig::default()
        };
        assert!(matches!(run(&cfg), Err(Error::Usage(_))));
    }

    #[test]
    fn algebra_only_reports_irrep_relations() {
        let reports = run(&only(&[Suite::Algebra])).unwrap();
        assert_eq!(reports.len(), 9);
        assert!(reports.iter().all(|r| r.suite == Suite::Algebra && r.check.starts_with("relations")));
        assert!(reports.iter().all(|r| r.status == Status::Pass));
        assert_eq!(exit_status(&reports), 0);
    }

    #[test]
    fn records_escape_witnesses() {
        let r = CheckReport {
            suite: Suite::Cg,
            check: "x".into(),
            status: Status::Fail,
            witness: Some("a\tb\nc".into()),
            elapsed: Duration::from_secs(3),
        };
        assert_eq!(render(&[r.clone()], Format::Records), "cg\tx\tfail\ta\\tb\\nc\n");
        assert_eq!(exit_status(&[r]), 1);
    }

    #[test]
    fn rendering_ignores_timing() {
        let mut a = run(&only(&[Suite::Algebra])).unwrap();
        let b = run(&only(&[Suite::Algebra])).unwrap();
        a[0].elapsed += Duration::from_secs(1);
        assert_eq!(render(&a, Format::Text), render(&b, Format::Text));
    }
}
