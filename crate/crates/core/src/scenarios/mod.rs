//! Named verification suites.
//!
//! Every check compares an exact rendering of a computed value with an exact
//! expected rendering; a check passes only on string equality. Reports are
//! deterministic for a fixed seed: check order is registration order and
//! timings are only emitted on request.

mod checks;
mod cross;

use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::axial::DEFAULT_CLOSURE_BOUND;
use crate::fock::AxisFamily;
use crate::lattice::ShellStore;

pub use checks::{registry, Check};
pub use cross::{cross_validate, fock_table_3c, fock_table_g9};

pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    GriessAbstract,
    LatticeCombinatorics,
    Cocycle,
    FockAxes,
    Commutant,
    RealForm,
    CentralCharges,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 8] =
        ["griess-abstract", "lattice-combinatorics", "cocycle", "fock-axes", "commutant", "real-form", "central-charges", "all"];

    pub fn name(self) -> &'static str {
        Self::NAMES[self as usize]
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        use Suite::*;
        let all = [GriessAbstract, LatticeCombinatorics, Cocycle, FockAxes, Commutant, RealForm, CentralCharges, All];
        all.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite {s:?}; expected one of {}", Self::NAMES.join(", ")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub computed: String,
    pub expected: String,
    /// "stated" for values of the theory being checked, "derived" for values
    /// obtained by an independent closed form or oracle.
    pub provenance: String,
    /// The claim in words.
    pub quote: String,
    #[serde(rename = "elapsed_ms", serialize_with = "ms")]
    pub elapsed: Option<Duration>,
}

fn ms<S: serde::Serializer>(d: &Option<Duration>, s: S) -> Result<S::Ok, S::Error> {
    match d {
        Some(d) => s.serialize_u64(d.as_millis() as u64),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub version: String,
    pub seed: u64,
    pub results: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn new(suite: &str, seed: u64) -> Self {
        VerificationReport { suite: suite.into(), version: env!("CARGO_PKG_VERSION").into(), seed, results: Vec::new() }
    }

    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.status == Status::Pass)
    }

    pub fn failing_ids(&self) -> Vec<&str> {
        self.results.iter().filter(|r| r.status == Status::Fail).map(|r| r.id.as_str()).collect()
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.id == id)
    }

    /// Drops timings so that two runs can be compared byte for byte.
    pub fn without_timings(mut self) -> Self {
        for r in &mut self.results {
            r.elapsed = None;
        }
        self
    }
}

/// Shared state for one verification run: the shell cache, the seed for
/// randomized samples, and the lattice axis family, built on first use.
pub struct Context {
    pub store: ShellStore,
    pub seed: u64,
    pub closure_bound: usize,
    family: OnceLock<Result<AxisFamily, String>>,
}

impl Context {
    pub fn new(store: ShellStore, seed: u64) -> Self {
        Context { store, seed, closure_bound: DEFAULT_CLOSURE_BOUND, family: OnceLock::new() }
    }

    pub fn family(&self) -> Result<&AxisFamily, String> {
        self.family.get_or_init(|| AxisFamily::build(&self.store).map_err(|e| e.to_string())).as_ref().map_err(Clone::clone)
    }
}

pub fn run_check(ctx: &Context, check: &Check) -> CheckResult {
    let start = Instant::now();
    let outcome = (check.run)(ctx);
    let elapsed = start.elapsed();
    let computed = outcome.unwrap_or_else(|e| format!("error: {e}"));
    let status = if computed == check.expected { Status::Pass } else { Status::Fail };
    CheckResult {
        id: check.id.into(),
        status,
        computed,
        expected: check.expected.into(),
        provenance: check.provenance.into(),
        quote: check.claim.into(),
        elapsed: Some(elapsed),
    }
}

/// Runs the checks registered for `suite` on `jobs` worker threads. `All`
/// runs every check, lattice first, then cocycle, fock, and the abstract
/// algebra. Results keep registration order whatever the thread count.
pub fn run_suite(suite: Suite, ctx: &Context, jobs: usize) -> VerificationReport {
    let checks: Vec<&Check> = registry().iter().filter(|c| suite == Suite::All || c.suite == suite).collect();
    let results = if jobs <= 1 {
        checks.iter().map(|c| run_check(ctx, c)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
        pool.install(|| checks.par_iter().map(|c| run_check(ctx, c)).collect())
    };
    VerificationReport { results, ..VerificationReport::new(suite.name(), ctx.seed) }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(format!("unknown format {s:?}; expected json or text")),
        }
    }
}

pub fn emit_report(r: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(r).expect("report serializes") + "\n",
        Format::Text => {
            let mut out = format!("suite {}  version {}  seed {}\n", r.suite, r.version, r.seed);
            let width = r.results.iter().map(|c| c.id.len()).max().unwrap_or(0);
            for c in &r.results {
                let tag = match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                };
                write!(out, "{tag}  {:width$}  {}", c.id, c.computed).unwrap();
                if c.status == Status::Fail {
                    write!(out, "  (expected {}, {})", c.expected, c.provenance).unwrap();
                }
                if let Some(d) = c.elapsed {
                    write!(out, "  [{} ms]", d.as_millis()).unwrap();
                }
                out.push('\n');
            }
            let failed = r.failing_ids();
            writeln!(out, "{} passed, {} failed", r.results.len() - failed.len(), failed.len()).unwrap();
            if !failed.is_empty() {
                writeln!(out, "failing: {}", failed.join(", ")).unwrap();
            }
            out
        }
    }
}
