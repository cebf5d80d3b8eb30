//! The scan pipeline: parse, check, and an ordered merge.
//!
//! Input is cut into fixed-size chunks. Each chunk is evaluated on the worker
//! pool and its results are merged in input order, so output does not depend
//! on the number of workers.

use std::collections::BTreeMap;
use std::io;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use cdcrit::graph6::{parse_graph6, to_graph6};
use cdcrit::invariants::{self, InvariantProfile};
use cdcrit::theorems::{Budgets, CheckId, CheckReport, Status, Subject};
use cdcrit::{Error, Graph};

use crate::input::{Item, Payload};

/// Which graphs produce a record.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Filter {
    All,
    Connected,
    Critical3,
    /// 3-γc-critical with `3 ≤ α = κ < δ`.
    Probe,
}

impl FromStr for Filter {
    type Err = String;

    fn from_str(s: &str) -> Result<Filter, String> {
        match s {
            "all" => Ok(Filter::All),
            "connected" => Ok(Filter::Connected),
            "critical3" => Ok(Filter::Critical3),
            "probe" => Ok(Filter::Probe),
            _ => Err(format!("unknown filter `{s}` (all, connected, critical3, probe)")),
        }
    }
}

/// Parses a comma-separated list of check ids; `all` selects every check.
pub fn parse_checks(s: &str) -> Result<Vec<CheckId>, String> {
    if s.trim() == "all" {
        return Ok(CheckId::ALL.to_vec());
    }
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| t.trim().parse()).collect()
}

#[derive(Clone, Debug)]
pub struct ScanOptions {
    pub checks: Vec<CheckId>,
    pub filter: Filter,
    /// Worker threads; 0 picks the rayon default.
    pub jobs: usize,
    pub chunk: usize,
    pub skip_bad: bool,
    pub budgets: Budgets,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            checks: CheckId::ALL.to_vec(),
            filter: Filter::Critical3,
            jobs: 0,
            chunk: 1024,
            skip_bad: false,
            budgets: Budgets::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedCheck {
    pub check_id: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub index: u64,
    pub graph6: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub profile: InvariantProfile,
    pub critical3: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<String>,
    pub checks: Vec<CheckReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<SkippedCheck>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckCounts {
    pub pass: u64,
    pub fail: u64,
    pub not_applicable: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub index: u64,
    pub graph6: String,
    pub check_id: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    /// Items read from the source.
    pub inputs: u64,
    /// Lines that failed to parse and were skipped.
    pub bad_lines: u64,
    /// Records emitted (graphs that passed the filter).
    pub records: u64,
    /// Emitted records that are 3-γc-critical; equals the bucket total.
    pub critical: u64,
    pub buckets: BTreeMap<String, u64>,
    pub checks: BTreeMap<String, CheckCounts>,
    pub budget_skips: BTreeMap<String, u64>,
    /// Failures of checks that state a theorem.
    pub refutations: Vec<Finding>,
    /// Failures of the open-problem probe.
    pub counterexamples: Vec<Finding>,
    pub wall_time_secs: f64,
    /// SHA-256 over the graph6 line of every input item, each followed by a
    /// newline.
    pub input_digest: String,
}

pub const BUCKETS: [&str; 3] = ["alpha=kappa+2", "alpha=kappa+1", "alpha<=kappa"];

impl SweepSummary {
    /// 2 for a refutation or counterexample, else 4 when a check was skipped
    /// at its budget, else 0.
    pub fn exit_code(&self) -> i32 {
        if !self.refutations.is_empty() || !self.counterexamples.is_empty() {
            2
        } else if !self.budget_skips.is_empty() {
            4
        } else {
            0
        }
    }

    /// Final line of an open-problem probe.
    pub fn verdict_line(&self) -> String {
        let counts = self.checks.get(CheckId::OpenProblem.as_str()).cloned().unwrap_or_default();
        let applicable = counts.pass + counts.fail;
        let skipped = self.budget_skips.get(CheckId::OpenProblem.as_str()).copied().unwrap_or(0);
        let tail = if skipped > 0 {
            format!(" ({skipped} applicable graphs skipped at the Hamiltonian budget)")
        } else {
            String::new()
        };
        if self.counterexamples.is_empty() {
            format!("no counterexample among {applicable} applicable graphs{tail}")
        } else {
            let list: Vec<&str> = self.counterexamples.iter().map(|f| f.graph6.as_str()).collect();
            format!(
                "COUNTEREXAMPLE: {} of {applicable} applicable graphs are not Hamiltonian connected: {}{tail}",
                list.len(),
                list.join(" ")
            )
        }
    }
}

pub fn classify(alpha: usize, kappa: usize) -> &'static str {
    if alpha <= kappa {
        "alpha<=kappa"
    } else if alpha == kappa + 1 {
        "alpha=kappa+1"
    } else if alpha == kappa + 2 {
        "alpha=kappa+2"
    } else {
        "alpha>kappa+2"
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ScanError {
    #[error("line {line}: {message}")]
    Input { line: u64, message: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

enum Outcome {
    Dropped,
    Bad { line: u64, message: String },
    Record(Box<ScanRecord>),
}

/// Cheap necessary conditions first, criticality last.
fn probe_candidate(g: &Graph) -> bool {
    let delta = invariants::min_degree(g);
    if delta < 4 || !g.is_connected() {
        return false;
    }
    let alpha = invariants::independence_number(g);
    alpha >= 3 && alpha < delta && invariants::connectivity(g).expect("connected") == alpha
}

fn evaluate(item: &Item, opts: &ScanOptions) -> Outcome {
    let parsed;
    let (graph, family) = match &item.payload {
        Payload::Line(line) => match parse_graph6(line) {
            Ok(g) => {
                parsed = g;
                (&parsed, None)
            }
            Err(e) => {
                return Outcome::Bad {
                    line: item.index,
                    message: e.to_string(),
                }
            }
        },
        Payload::Graph { graph, family } => (graph, family.clone()),
    };
    let keep_early = match opts.filter {
        Filter::All => true,
        Filter::Connected | Filter::Critical3 => graph.is_connected(),
        Filter::Probe => probe_candidate(graph),
    };
    if !keep_early {
        return Outcome::Dropped;
    }
    let subject = Subject::new(graph);
    if matches!(opts.filter, Filter::Critical3 | Filter::Probe) && !subject.critical3 {
        return Outcome::Dropped;
    }
    let mut checks = Vec::new();
    let mut skipped = Vec::new();
    for &id in &opts.checks {
        match subject.run(id, &opts.budgets) {
            Ok(r) => checks.push(r),
            Err(e) => skipped.push(SkippedCheck {
                check_id: id.as_str().to_string(),
                reason: e.to_string(),
            }),
        }
    }
    let classification = subject
        .critical3
        .then(|| classify(subject.alpha, subject.kappa.expect("critical graphs are connected")).to_string());
    Outcome::Record(Box::new(ScanRecord {
        index: item.index,
        graph6: to_graph6(graph),
        family,
        profile: invariants::profile(graph),
        critical3: subject.critical3,
        classification,
        checks,
        skipped,
    }))
}

fn digest_line(hasher: &mut Sha256, item: &Item) {
    match &item.payload {
        Payload::Line(l) => hasher.update(l.as_bytes()),
        Payload::Graph { graph, .. } => hasher.update(to_graph6(graph).as_bytes()),
    }
    hasher.update(b"\n");
}

fn tally(summary: &mut SweepSummary, rec: &ScanRecord) {
    summary.records += 1;
    if let Some(c) = &rec.classification {
        summary.critical += 1;
        *summary.buckets.entry(c.clone()).or_default() += 1;
    }
    for r in &rec.checks {
        let counts = summary.checks.entry(r.check_id.clone()).or_default();
        match r.status {
            Status::Pass => counts.pass += 1,
            Status::Fail => counts.fail += 1,
            Status::NotApplicable => counts.not_applicable += 1,
        }
        if r.status == Status::Fail {
            let finding = Finding {
                index: rec.index,
                graph6: rec.graph6.clone(),
                check_id: r.check_id.clone(),
            };
            let id: CheckId = r.check_id.parse().expect("ids come from CheckId");
            if id == CheckId::OpenProblem {
                summary.counterexamples.push(finding);
            } else if id.is_theorem() {
                summary.refutations.push(finding);
            }
        }
    }
    for s in &rec.skipped {
        *summary.budget_skips.entry(s.check_id.clone()).or_default() += 1;
    }
}

/// Runs the pipeline, handing records to `emit` in input order.
pub fn scan<I, F>(items: I, opts: &ScanOptions, mut emit: F) -> Result<SweepSummary, ScanError>
where
    I: IntoIterator<Item = io::Result<Item>>,
    F: FnMut(&ScanRecord) -> io::Result<()>,
{
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| io::Error::other(e.to_string()))?;
    let mut summary = SweepSummary {
        buckets: BUCKETS.iter().map(|b| (b.to_string(), 0)).collect(),
        ..SweepSummary::default()
    };
    let mut hasher = Sha256::new();
    let mut items = items.into_iter();
    let chunk_size = opts.chunk.max(1);
    loop {
        let mut chunk = Vec::with_capacity(chunk_size);
        for item in items.by_ref().take(chunk_size) {
            let item = item?;
            digest_line(&mut hasher, &item);
            chunk.push(item);
        }
        if chunk.is_empty() {
            break;
        }
        summary.inputs += chunk.len() as u64;
        let outcomes: Vec<Outcome> = pool.install(|| chunk.par_iter().map(|it| evaluate(it, opts)).collect());
        for outcome in outcomes {
            match outcome {
                Outcome::Dropped => {}
                Outcome::Bad { line, message } => {
                    if !opts.skip_bad {
                        return Err(ScanError::Input { line, message });
                    }
                    summary.bad_lines += 1;
                }
                Outcome::Record(rec) => {
                    tally(&mut summary, &rec);
                    emit(&rec)?;
                }
            }
        }
    }
    summary.wall_time_secs = start.elapsed().as_secs_f64();
    summary.input_digest = format!("{:x}", hasher.finalize());
    Ok(summary)
}

/// The open-problem probe: records for 3-γc-critical graphs with
/// `3 ≤ α = κ < δ`, each carrying the Hamiltonian-connectedness verdict.
pub fn probe_open_problem<I, F>(items: I, opts: &ScanOptions, emit: F) -> Result<SweepSummary, ScanError>
where
    I: IntoIterator<Item = io::Result<Item>>,
    F: FnMut(&ScanRecord) -> io::Result<()>,
{
    let opts = ScanOptions {
        checks: vec![CheckId::OpenProblem],
        filter: Filter::Probe,
        ..opts.clone()
    };
    scan(items, &opts, emit)
}

/// True when `e` is a budget error, used to pick exit codes.
pub fn is_budget(e: &Error) -> bool {
    matches!(e, Error::Budget { .. } | Error::CanonTooLarge { .. })
}
