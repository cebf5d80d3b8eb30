//! Executable checks of the structural statements about 3-γc-critical
//! graphs, each evaluated on one concrete graph.
//!
//! A check either passes, fails with a witness that can be re-validated
//! independently, or is not applicable because its hypotheses do not hold
//! on the input. Check ids are stable strings used in reports.

mod bounds;
mod hamilton;
mod lemmas;

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::domination::{self, WitnessSet};
use crate::error::{Error, Result};
use crate::families::build_class_g2;
use crate::graph::Graph;
use crate::invariants::{self, DEFAULT_CUT_BUDGET};
use crate::set::VertexSet;

pub use bounds::{classify_mp1, verify_mp2, verify_mp3, verify_pm1, verify_thm_k, verify_thm_pm0, Quantifier};
pub use hamilton::{
    chvatal_erdos_check, hamiltonian_connected, hamiltonian_ends_from, open_problem_probe,
    scattering_condition, DEFAULT_HAM_BUDGET, DEFAULT_SCATTER_BUDGET,
};
pub use lemmas::{verify_lemma1, verify_lemma2, verify_lemma2_all, verify_lemma_p0, verify_lemma_w, CutIndependencePartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not-applicable",
        })
    }
}

/// Structured evidence attached to a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// A minimum connected dominating set `set` of `G + uv` violating the
    /// numbered part of the D_uv structure statement.
    NonEdgeSet { u: usize, v: usize, set: VertexSet, part: u8 },
    /// Independent triple whose `G + b1b2` has a γc-set of the wrong shape.
    Triple { b1: usize, b2: usize, b3: usize, set: VertexSet },
    /// Ordering `a_1..a_p` of an independent set with its connecting path.
    Ordering { order: Vec<usize>, path: Vec<usize> },
    IndependentSet { set: VertexSet },
    Partition(CutIndependencePartition),
    Invariants {
        alpha: usize,
        kappa: Option<usize>,
        delta: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        q: Option<usize>,
    },
    /// Vertices of minimum degree when the equality case is violated.
    MinDegreeVertices { delta: usize, vertices: VertexSet },
    /// Cut set and independent set for the PM1-style hypotheses.
    CutIndependence { cut: VertexSet, independent: VertexSet },
    /// Endpoints with no Hamiltonian path between them.
    Pair { u: usize, v: usize },
    Cut { set: VertexSet, components: usize },
    /// Which disjunct of a disjunctive conclusion held.
    Disjunct { held: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// False when a sweep stopped at its budget without finding a violation.
    #[serde(default = "yes", skip_serializing_if = "is_true")]
    pub complete: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

fn is_true(b: &bool) -> bool {
    *b
}

fn yes() -> bool {
    true
}

impl CheckReport {
    pub fn new(id: CheckId, status: Status) -> CheckReport {
        CheckReport {
            check_id: id.as_str().to_string(),
            status,
            witness: None,
            complete: true,
            detail: None,
        }
    }

    pub fn pass(id: CheckId) -> CheckReport {
        CheckReport::new(id, Status::Pass)
    }

    pub fn fail(id: CheckId, witness: Witness) -> CheckReport {
        CheckReport::new(id, Status::Fail).with_witness(witness)
    }

    pub fn not_applicable(id: CheckId, why: &str) -> CheckReport {
        CheckReport::new(id, Status::NotApplicable).with_detail(why)
    }

    pub fn with_witness(mut self, w: Witness) -> CheckReport {
        self.witness = Some(w);
        self
    }

    pub fn with_detail(mut self, d: &str) -> CheckReport {
        self.detail = Some(d.to_string());
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CheckId {
    Lemma1,
    LemmaW,
    Lemma2,
    LemmaP0,
    Pm0,
    K,
    Mp1,
    Mp2,
    Mp3,
    Pm1Exists,
    Pm1Forall,
    HamiltonianConnected,
    Scattering,
    ChvatalErdos,
    OpenProblem,
}

impl CheckId {
    pub const ALL: [CheckId; 15] = [
        CheckId::Lemma1,
        CheckId::LemmaW,
        CheckId::Lemma2,
        CheckId::LemmaP0,
        CheckId::Pm0,
        CheckId::K,
        CheckId::Mp1,
        CheckId::Mp2,
        CheckId::Mp3,
        CheckId::Pm1Exists,
        CheckId::Pm1Forall,
        CheckId::HamiltonianConnected,
        CheckId::Scattering,
        CheckId::ChvatalErdos,
        CheckId::OpenProblem,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::Lemma1 => "lemma1",
            CheckId::LemmaW => "lemma-w",
            CheckId::Lemma2 => "lemma2",
            CheckId::LemmaP0 => "lemma-p0",
            CheckId::Pm0 => "pm0",
            CheckId::K => "k",
            CheckId::Mp1 => "mp1",
            CheckId::Mp2 => "mp2",
            CheckId::Mp3 => "mp3",
            CheckId::Pm1Exists => "pm1-exists",
            CheckId::Pm1Forall => "pm1-forall",
            CheckId::HamiltonianConnected => "hamiltonian-connected",
            CheckId::Scattering => "scattering",
            CheckId::ChvatalErdos => "chvatal-erdos",
            CheckId::OpenProblem => "open-problem",
        }
    }

    /// Checks whose failure refutes a stated result (as opposed to the
    /// Hamiltonicity probes, whose failures are ordinary outcomes).
    pub fn is_theorem(self) -> bool {
        !matches!(
            self,
            CheckId::HamiltonianConnected | CheckId::Scattering | CheckId::OpenProblem
        )
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<CheckId, String> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown check id `{s}`"))
    }
}

/// Size limits for the exponential parts of the checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budgets {
    /// Largest order for the Hamiltonian path dynamic program.
    pub ham: usize,
    /// Largest order for minimum cut set enumeration.
    pub cuts: usize,
    /// Largest separator size tried by the scattering sweep.
    pub scatter: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            ham: DEFAULT_HAM_BUDGET,
            cuts: DEFAULT_CUT_BUDGET,
            scatter: DEFAULT_SCATTER_BUDGET,
        }
    }
}

/// A graph with the invariants every check needs, computed once.
pub struct Subject<'a> {
    pub g: &'a Graph,
    pub connected: bool,
    pub critical3: bool,
    pub delta: usize,
    pub alpha: usize,
    pub kappa: Option<usize>,
    g2: OnceCell<Option<(usize, usize)>>,
    plus_edge_sets: OnceCell<Vec<(usize, usize, Vec<WitnessSet>)>>,
}

impl<'a> Subject<'a> {
    pub fn new(g: &'a Graph) -> Subject<'a> {
        let connected = g.is_connected();
        let critical3 = connected && domination::is_gamma_c_critical(g, 3).expect("connected");
        Subject {
            g,
            connected,
            critical3,
            delta: invariants::min_degree(g),
            alpha: invariants::independence_number(g),
            kappa: connected.then(|| invariants::connectivity(g).expect("connected")),
            g2: OnceCell::new(),
            plus_edge_sets: OnceCell::new(),
        }
    }

    fn kappa(&self) -> usize {
        self.kappa.expect("connectivity of a connected subject")
    }

    pub fn invariants_witness(&self, q: Option<usize>) -> Witness {
        Witness::Invariants {
            alpha: self.alpha,
            kappa: self.kappa,
            delta: self.delta,
            q,
        }
    }

    /// `(j1, j2)` when the graph is isomorphic to 𝒢₂(j₁, j₂).
    pub fn class_g2_member(&self) -> Option<(usize, usize)> {
        *self.g2.get_or_init(|| class_g2_membership(self.g).expect("isomorphism test"))
    }

    /// Every minimum connected dominating set of `G + uv`, per non-edge.
    pub fn plus_edge_min_sets(&self) -> Result<&[(usize, usize, Vec<WitnessSet>)]> {
        if let Some(v) = self.plus_edge_sets.get() {
            return Ok(v);
        }
        let mut out = Vec::new();
        for (u, v) in self.g.non_edges() {
            let sets = domination::all_min_connected_dominating_sets(&self.g.plus_edge(u, v))?;
            out.push((u, v, sets));
        }
        Ok(self.plus_edge_sets.get_or_init(|| out))
    }

    pub fn run(&self, id: CheckId, budgets: &Budgets) -> Result<CheckReport> {
        match id {
            CheckId::Lemma1 => lemmas::lemma1(self),
            CheckId::LemmaW => lemmas::lemma_w(self),
            CheckId::Lemma2 => lemmas::lemma2_all(self),
            CheckId::LemmaP0 => lemmas::lemma_p0(self, budgets.cuts),
            CheckId::Pm0 => Ok(bounds::pm0(self)),
            CheckId::K => Ok(bounds::thm_k(self)),
            CheckId::Mp1 => Ok(bounds::mp1(self)),
            CheckId::Mp2 => Ok(bounds::mp2(self)),
            CheckId::Mp3 => Ok(bounds::mp3(self)),
            CheckId::Pm1Exists => bounds::pm1(self, Quantifier::Exists, budgets.cuts),
            CheckId::Pm1Forall => bounds::pm1(self, Quantifier::Forall, budgets.cuts),
            CheckId::HamiltonianConnected => hamiltonian_connected(self.g, budgets.ham),
            CheckId::Scattering => Ok(scattering_condition(self.g, budgets.scatter)),
            CheckId::ChvatalErdos => hamilton::chvatal_erdos(self, budgets.ham),
            CheckId::OpenProblem => hamilton::open_problem(self, budgets.ham),
        }
    }
}

/// Membership in some 𝒢₂(j₁, j₂) with `j1 + j2 + 3 = n`, by isomorphism
/// against each generated candidate.
pub fn class_g2_membership(g: &Graph) -> Result<Option<(usize, usize)>> {
    let n = g.order();
    if n < 9 {
        return Ok(None);
    }
    let degrees = g.degree_sequence();
    for j1 in 3..=n - 6 {
        let j2 = n - 3 - j1;
        let (h, _) = build_class_g2(j1, j2)?;
        if h.size() == g.size()
            && h.degree_sequence() == degrees
            && crate::canon::is_isomorphic(g, &h)?
        {
            return Ok(Some((j1, j2)));
        }
    }
    Ok(None)
}

pub(crate) fn require_independent(g: &Graph, s: VertexSet) -> Result<()> {
    if g.is_independent(s) {
        Ok(())
    } else {
        Err(Error::NotIndependent)
    }
}
