use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;
use crate::invariants;
use crate::set::VertexSet;

use super::{CheckId, CheckReport, Subject, Witness};

/// How the cut-set/independent-set hypothesis of the PM1 check is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quantifier {
    /// Some minimum cut set and some maximum independent set satisfy it.
    Exists,
    /// Every minimum cut set with every maximum independent set satisfies it.
    Forall,
}

const NOT_CRITICAL: &str = "not 3-gamma_c-critical";

fn g2_disjunct((j1, j2): (usize, usize)) -> Witness {
    Witness::Disjunct {
        held: format!("classG2({j1},{j2})"),
    }
}

pub(super) fn pm0(s: &Subject) -> CheckReport {
    let id = CheckId::Pm0;
    if !s.critical3 {
        return CheckReport::not_applicable(id, NOT_CRITICAL);
    }
    if s.alpha <= s.kappa() + 2 {
        CheckReport::pass(id)
    } else {
        CheckReport::fail(id, s.invariants_witness(None))
    }
}

/// `α ≤ κ + 2` for a 3-γc-critical graph.
pub fn verify_thm_pm0(g: &Graph) -> CheckReport {
    pm0(&Subject::new(g))
}

pub(super) fn thm_k(s: &Subject) -> CheckReport {
    let id = CheckId::K;
    if !s.critical3 {
        return CheckReport::not_applicable(id, NOT_CRITICAL);
    }
    if s.delta < 2 {
        return CheckReport::not_applicable(id, "minimum degree below 2");
    }
    if s.alpha > s.delta + 2 {
        return CheckReport::fail(id, s.invariants_witness(None));
    }
    if s.alpha == s.delta + 2 {
        let g = s.g;
        let low: VertexSet = g.vertices().iter().filter(|&v| g.nbrs(v).len() == s.delta).collect();
        let ok = low.len() == 1 && g.is_clique(g.closed_nbrs(low.first().expect("nonempty")));
        if !ok {
            return CheckReport::fail(
                id,
                Witness::MinDegreeVertices {
                    delta: s.delta,
                    vertices: low,
                },
            );
        }
    }
    CheckReport::pass(id)
}

/// `α ≤ δ + 2`, and at equality a unique vertex of degree δ whose closed
/// neighborhood is a clique.
pub fn verify_thm_k(g: &Graph) -> CheckReport {
    thm_k(&Subject::new(g))
}

pub(super) fn mp1(s: &Subject) -> CheckReport {
    let id = CheckId::Mp1;
    if !s.critical3 {
        return CheckReport::not_applicable(id, NOT_CRITICAL);
    }
    let kappa = s.kappa();
    if s.alpha <= kappa {
        return CheckReport::not_applicable(id, "alpha <= kappa");
    }
    if kappa == s.delta {
        return CheckReport::pass(id).with_witness(Witness::Disjunct {
            held: "kappa=delta".into(),
        });
    }
    match s.class_g2_member() {
        Some(js) => CheckReport::pass(id).with_witness(g2_disjunct(js)),
        None => CheckReport::fail(id, s.invariants_witness(None)),
    }
}

/// When `α ≥ κ + 1`: `κ = δ`, or the graph is some 𝒢₂(j₁, j₂).
pub fn classify_mp1(g: &Graph) -> CheckReport {
    mp1(&Subject::new(g))
}

pub(super) fn mp2(s: &Subject) -> CheckReport {
    let id = CheckId::Mp2;
    if !s.critical3 {
        return CheckReport::not_applicable(id, NOT_CRITICAL);
    }
    if s.class_g2_member().is_some() {
        return CheckReport::not_applicable(id, "member of classG2");
    }
    let kappa = s.kappa();
    for q in 1..=2 {
        if (s.alpha == kappa + q) != (s.alpha == s.delta + q) {
            return CheckReport::fail(id, s.invariants_witness(Some(q)));
        }
    }
    CheckReport::pass(id)
}

/// `α = κ + q ⇔ α = δ + q` for `q ∈ {1, 2}`, outside 𝒢₂.
pub fn verify_mp2(g: &Graph) -> CheckReport {
    mp2(&Subject::new(g))
}

pub(super) fn mp3(s: &Subject) -> CheckReport {
    let id = CheckId::Mp3;
    if !s.critical3 {
        return CheckReport::not_applicable(id, NOT_CRITICAL);
    }
    if s.delta < 2 {
        return CheckReport::not_applicable(id, "minimum degree below 2");
    }
    let kappa = s.kappa();
    if kappa >= s.delta {
        return CheckReport::not_applicable(id, "kappa = delta");
    }
    if s.alpha <= kappa {
        return CheckReport::pass(id).with_witness(Witness::Disjunct {
            held: "alpha<=kappa".into(),
        });
    }
    match s.class_g2_member() {
        Some(js) => CheckReport::pass(id).with_witness(g2_disjunct(js)),
        None => CheckReport::fail(id, s.invariants_witness(None)),
    }
}

/// `κ < δ` implies `α ≤ κ` or 𝒢₂ membership.
pub fn verify_mp3(g: &Graph) -> CheckReport {
    mp3(&Subject::new(g))
}

pub(super) fn pm1(s: &Subject, quant: Quantifier, cut_budget: usize) -> Result<CheckReport> {
    let id = match quant {
        Quantifier::Exists => CheckId::Pm1Exists,
        Quantifier::Forall => CheckId::Pm1Forall,
    };
    if !s.critical3 {
        return Ok(CheckReport::not_applicable(id, NOT_CRITICAL));
    }
    let kappa = s.kappa();
    if s.alpha < kappa + 1 || kappa >= s.delta {
        return Ok(CheckReport::not_applicable(id, "needs kappa + 1 <= alpha and kappa < delta"));
    }
    let g = s.g;
    let cuts = invariants::all_minimum_cut_sets_within(g, cut_budget)?;
    let indeps = invariants::all_maximum_independent_sets(g);
    let pairs = || {
        cuts.iter()
            .flat_map(|&c| indeps.iter().map(move |&i| (c, i)))
    };
    let small = |&(c, i): &(VertexSet, VertexSet)| c.difference(i).len() <= 1;
    let held = match quant {
        Quantifier::Exists => pairs().find(small),
        Quantifier::Forall => {
            if pairs().all(|p| small(&p)) {
                pairs().next()
            } else {
                None
            }
        }
    };
    let Some((cut, independent)) = held else {
        return Ok(CheckReport::not_applicable(id, "|S \\ I| <= 1 does not hold"));
    };
    Ok(match s.class_g2_member() {
        Some(js) => CheckReport::pass(id).with_witness(g2_disjunct(js)),
        None => CheckReport::fail(id, Witness::CutIndependence { cut, independent }),
    })
}

/// With `κ < δ`, `α ≥ κ + 1` and `|S \ I| ≤ 1` for a minimum cut set `S`
/// and maximum independent set `I` (read per `quant`), the graph is in 𝒢₂.
pub fn verify_pm1(g: &Graph, quant: Quantifier, cut_budget: usize) -> Result<CheckReport> {
    pm1(&Subject::new(g), quant, cut_budget)
}
