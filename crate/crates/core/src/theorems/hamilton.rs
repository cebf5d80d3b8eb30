use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::{subsets_of_size, VertexSet};

use super::{CheckId, CheckReport, Status, Subject, Witness};

pub const DEFAULT_HAM_BUDGET: usize = 20;
pub const DEFAULT_SCATTER_BUDGET: usize = 8;

/// Vertices `v` joined to `start` by a Hamiltonian path. Subset dynamic
/// program over (visited set, endpoint); `reach[mask]` holds the endpoints.
pub fn hamiltonian_ends_from(g: &Graph, start: usize) -> VertexSet {
    let n = g.order();
    let full = (1usize << n) - 1;
    let mut reach = vec![0u64; 1 << n];
    reach[1 << start] = 1 << start;
    for mask in 0..=full {
        let ends = reach[mask];
        if ends == 0 {
            continue;
        }
        for e in VertexSet(ends) {
            for w in g.nbrs(e).difference(VertexSet(mask as u64)) {
                reach[mask | 1 << w] |= 1 << w;
            }
        }
    }
    VertexSet(reach[full])
}

fn check_ham_budget(g: &Graph, budget: usize) -> Result<()> {
    if g.order() > budget {
        return Err(Error::Budget {
            what: "Hamiltonian path dynamic program",
            limit: budget,
            actual: g.order(),
        });
    }
    Ok(())
}

/// Whether every pair of vertices is joined by a Hamiltonian path. A fail
/// carries the lexicographically first pair without one.
pub fn hamiltonian_connected(g: &Graph, budget: usize) -> Result<CheckReport> {
    let id = CheckId::HamiltonianConnected;
    let n = g.order();
    if n < 3 {
        return Ok(CheckReport::not_applicable(id, "fewer than three vertices"));
    }
    check_ham_budget(g, budget)?;
    if !g.is_connected() {
        return Ok(CheckReport::fail(id, Witness::Pair { u: 0, v: first_outside(g) }));
    }
    for u in 0..n - 1 {
        let ends = hamiltonian_ends_from(g, u);
        if let Some(v) = (u + 1..n).find(|&v| !ends.contains(v)) {
            return Ok(CheckReport::fail(id, Witness::Pair { u, v }));
        }
    }
    Ok(CheckReport::pass(id))
}

fn first_outside(g: &Graph) -> usize {
    let c = g.reach(0, g.vertices());
    c.complement(g.order()).first().expect("disconnected")
}

/// Sweeps separators `S` by size then mask, up to `max_size`, and fails on
/// the first with `ω(G - S) ≥ max(|S|, 2)`. Stopping at the budget before
/// all sizes are covered gives an incomplete pass.
pub fn scattering_condition(g: &Graph, max_size: usize) -> CheckReport {
    let id = CheckId::Scattering;
    let n = g.order();
    let top = n.saturating_sub(2);
    for k in 0..=top.min(max_size) {
        for s in subsets_of_size(g.vertices(), k) {
            let omega = g.components_after_removing(s);
            if omega >= 2 && omega >= k {
                return CheckReport::fail(id, Witness::Cut { set: s, components: omega });
            }
        }
    }
    let mut report = CheckReport::pass(id);
    if top > max_size {
        report.complete = false;
        report.detail = Some(format!("separators above size {max_size} not examined"));
    }
    report
}

pub(super) fn chvatal_erdos(subject: &Subject, budget: usize) -> Result<CheckReport> {
    let id = CheckId::ChvatalErdos;
    if !subject.connected {
        return Ok(CheckReport::not_applicable(id, "disconnected"));
    }
    if subject.alpha >= subject.kappa() {
        return Ok(CheckReport::not_applicable(id, "alpha >= kappa"));
    }
    let ham = hamiltonian_connected(subject.g, budget)?;
    Ok(match ham.status {
        Status::Fail => CheckReport { check_id: id.as_str().into(), ..ham },
        _ => CheckReport::pass(id),
    })
}

/// If `α < κ`, the graph must be Hamiltonian connected.
pub fn chvatal_erdos_check(g: &Graph, budget: usize) -> Result<CheckReport> {
    chvatal_erdos(&Subject::new(g), budget)
}

pub(super) fn open_problem(subject: &Subject, budget: usize) -> Result<CheckReport> {
    let id = CheckId::OpenProblem;
    if !subject.critical3 {
        return Ok(CheckReport::not_applicable(id, "not 3-gamma_c-critical"));
    }
    let (a, k, d) = (subject.alpha, subject.kappa(), subject.delta);
    if !(3 <= a && a == k && k < d) {
        return Ok(CheckReport::not_applicable(id, "outside 3 <= alpha = kappa <= delta - 1"));
    }
    let ham = hamiltonian_connected(subject.g, budget)?;
    Ok(match ham.status {
        Status::Fail => CheckReport {
            check_id: id.as_str().into(),
            detail: Some("COUNTEREXAMPLE".into()),
            ..ham
        },
        _ => CheckReport::pass(id),
    })
}

/// Hamiltonian connectedness of a 3-γc-critical graph with
/// `3 ≤ α = κ ≤ δ − 1`; not applicable otherwise.
pub fn open_problem_probe(g: &Graph, budget: usize) -> Result<CheckReport> {
    open_problem(&Subject::new(g), budget)
}
