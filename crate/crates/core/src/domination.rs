//! Exact domination, connected domination and total domination numbers, and
//! the `k`-criticality tests built on them.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Node budget for exhaustive connected-dominating-set enumeration.
pub const DEFAULT_ENUM_BUDGET: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    Dominating,
    ConnectedDominating,
    TotalDominating,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WitnessSet {
    pub set: VertexSet,
    pub kind: WitnessKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonEdgeValue {
    pub u: usize,
    pub v: usize,
    pub gamma_c: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonEdgeWitnesses {
    pub u: usize,
    pub v: usize,
    pub sets: Vec<WitnessSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityReport {
    pub k: usize,
    pub is_critical: bool,
    pub base_gamma_c: usize,
    /// Non-edges whose addition leaves γc at `k` or above.
    pub failures: Vec<NonEdgeValue>,
    /// Every minimum connected dominating set of `G + uv`, per non-edge;
    /// filled only when requested.
    pub witnesses: Vec<NonEdgeWitnesses>,
}

pub fn dominates(g: &Graph, d: VertexSet, x: VertexSet) -> bool {
    x.is_subset(g.closed_union(d))
}

pub fn is_dominating(g: &Graph, d: VertexSet) -> bool {
    g.closed_union(d) == g.vertices()
}

pub fn is_connected_dominating(g: &Graph, d: VertexSet) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected("connected domination"));
    }
    Ok(is_dominating(g, d) && g.is_connected_subset(d))
}

pub fn is_total_dominating(g: &Graph, d: VertexSet) -> bool {
    g.open_union(d) == g.vertices()
}

fn max_closed_degree(g: &Graph) -> usize {
    g.rows().iter().map(|r| r.len() + 1).max().unwrap_or(1)
}

/// Depth-limited search: some vertex of `N[w]` must join `d` for the lowest
/// undominated `w`.
fn dom_search(g: &Graph, budget: usize, reach: usize, d: VertexSet, covered: VertexSet) -> Option<VertexSet> {
    let missing = covered.complement(g.order());
    let Some(w) = missing.first() else {
        return Some(d);
    };
    if budget == 0 || missing.len() > budget * reach {
        return None;
    }
    g.closed_nbrs(w)
        .iter()
        .find_map(|c| dom_search(g, budget - 1, reach, d.with(c), covered.union(g.closed_nbrs(c))))
}

/// A minimum dominating set.
pub fn minimum_dominating_set(g: &Graph) -> VertexSet {
    let reach = max_closed_degree(g);
    (1..=g.order())
        .find_map(|k| dom_search(g, k, reach, VertexSet::EMPTY, VertexSet::EMPTY))
        .expect("V(G) dominates")
}

pub fn gamma(g: &Graph) -> usize {
    minimum_dominating_set(g).len()
}

fn total_search(g: &Graph, budget: usize, reach: usize, d: VertexSet, covered: VertexSet) -> Option<VertexSet> {
    let missing = covered.complement(g.order());
    let Some(w) = missing.first() else {
        return Some(d);
    };
    if budget == 0 || missing.len() > budget * reach {
        return None;
    }
    g.nbrs(w)
        .iter()
        .find_map(|c| total_search(g, budget - 1, reach, d.with(c), covered.union(g.nbrs(c))))
}

fn check_no_isolated(g: &Graph) -> Result<()> {
    match (0..g.order()).find(|&v| g.nbrs(v).is_empty()) {
        Some(v) => Err(Error::IsolatedVertex(v)),
        None => Ok(()),
    }
}

/// Whether a total dominating set of size at most `k` exists.
pub fn has_total_dominating_set_within(g: &Graph, k: usize) -> Result<bool> {
    check_no_isolated(g)?;
    let reach = max_closed_degree(g);
    Ok(total_search(g, k, reach, VertexSet::EMPTY, VertexSet::EMPTY).is_some())
}

pub fn minimum_total_dominating_set(g: &Graph) -> Result<VertexSet> {
    check_no_isolated(g)?;
    let reach = max_closed_degree(g);
    Ok((2..=g.order())
        .find_map(|k| total_search(g, k, reach, VertexSet::EMPTY, VertexSet::EMPTY))
        .expect("V(G) totally dominates"))
}

pub fn gamma_t(g: &Graph) -> Result<usize> {
    minimum_total_dominating_set(g).map(VertexSet::len)
}

/// Visits every connected vertex set of size exactly `k`, each once
/// (extension by exclusive neighborhoods, rooted at the minimum vertex).
/// `prune(sub, remaining)` may cut a branch before it is extended.
struct ConnectedSets<'a, F, P> {
    g: &'a Graph,
    k: usize,
    visit: F,
    prune: P,
    nodes: u64,
    budget: u64,
}

impl<F, P> ConnectedSets<'_, F, P>
where
    F: FnMut(VertexSet) -> ControlFlow<()>,
    P: Fn(VertexSet, usize) -> bool,
{
    fn run(&mut self) -> Result<ControlFlow<()>> {
        for root in 0..self.g.order() {
            let sub = VertexSet::singleton(root);
            let higher = VertexSet::full(self.g.order()).difference(VertexSet::full(root + 1));
            let ext = self.g.nbrs(root).intersection(higher);
            if self.extend(sub, ext, root)?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    fn extend(&mut self, sub: VertexSet, mut ext: VertexSet, root: usize) -> Result<ControlFlow<()>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Budget {
                what: "connected dominating set enumeration nodes",
                limit: self.budget as usize,
                actual: self.nodes as usize,
            });
        }
        if sub.len() == self.k {
            return Ok((self.visit)(sub));
        }
        if (self.prune)(sub, self.k - sub.len()) {
            return Ok(ControlFlow::Continue(()));
        }
        let above_root = VertexSet::full(self.g.order()).difference(VertexSet::full(root + 1));
        let closed = self.g.closed_union(sub);
        while let Some(w) = ext.first() {
            ext = ext.without(w);
            let exclusive = self.g.nbrs(w).difference(closed).intersection(above_root);
            if self.extend(sub.with(w), ext.union(exclusive), root)?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

fn for_each_connected_dominating(
    g: &Graph,
    k: usize,
    budget: u64,
    visit: impl FnMut(VertexSet) -> ControlFlow<()>,
) -> Result<ControlFlow<()>> {
    let n = g.order();
    let reach = max_closed_degree(g);
    let mut walker = ConnectedSets {
        g,
        k,
        visit,
        prune: move |sub: VertexSet, remaining: usize| {
            g.closed_union(sub).complement(n).len() > remaining * reach
        },
        nodes: 0,
        budget,
    };
    walker.run()
}

/// Whether a connected dominating set of size at most `k` exists.
pub fn has_connected_dominating_set_within(g: &Graph, k: usize) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected("connected domination"));
    }
    let full = g.vertices();
    let n = g.order();
    if k >= n {
        return Ok(true);
    }
    // a connected dominating set extends to any larger size by adding a
    // neighbor, so size exactly k suffices
    match k {
        0 => Ok(false),
        1 => Ok((0..n).any(|v| g.closed_nbrs(v) == full)),
        2 => Ok(dominating_vertex_or_edge(g)),
        _ => {
            let found = for_each_connected_dominating(g, k, u64::MAX, |s| {
                if is_dominating(g, s) {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            })?;
            Ok(found.is_break())
        }
    }
}

fn dominating_vertex_or_edge(g: &Graph) -> bool {
    let full = g.vertices();
    (0..g.order()).any(|v| {
        let nv = g.closed_nbrs(v);
        nv == full || g.nbrs(v).iter().any(|u| u > v && nv.union(g.closed_nbrs(u)) == full)
    })
}

pub fn minimum_connected_dominating_set(g: &Graph) -> Result<VertexSet> {
    if !g.is_connected() {
        return Err(Error::Disconnected("connected domination"));
    }
    for k in 1..=g.order() {
        let mut hit = None;
        let _ = for_each_connected_dominating(g, k, u64::MAX, |s| {
            if is_dominating(g, s) {
                hit = Some(s);
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })?;
        if let Some(s) = hit {
            return Ok(s);
        }
    }
    unreachable!("V(G) is a connected dominating set of a connected graph")
}

pub fn gamma_c(g: &Graph) -> Result<usize> {
    minimum_connected_dominating_set(g).map(VertexSet::len)
}

/// Every connected dominating set of size γc, ordered by mask value.
pub fn all_min_connected_dominating_sets(g: &Graph) -> Result<Vec<WitnessSet>> {
    all_min_connected_dominating_sets_within(g, DEFAULT_ENUM_BUDGET)
}

pub fn all_min_connected_dominating_sets_within(g: &Graph, budget: u64) -> Result<Vec<WitnessSet>> {
    let k = gamma_c(g)?;
    let mut out = Vec::new();
    let _ = for_each_connected_dominating(g, k, budget, |s| {
        if is_dominating(g, s) {
            out.push(s);
        }
        ControlFlow::Continue(())
    })?;
    out.sort_unstable();
    Ok(out
        .into_iter()
        .map(|set| WitnessSet {
            set,
            kind: WitnessKind::ConnectedDominating,
        })
        .collect())
}

/// Whether `G + uv` has a connected dominating set of size at most two,
/// given that `G` itself has none. Only sets touching `u` or `v` can change.
#[inline]
fn plus_edge_drops_to_two(g: &Graph, u: usize, v: usize) -> bool {
    let full = g.vertices();
    let nu = g.closed_nbrs(u).with(v);
    let nv = g.closed_nbrs(v).with(u);
    nu == full
        || nv == full
        || nu.union(nv) == full
        || g.nbrs(u).iter().any(|x| nu.union(g.closed_nbrs(x)) == full)
        || g.nbrs(v).iter().any(|x| nv.union(g.closed_nbrs(x)) == full)
}

/// Fast predicate: `γc(G) = k` and every added edge lowers γc.
pub fn is_gamma_c_critical(g: &Graph, k: usize) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected("connected domination"));
    }
    if k == 3 {
        if dominating_vertex_or_edge(g) || !has_connected_dominating_set_within(g, 3)? {
            return Ok(false);
        }
        return Ok(g.non_edges().iter().all(|&(u, v)| plus_edge_drops_to_two(g, u, v)));
    }
    if gamma_c(g)? != k {
        return Ok(false);
    }
    for (u, v) in g.non_edges() {
        if !has_connected_dominating_set_within(&g.plus_edge(u, v), k.saturating_sub(1))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Full criticality report; `with_witnesses` additionally enumerates every
/// minimum connected dominating set of each `G + uv`.
pub fn is_k_gamma_c_critical(g: &Graph, k: usize, with_witnesses: bool) -> Result<CriticalityReport> {
    let base = gamma_c(g)?;
    let mut failures = Vec::new();
    let mut witnesses = Vec::new();
    for (u, v) in g.non_edges() {
        let h = g.plus_edge(u, v);
        let dropped = k > 0 && has_connected_dominating_set_within(&h, k - 1)?;
        if !dropped {
            failures.push(NonEdgeValue { u, v, gamma_c: gamma_c(&h)? });
        }
        if with_witnesses {
            witnesses.push(NonEdgeWitnesses {
                u,
                v,
                sets: all_min_connected_dominating_sets(&h)?,
            });
        }
    }
    Ok(CriticalityReport {
        k,
        is_critical: base == k && failures.is_empty(),
        base_gamma_c: base,
        failures,
        witnesses,
    })
}

/// `γt(G) = k` and `γt(G + uv) < k` for every non-edge.
pub fn is_k_gamma_t_critical(g: &Graph, k: usize) -> Result<bool> {
    if gamma_t(g)? != k {
        return Ok(false);
    }
    for (u, v) in g.non_edges() {
        if !has_total_dominating_set_within(&g.plus_edge(u, v), k.saturating_sub(1))? {
            return Ok(false);
        }
    }
    Ok(true)
}
