use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;
use crate::invariants;
use crate::set::VertexSet;

use super::{require_independent, CheckId, CheckReport, Subject, Witness};

/// A minimum cut set `S`, a maximum independent set `I`, and a split of the
/// components of `G - S` into two sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutIndependencePartition {
    pub cut: VertexSet,
    pub independent: VertexSet,
    pub h1: VertexSet,
    pub h2: VertexSet,
    pub i1: VertexSet,
    pub i2: VertexSet,
    pub alpha1: usize,
    pub alpha2: usize,
    pub p: usize,
}

impl CutIndependencePartition {
    pub fn new(cut: VertexSet, independent: VertexSet, h1: VertexSet, h2: VertexSet) -> Self {
        let i1 = independent.intersection(h1);
        let i2 = independent.intersection(h2);
        CutIndependencePartition {
            cut,
            independent,
            h1,
            h2,
            i1,
            i2,
            alpha1: i1.len(),
            alpha2: i2.len(),
            p: i1.len() + i2.len(),
        }
    }

    /// `|S \ I|`.
    pub fn cut_outside(&self) -> usize {
        self.cut.difference(self.independent).len()
    }
}

pub(super) fn lemma1(subject: &Subject) -> Result<CheckReport> {
    let id = CheckId::Lemma1;
    if !subject.critical3 {
        return Ok(CheckReport::not_applicable(id, "not 3-gamma_c-critical"));
    }
    let g = subject.g;
    for (u, v, sets) in subject.plus_edge_min_sets()? {
        let (u, v) = (*u, *v);
        let uv = VertexSet::from_vertices([u, v]);
        for w in sets {
            let d = w.set;
            let part = if d.len() != 2 {
                1
            } else if !d.intersects(uv) {
                2
            } else if (d.contains(u) && !d.contains(v) && g.nbrs(v).intersects(d))
                || (d.contains(v) && !d.contains(u) && g.nbrs(u).intersects(d))
            {
                3
            } else {
                continue;
            };
            return Ok(CheckReport::fail(id, Witness::NonEdgeSet { u, v, set: d, part }));
        }
    }
    Ok(CheckReport::pass(id))
}

/// For every non-edge `uv` of a 3-γc-critical graph, each γc-set of `G + uv`
/// has two vertices, meets `{u, v}`, and when it holds exactly one of them,
/// misses the other's neighborhood.
pub fn verify_lemma1(g: &Graph) -> Result<CheckReport> {
    lemma1(&Subject::new(g))
}

pub(super) fn lemma_w(subject: &Subject) -> Result<CheckReport> {
    let id = CheckId::LemmaW;
    if !subject.critical3 {
        return Ok(CheckReport::not_applicable(id, "not 3-gamma_c-critical"));
    }
    if subject.alpha < 3 {
        return Ok(CheckReport::not_applicable(id, "no independent triple"));
    }
    let g = subject.g;
    for (b1, b2, sets) in subject.plus_edge_min_sets()? {
        let (b1, b2) = (*b1, *b2);
        let pair = VertexSet::from_vertices([b1, b2]);
        let third = g
            .closed_union(pair)
            .complement(g.order())
            .first();
        let Some(b3) = third else { continue };
        if let Some(w) = sets
            .iter()
            .find(|w| w.set.len() != 2 || w.set.intersection(pair).len() != 1)
        {
            return Ok(CheckReport::fail(id, Witness::Triple { b1, b2, b3, set: w.set }));
        }
    }
    Ok(CheckReport::pass(id))
}

/// For every independent triple `b1, b2, b3`, each γc-set of `G + b1b2` is
/// `{b1, b}` or `{b2, b}` with `b ∉ {b1, b2}`.
pub fn verify_lemma_w(g: &Graph) -> Result<CheckReport> {
    lemma_w(&Subject::new(g))
}

/// Backtracking search for an ordering `a_1..a_p` of `set` and a path
/// `x_1..x_{p-1}` outside it with `{a_i, x_i}` a connected dominating set
/// of `G + a_i a_{i+1}`.
fn find_ordering(g: &Graph, set: VertexSet) -> Option<(Vec<usize>, Vec<usize>)> {
    let members = set.to_vec();
    let full = g.vertices();
    let outside = set.complement(g.order());
    // connectors[i][j]: x ∉ I with {a_i, x} ≻_c G + a_i a_j
    let connectors: Vec<Vec<VertexSet>> = members
        .iter()
        .map(|&a| {
            members
                .iter()
                .map(|&b| {
                    if a == b {
                        return VertexSet::EMPTY;
                    }
                    let na = g.closed_nbrs(a).with(b);
                    g.nbrs(a)
                        .intersection(outside)
                        .iter()
                        .filter(|&x| na.union(g.closed_nbrs(x)) == full)
                        .collect()
                })
                .collect()
        })
        .collect();

    struct Search<'s> {
        g: &'s Graph,
        connectors: &'s [Vec<VertexSet>],
        order: Vec<usize>,
        path: Vec<usize>,
    }
    impl Search<'_> {
        fn extend(&mut self, used: u64) -> bool {
            let p = self.connectors.len();
            if self.order.len() == p {
                return true;
            }
            let last = *self.order.last().expect("seeded");
            for next in 0..p {
                if used >> next & 1 == 1 {
                    continue;
                }
                let mut cands = self.connectors[last][next];
                if let Some(&prev) = self.path.last() {
                    cands = cands.intersection(self.g.nbrs(prev));
                }
                cands = cands.difference(self.path.iter().copied().collect());
                for x in cands {
                    self.order.push(next);
                    self.path.push(x);
                    if self.extend(used | 1 << next) {
                        return true;
                    }
                    self.order.pop();
                    self.path.pop();
                }
            }
            false
        }
    }

    let mut search = Search {
        g,
        connectors: &connectors,
        order: Vec::new(),
        path: Vec::new(),
    };
    for first in 0..members.len() {
        search.order = vec![first];
        search.path.clear();
        if search.extend(1 << first) {
            let order = search.order.iter().map(|&i| members[i]).collect();
            return Some((order, search.path));
        }
    }
    None
}

pub(super) fn lemma2_for(subject: &Subject, set: VertexSet) -> Result<CheckReport> {
    let id = CheckId::Lemma2;
    require_independent(subject.g, set)?;
    if !subject.critical3 {
        return Ok(CheckReport::not_applicable(id, "not 3-gamma_c-critical"));
    }
    if set.len() < 3 {
        return Ok(CheckReport::not_applicable(id, "independent set smaller than three"));
    }
    Ok(match find_ordering(subject.g, set) {
        Some((order, path)) => CheckReport::pass(id).with_witness(Witness::Ordering { order, path }),
        None => CheckReport::fail(id, Witness::IndependentSet { set }),
    })
}

/// Ordering-and-path property for one independent set of size at least three.
pub fn verify_lemma2(g: &Graph, set: VertexSet) -> Result<CheckReport> {
    lemma2_for(&Subject::new(g), set)
}

pub(super) fn lemma2_all(subject: &Subject) -> Result<CheckReport> {
    let id = CheckId::Lemma2;
    if !subject.critical3 {
        return Ok(CheckReport::not_applicable(id, "not 3-gamma_c-critical"));
    }
    if subject.alpha < 3 {
        return Ok(CheckReport::not_applicable(id, "alpha < 3"));
    }
    for set in invariants::all_maximum_independent_sets(subject.g) {
        let r = lemma2_for(subject, set)?;
        if r.status == super::Status::Fail {
            return Ok(r);
        }
    }
    Ok(CheckReport::pass(id))
}

/// [`verify_lemma2`] over every maximum independent set.
pub fn verify_lemma2_all(g: &Graph) -> Result<CheckReport> {
    lemma2_all(&Subject::new(g))
}

pub(super) fn lemma_p0(subject: &Subject, cut_budget: usize) -> Result<CheckReport> {
    let id = CheckId::LemmaP0;
    if !subject.critical3 {
        return Ok(CheckReport::not_applicable(id, "not 3-gamma_c-critical"));
    }
    if subject.kappa() < 2 {
        return Ok(CheckReport::not_applicable(id, "not 2-connected"));
    }
    let g = subject.g;
    let cuts = invariants::all_minimum_cut_sets_within(g, cut_budget)?;
    let indeps = invariants::all_maximum_independent_sets(g);
    let mut applicable = false;
    for &cut in &cuts {
        let comps = g.components_within(cut.complement(g.order()));
        let m = comps.len();
        // bipartitions with the first component fixed on side one
        for pick in 0..(1u64 << (m - 1)) - 1 {
            let mut h1 = comps[0];
            for (k, c) in comps.iter().enumerate().skip(1) {
                if pick >> (k - 1) & 1 == 1 {
                    h1 = h1.union(*c);
                }
            }
            let h2 = cut.union(h1).complement(g.order());
            if h1.len() < 2 || h2.len() < 2 {
                continue;
            }
            for &set in &indeps {
                let part = CutIndependencePartition::new(cut, set, h1, h2);
                if part.p < 3 {
                    continue;
                }
                applicable = true;
                if part.cut_outside() + 1 < part.p {
                    return Ok(CheckReport::fail(id, Witness::Partition(part)));
                }
            }
        }
    }
    Ok(if applicable {
        CheckReport::pass(id)
    } else {
        CheckReport::not_applicable(id, "no cut/independent-set split meets p >= 3, |H1|, |H2| >= 2")
    })
}

/// `|S \ I| ≥ p − 1` over every minimum cut set, maximum independent set and
/// split of `G - S` into two sides of at least two vertices with `p ≥ 3`.
pub fn verify_lemma_p0(g: &Graph, cut_budget: usize) -> Result<CheckReport> {
    lemma_p0(&Subject::new(g), cut_budget)
}
