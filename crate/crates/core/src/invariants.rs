//! Exact independence number, vertex connectivity and minimum degree, plus
//! exhaustive enumeration of maximum independent sets and minimum cut sets.

use serde::{Deserialize, Serialize};

use crate::domination;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::{subsets_of_size, VertexSet};

/// Largest order accepted by [`all_minimum_cut_sets`] unless a budget is given.
pub const DEFAULT_CUT_BUDGET: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantProfile {
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub kappa: Option<usize>,
    pub alpha: usize,
    pub gamma: usize,
    pub gamma_c: Option<usize>,
    pub gamma_t: Option<usize>,
    pub connected: bool,
}

pub fn min_degree(g: &Graph) -> usize {
    g.rows().iter().map(|r| r.len()).min().unwrap_or(0)
}

/// Partitions `cand` greedily into cliques of `g`; the count bounds the
/// independence number of `G[cand]` from above.
fn clique_cover_bound(g: &Graph, mut cand: VertexSet) -> usize {
    let mut parts = 0;
    while let Some(v) = cand.first() {
        let mut clique = VertexSet::singleton(v);
        let mut ext = cand.intersection(g.nbrs(v));
        while let Some(w) = ext.first() {
            clique = clique.with(w);
            ext = ext.intersection(g.nbrs(w));
        }
        cand = cand.difference(clique);
        parts += 1;
    }
    parts
}

struct MisSearch<'a> {
    g: &'a Graph,
    best: usize,
    best_set: VertexSet,
    /// When set, collect every independent set of exactly this size.
    target: Option<usize>,
    found: Vec<VertexSet>,
}

impl MisSearch<'_> {
    fn expand(&mut self, cur: VertexSet, cand: VertexSet) {
        let size = cur.len();
        let Some(v) = cand.first() else {
            match self.target {
                Some(t) if size == t => self.found.push(cur),
                None if size > self.best => {
                    self.best = size;
                    self.best_set = cur;
                }
                _ => {}
            }
            return;
        };
        let bound = size + clique_cover_bound(self.g, cand);
        match self.target {
            Some(t) if bound < t => return,
            None if bound <= self.best => return,
            _ => {}
        }
        // include v, then exclude it
        self.expand(cur.with(v), cand.without(v).difference(self.g.nbrs(v)));
        self.expand(cur, cand.without(v));
    }
}

/// Independence number together with the lowest-index-first witness found.
pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    let mut s = MisSearch {
        g,
        best: 0,
        best_set: VertexSet::EMPTY,
        target: None,
        found: Vec::new(),
    };
    s.expand(VertexSet::EMPTY, g.vertices());
    s.best_set
}

pub fn independence_number(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}

/// Every independent set of size α, ordered by mask value.
pub fn all_maximum_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let alpha = independence_number(g);
    let mut s = MisSearch {
        g,
        best: 0,
        best_set: VertexSet::EMPTY,
        target: Some(alpha),
        found: Vec::new(),
    };
    s.expand(VertexSet::EMPTY, g.vertices());
    s.found.sort_unstable();
    s.found
}

/// Vertex-split flow network for counting internally disjoint paths. Node
/// `2v` is `v_in`, `2v + 1` is `v_out`; rows are bitsets over nodes.
///
/// Every vertex other than the terminals carries at most one unit, so each
/// arc holds flow 0 or 1 and the residual graph is three bitsets per node:
/// unsaturated unit arcs, uncapacitated arcs, and reversed arcs with flow.
struct SplitFlow {
    unit: Vec<u128>,
    open: Vec<u128>,
    flow: Vec<u128>,
    back: Vec<u128>,
    prev: Vec<usize>,
}

impl SplitFlow {
    fn new(g: &Graph) -> SplitFlow {
        let n = g.order();
        let nodes = 2 * n;
        let mut open = vec![0u128; nodes];
        let mut unit = vec![0u128; nodes];
        for v in 0..n {
            unit[2 * v] = 1 << (2 * v + 1);
            for u in g.nbrs(v) {
                open[2 * v + 1] |= 1 << (2 * u);
            }
        }
        SplitFlow {
            unit,
            open,
            flow: vec![0; nodes],
            back: vec![0; nodes],
            prev: vec![0; nodes],
        }
    }

    fn residual(&self, a: usize) -> u128 {
        (self.unit[a] & !self.flow[a]) | self.open[a] | self.back[a]
    }

    /// Disjoint `s`–`t` paths for non-adjacent `s`, `t`, capped at `limit`.
    fn paths(&mut self, s: usize, t: usize, limit: usize) -> usize {
        self.flow.fill(0);
        self.back.fill(0);
        let source = 2 * s + 1;
        let sink = 2 * t;
        let mut count = 0;
        while count < limit {
            let mut seen: u128 = 1 << source;
            let mut frontier: u128 = 1 << source;
            while frontier != 0 && seen >> sink & 1 == 0 {
                let mut next = 0u128;
                while frontier != 0 {
                    let a = frontier.trailing_zeros() as usize;
                    frontier &= frontier - 1;
                    let mut fresh = self.residual(a) & !seen & !next;
                    next |= fresh;
                    while fresh != 0 {
                        let b = fresh.trailing_zeros() as usize;
                        fresh &= fresh - 1;
                        self.prev[b] = a;
                    }
                }
                seen |= next;
                frontier = next;
            }
            if seen >> sink & 1 == 0 {
                break;
            }
            let mut b = sink;
            while b != source {
                let a = self.prev[b];
                if self.back[a] >> b & 1 == 1 {
                    // cancel flow on b -> a
                    self.back[a] &= !(1 << b);
                    self.flow[b] &= !(1 << a);
                } else {
                    self.flow[a] |= 1 << b;
                    self.back[b] |= 1 << a;
                }
                b = a;
            }
            count += 1;
        }
        count
    }
}

/// Vertex connectivity κ; `n - 1` for complete graphs.
pub fn connectivity(g: &Graph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected("connectivity"));
    }
    let n = g.order();
    let mut best = n - 1;
    // Some vertex among the first κ+1 lies outside a minimum cut, and the
    // lowest such vertex has a separated partner of higher index.
    let mut net = SplitFlow::new(g);
    let mut u = 0;
    while u < n && u <= best {
        for v in g.nbrs(u).complement(n).without(u) {
            if v > u {
                best = best.min(net.paths(u, v, best));
            }
        }
        u += 1;
    }
    Ok(best)
}

pub fn is_cut_set(g: &Graph, s: VertexSet) -> bool {
    let rest = s.complement(g.order());
    !rest.is_empty() && !g.is_connected_subset(rest)
}

/// Every cut set of size κ, ordered by mask value.
pub fn all_minimum_cut_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    all_minimum_cut_sets_within(g, DEFAULT_CUT_BUDGET)
}

pub fn all_minimum_cut_sets_within(g: &Graph, max_order: usize) -> Result<Vec<VertexSet>> {
    if g.order() > max_order {
        return Err(Error::Budget {
            what: "minimum cut set enumeration",
            limit: max_order,
            actual: g.order(),
        });
    }
    let kappa = connectivity(g)?;
    if kappa == g.order() - 1 {
        return Ok(Vec::new());
    }
    Ok(subsets_of_size(g.vertices(), kappa)
        .filter(|&s| is_cut_set(g, s))
        .collect())
}

/// All invariants; connectivity-dependent fields are `None` on disconnected
/// graphs and `gamma_t` is `None` when an isolated vertex exists.
pub fn profile(g: &Graph) -> InvariantProfile {
    let connected = g.is_connected();
    InvariantProfile {
        n: g.order(),
        m: g.size(),
        delta: min_degree(g),
        kappa: connected.then(|| connectivity(g).expect("connected")),
        alpha: independence_number(g),
        gamma: domination::gamma(g),
        gamma_c: domination::gamma_c(g).ok(),
        gamma_t: domination::gamma_t(g).ok(),
        connected,
    }
}
