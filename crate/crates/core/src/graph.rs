//! Simple undirected graphs on at most 64 vertices, one adjacency word per
//! vertex.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::set::VertexSet;

pub const MAX_ORDER: usize = 64;

/// Immutable simple graph; row `v` of `adj` is the open neighborhood `N(v)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({}, {:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Graph> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::Capacity { n });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            g.link(u, v);
        }
        g.debug_check();
        Ok(g)
    }

    /// Builds from raw adjacency rows, validating symmetry and irreflexivity.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Graph> {
        let n = rows.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::Capacity { n });
        }
        let full = VertexSet::full(n);
        for (v, row) in rows.iter().enumerate() {
            if row.contains(v) {
                return Err(Error::SelfLoop(v));
            }
            if !row.is_subset(full) {
                return Err(Error::VertexOutOfRange {
                    v: row.difference(full).first().unwrap_or(n),
                    n,
                });
            }
            for u in *row {
                if !rows[u].contains(v) {
                    return Err(Error::VertexOutOfRange { v: u, n });
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    /// Builds a graph whose adjacency is decided by `adjacent(u, v)` for
    /// every pair `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for v in 1..n {
            for u in 0..v {
                if adjacent(u, v) {
                    g.link(u, v);
                }
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        Graph::from_fn(n, |_, _| true)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1 && n > 2))
    }

    pub fn path(n: usize) -> Result<Graph> {
        Graph::from_fn(n, |u, v| v == u + 1)
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Result<Graph> {
        Graph::from_fn(leaves + 1, |u, _| u == 0)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Adjacency rows, indexed by vertex.
    #[inline]
    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v])
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v].with(v))
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    /// Unchecked `N(v)` for hot loops.
    #[inline]
    pub fn nbrs(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Unchecked `N[v]` for hot loops.
    #[inline]
    pub fn closed_nbrs(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Union of the closed neighborhoods of `s`.
    #[inline]
    pub fn closed_union(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(s, |acc, v| acc.union(self.adj[v]))
    }

    /// Union of the open neighborhoods of `s`.
    #[inline]
    pub fn open_union(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for v in 0..self.n {
            for u in self.adj[v].iter().take_while(|&u| u < v) {
                out.push((u, v));
            }
        }
        out
    }

    /// Unordered non-adjacent pairs `(u, v)` with `u < v`, ordered by `v` then `u`.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for v in 0..self.n {
            let missing = self.adj[v].complement(v).without(v);
            out.extend(missing.iter().map(|u| (u, v)));
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(|r| r.len()).collect();
        d.sort_unstable();
        d
    }

    /// `G + uv` as a new graph. Adding an existing edge returns an equal graph.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.link(u, v);
        Ok(g)
    }

    /// Unchecked `G + uv`.
    #[inline]
    pub fn plus_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.link(u, v);
        g
    }

    /// Induced subgraph on `V \ s`. The returned map sends new index `i` to
    /// the original vertex it came from.
    pub fn remove_vertices(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if !s.is_subset(self.vertices()) {
            let v = s.difference(self.vertices()).first().unwrap_or(self.n);
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        let keep = s.complement(self.n);
        if keep.is_empty() {
            return Err(Error::EmptyResult);
        }
        Ok((self.induced(keep), keep.to_vec()))
    }

    /// Induced subgraph on `keep`, relabeled by increasing original index.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let map = keep.to_vec();
        let mut pos = [usize::MAX; 64];
        for (i, &v) in map.iter().enumerate() {
            pos[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| self.adj[v].intersection(keep).iter().map(|u| pos[u]).collect())
            .collect();
        Graph { n: map.len(), adj }
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for v in 0..self.n {
            adj[perm[v]] = self.adj[v].iter().map(|u| perm[u]).collect();
        }
        Graph { n: self.n, adj }
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        let adj = (0..self.n)
            .map(|v| full.difference(self.adj[v]).without(v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.open_union(frontier).intersection(within).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// Whether the subgraph induced by `s` is connected. The empty set is not.
    pub fn is_connected_subset(&self, s: VertexSet) -> bool {
        match s.first() {
            None => false,
            Some(v) => self.reach(v, s) == s,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_subset(self.vertices())
    }

    /// Components of the subgraph induced by `within`, ordered by minimum vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.reach(v, within);
            out.push(c);
            rest = rest.difference(c);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Number of components of `G - s`, counted in place without relabeling.
    pub fn components_after_removing(&self, s: VertexSet) -> usize {
        self.components_within(s.complement(self.n)).len()
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.adj[v]))
    }

    /// Graphviz rendering; `names` supplies per-vertex labels when present.
    pub fn to_dot(&self, names: Option<&[String]>) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            let label = names
                .and_then(|ns| ns.get(v))
                .cloned()
                .unwrap_or_else(|| v.to_string());
            let _ = writeln!(out, "  {v} [label=\"{label}\"];");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        Ok(())
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    #[inline]
    fn link(&mut self, u: usize, v: usize) {
        self.adj[u] = self.adj[u].with(v);
        self.adj[v] = self.adj[v].with(u);
    }

    fn debug_check(&self) {
        debug_assert!(self.is_well_formed());
    }

    /// Symmetric, loop-free, and confined to `0..n`.
    pub fn is_well_formed(&self) -> bool {
        let full = self.vertices();
        (0..self.n).all(|v| {
            !self.adj[v].contains(v)
                && self.adj[v].is_subset(full)
                && self.adj[v].iter().all(|u| self.adj[u].contains(v))
        })
    }
}
