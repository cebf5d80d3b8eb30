//! Brute-force reference implementations used as test oracles. These work on
//! a plain boolean adjacency matrix and share no code with the library
//! algorithms they check.
#![allow(dead_code)]

use cdcrit::Graph;

pub struct Naive {
    pub n: usize,
    adj: Vec<Vec<bool>>,
}

impl Naive {
    pub fn new(g: &Graph) -> Naive {
        let n = g.order();
        let adj = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
        Naive { n, adj }
    }

    pub fn adj(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    fn members(&self, mask: u64) -> Vec<usize> {
        (0..self.n).filter(|&v| mask >> v & 1 == 1).collect()
    }

    /// Connectivity of the subgraph induced by `mask`; the empty set counts
    /// as disconnected.
    pub fn induced_connected(&self, mask: u64) -> bool {
        let vs = self.members(mask);
        let Some(&start) = vs.first() else { return false };
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &v in &vs {
                if !seen[v] && self.adj[u][v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        vs.iter().all(|&v| seen[v])
    }

    pub fn connected(&self) -> bool {
        self.induced_connected((1u64 << self.n) - 1)
    }

    pub fn components_without(&self, removed: u64) -> usize {
        let full = (1u64 << self.n) - 1;
        let rest = full & !removed;
        let mut seen = 0u64;
        let mut count = 0;
        for s in self.members(rest) {
            if seen >> s & 1 == 1 {
                continue;
            }
            count += 1;
            let mut stack = vec![s];
            seen |= 1 << s;
            while let Some(u) = stack.pop() {
                for v in self.members(rest) {
                    if seen >> v & 1 == 0 && self.adj[u][v] {
                        seen |= 1 << v;
                        stack.push(v);
                    }
                }
            }
        }
        count
    }

    fn dominates(&self, mask: u64, total: bool) -> bool {
        (0..self.n).all(|v| {
            (0..self.n).any(|d| mask >> d & 1 == 1 && (self.adj[d][v] || (!total && d == v)))
        })
    }

    fn smallest(&self, ok: impl Fn(u64) -> bool) -> Option<usize> {
        let mut best: Option<usize> = None;
        for mask in 0u64..1 << self.n {
            let k = mask.count_ones() as usize;
            if best.is_some_and(|b| k >= b) {
                continue;
            }
            if ok(mask) {
                best = Some(k);
            }
        }
        best
    }

    pub fn gamma(&self) -> usize {
        self.smallest(|m| self.dominates(m, false)).expect("V dominates")
    }

    pub fn gamma_c(&self) -> Option<usize> {
        self.smallest(|m| self.dominates(m, false) && self.induced_connected(m))
    }

    pub fn gamma_t(&self) -> Option<usize> {
        self.smallest(|m| self.dominates(m, true))
    }

    pub fn alpha(&self) -> usize {
        (0u64..1 << self.n)
            .filter(|&m| {
                let vs = self.members(m);
                vs.iter().all(|&u| vs.iter().all(|&v| !self.adj[u][v]))
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|u| (0..self.n).all(|v| u == v || self.adj[u][v]))
    }

    /// Smallest disconnecting set, or `n - 1` for complete graphs.
    pub fn kappa(&self) -> usize {
        if self.is_complete() {
            return self.n.saturating_sub(1);
        }
        self.smallest(|m| self.components_without(m) >= 2).expect("non-complete graph has a cut")
    }

    pub fn minimum_cuts(&self) -> Vec<u64> {
        if self.is_complete() {
            return Vec::new();
        }
        let k = self.kappa();
        (0u64..1 << self.n)
            .filter(|m| m.count_ones() as usize == k && self.components_without(*m) >= 2)
            .collect()
    }

    pub fn hamiltonian_path(&self, u: usize, v: usize) -> bool {
        fn go(nv: &Naive, at: usize, end: usize, visited: &mut Vec<bool>, count: usize) -> bool {
            if count == nv.n {
                return at == end;
            }
            for w in 0..nv.n {
                if !visited[w] && nv.adj[at][w] && (w != end || count + 1 == nv.n) {
                    visited[w] = true;
                    if go(nv, w, end, visited, count + 1) {
                        return true;
                    }
                    visited[w] = false;
                }
            }
            false
        }
        let mut visited = vec![false; self.n];
        visited[u] = true;
        go(self, u, v, &mut visited, 1)
    }

    pub fn hamiltonian_connected(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.hamiltonian_path(u, v)))
    }

    pub fn plus(&self, u: usize, v: usize) -> Naive {
        let mut adj = self.adj.clone();
        adj[u][v] = true;
        adj[v][u] = true;
        Naive { n: self.n, adj }
    }

    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.adj[u][v])
            .collect()
    }

    /// k-γc-critical from the definition: γc = k and every added edge lowers it.
    pub fn gamma_c_critical(&self, k: usize) -> bool {
        self.gamma_c() == Some(k)
            && self.non_edges().iter().all(|&(u, v)| self.plus(u, v).gamma_c().unwrap() < k)
    }
}

/// Every labeled graph on `n` vertices, edges taken in the order
/// (0,1), (0,2), (1,2), (0,3), ...
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

pub fn connected_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    labeled_graphs(n).filter(|g| Naive::new(g).connected())
}

/// A random graph with edge probability `p`.
pub fn random_graph(rng: &mut impl rand::Rng, n: usize, p: f64) -> Graph {
    Graph::from_fn(n, |_, _| rng.gen_bool(p)).unwrap()
}
