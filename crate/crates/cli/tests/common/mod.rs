//! Brute-force oracles over a boolean adjacency matrix, independent of the
//! library's solvers.
#![allow(dead_code)]

use cdcrit::Graph;

pub struct Naive {
    n: usize,
    adj: Vec<Vec<bool>>,
}

impl Naive {
    pub fn new(g: &Graph) -> Naive {
        let n = g.order();
        Naive {
            n,
            adj: (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect(),
        }
    }

    fn members(&self, mask: u64) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| mask >> v & 1 == 1)
    }

    pub fn components_within(&self, keep: u64) -> usize {
        let mut seen = 0u64;
        let mut count = 0;
        for s in self.members(keep) {
            if seen >> s & 1 == 1 {
                continue;
            }
            count += 1;
            seen |= 1 << s;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.members(keep) {
                    if seen >> v & 1 == 0 && self.adj[u][v] {
                        seen |= 1 << v;
                        stack.push(v);
                    }
                }
            }
        }
        count
    }

    fn full(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn components_without(&self, removed: u64) -> usize {
        self.components_within(self.full() & !removed)
    }

    fn dominates(&self, d: u64, total: bool) -> bool {
        (0..self.n).all(|v| self.members(d).any(|x| self.adj[x][v] || (!total && x == v)))
    }

    fn min_size(&self, ok: impl Fn(u64) -> bool) -> Option<usize> {
        (0u64..=self.full()).filter(|&m| ok(m)).map(|m| m.count_ones() as usize).min()
    }

    pub fn gamma(&self) -> usize {
        self.min_size(|m| self.dominates(m, false)).unwrap()
    }

    pub fn gamma_c(&self) -> Option<usize> {
        self.min_size(|m| m != 0 && self.dominates(m, false) && self.components_within(m) == 1)
    }

    pub fn gamma_t(&self) -> Option<usize> {
        self.min_size(|m| self.dominates(m, true))
    }

    pub fn alpha(&self) -> usize {
        (0u64..=self.full())
            .filter(|&m| self.members(m).all(|u| self.members(m).all(|v| !self.adj[u][v])))
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    pub fn kappa(&self) -> usize {
        let complete = (0..self.n).all(|u| (0..self.n).all(|v| u == v || self.adj[u][v]));
        if complete {
            return self.n - 1;
        }
        self.min_size(|m| self.components_without(m) >= 2).unwrap()
    }

    pub fn hamiltonian_path(&self, u: usize, v: usize) -> bool {
        fn go(nv: &Naive, at: usize, end: usize, used: u64, count: usize) -> bool {
            if count == nv.n {
                return at == end;
            }
            (0..nv.n).any(|w| {
                used >> w & 1 == 0
                    && nv.adj[at][w]
                    && (w != end || count + 1 == nv.n)
                    && go(nv, w, end, used | 1 << w, count + 1)
            })
        }
        go(self, u, v, 1 << u, 1)
    }

    pub fn hamiltonian_connected(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.hamiltonian_path(u, v)))
    }
}
