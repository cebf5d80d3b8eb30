//! Exhaustive enumeration of small labeled graphs.

use std::collections::HashSet;

use cdcrit::canon::canonical_form;
use cdcrit::{Graph, VertexSet};

/// Largest order for labeled enumeration.
pub const LABELED_LIMIT: usize = 8;
/// Largest order for enumeration with isomorphism dedup.
pub const DEDUP_LIMIT: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerateError {
    #[error("labeled enumeration is limited to n <= {LABELED_LIMIT}, got {0}")]
    Labeled(usize),
    #[error("enumeration with dedup is limited to n <= {DEDUP_LIMIT}, got {0}")]
    Dedup(usize),
    #[error("order must be at least 1")]
    Empty,
}

/// Connected labeled graphs on `n` vertices in ascending mask order, where
/// bit `i` of the mask is the `i`-th vertex pair in graph6 column order
/// `(0,1), (0,2), (1,2), (0,3), ...`.
///
/// Graphs with minimum degree below `min_degree` are skipped before the
/// connectivity test and counted in `below_min_degree`.
pub struct LabeledGraphs {
    n: usize,
    min_degree: usize,
    incidence: Vec<u64>,
    next: u64,
    end: u64,
    /// Labeled graphs, connected or not, dropped by the degree bound.
    pub below_min_degree: u64,
}

impl LabeledGraphs {
    pub fn new(n: usize, min_degree: usize) -> Result<LabeledGraphs, EnumerateError> {
        if n == 0 {
            return Err(EnumerateError::Empty);
        }
        if n > LABELED_LIMIT {
            return Err(EnumerateError::Labeled(n));
        }
        let pairs = n * (n - 1) / 2;
        let mut incidence = vec![0u64; n];
        let mut bit = 0;
        for v in 1..n {
            for u in 0..v {
                incidence[u] |= 1 << bit;
                incidence[v] |= 1 << bit;
                bit += 1;
            }
        }
        Ok(LabeledGraphs {
            n,
            min_degree,
            incidence,
            next: 0,
            end: 1 << pairs,
            below_min_degree: 0,
        })
    }

    fn rows(&self, mask: u64) -> [u64; LABELED_LIMIT] {
        let mut rows = [0u64; LABELED_LIMIT];
        let mut offset = 0;
        for v in 1..self.n {
            let mut col = (mask >> offset) & ((1 << v) - 1);
            rows[v] = col;
            while col != 0 {
                let u = col.trailing_zeros() as usize;
                rows[u] |= 1 << v;
                col &= col - 1;
            }
            offset += v;
        }
        rows
    }

    fn connected_rows(&self, rows: &[u64]) -> bool {
        let full = (1u64 << self.n) - 1;
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                next |= rows[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == full
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            let low_degree = self
                .incidence
                .iter()
                .any(|&inc| ((mask & inc).count_ones() as usize) < self.min_degree);
            if low_degree {
                self.below_min_degree += 1;
                continue;
            }
            let rows = self.rows(mask);
            if !self.connected_rows(&rows[..self.n]) {
                continue;
            }
            let rows = rows[..self.n].iter().map(|&r| VertexSet(r)).collect();
            return Some(Graph::from_rows(rows).expect("rows are symmetric"));
        }
        None
    }
}

/// All connected graphs on `n` vertices: labeled (n ≤ 8), or one
/// representative per isomorphism class when `dedup` (n ≤ 7), the first one
/// met in mask order.
pub fn enumerate_connected_graphs(
    n: usize,
    dedup: bool,
) -> Result<Box<dyn Iterator<Item = Graph> + Send>, EnumerateError> {
    if dedup && n > DEDUP_LIMIT {
        return Err(EnumerateError::Dedup(n));
    }
    let labeled = LabeledGraphs::new(n, 0)?;
    if !dedup {
        return Ok(Box::new(labeled));
    }
    let mut seen = HashSet::new();
    Ok(Box::new(labeled.filter(move |g| {
        seen.insert(canonical_form(g).expect("order within canonical limit"))
    })))
}
