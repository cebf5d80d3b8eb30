//! Canonical forms and isomorphism tests for small graphs.
//!
//! Vertices are first split by iterated degree refinement; the canonical
//! form is then the lexicographically smallest upper-triangle bit string
//! (graph6 column order) over all relabelings that respect the refined
//! cell order. The permutation search is exhaustive within cells and is
//! only offered up to [`CANON_LIMIT`] vertices.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::set::VertexSet;

pub const CANON_LIMIT: usize = 12;

/// graph6 text of the canonically relabeled graph; equal iff isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm(pub String);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }
}

/// Stable vertex coloring for every graph in `gs`, computed jointly so that
/// equal colors across graphs mean equal refinement histories.
fn refine_joint(gs: &[&Graph]) -> Vec<Vec<u32>> {
    let mut colors: Vec<Vec<u32>> = gs
        .iter()
        .map(|g| (0..g.order()).map(|v| g.nbrs(v).len() as u32).collect())
        .collect();
    let mut classes = count_classes(&colors);
    loop {
        let mut table: BTreeMap<(u32, Vec<u32>), u32> = BTreeMap::new();
        let sigs: Vec<Vec<(u32, Vec<u32>)>> = gs
            .iter()
            .zip(&colors)
            .map(|(g, col)| {
                (0..g.order())
                    .map(|v| {
                        let mut ns: Vec<u32> = g.nbrs(v).iter().map(|u| col[u]).collect();
                        ns.sort_unstable();
                        (col[v], ns)
                    })
                    .collect()
            })
            .collect();
        for s in sigs.iter().flatten() {
            table.entry(s.clone()).or_insert(0);
        }
        for (rank, slot) in table.values_mut().enumerate() {
            *slot = rank as u32;
        }
        let next: Vec<Vec<u32>> = sigs
            .iter()
            .map(|vs| vs.iter().map(|s| table[s]).collect())
            .collect();
        let next_classes = count_classes(&next);
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn count_classes(colors: &[Vec<u32>]) -> usize {
    let mut all: Vec<u32> = colors.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

struct CanonSearch<'a> {
    g: &'a Graph,
    /// color required at each position
    slot_color: Vec<u32>,
    color: Vec<u32>,
    order: Vec<usize>,
    /// column bitmaps (bit i of column j = edge between positions i and j)
    cols: Vec<u64>,
    best: Option<Vec<u64>>,
    best_order: Vec<usize>,
}

impl CanonSearch<'_> {
    /// `tight` means the current prefix equals the best prefix; otherwise it
    /// is strictly smaller (or no best exists yet). Returns whether the best
    /// was replaced, after which the current prefix equals the new best.
    fn run(&mut self, pos: usize, used: VertexSet, mut tight: bool) -> bool {
        let n = self.g.order();
        if pos == n {
            if tight {
                return false;
            }
            self.best = Some(self.cols.clone());
            self.best_order = self.order.clone();
            return true;
        }
        let mut updated = false;
        let want = self.slot_color[pos];
        for v in 0..n {
            if used.contains(v) || self.color[v] != want {
                continue;
            }
            let nb = self.g.nbrs(v);
            let mut col = 0u64;
            for (i, &u) in self.order[..pos].iter().enumerate() {
                if nb.contains(u) {
                    // earlier positions are more significant
                    col |= 1 << (pos - 1 - i);
                }
            }
            let child_tight = match (&self.best, tight) {
                (Some(best), true) => match col.cmp(&best[pos]) {
                    Ordering::Greater => continue,
                    Ordering::Equal => true,
                    Ordering::Less => false,
                },
                _ => false,
            };
            self.order[pos] = v;
            self.cols[pos] = col;
            if self.run(pos + 1, used.with(v), child_tight) {
                updated = true;
                tight = true;
            }
        }
        updated
    }
}

/// Canonical labeling: `result[p]` is the original vertex placed at position `p`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    let n = g.order();
    if n > CANON_LIMIT {
        return Err(Error::CanonTooLarge {
            n,
            limit: CANON_LIMIT,
        });
    }
    let color = refine_joint(&[g]).pop().expect("one graph");
    let mut slot_color = color.clone();
    slot_color.sort_unstable();
    let mut search = CanonSearch {
        g,
        slot_color,
        color,
        order: vec![0; n],
        cols: vec![0; n],
        best: None,
        best_order: Vec::new(),
    };
    search.run(0, VertexSet::EMPTY, false);
    Ok(search.best_order)
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let order = canonical_labeling(g)?;
    let mut perm = vec![0; g.order()];
    for (p, &v) in order.iter().enumerate() {
        perm[v] = p;
    }
    Ok(CanonicalForm(to_graph6(&g.permute(&perm))))
}

/// Isomorphism test. Graphs within the canonical-form limit are compared by
/// canonical form; larger ones by refinement-guided backtracking.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence()
    {
        return Ok(false);
    }
    if g.order() <= CANON_LIMIT {
        return Ok(canonical_form(g)? == canonical_form(h)?);
    }
    Ok(find_isomorphism(g, h).is_some())
}

/// A bijection `m` with `uv ∈ E(g) ⇔ m[u]m[v] ∈ E(h)`, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.size() != h.size() {
        return None;
    }
    let mut cols = refine_joint(&[g, h]);
    let hc = cols.pop()?;
    let gc = cols.pop()?;
    let mut a = gc.clone();
    let mut b = hc.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }
    let n = g.order();
    // smallest cells first, then by index
    let mut cell_size = BTreeMap::new();
    for &c in &gc {
        *cell_size.entry(c).or_insert(0usize) += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (cell_size[&gc[v]], gc[v], v));
    let mut map = vec![usize::MAX; n];
    fn go(
        k: usize,
        order: &[usize],
        g: &Graph,
        h: &Graph,
        gc: &[u32],
        hc: &[u32],
        map: &mut [usize],
        used: VertexSet,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let v = order[k];
        for w in 0..h.order() {
            if used.contains(w) || hc[w] != gc[v] {
                continue;
            }
            let consistent = order[..k]
                .iter()
                .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
            if consistent {
                map[v] = w;
                if go(k + 1, order, g, h, gc, hc, map, used.with(w)) {
                    return true;
                }
            }
        }
        false
    }
    go(0, &order, g, h, &gc, &hc, &mut map, VertexSet::EMPTY).then_some(map)
}
