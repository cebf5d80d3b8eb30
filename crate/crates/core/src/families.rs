//! Constructors for the graph families built from joins and cliques: the
//! cut-vertex graphs over a star forest, and the classes 𝒢₁, 𝒢₂, 𝒢₃.
//!
//! Every constructor returns the graph with a [`Layout`] naming each vertex
//! and each named vertex group. Vertex order follows role order: for 𝒢₁
//! that is `a0..as`, then `B0..B(s-1)`, then `x`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "star-forest")]
    StarForest,
    #[serde(rename = "cutvertex-G1")]
    CutVertexG1,
    #[serde(rename = "cutvertex-G2")]
    CutVertexG2,
    #[serde(rename = "classG1")]
    ClassG1,
    #[serde(rename = "classG2")]
    ClassG2,
    #[serde(rename = "classG3")]
    ClassG3,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::StarForest,
        Family::CutVertexG1,
        Family::CutVertexG2,
        Family::ClassG1,
        Family::ClassG2,
        Family::ClassG3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::StarForest => "star-forest",
            Family::CutVertexG1 => "cutvertex-G1",
            Family::CutVertexG2 => "cutvertex-G2",
            Family::ClassG1 => "classG1",
            Family::ClassG2 => "classG2",
            Family::ClassG3 => "classG3",
        }
    }
}

/// One family member: `family:p1,p2,...`. For `cutvertex-G2` the last
/// parameter is `|U|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, params: &[usize]) -> FamilySpec {
        FamilySpec {
            family,
            params: params.to_vec(),
        }
    }

    pub fn build(&self) -> Result<(Graph, Layout)> {
        let p = &self.params;
        match self.family {
            Family::StarForest => build_star_forest(p),
            Family::CutVertexG1 => build_cutvertex_g1(p),
            Family::CutVertexG2 => match p.split_last() {
                Some((&u, stars)) => build_cutvertex_g2(stars, u),
                None => Err(params_error(Family::CutVertexG2, "needs n1,..,nr,|U|")),
            },
            Family::ClassG1 => build_class_g1(p),
            Family::ClassG2 => match p[..] {
                [j1, j2] => build_class_g2(j1, j2),
                _ => Err(params_error(Family::ClassG2, "needs exactly two parameters j1,j2")),
            },
            Family::ClassG3 => build_class_g3(p),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        write!(f, "{}:{}", self.family.name(), ps.join(","))
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let syntax = || Error::FamilySyntax(s.to_string());
        let (name, rest) = s.trim().split_once(':').ok_or_else(syntax)?;
        let family = Family::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(syntax)?;
        let params = rest
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| syntax()))
            .collect::<Result<Vec<_>>>()?;
        Ok(FamilySpec { family, params })
    }
}

/// Role names for the vertices of a constructed graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Layout {
    /// Name of each vertex, by index.
    pub names: Vec<String>,
    /// Named vertex groups (`B0`, `J1`, `M2`, `U`, ...), including singletons.
    pub groups: BTreeMap<String, VertexSet>,
}

impl Layout {
    fn push(&mut self, name: String, group: &str) -> usize {
        let v = self.names.len();
        self.names.push(name.clone());
        let g = self.groups.entry(group.to_string()).or_default();
        *g = g.with(v);
        if name != group {
            self.groups.insert(name, VertexSet::singleton(v));
        }
        v
    }

    /// The single vertex named `role`.
    pub fn vertex(&self, role: &str) -> usize {
        let s = self.set(role);
        assert_eq!(s.len(), 1, "role {role} is not a single vertex");
        s.first().expect("non-empty")
    }

    pub fn set(&self, role: &str) -> VertexSet {
        *self
            .groups
            .get(role)
            .unwrap_or_else(|| panic!("layout has no role {role}"))
    }

    pub fn get(&self, role: &str) -> Option<VertexSet> {
        self.groups.get(role).copied()
    }
}

fn params_error(family: Family, rule: &str) -> Error {
    Error::FamilyParams {
        family: family.name(),
        rule: rule.to_string(),
    }
}

fn check_order(family: Family, n: usize) -> Result<()> {
    if n > MAX_ORDER {
        return Err(params_error(family, &format!("order {n} exceeds {MAX_ORDER} vertices")));
    }
    Ok(())
}

fn check_stars(family: Family, stars: &[usize]) -> Result<()> {
    if stars.len() < 2 || stars.iter().any(|&k| k == 0) {
        return Err(params_error(family, "requires r >= 2 stars, each n_i >= 1"));
    }
    Ok(())
}

/// Adjacency builder over a layout.
struct Builder {
    layout: Layout,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn join(&mut self, a: VertexSet, b: VertexSet) {
        for u in a {
            for v in b.without(u) {
                if u < v || !a.contains(v) {
                    self.edges.push((u, v));
                }
            }
        }
    }

    fn clique(&mut self, s: VertexSet) {
        self.join(s, s);
    }

    fn finish(self) -> Result<(Graph, Layout)> {
        let g = Graph::from_edges(self.layout.names.len(), &self.edges)?;
        Ok((g, self.layout))
    }
}

fn star_forest_layout(stars: &[usize]) -> Layout {
    let mut layout = Layout::default();
    for (j, &leaves) in stars.iter().enumerate() {
        let j = j + 1;
        layout.push(format!("c{j}"), "C");
        for i in 1..=leaves {
            layout.push(format!("w{j}_{i}"), "W");
        }
    }
    layout
}

/// Star-forest edges: each center `c_j` to its own leaves `w^j_i`.
fn star_forest_edges(layout: &Layout, stars: &[usize]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (j, &leaves) in stars.iter().enumerate() {
        let c = layout.vertex(&format!("c{}", j + 1));
        for i in 1..=leaves {
            edges.push((c, layout.vertex(&format!("w{}_{i}", j + 1))));
        }
    }
    edges
}

/// Disjoint union of stars `K_{1,n_1} ∪ … ∪ K_{1,n_r}`.
pub fn build_star_forest(stars: &[usize]) -> Result<(Graph, Layout)> {
    check_stars(Family::StarForest, stars)?;
    check_order(Family::StarForest, stars.len() + stars.iter().sum::<usize>())?;
    let layout = star_forest_layout(stars);
    let edges = star_forest_edges(&layout, stars);
    Builder { layout, edges }.finish()
}

fn cutvertex_base(family: Family, stars: &[usize], extra: usize) -> Result<Builder> {
    check_stars(family, stars)?;
    check_order(family, stars.len() + stars.iter().sum::<usize>() + 2 + extra)?;
    let mut layout = star_forest_layout(stars);
    let h = Graph::from_edges(layout.names.len(), &star_forest_edges(&layout, stars))?;
    let x = layout.push("x".into(), "x");
    layout.push("y".into(), "y");
    let mut b = Builder {
        edges: h.complement().edges(),
        layout,
    };
    b.edges.push((x, x + 1));
    let leaves = b.layout.set("W");
    b.join(VertexSet::singleton(x), leaves);
    Ok(b)
}

/// Complement of the star forest, plus the pendant edge `xy` and `x` joined
/// to every leaf.
pub fn build_cutvertex_g1(stars: &[usize]) -> Result<(Graph, Layout)> {
    cutvertex_base(Family::CutVertexG1, stars, 0)?.finish()
}

/// As [`build_cutvertex_g1`] plus `|U| = u_count` vertices, each adjacent to
/// everything except `x`, `y` and itself.
pub fn build_cutvertex_g2(stars: &[usize], u_count: usize) -> Result<(Graph, Layout)> {
    if u_count == 0 {
        return Err(params_error(Family::CutVertexG2, "requires |U| >= 1"));
    }
    let mut b = cutvertex_base(Family::CutVertexG2, stars, u_count)?;
    for i in 1..=u_count {
        b.layout.push(format!("u{i}"), "U");
    }
    let xy = VertexSet::from_vertices([b.layout.vertex("x"), b.layout.vertex("y")]);
    let rest = VertexSet::full(b.layout.names.len()).difference(xy);
    b.join(b.layout.set("U"), rest);
    b.finish()
}

/// The class 𝒢₁(b₀,…,b_{s−1}); `b` is the first vertex of `B0`.
pub fn build_class_g1(sizes: &[usize]) -> Result<(Graph, Layout)> {
    let family = Family::ClassG1;
    let s = sizes.len();
    if s < 2 || sizes.iter().any(|&b| b == 0) {
        return Err(params_error(family, "requires s >= 2 and every b_i >= 1"));
    }
    check_order(family, s + 2 + sizes.iter().sum::<usize>())?;
    let mut layout = Layout::default();
    for i in 0..=s {
        layout.push(format!("a{i}"), "A");
    }
    for (i, &bi) in sizes.iter().enumerate() {
        for k in 0..bi {
            let name = if i == 0 && k == 0 { "b".to_string() } else { format!("B{i}_{k}") };
            layout.push(name, &format!("B{i}"));
        }
    }
    layout.push("x".into(), "x");
    let n = layout.names.len();
    let one = |v: usize| VertexSet::singleton(v);
    let a = |i: usize| layout.vertex(&format!("a{i}"));
    let bset = |i: usize| layout.set(&format!("B{i}"));
    let all_b = (0..s).fold(VertexSet::EMPTY, |acc, i| acc.union(bset(i)));
    let upper_b = all_b.difference(bset(0));
    let x = layout.vertex("x");
    let b0 = layout.vertex("b");

    let mut edges = Builder { layout: Layout::default(), edges: Vec::new() };
    edges.join(one(a(0)), one(x).union(all_b));
    for i in 1..s {
        edges.join(one(a(i)), all_b.difference(bset(i)));
    }
    edges.join(one(a(s)), upper_b);
    let others = VertexSet::full(n).difference(VertexSet::from_vertices([x, b0, a(s)]));
    edges.join(one(x), others);
    edges.clique(upper_b);
    edges.clique(bset(0));
    Builder { layout, edges: edges.edges }.finish()
}

/// The class 𝒢₂(j₁,j₂); `u1`, `u2` are the first two vertices of `J2`.
pub fn build_class_g2(j1: usize, j2: usize) -> Result<(Graph, Layout)> {
    let family = Family::ClassG2;
    if j1 < 3 || j2 < 3 {
        return Err(params_error(family, "requires j1 >= 3 and j2 >= 3"));
    }
    check_order(family, j1 + j2 + 3)?;
    let mut layout = Layout::default();
    for k in 0..j1 {
        layout.push(format!("J1_{k}"), "J1");
    }
    for k in 0..j2 {
        let name = match k {
            0 => "u1".to_string(),
            1 => "u2".to_string(),
            _ => format!("J2_{k}"),
        };
        layout.push(name, "J2");
    }
    for role in ["w", "w1", "v1"] {
        layout.push(role.into(), role);
    }
    let (jj1, jj2) = (layout.set("J1"), layout.set("J2"));
    let [w, w1, v1, u1, u2] = ["w", "w1", "v1", "u1", "u2"].map(|r| layout.vertex(r));
    let one = VertexSet::singleton;
    let mut b = Builder { layout, edges: Vec::new() };
    b.join(one(v1), jj1);
    b.join(one(w1), jj1.union(jj2.without(u1)).with(w));
    b.join(one(w), jj1.union(jj2.without(u2)).with(w1));
    b.clique(jj1);
    b.clique(jj2);
    b.finish()
}

/// The class 𝒢₃(m₀,…,m_s).
pub fn build_class_g3(sizes: &[usize]) -> Result<(Graph, Layout)> {
    let family = Family::ClassG3;
    if sizes.len() < 3 || sizes.iter().any(|&m| m < 2) {
        return Err(params_error(family, "requires s >= 2 and every m_i >= 2"));
    }
    let s = sizes.len() - 1;
    check_order(family, s + sizes.iter().sum::<usize>())?;
    let mut layout = Layout::default();
    for i in 1..=s {
        layout.push(format!("a{i}"), "A");
    }
    for (i, &mi) in sizes.iter().enumerate() {
        for k in 0..mi {
            layout.push(format!("M{i}_{k}"), &format!("M{i}"));
        }
    }
    let mset = |i: usize| layout.set(&format!("M{i}"));
    let all_m = (0..=s).fold(VertexSet::EMPTY, |acc, i| acc.union(mset(i)));
    let upper = all_m.difference(mset(0));
    let mut b = Builder { layout: Layout::default(), edges: Vec::new() };
    for i in 1..=s {
        b.join(VertexSet::singleton(layout.vertex(&format!("a{i}"))), all_m.difference(mset(i)));
    }
    b.clique(mset(0));
    b.clique(upper);
    Builder { layout, edges: b.edges }.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_grammar_round_trips() {
        let spec: FamilySpec = "classG1:1,1,1,1".parse().unwrap();
        assert_eq!(spec, FamilySpec::new(Family::ClassG1, &[1, 1, 1, 1]));
        assert_eq!(spec.to_string(), "classG1:1,1,1,1");
        assert!("classG4:1".parse::<FamilySpec>().is_err());
        assert!("classG2:3,x".parse::<FamilySpec>().is_err());
        assert!("classG2".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn constraint_violations() {
        assert!(matches!(build_class_g2(2, 3), Err(Error::FamilyParams { .. })));
        assert!(build_class_g1(&[1]).is_err());
        assert!(build_class_g1(&[1, 0]).is_err());
        assert!(build_class_g3(&[2, 2]).is_err());
        assert!(build_class_g3(&[2, 1, 2]).is_err());
        assert!(build_star_forest(&[3]).is_err());
        assert!(build_cutvertex_g2(&[1, 1], 0).is_err());
        assert!(build_class_g3(&[40, 40, 2]).is_err());
    }

    #[test]
    fn star_forest_counts() {
        let (g, l) = build_star_forest(&[1, 1]).unwrap();
        assert_eq!((g.order(), g.size(), g.components().len()), (4, 2, 2));
        let (g, l2) = build_star_forest(&[2, 3]).unwrap();
        assert_eq!((g.order(), g.size()), (7, 5));
        assert_eq!(g.degree(l2.vertex("c1")).unwrap(), 2);
        assert_eq!(g.degree(l2.vertex("c2")).unwrap(), 3);
        assert_eq!(l.names, vec!["c1", "w1_1", "c2", "w2_1"]);
    }

    #[test]
    fn named_neighborhoods() {
        let (g, l) = build_class_g1(&[2, 1, 2, 1]).unwrap();
        let s = 4;
        let upper: VertexSet = (1..s).fold(VertexSet::EMPTY, |acc, i| acc.union(l.set(&format!("B{i}"))));
        assert_eq!(g.nbrs(l.vertex("a4")), upper);
        let x = l.vertex("x");
        let not_x = VertexSet::from_vertices([l.vertex("b"), x, l.vertex("a4")]);
        assert_eq!(g.nbrs(x), not_x.complement(g.order()));
        assert_eq!(g.order(), s + 2 + 6);

        let (g, l) = build_class_g2(3, 4).unwrap();
        let want = l.set("J1").union(l.set("J2").without(l.vertex("u1"))).with(l.vertex("w"));
        assert_eq!(g.nbrs(l.vertex("w1")), want);
        assert_eq!(g.order(), 10);

        let (g, _) = build_class_g3(&[2, 2, 2]).unwrap();
        // M0 clique (1) + M1∪M2 clique (6) + a1 to M0,M2 (4) + a2 to M0,M1 (4)
        assert_eq!((g.order(), g.size()), (8, 15));
    }

    #[test]
    fn cutvertex_g2_u_vertices() {
        let (g, l) = build_cutvertex_g2(&[1, 2], 2).unwrap();
        let u = l.set("U");
        assert!(g.is_clique(u));
        for v in u {
            assert!(!g.has_edge(v, l.vertex("x")));
            assert!(!g.has_edge(v, l.vertex("y")));
        }
    }
}
