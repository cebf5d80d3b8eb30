mod common;

use std::collections::HashSet;

use cdcrit::canon::{canonical_form, find_isomorphism, is_isomorphic};
use cdcrit::graph6::{parse_graph6, to_graph6};
use cdcrit::Graph;
use common::{connected_labeled_graphs, labeled_graphs, random_graph, Naive};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

#[test]
fn graph6_round_trips_every_small_graph() {
    for n in 1..=6 {
        let mut lines = HashSet::new();
        for g in labeled_graphs(n) {
            let line = to_graph6(&g);
            assert_eq!(parse_graph6(&line).unwrap(), g);
            assert!(lines.insert(line), "two labeled graphs share a graph6 line");
        }
    }
}

#[test]
fn graph6_matches_hand_encoding() {
    // n = 5 → 'D'; edges (0,4),(1,4),(2,4),(3,4) are bits 6..9 of the column
    // order, giving 000000 111100 = '?' '{'
    let g = Graph::star(4).unwrap().permute(&[4, 0, 1, 2, 3]);
    assert_eq!(to_graph6(&g), "D?{");
}

fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
    g.order() == h.order() && perms(g.order()).iter().any(|p| &g.permute(p) == h)
}

#[test]
fn connected_class_counts() {
    let expected = [1, 1, 2, 6, 21, 112];
    for (i, &want) in expected.iter().enumerate() {
        let n = i + 1;
        let classes: HashSet<_> = connected_labeled_graphs(n)
            .map(|g| canonical_form(&g).unwrap())
            .collect();
        assert_eq!(classes.len(), want, "n = {n}");
    }
}

#[test]
fn isomorphism_agrees_with_permutation_search() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for _ in 0..300 {
        let n = 5;
        let g = random_graph(&mut rng, n, 0.5);
        let h = random_graph(&mut rng, n, 0.5);
        assert_eq!(is_isomorphic(&g, &h).unwrap(), brute_isomorphic(&g, &h));
    }
}

#[test]
fn matcher_handles_orders_beyond_canonical_limit() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    for _ in 0..20 {
        let g = random_graph(&mut rng, 20, 0.3);
        let mut perm: Vec<usize> = (0..20).collect();
        perm.shuffle(&mut rng);
        let h = g.permute(&perm);
        let map = find_isomorphism(&g, &h).expect("isomorphic by construction");
        assert_eq!(g.permute(&map), h);
        assert!(is_isomorphic(&g, &h).unwrap());
        let other = h.plus_edge(0, 1);
        if other != h {
            assert!(!is_isomorphic(&g, &other).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonical_form_ignores_labels(
        (n, bits, perm) in (1usize..=8).prop_flat_map(|n| (
            Just(n),
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
        ))
    ) {
        let mut it = bits.into_iter();
        let g = Graph::from_fn(n, |_, _| it.next().unwrap()).unwrap();
        let h = g.permute(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        let c = parse_graph6(&canonical_form(&g).unwrap().0).unwrap();
        prop_assert_eq!(Naive::new(&c).alpha(), Naive::new(&g).alpha());
    }
}
