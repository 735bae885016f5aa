mod common;

use common::{graph, graph_and_perm};
use proptest::prelude::*;
use raag_core::graphs::{canonical_form, enumerate_graphs, parse_graph6, to_graph6};
use raag_core::UndirectedGraph;

/// Permutation search for an isomorphism, independent of canonical forms.
fn isomorphic_brute(a: &UndirectedGraph, b: &UndirectedGraph) -> bool {
    fn extend(a: &UndirectedGraph, b: &UndirectedGraph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let u = map.len();
        if u == a.n() {
            return true;
        }
        for v in 0..b.n() {
            if used[v] || (0..u).any(|w| a.has_edge(u, w) != b.has_edge(v, map[w])) {
                continue;
            }
            map.push(v);
            used[v] = true;
            if extend(a, b, map, used) {
                return true;
            }
            map.pop();
            used[v] = false;
        }
        false
    }
    a.n() == b.n() && a.edge_count() == b.edge_count() && extend(a, b, &mut Vec::new(), &mut vec![false; b.n()])
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in graph(0, 12)) {
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * g.n().saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn graph6_round_trip(g in graph(0, 20)) {
        let s = to_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant((g, perm) in graph_and_perm(0, 8)) {
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&g.permute(&perm)).unwrap());
    }

    #[test]
    fn component_sizes_are_relabeling_invariant((g, perm) in graph_and_perm(0, 12)) {
        let sizes = |h: &UndirectedGraph| {
            let mut s: Vec<usize> = h.connected_components().iter().map(Vec::len).collect();
            s.sort();
            s
        };
        prop_assert_eq!(sizes(&g), sizes(&g.permute(&perm)));
    }

    #[test]
    fn canonical_form_decides_isomorphism(a in graph(4, 6), b in graph(4, 6)) {
        let same = canonical_form(&a).unwrap() == canonical_form(&b).unwrap();
        prop_assert_eq!(same, isomorphic_brute(&a, &b));
    }
}

#[test]
fn class_counts() {
    // Known counts of graphs up to isomorphism.
    let expected = [1usize, 1, 2, 4, 11, 34, 156, 1044];
    for (n, &count) in expected.iter().enumerate() {
        assert_eq!(enumerate_graphs(n).unwrap().len(), count, "n = {n}");
    }
}

#[test]
fn enumeration_is_pairwise_non_isomorphic() {
    let reps = enumerate_graphs(5).unwrap();
    for (i, a) in reps.iter().enumerate() {
        for b in &reps[i + 1..] {
            assert!(!isomorphic_brute(a, b));
        }
    }
}

#[test]
fn limits_are_enforced() {
    assert!(enumerate_graphs(9).is_err());
    assert!(canonical_form(&UndirectedGraph::new(11)).is_err());
}
