mod common;

use common::graph;
use proptest::prelude::*;
use raag_core::{decompose, decompose_oracle, euler_characteristic, euler_oracle, UndirectedGraph};

proptest! {
    #[test]
    fn agrees_with_oracle(g in graph(0, 15)) {
        prop_assert_eq!(euler_characteristic(&g).unwrap(), euler_oracle(&g).unwrap());
    }

    #[test]
    fn multiplicative_over_joins(a in graph(1, 7), b in graph(1, 7)) {
        let j = a.join(&b);
        prop_assert_eq!(
            euler_characteristic(&j).unwrap(),
            euler_characteristic(&a).unwrap() * euler_characteristic(&b).unwrap()
        );
    }

    #[test]
    fn isolated_vertex_lowers_by_one(g in graph(1, 10)) {
        let h = g.disjoint_union(&UndirectedGraph::new(1));
        prop_assert_eq!(euler_characteristic(&h).unwrap(), euler_characteristic(&g).unwrap() - 1);
    }

    #[test]
    fn components_are_co_irreducible_and_joined(g in graph(1, 12)) {
        let comps = decompose(&g);
        prop_assert_eq!(comps.iter().map(|c| c.vertices.len()).sum::<usize>(), g.n());
        for c in &comps {
            prop_assert!(!decompose_oracle(&c.graph).unwrap());
        }
        prop_assert_eq!(decompose_oracle(&g).unwrap(), comps.len() > 1);
        for (i, a) in comps.iter().enumerate() {
            for b in &comps[i + 1..] {
                for &u in &a.vertices {
                    for &v in &b.vertices {
                        prop_assert!(g.has_edge(u, v));
                    }
                }
            }
        }
        let product: i128 = comps.iter().map(|c| euler_characteristic(&c.graph).unwrap()).product();
        prop_assert_eq!(product, euler_characteristic(&g).unwrap());
    }
}

#[test]
fn families_reaching_every_integer() {
    for m in 0..=20 {
        assert_eq!(euler_characteristic(&UndirectedGraph::new(m + 1)).unwrap(), -(m as i128));
    }
    for n in 1..=6usize {
        let mut g = UndirectedGraph::complete_bipartite(n + 1, n + 1);
        g.remove_edge(0, n + 1);
        let base = (n * n) as i128 - 1;
        assert_eq!(euler_characteristic(&g).unwrap(), base);
        for j in 0..4 {
            let h = g.disjoint_union(&UndirectedGraph::new(j));
            assert_eq!(euler_characteristic(&h).unwrap(), base - j as i128);
        }
    }
}
