#![allow(dead_code)]

use proptest::prelude::*;
use raag_core::{ExtNat, InvariantProfile, UndirectedGraph};

/// Random simple graph on `lo..=hi` vertices.
pub fn graph(lo: usize, hi: usize) -> impl Strategy<Value = UndirectedGraph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = UndirectedGraph::new(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            g
        })
    })
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

pub fn graph_and_perm(lo: usize, hi: usize) -> impl Strategy<Value = (UndirectedGraph, Vec<usize>)> {
    graph(lo, hi).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), permutation(n))
    })
}

pub fn extnat() -> impl Strategy<Value = ExtNat> {
    prop_oneof![
        6 => (0u128..4).prop_map(ExtNat::Finite),
        1 => Just(ExtNat::Omega),
    ]
}

pub fn profile() -> impl Strategy<Value = InvariantProfile> {
    (extnat(), extnat(), proptest::collection::vec((-3i64..=3, extnat()), 0..4)).prop_map(|(t, o, ns)| {
        let mut p = InvariantProfile::new().with_t(t).with_o(o);
        for (k, c) in ns {
            p.set_n(k, c);
        }
        p
    })
}
