//! Brute-force canonical labeling and isomorphism-class enumeration.
//!
//! The canonical form of a graph is the lexicographically least graph6
//! record over all vertex orderings. The search assigns vertices to
//! positions one at a time; placing a vertex at position `k` fixes the
//! `k` bits of column `k`, so any ordering whose prefix already exceeds
//! the best record is cut. Interchangeable vertices (twins: same
//! neighbourhood apart from each other) are tried only once per level,
//! since swapping two twins is an automorphism.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::graph6::{encode_bits, parse_graph6};
use super::{LimitError, UndirectedGraph};

/// Largest vertex count accepted by [`canonical_form`].
pub const MAX_CANONICAL_N: usize = 10;
/// Default vertex-count cap of [`enumerate_graphs`].
pub const MAX_ENUMERATE_N: usize = 8;

struct Search<'a> {
    g: &'a UndirectedGraph,
    twins: Vec<Vec<bool>>,
    order: Vec<usize>,
    used: Vec<bool>,
    bits: Vec<bool>,
    best: Option<Vec<bool>>,
}

impl Search<'_> {
    fn prefix_cmp(&self) -> Ordering {
        match &self.best {
            None => Ordering::Less,
            Some(best) => self.bits.as_slice().cmp(&best[..self.bits.len()]),
        }
    }

    fn run(&mut self) {
        let n = self.g.n();
        let k = self.order.len();
        if k == n {
            if self.prefix_cmp() == Ordering::Less {
                self.best = Some(self.bits.clone());
            }
            return;
        }
        let mut tried: Vec<usize> = Vec::new();
        for v in 0..n {
            if self.used[v] || tried.iter().any(|&u| self.twins[u][v]) {
                continue;
            }
            tried.push(v);
            let mark = self.bits.len();
            for &u in &self.order {
                self.bits.push(self.g.has_edge(u, v));
            }
            if self.prefix_cmp() != Ordering::Greater {
                self.used[v] = true;
                self.order.push(v);
                self.run();
                self.order.pop();
                self.used[v] = false;
            }
            self.bits.truncate(mark);
        }
    }
}

fn twin_table(g: &UndirectedGraph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut t = vec![vec![false; n]; n];
    for u in 0..n {
        for v in u + 1..n {
            let same = (0..n).filter(|&w| w != u && w != v).all(|w| g.has_edge(u, w) == g.has_edge(v, w));
            t[u][v] = same;
            t[v][u] = same;
        }
    }
    t
}

/// Minimal graph6 record over all vertex permutations of `g`.
///
/// Two graphs are isomorphic exactly when their canonical forms are equal.
pub fn canonical_form(g: &UndirectedGraph) -> Result<Vec<u8>, LimitError> {
    let n = g.n();
    if n > MAX_CANONICAL_N {
        return Err(LimitError { what: "canonical_form", n, limit: MAX_CANONICAL_N });
    }
    let mut search = Search {
        g,
        twins: twin_table(g),
        order: Vec::with_capacity(n),
        used: vec![false; n],
        bits: Vec::with_capacity(n * n / 2),
        best: None,
    };
    search.run();
    let best = search.best.unwrap_or_default();
    Ok(encode_bits(n, best.into_iter()))
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// sorted by canonical form. Accepts `n <= 8`.
pub fn enumerate_graphs(n: usize) -> Result<Vec<UndirectedGraph>, LimitError> {
    enumerate_graphs_capped(n, MAX_ENUMERATE_N)
}

/// As [`enumerate_graphs`] with a caller-chosen cap, itself bounded by
/// [`MAX_CANONICAL_N`].
pub fn enumerate_graphs_capped(n: usize, cap: usize) -> Result<Vec<UndirectedGraph>, LimitError> {
    let limit = cap.min(MAX_CANONICAL_N);
    if n > limit {
        return Err(LimitError { what: "enumerate_graphs", n, limit });
    }
    // Every graph on k+1 vertices arises from one on k vertices by adding a
    // vertex with some neighbourhood, so extending class representatives
    // reaches every class.
    let mut level: BTreeSet<Vec<u8>> = BTreeSet::new();
    level.insert(canonical_form(&UndirectedGraph::new(0))?);
    for k in 0..n {
        let mut next = BTreeSet::new();
        for code in &level {
            let base = decode(code);
            for mask in 0u32..(1 << k) {
                let mut g = UndirectedGraph::new(k + 1);
                for (u, v) in base.edges() {
                    g.link(u, v);
                }
                for u in 0..k {
                    if mask >> u & 1 == 1 {
                        g.link(u, k);
                    }
                }
                next.insert(canonical_form(&g)?);
            }
        }
        level = next;
    }
    Ok(level.iter().map(|c| decode(c)).collect())
}

fn decode(code: &[u8]) -> UndirectedGraph {
    let s = core::str::from_utf8(code).expect("graph6 is ASCII");
    parse_graph6(s).expect("canonical form is valid graph6")
}
