use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

/// Finite directed multigraph.
///
/// Edges are stored as multiplicities per `(source, target)` pair. A vertex
/// flagged as an infinite emitter emits infinitely many edges; its listed
/// edges name the targets it reaches, but their finite multiplicities play
/// no role in K-theory.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectedGraph {
    n: usize,
    edges: BTreeMap<(usize, usize), u64>,
    infinite: Vec<bool>,
}

impl DirectedGraph {
    pub fn new(n: usize) -> Self {
        DirectedGraph { n, edges: BTreeMap::new(), infinite: vec![false; n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds `mult` edges `src → dst`.
    ///
    /// # Panics
    /// If either endpoint is out of range.
    pub fn add_edges(&mut self, src: usize, dst: usize, mult: u64) -> &mut Self {
        assert!(src < self.n && dst < self.n, "edge endpoint out of range");
        if mult > 0 {
            *self.edges.entry((src, dst)).or_insert(0) += mult;
        }
        self
    }

    pub fn set_infinite_emitter(&mut self, v: usize) -> &mut Self {
        self.infinite[v] = true;
        self
    }

    pub fn is_infinite_emitter(&self, v: usize) -> bool {
        self.infinite[v]
    }

    pub fn multiplicity(&self, src: usize, dst: usize) -> u64 {
        self.edges.get(&(src, dst)).copied().unwrap_or(0)
    }

    /// `((src, dst), multiplicity)` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.edges.iter().map(|(&k, &m)| (k, m))
    }

    pub fn out_degree(&self, v: usize) -> u64 {
        self.edges.range((v, 0)..(v + 1, 0)).map(|(_, &m)| m).sum()
    }

    pub fn targets(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.range((v, 0)..(v + 1, 0)).map(|(&(_, t), _)| t)
    }

    pub fn is_sink(&self, v: usize) -> bool {
        !self.infinite[v] && self.out_degree(v) == 0
    }

    pub fn is_regular(&self, v: usize) -> bool {
        !self.infinite[v] && self.out_degree(v) > 0
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.is_sink(v)).collect()
    }

    pub fn regular_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.is_regular(v)).collect()
    }

    /// Subgraph on every vertex except `w`, renumbered ascending; edges into
    /// or out of `w` are dropped.
    pub fn without_vertex(&self, w: usize) -> DirectedGraph {
        let index = |v: usize| if v < w { v } else { v - 1 };
        let mut g = DirectedGraph::new(self.n - 1);
        for (&(s, t), &m) in &self.edges {
            if s != w && t != w {
                g.add_edges(index(s), index(t), m);
            }
        }
        for v in (0..self.n).filter(|&v| v != w && self.infinite[v]) {
            g.infinite[index(v)] = true;
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> DirectedGraph {
        assert_eq!(perm.len(), self.n);
        let mut g = DirectedGraph::new(self.n);
        for (&(s, t), &m) in &self.edges {
            g.add_edges(perm[s], perm[t], m);
        }
        for v in 0..self.n {
            g.infinite[perm[v]] = self.infinite[v];
        }
        g
    }

    /// Whether every regular vertex reaches every other regular vertex.
    pub fn regular_part_strongly_connected(&self) -> bool {
        let regular = self.regular_vertices();
        regular.iter().all(|&v| {
            let seen = self.reachable_from(v);
            regular.iter().all(|&u| seen[u])
        })
    }

    fn reachable_from(&self, v: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![v];
        seen[v] = true;
        while let Some(u) = stack.pop() {
            for t in self.targets(u) {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }
}

/// Edge count used for loop counting, capped at 2; every listed edge of an
/// infinite emitter counts as infinitely many.
fn capped(dg: &DirectedGraph, s: usize, t: usize) -> u64 {
    let m = dg.multiplicity(s, t);
    if m > 0 && dg.is_infinite_emitter(s) {
        2
    } else {
        m.min(2)
    }
}

/// Number of simple loops based at `v`, capped at 2. A simple loop at `v`
/// is a closed path from `v` that does not pass through `v` before its end.
pub fn simple_loops_at(dg: &DirectedGraph, v: usize) -> u64 {
    let n = dg.n();
    // Interior vertices: reachable from v, and able to return to v, without
    // passing through v.
    let mut forward = vec![false; n];
    let mut stack: Vec<usize> = dg.targets(v).filter(|&t| t != v).collect();
    for &t in &stack {
        forward[t] = true;
    }
    while let Some(u) = stack.pop() {
        for t in dg.targets(u) {
            if t != v && !forward[t] {
                forward[t] = true;
                stack.push(t);
            }
        }
    }
    let mut backward = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&u| u != v && dg.multiplicity(u, v) > 0).collect();
    for &u in &stack {
        backward[u] = true;
    }
    while let Some(u) = stack.pop() {
        for s in 0..n {
            if s != v && !backward[s] && dg.multiplicity(s, u) > 0 {
                backward[s] = true;
                stack.push(s);
            }
        }
    }
    let interior: Vec<bool> = (0..n).map(|u| forward[u] && backward[u]).collect();

    // Paths from each interior vertex back to v, capped; a cycle among
    // interior vertices yields infinitely many.
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done(u64),
    }
    fn paths(dg: &DirectedGraph, v: usize, u: usize, interior: &[bool], marks: &mut [Mark]) -> u64 {
        match marks[u] {
            Mark::Done(c) => return c,
            Mark::Active => return 2,
            Mark::New => {}
        }
        marks[u] = Mark::Active;
        let mut total = capped(dg, u, v);
        let targets: Vec<usize> = dg.targets(u).filter(|&t| t != v && interior[t]).collect();
        for t in targets {
            let sub = paths(dg, v, t, interior, marks);
            total = (total + capped(dg, u, t) * sub).min(2);
        }
        marks[u] = Mark::Done(total);
        total
    }
    let mut marks = vec![Mark::New; n];
    let mut total = capped(dg, v, v);
    for t in (0..n).filter(|&t| t != v && interior[t]) {
        let m = capped(dg, v, t);
        if m > 0 {
            total = (total + m * paths(dg, v, t, &interior, &mut marks)).min(2);
        }
    }
    total
}

/// Condition (K): every vertex is the base of no simple loop or of at
/// least two.
pub fn condition_k(dg: &DirectedGraph) -> bool {
    (0..dg.n()).all(|v| simple_loops_at(dg, v) != 1)
}
