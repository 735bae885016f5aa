//! Finite simple undirected graphs.

mod bitset;
mod canon;
mod graph6;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

pub use bitset::VertexSet;
pub use canon::{canonical_form, enumerate_graphs, enumerate_graphs_capped, MAX_CANONICAL_N, MAX_ENUMERATE_N};
pub use graph6::{parse_graph6, to_graph6, Graph6Error, MAX_GRAPH6_N};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("label count {labels} does not match vertex count {n}")]
    LabelCount { labels: usize, n: usize },
}

/// A size limit of a brute-force routine was exceeded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("{what}: {n} vertices exceeds the limit of {limit}")]
pub struct LimitError {
    pub what: &'static str,
    pub n: usize,
    pub limit: usize,
}

/// Simple graph on the vertices `0..n`.
///
/// Adjacency is stored as one bitset per vertex and is symmetric by
/// construction. Optional labels are carried for display only.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UndirectedGraph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl UndirectedGraph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        UndirectedGraph { n, adj: vec![VertexSet::with_capacity(n); n], labels: None }
    }

    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.link(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::new(n);
        if n >= 3 {
            for v in 0..n {
                g.link(v, (v + 1) % n);
            }
        } else if n == 2 {
            g.link(0, 1);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::new(n);
        for v in 1..n {
            g.link(v - 1, v);
        }
        g
    }

    /// Complete bipartite graph `K_{a,b}`; the first part is `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.link(u, v);
            }
        }
        g
    }

    /// Inserts the edge `{u, v}`. Returns `Ok(false)` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let fresh = !self.adj[u].contains(v);
        self.link(u, v);
        Ok(fresh)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u].remove(v);
            self.adj[v].remove(u);
        }
    }

    fn link(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelCount { labels: labels.len(), n: self.n });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of a vertex: its label if present, else its index.
    pub fn vertex_name(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => alloc::format!("{v}"),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Graph on the same vertices with exactly the non-edges of `self`.
    pub fn complement(&self) -> Self {
        let mut g = UndirectedGraph { n: self.n, adj: Vec::with_capacity(self.n), labels: self.labels.clone() };
        for u in 0..self.n {
            let mut row = VertexSet::with_capacity(self.n);
            for v in 0..self.n {
                if v != u && !self.adj[u].contains(v) {
                    row.insert(v);
                }
            }
            g.adj.push(row);
        }
        g
    }

    /// Connected components, each sorted ascending, ordered by least vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for v in self.adj[u].iter() {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Subgraph induced on `vertices`, renumbered in ascending order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Self, GraphError> {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        for &v in &keep {
            self.check_vertex(v)?;
        }
        let mut g = Self::new(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.adj[u].contains(v) {
                    g.link(i, j);
                }
            }
        }
        if let Some(labels) = &self.labels {
            g.labels = Some(keep.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length must equal vertex count");
        let mut g = Self::new(self.n);
        for (u, v) in self.edges() {
            g.link(perm[u], perm[v]);
        }
        if let Some(labels) = &self.labels {
            let mut l = vec![String::new(); self.n];
            for (v, name) in labels.iter().enumerate() {
                l[perm[v]] = name.clone();
            }
            g.labels = Some(l);
        }
        g
    }

    /// Disjoint union; the vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let mut g = Self::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for (u, v) in other.edges() {
            g.link(self.n + u, self.n + v);
        }
        g
    }

    /// Join: the disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Self) -> Self {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.link(u, self.n + v);
            }
        }
        g
    }
}
