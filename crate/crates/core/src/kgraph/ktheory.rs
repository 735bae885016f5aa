//! K-theory of graph algebras.
//!
//! With `A` the edge-multiplicity matrix, `B = Aᵗ − I` restricted to the
//! columns of regular vertices maps `Z^{regular} → Z^{vertices}`, where
//! entry `(y, x)` of `Aᵗ` counts edges `x → y`. Then `K_0 = coker B` with
//! `[p_v]` the class of the basis vector `e_v`, and `K_1 = ker B`.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::digraph::DirectedGraph;
use super::matrix::{smith_normal_form, IntMatrix};
use crate::abelian::FgAbelianGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTheoryReport {
    pub k0: FgAbelianGroup,
    /// `K_1` is free; this is its rank.
    pub k1_rank: usize,
    /// Coordinates of `Σ_v [p_v]` against the cyclic summands of `k0`
    /// (torsion first, then free), torsion coordinates reduced.
    pub unit_class: Vec<BigInt>,
    /// Coordinates of each `[p_v]`, same convention.
    pub vertex_classes: Vec<Vec<BigInt>>,
    /// Number of regular vertices (the column count of `B`).
    pub regular_count: usize,
    /// `rank B`.
    pub relation_rank: usize,
}

impl KTheoryReport {
    /// `Some(s)` when `K_0 ≅ Z` and the unit class is `s ∈ {1, −1}` there.
    pub fn unit_generator_sign(&self) -> Option<BigInt> {
        if self.k0.is_integers() && self.unit_class[0].abs().is_one() {
            Some(self.unit_class[0].clone())
        } else {
            None
        }
    }

    pub fn k1(&self) -> FgAbelianGroup {
        FgAbelianGroup::free(self.k1_rank)
    }
}

/// The matrix `B` described in the module docs.
pub fn relation_matrix(dg: &DirectedGraph) -> IntMatrix {
    let regular = dg.regular_vertices();
    let mut b = IntMatrix::zeros(dg.n(), regular.len());
    for (col, &x) in regular.iter().enumerate() {
        for y in 0..dg.n() {
            let mut entry = BigInt::from(dg.multiplicity(x, y));
            if x == y {
                entry -= 1;
            }
            b[(y, col)] = entry;
        }
    }
    b
}

pub fn graph_ktheory(dg: &DirectedGraph) -> KTheoryReport {
    let b = relation_matrix(dg);
    let snf = smith_normal_form(&b);
    let n = dg.n();
    // d_i for every row of D; rows past the diagonal are zero.
    let diag: Vec<BigInt> = (0..n)
        .map(|i| if i < b.cols() { snf.d[(i, i)].clone() } else { BigInt::zero() })
        .collect();
    // Cyclic summands: rows with d_i != 1. The chain d_1 | d_2 | .. puts the
    // units first, then torsion ascending, then zeros.
    let summands: Vec<usize> = (0..n).filter(|&i| !diag[i].is_one()).collect();
    let k0 = FgAbelianGroup {
        free_rank: summands.iter().filter(|&&i| diag[i].is_zero()).count(),
        torsion: summands
            .iter()
            .filter(|&&i| !diag[i].is_zero())
            .map(|&i| diag[i].magnitude().clone())
            .collect::<Vec<BigUint>>(),
    };
    let reduce = |i: usize, x: BigInt| if diag[i].is_zero() { x } else { x.mod_floor(&diag[i]) };
    let vertex_classes: Vec<Vec<BigInt>> = (0..n)
        .map(|v| summands.iter().map(|&i| reduce(i, snf.u[(i, v)].clone())).collect())
        .collect();
    let unit_class = summands
        .iter()
        .enumerate()
        .map(|(c, &i)| reduce(i, vertex_classes.iter().map(|vc| vc[c].clone()).sum()))
        .collect();
    let relation_rank = snf.rank();
    KTheoryReport {
        k0,
        k1_rank: b.cols() - relation_rank,
        unit_class,
        vertex_classes,
        regular_count: b.cols(),
        relation_rank,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SinkAnalysisError {
    #[error("graph has no sink")]
    NoSink,
    #[error("graph has {} sinks, expected exactly one", .0.len())]
    MultipleSinks(Vec<usize>),
    #[error("{{sink}} is not saturated: regular vertex {0} emits only into the sink")]
    NotSaturated(usize),
    #[error("sink {0} is not reached from any other vertex")]
    Unreachable(usize),
}

/// K-theory of a graph with one sink `w`, of the quotient by the ideal of
/// `p_w`, and the multiplier `κ` with `[p_w] = κ·[1]` when `K_0 ≅ Z` is
/// generated by the unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SinkAnalysis {
    pub sink: usize,
    pub full: KTheoryReport,
    pub quotient: KTheoryReport,
    /// `None` when the unit class does not generate `K_0 ≅ Z`.
    pub kappa: Option<BigInt>,
}

pub fn sink_ideal_analysis(dg: &DirectedGraph) -> Result<SinkAnalysis, SinkAnalysisError> {
    let sinks = dg.sinks();
    let w = match sinks.as_slice() {
        [] => return Err(SinkAnalysisError::NoSink),
        [w] => *w,
        _ => return Err(SinkAnalysisError::MultipleSinks(sinks)),
    };
    if let Some(v) = dg.regular_vertices().into_iter().find(|&v| dg.targets(v).all(|t| t == w)) {
        return Err(SinkAnalysisError::NotSaturated(v));
    }
    if !(0..dg.n()).any(|v| v != w && dg.multiplicity(v, w) > 0) {
        return Err(SinkAnalysisError::Unreachable(w));
    }
    let full = graph_ktheory(dg);
    let quotient = graph_ktheory(&dg.without_vertex(w));
    let kappa = full.unit_generator_sign().map(|s| &full.vertex_classes[w][0] * s);
    Ok(SinkAnalysis { sink: w, full, quotient, kappa })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cuntz(loops: u64) -> DirectedGraph {
        let mut g = DirectedGraph::new(1);
        g.add_edges(0, 0, loops);
        g
    }

    #[test]
    fn cuntz_algebras() {
        for m in 1..6u128 {
            let k = graph_ktheory(&cuntz(m as u64 + 1));
            assert_eq!(k.k0, FgAbelianGroup::cyclic(m));
            assert_eq!(k.k1_rank, 0);
        }
    }

    #[test]
    fn toeplitz_graph() {
        let mut g = DirectedGraph::new(2);
        g.add_edges(0, 0, 1).add_edges(0, 1, 1);
        let k = graph_ktheory(&g);
        assert!(k.k0.is_integers());
        assert!(k.unit_generator_sign().is_some());
        assert!(k.vertex_classes[1][0].is_zero());
        let s = sink_ideal_analysis(&g).unwrap();
        assert_eq!(s.kappa, Some(BigInt::zero()));
        assert!(s.quotient.k0.is_integers());
        assert_eq!(s.quotient.k1_rank, 1);
    }

    #[test]
    fn infinite_emitter_has_no_relations() {
        let mut g = DirectedGraph::new(1);
        g.add_edges(0, 0, 1).set_infinite_emitter(0);
        let k = graph_ktheory(&g);
        assert!(k.k0.is_integers());
        assert_eq!(k.k1_rank, 0);
        assert!(k.unit_generator_sign().is_some());
    }

    #[test]
    fn loops_and_sink_edges() {
        for n in 1..8u64 {
            let mut g = DirectedGraph::new(2);
            g.add_edges(0, 0, n + 1).add_edges(0, 1, n + 1);
            let s = sink_ideal_analysis(&g).unwrap();
            assert_eq!(s.kappa, Some(BigInt::from(-(n as i64))));
            assert_eq!(s.quotient.k0, FgAbelianGroup::cyclic(n as u128));
            assert_eq!(s.quotient.k1_rank, 0);
        }
    }

    #[test]
    fn sink_errors() {
        assert_eq!(sink_ideal_analysis(&cuntz(2)), Err(SinkAnalysisError::NoSink));
        let mut g = DirectedGraph::new(3);
        g.add_edges(0, 1, 1).add_edges(0, 2, 1);
        assert_eq!(sink_ideal_analysis(&g), Err(SinkAnalysisError::MultipleSinks(alloc::vec![1, 2])));
        let mut g = DirectedGraph::new(3);
        g.add_edges(0, 0, 2).add_edges(1, 2, 1);
        assert_eq!(sink_ideal_analysis(&g), Err(SinkAnalysisError::NotSaturated(1)));
        let mut g = DirectedGraph::new(2);
        g.add_edges(0, 0, 2);
        assert_eq!(sink_ideal_analysis(&g), Err(SinkAnalysisError::Unreachable(1)));
    }

    #[test]
    fn torsion_coordinates_are_reduced() {
        // O_4: K0 = Z/3 generated by [p_v] = [1].
        let k = graph_ktheory(&cuntz(4));
        let c = &k.unit_class[0];
        assert!(!c.is_negative() && *c < BigInt::from(3) && !c.is_zero());
    }
}
