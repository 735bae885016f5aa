use alloc::vec::Vec;

use super::profile::InvariantProfile;
use crate::euler::{euler_characteristic, EulerError};
use crate::graphs::{LimitError, UndirectedGraph};

/// Largest vertex count accepted by [`decompose_oracle`].
pub const DECOMPOSE_ORACLE_MAX_N: usize = 15;

/// A co-irreducible component together with the vertices of the parent
/// graph it was induced on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoIrreducibleComponent {
    pub vertices: Vec<usize>,
    pub graph: UndirectedGraph,
}

/// Which algebra a co-irreducible component contributes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentClass {
    /// One vertex: the Toeplitz algebra.
    Toeplitz,
    /// Finitely many vertices, at least two; carries the Euler characteristic.
    /// The algebra is `E_{1+|χ|}^{sgn χ}`.
    FiniteExt(i64),
    /// Infinitely many vertices: `O_∞`. Only reachable through profiles.
    InfiniteComp,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArtinError {
    #[error("a co-irreducible component must have at least one vertex")]
    EmptyComponent,
    #[error(transparent)]
    Euler(#[from] EulerError),
}

/// Splits `g` into its co-irreducible components: the subgraphs induced on
/// the connected components of the complement. Components come ordered by
/// least vertex, and every pair of vertices from distinct components is an
/// edge of `g`.
pub fn decompose(g: &UndirectedGraph) -> Vec<CoIrreducibleComponent> {
    g.complement()
        .connected_components()
        .into_iter()
        .map(|vertices| {
            let graph = g.induced_subgraph(&vertices).expect("component vertices are in range");
            CoIrreducibleComponent { vertices, graph }
        })
        .collect()
}

/// Exhaustive co-reducibility test: is there a split `V = V_1 ⊔ V_2` into
/// nonempty parts with every pair across the split an edge? `n <= 15`.
pub fn decompose_oracle(g: &UndirectedGraph) -> Result<bool, LimitError> {
    let n = g.n();
    if n > DECOMPOSE_ORACLE_MAX_N {
        return Err(LimitError { what: "decompose_oracle", n, limit: DECOMPOSE_ORACLE_MAX_N });
    }
    if n < 2 {
        return Ok(false);
    }
    let full: u32 = (1 << n) - 1;
    let adj: Vec<u32> = (0..n)
        .map(|u| (0..n).filter(|&v| g.has_edge(u, v)).fold(0, |m, v| m | 1 << v))
        .collect();
    // Vertex 0 is placed in V_1 without loss of generality.
    for side in (1..full).filter(|s| s & 1 == 1) {
        let other = full & !side;
        if (0..n).filter(|&v| side >> v & 1 == 1).all(|v| adj[v] & other == other) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Class of a co-irreducible component (caller guarantees
/// co-irreducibility, as [`decompose`] does).
pub fn classify_component(comp: &UndirectedGraph) -> Result<ComponentClass, ArtinError> {
    match comp.n() {
        0 => Err(ArtinError::EmptyComponent),
        1 => Ok(ComponentClass::Toeplitz),
        _ => {
            let chi = euler_characteristic(comp)?;
            Ok(ComponentClass::FiniteExt(i64::try_from(chi).map_err(|_| EulerError::Overflow)?))
        }
    }
}

/// `t`, `o = 0` and `N_n` of a finite graph.
pub fn invariant_profile(g: &UndirectedGraph) -> Result<InvariantProfile, ArtinError> {
    profile_of_classes(decompose(g).iter().map(|c| classify_component(&c.graph)))
}

pub(crate) fn profile_of_classes(
    classes: impl Iterator<Item = Result<ComponentClass, ArtinError>>,
) -> Result<InvariantProfile, ArtinError> {
    let mut p = InvariantProfile::new();
    let mut t = 0u128;
    let mut o = 0u128;
    for class in classes {
        match class? {
            ComponentClass::Toeplitz => t += 1,
            ComponentClass::FiniteExt(chi) => p.bump_n(chi),
            ComponentClass::InfiniteComp => o += 1,
        }
    }
    p.set_t(t.into());
    p.set_o(o.into());
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::ExtNat;
    use alloc::vec;

    #[test]
    fn complete_graph_splits_into_singletons() {
        let comps = decompose(&UndirectedGraph::complete(5));
        assert_eq!(comps.len(), 5);
        assert!(comps.iter().all(|c| c.graph.n() == 1));
        let p = invariant_profile(&UndirectedGraph::complete(5)).unwrap();
        assert_eq!(p, InvariantProfile::new().with_t(5u128));
    }

    #[test]
    fn edgeless_graph_is_one_component() {
        let comps = decompose(&UndirectedGraph::new(5));
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].vertices, vec![0, 1, 2, 3, 4]);
        let p = invariant_profile(&UndirectedGraph::new(5)).unwrap();
        assert_eq!(p, InvariantProfile::new().with_n(-4, 1u128));
    }

    #[test]
    fn single_edge_gives_two_toeplitz_factors() {
        let p = invariant_profile(&UndirectedGraph::complete(2)).unwrap();
        assert_eq!(p.t(), ExtNat::Finite(2));
    }

    #[test]
    fn join_of_c5_and_edgeless_triple() {
        let g = UndirectedGraph::cycle(5).join(&UndirectedGraph::new(3));
        let comps = decompose(&g);
        assert_eq!(comps.len(), 2);
        let p = invariant_profile(&g).unwrap();
        assert_eq!(p, InvariantProfile::new().with_n(1, 1u128).with_n(-2, 1u128));
    }

    #[test]
    fn classes() {
        assert_eq!(classify_component(&UndirectedGraph::new(1)), Ok(ComponentClass::Toeplitz));
        assert_eq!(classify_component(&UndirectedGraph::new(3)), Ok(ComponentClass::FiniteExt(-2)));
        assert_eq!(classify_component(&UndirectedGraph::cycle(5)), Ok(ComponentClass::FiniteExt(1)));
        assert_eq!(classify_component(&UndirectedGraph::new(0)), Err(ArtinError::EmptyComponent));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(decompose_oracle(&UndirectedGraph::cycle(5)), Ok(false));
        assert_eq!(decompose_oracle(&UndirectedGraph::complete(2)), Ok(true));
        assert_eq!(decompose_oracle(&UndirectedGraph::new(1)), Ok(false));
        assert!(decompose_oracle(&UndirectedGraph::new(16)).is_err());
    }

    #[test]
    fn empty_graph_has_zero_profile() {
        assert!(decompose(&UndirectedGraph::new(0)).is_empty());
        assert!(invariant_profile(&UndirectedGraph::new(0)).unwrap().is_zero());
    }
}
