//! Invariants and decision procedures for the semigroup C*-algebras of
//! right-angled Artin monoids.
//!
//! An undirected simple graph `Γ` determines the monoid `A_Γ^+` and its
//! semigroup C*-algebra. The algebra splits as a tensor product over the
//! co-irreducible components of `Γ` (the pieces dual to the connected
//! components of the complement graph), and each component contributes one
//! of the Toeplitz algebra, `O_∞`, or an extension algebra `E_n^{±1}` /
//! `E_1^0` determined by the flag-complex Euler characteristic.
//!
//! The crate is organized as:
//!
//! * [`graphs`]: finite simple graphs, graph6, complements, components,
//!   brute-force canonical forms and enumeration up to isomorphism.
//! * [`euler`]: exact clique counting and the Euler characteristic.
//! * [`artin`]: decomposition, invariant profiles, normal forms, the
//!   (stable) isomorphism decision, and the derived reports.
//! * [`kgraph`]: directed graphs, integer Smith normal form, graph-algebra
//!   K-theory and oracle-certified realizations.
//!
//! Everything here is `no_std` with `alloc`; text formats other than graph6,
//! JSON and the command line live in the `raag-cli` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod abelian;
pub mod artin;
pub mod euler;
pub mod graphs;
pub mod kgraph;

pub use abelian::FgAbelianGroup;
pub use artin::{
    algebra_name, compare, compare_via_normal_form, component_ktheory, decompose,
    decompose_oracle, invariant_profile, is_graph_algebra, normal_form, prim_space,
    semiprojectivity, stable_normal_form, AlgebraNormalForm, ComparisonVerdict, ComponentClass,
    Condition, ExtNat, GraphAlgebraVerdict, InvariantProfile, KTheorySixTerm, PrimSpaceSummary,
    Semiprojectivity,
};
pub use euler::{clique_counts, euler_characteristic, euler_oracle, CliqueCounts, EulerError};
pub use graphs::{UndirectedGraph, VertexSet};
pub use kgraph::{
    condition_k, graph_ktheory, realize, sink_ideal_analysis, smith_normal_form,
    verify_realization, DirectedGraph, IntMatrix, KTheoryReport, Realization, SmithDecomposition,
};
