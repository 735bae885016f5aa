//! Directed graphs, their graph-algebra K-theory, and realizations of
//! single-factor profiles as graph algebras.

mod digraph;
mod ktheory;
mod matrix;
mod realize;

pub use digraph::{condition_k, simple_loops_at, DirectedGraph};
pub use ktheory::{graph_ktheory, relation_matrix, sink_ideal_analysis, KTheoryReport, SinkAnalysis, SinkAnalysisError};
pub use matrix::{smith_normal_form, IntMatrix, SmithDecomposition};
pub use realize::{
    realize, single_factor_target, template, verify_realization, Check, Realization, RealizationTarget,
    VerificationReport, VerifyError,
};
