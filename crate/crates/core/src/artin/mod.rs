//! Classification of the semigroup C*-algebras from graphs or profiles.

mod decompose;
mod extnat;
mod normal_form;
mod profile;
mod report;

pub use decompose::{
    classify_component, decompose, decompose_oracle, invariant_profile, ArtinError, CoIrreducibleComponent,
    ComponentClass, DECOMPOSE_ORACLE_MAX_N,
};
pub use extnat::ExtNat;
pub use normal_form::{
    compare, compare_via_normal_form, normal_form, stable_normal_form, AlgebraNormalForm, ComparisonVerdict,
    Condition, OMin, Parity,
};
pub use profile::InvariantProfile;
pub use report::{
    algebra_name, component_ktheory, is_graph_algebra, prim_space, profile_classes, profile_summary,
    semiprojectivity, GraphAlgebraVerdict, KTheorySixTerm, PrimKind, PrimSpaceSummary, Semiprojectivity,
    SemiprojectivityVerdict,
};
