//! Derived reports: algebra names, primitive ideal spaces, the per-component
//! K-theory six-term data, and the graph-algebra and semiprojectivity
//! verdicts.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::format;

use super::decompose::ComponentClass;
use super::extnat::ExtNat;
use super::normal_form::{normal_form, OMin, Parity};
use super::profile::InvariantProfile;
use crate::abelian::FgAbelianGroup;

/// Factor counts up to this are written out as `A ⊗ A ⊗ A`; larger or
/// infinite counts use an exponent.
const EXPAND_UP_TO: u128 = 3;

fn push_factor(out: &mut Vec<String>, name: &str, count: ExtNat, wrap: bool) {
    match count {
        ExtNat::Finite(0) => {}
        ExtNat::Finite(k) if k <= EXPAND_UP_TO => out.extend((0..k).map(|_| String::from(name))),
        _ if wrap => out.push(format!("({name})^{{⊗{count}}}")),
        _ => out.push(format!("{name}^{{⊗{count}}}")),
    }
}

/// Canonical tensor expression for the algebra of a profile.
///
/// Factors appear as `T`, then a single `O_inf` (when it is not absorbed),
/// then `E_1^0`, then `E_n^±1` by ascending `n`. Signs are `+1` except that
/// an odd parity puts `−1` on one copy of the lowest `E_n`. The zero
/// profile is `C`.
pub fn algebra_name(p: &InvariantProfile) -> String {
    let nf = normal_form(p);
    let mut factors = Vec::new();
    push_factor(&mut factors, "T", nf.t, false);
    if nf.omin == OMin::One {
        factors.push(String::from("O_inf"));
    }
    push_factor(&mut factors, "E_1^0", nf.z, true);
    let mut flip = nf.parity == Parity::Odd;
    for (&k, &count) in &nf.m {
        let n = k + 1;
        let mut count = count;
        if flip {
            factors.push(format!("E_{n}^-1"));
            count = match count {
                ExtNat::Finite(c) => ExtNat::Finite(c - 1),
                ExtNat::Omega => unreachable!("odd parity implies finite counts"),
            };
            flip = false;
        }
        push_factor(&mut factors, &format!("E_{n}^+1"), count, true);
    }
    if factors.is_empty() {
        String::from("C")
    } else {
        factors.join(" ⊗ ")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PrimKind {
    /// Singleton component: a point and a circle.
    ToeplitzSpace,
    /// Finite component: a closed point and a dense point.
    TwoPoint,
    /// Infinite component: one point.
    OnePoint,
}

impl PrimKind {
    pub fn of(class: ComponentClass) -> Self {
        match class {
            ComponentClass::Toeplitz => PrimKind::ToeplitzSpace,
            ComponentClass::FiniteExt(_) => PrimKind::TwoPoint,
            ComponentClass::InfiniteComp => PrimKind::OnePoint,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PrimKind::ToeplitzSpace => "ToeplitzSpace",
            PrimKind::TwoPoint => "TwoPoint",
            PrimKind::OnePoint => "OnePoint",
        }
    }
}

/// The primitive ideal space is the product of the factor spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimSpaceSummary {
    /// Factor kinds with multiplicities, zero counts omitted.
    pub factors: Vec<(PrimKind, ExtNat)>,
    /// Number of factors in the product.
    pub factor_count: ExtNat,
    /// `Σ_n N_n` when finite: the minimal nonzero primitive ideals coming
    /// from the compact ideals of the finite components.
    pub minimal_ideals: Option<u128>,
}

pub fn prim_space(p: &InvariantProfile) -> PrimSpaceSummary {
    let total = p.total_n();
    let factors: Vec<(PrimKind, ExtNat)> = [(PrimKind::ToeplitzSpace, p.t()), (PrimKind::TwoPoint, total), (PrimKind::OnePoint, p.o())]
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let factor_count = factors.iter().map(|&(_, c)| c).sum();
    PrimSpaceSummary { factors, factor_count, minimal_ideals: total.finite() }
}

/// Six-term sequence data for `0 → K → A → A/K → 0` of one component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTheorySixTerm {
    pub label: &'static str,
    pub k0_full: FgAbelianGroup,
    /// The unit class generates `k0_full`.
    pub unit_generates: bool,
    pub k1_full: FgAbelianGroup,
    /// `None` when the algebra has no compact ideal row (simple case).
    pub k0_ideal: Option<FgAbelianGroup>,
    pub k0_quotient: Option<FgAbelianGroup>,
    pub k1_quotient: Option<FgAbelianGroup>,
    /// `K_0(K) → K_0(A)` is multiplication by this value (`χ`).
    pub index_value: Option<i64>,
}

pub fn component_ktheory(class: ComponentClass) -> KTheorySixTerm {
    let with_index = |label, chi: i64| KTheorySixTerm {
        label,
        k0_full: FgAbelianGroup::integers(),
        unit_generates: true,
        k1_full: FgAbelianGroup::zero(),
        k0_ideal: Some(FgAbelianGroup::integers()),
        k0_quotient: Some(FgAbelianGroup::cyclic(chi.unsigned_abs() as u128)),
        k1_quotient: Some(if chi == 0 { FgAbelianGroup::integers() } else { FgAbelianGroup::zero() }),
        index_value: Some(chi),
    };
    match class {
        ComponentClass::Toeplitz => with_index("standard Toeplitz extension", 0),
        ComponentClass::FiniteExt(chi) => with_index("extension by compacts", chi),
        ComponentClass::InfiniteComp => KTheorySixTerm {
            label: "simple (no ideal row)",
            k0_full: FgAbelianGroup::integers(),
            unit_generates: true,
            k1_full: FgAbelianGroup::zero(),
            k0_ideal: None,
            k0_quotient: None,
            k1_quotient: None,
            index_value: None,
        },
    }
}

/// The distinct component classes present in a profile, in factor order
/// (`Toeplitz`, `FiniteExt` by key, `InfiniteComp`).
pub fn profile_classes(p: &InvariantProfile) -> Vec<ComponentClass> {
    let mut out = Vec::new();
    if !p.t().is_zero() {
        out.push(ComponentClass::Toeplitz);
    }
    out.extend(p.n_entries().map(|(k, _)| ComponentClass::FiniteExt(k)));
    if !p.o().is_zero() {
        out.push(ComponentClass::InfiniteComp);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphAlgebraVerdict {
    /// `t = 1`, `o = 0`, `N ≡ 0`: the Toeplitz algebra.
    ToeplitzClause,
    /// `t = 0`, `N_{−1} + N_1` finite, `Σ_{|k|≠1} N_k <= 1`.
    NoSingletonClause,
    NotGraphAlgebra,
}

impl GraphAlgebraVerdict {
    pub fn holds(self) -> bool {
        self != GraphAlgebraVerdict::NotGraphAlgebra
    }

    pub fn clause(self) -> Option<u8> {
        match self {
            GraphAlgebraVerdict::ToeplitzClause => Some(1),
            GraphAlgebraVerdict::NoSingletonClause => Some(2),
            GraphAlgebraVerdict::NotGraphAlgebra => None,
        }
    }
}

fn no_singleton_condition(p: &InvariantProfile) -> bool {
    p.t().is_zero() && (p.n(-1) + p.n(1)).is_finite() && p.off_unit_total() <= ExtNat::ONE
}

/// Whether the algebra of `p` is isomorphic to a graph algebra.
pub fn is_graph_algebra(p: &InvariantProfile) -> GraphAlgebraVerdict {
    if p.t() == ExtNat::ONE && p.o().is_zero() && p.total_n().is_zero() {
        GraphAlgebraVerdict::ToeplitzClause
    } else if no_singleton_condition(p) {
        GraphAlgebraVerdict::NoSingletonClause
    } else {
        GraphAlgebraVerdict::NotGraphAlgebra
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Semiprojectivity {
    Semiprojective,
    NotSemiprojective,
    /// Not decided by the known criteria; never to be replaced by a guess.
    Unknown,
}

impl Semiprojectivity {
    pub fn as_str(self) -> &'static str {
        match self {
            Semiprojectivity::Semiprojective => "Semiprojective",
            Semiprojectivity::NotSemiprojective => "NotSemiprojective",
            Semiprojectivity::Unknown => "Unknown",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SemiprojectivityVerdict {
    pub verdict: Semiprojectivity,
    /// 1: `t > 1`; 2: `t = 1`; 3: `t = 0`.
    pub clause: u8,
}

pub fn semiprojectivity(p: &InvariantProfile) -> SemiprojectivityVerdict {
    let t = p.t();
    let (verdict, clause) = if t > ExtNat::ONE {
        (Semiprojectivity::NotSemiprojective, 1)
    } else if t == ExtNat::ONE {
        if p.o().is_zero() && p.total_n().is_zero() {
            (Semiprojectivity::Semiprojective, 2)
        } else {
            (Semiprojectivity::NotSemiprojective, 2)
        }
    } else if no_singleton_condition(p) {
        (Semiprojectivity::Semiprojective, 3)
    } else {
        (Semiprojectivity::Unknown, 3)
    };
    SemiprojectivityVerdict { verdict, clause }
}

/// Human rendering in the `N_k=v, t=v` style.
pub fn profile_summary(p: &InvariantProfile) -> String {
    let mut parts: Vec<String> = p.n_entries().map(|(k, v)| format!("N_{{{k}}}={v}")).collect();
    if !p.t().is_zero() {
        parts.push(format!("t={}", p.t()));
    }
    if !p.o().is_zero() {
        parts.push(format!("o={}", p.o()));
    }
    if parts.is_empty() {
        String::from("(all zero)")
    } else {
        parts.join(", ")
    }
}
