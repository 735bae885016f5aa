//! Normal forms deciding isomorphism and stable isomorphism.
//!
//! Two profiles give isomorphic algebras exactly when
//!
//! * (i)   `t` agrees,
//! * (ii)  `N_{−n} + N_n` agrees for every `n`,
//! * (iii) `Σ N` is infinite, or `min(o, 1)` agrees,
//! * (iv)  when `Σ N` is finite and `o = N_0 = 0`, `Σ_{n≥1} N_{−n}` agrees mod 2,
//!
//! and stably isomorphic exactly when (i)-(iii) hold. [`AlgebraNormalForm`]
//! packs the quantities these conditions compare, so equality of normal
//! forms is the same decision. [`compare`] evaluates the conditions one by
//! one; [`compare_via_normal_form`] is the second route.

use alloc::collections::{BTreeMap, BTreeSet};
use core::fmt;

use super::extnat::ExtNat;
use super::profile::InvariantProfile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OMin {
    Zero,
    One,
    /// `Σ N` is infinite, so `o` does not matter.
    Irrelevant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
    Undefined,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraNormalForm {
    pub t: ExtNat,
    /// `N_0`.
    pub z: ExtNat,
    /// `M_n = N_{−n} + N_n` for `n >= 1`; zero entries omitted.
    pub m: BTreeMap<u64, ExtNat>,
    pub omin: OMin,
    pub parity: Parity,
}

impl AlgebraNormalForm {
    /// `z + Σ M_n`.
    pub fn total_n(&self) -> ExtNat {
        self.z + self.m.values().copied().sum()
    }

    /// The stable variant: parity forgotten.
    pub fn stabilize(mut self) -> Self {
        self.parity = Parity::Undefined;
        self
    }
}

fn parity_premise(p: &InvariantProfile) -> bool {
    p.total_n().is_finite() && p.o().is_zero() && p.n(0).is_zero()
}

pub fn normal_form(p: &InvariantProfile) -> AlgebraNormalForm {
    let mut m = BTreeMap::new();
    for k in p.abs_keys().into_iter().filter(|&k| k > 0) {
        let k_signed = k as i64;
        m.insert(k, p.n(-k_signed) + p.n(k_signed));
    }
    let total = p.total_n();
    let omin = if !total.is_finite() {
        OMin::Irrelevant
    } else if p.o().is_zero() {
        OMin::Zero
    } else {
        OMin::One
    };
    let parity = if parity_premise(p) {
        match p.negative_total().is_odd() {
            Some(true) => Parity::Odd,
            Some(false) => Parity::Even,
            None => unreachable!("finite total has finite parts"),
        }
    } else {
        Parity::Undefined
    };
    AlgebraNormalForm { t: p.t(), z: p.n(0), m, omin, parity }
}

pub fn stable_normal_form(p: &InvariantProfile) -> AlgebraNormalForm {
    normal_form(p).stabilize()
}

/// One of the four classification conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    I,
    II,
    III,
    IV,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::I => "i",
            Condition::II => "ii",
            Condition::III => "iii",
            Condition::IV => "iv",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonVerdict {
    pub isomorphic: bool,
    pub stably_isomorphic: bool,
    /// Every failed condition, not only the first.
    pub failed: BTreeSet<Condition>,
}

/// Evaluates conditions (i)-(iv) directly on the two profiles.
///
/// Conditions are evaluated in a form symmetric in the two arguments: (iii)
/// is waived only when both totals are infinite, and (iv) applies when
/// either side meets its premise. When (ii) holds these agree with the
/// one-sided reading.
pub fn compare(a: &InvariantProfile, b: &InvariantProfile) -> ComparisonVerdict {
    let mut failed = BTreeSet::new();
    if a.t() != b.t() {
        failed.insert(Condition::I);
    }
    let mut keys = a.abs_keys();
    keys.extend(b.abs_keys());
    let folded_differs = keys.into_iter().any(|k| {
        let k = k as i64;
        a.n(-k) + a.n(k) != b.n(-k) + b.n(k)
    });
    if folded_differs {
        failed.insert(Condition::II);
    }
    let both_infinite = !a.total_n().is_finite() && !b.total_n().is_finite();
    if !both_infinite && a.o().min_one() != b.o().min_one() {
        failed.insert(Condition::III);
    }
    if (parity_premise(a) || parity_premise(b)) && a.negative_total().is_odd() != b.negative_total().is_odd() {
        failed.insert(Condition::IV);
    }
    let stably_isomorphic = !failed.iter().any(|c| *c != Condition::IV);
    let isomorphic = failed.is_empty();
    let verdict = ComparisonVerdict { isomorphic, stably_isomorphic, failed };
    debug_assert_eq!(
        compare_via_normal_form(a, b),
        (verdict.isomorphic, verdict.stably_isomorphic),
        "condition route and normal-form route disagree"
    );
    verdict
}

/// `(isomorphic, stably_isomorphic)` from normal-form equality alone.
pub fn compare_via_normal_form(a: &InvariantProfile, b: &InvariantProfile) -> (bool, bool) {
    (normal_form(a) == normal_form(b), stable_normal_form(a) == stable_normal_form(b))
}
