use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::extnat::ExtNat;

/// Counts `t`, `o` and `N_n` of co-irreducible components.
///
/// `t` counts singleton components, `o` infinite components and `N_n` the
/// finite components with at least two vertices and Euler characteristic
/// `n`. Zero entries of `N` are never stored, so derived equality is
/// equality of profiles.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvariantProfile {
    t: ExtNat,
    o: ExtNat,
    n: BTreeMap<i64, ExtNat>,
}

impl InvariantProfile {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_t(mut self, t: impl Into<ExtNat>) -> Self {
        self.t = t.into();
        self
    }

    pub fn with_o(mut self, o: impl Into<ExtNat>) -> Self {
        self.o = o.into();
        self
    }

    pub fn with_n(mut self, chi: i64, count: impl Into<ExtNat>) -> Self {
        self.set_n(chi, count.into());
        self
    }

    pub fn set_t(&mut self, t: ExtNat) {
        self.t = t;
    }

    pub fn set_o(&mut self, o: ExtNat) {
        self.o = o;
    }

    pub fn set_n(&mut self, chi: i64, count: ExtNat) {
        if count.is_zero() {
            self.n.remove(&chi);
        } else {
            self.n.insert(chi, count);
        }
    }

    /// Adds one finite component of Euler characteristic `chi`.
    pub fn bump_n(&mut self, chi: i64) {
        let c = self.n(chi) + ExtNat::ONE;
        self.n.insert(chi, c);
    }

    pub fn t(&self) -> ExtNat {
        self.t
    }

    pub fn o(&self) -> ExtNat {
        self.o
    }

    pub fn n(&self, chi: i64) -> ExtNat {
        self.n.get(&chi).copied().unwrap_or_default()
    }

    /// Nonzero `N` entries, keys ascending.
    pub fn n_entries(&self) -> impl Iterator<Item = (i64, ExtNat)> + '_ {
        self.n.iter().map(|(&k, &v)| (k, v))
    }

    /// `Σ_n N_n`.
    pub fn total_n(&self) -> ExtNat {
        self.n.values().copied().sum()
    }

    /// `Σ_{n≥1} N_{−n}`.
    pub fn negative_total(&self) -> ExtNat {
        self.n.range(..0).map(|(_, &v)| v).sum()
    }

    /// `Σ_{|k|≠1} N_k`.
    pub fn off_unit_total(&self) -> ExtNat {
        self.n.iter().filter(|(&k, _)| k != 1 && k != -1).map(|(_, &v)| v).sum()
    }

    /// `|k|` for every nonzero key, ascending and deduplicated.
    pub fn abs_keys(&self) -> Vec<u64> {
        let mut keys: Vec<u64> = self.n.keys().map(|k| k.unsigned_abs()).collect();
        keys.sort_unstable();
        keys.dedup();
        keys
    }

    pub fn is_zero(&self) -> bool {
        self.t.is_zero() && self.o.is_zero() && self.n.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_entries_are_dropped() {
        let p = InvariantProfile::new().with_n(3, 0u128).with_n(-1, 2u128);
        assert_eq!(p, InvariantProfile::new().with_n(-1, 2u128));
        assert_eq!(p.total_n(), ExtNat::Finite(2));
        assert_eq!(p.negative_total(), ExtNat::Finite(2));
        assert_eq!(p.off_unit_total(), ExtNat::ZERO);
    }

    #[test]
    fn totals() {
        let p = InvariantProfile::new().with_n(-3, 1u128).with_n(0, ExtNat::Omega).with_n(1, 4u128);
        assert_eq!(p.total_n(), ExtNat::Omega);
        assert_eq!(p.off_unit_total(), ExtNat::Omega);
        assert_eq!(p.negative_total(), ExtNat::ONE);
        assert_eq!(p.abs_keys(), [0, 1, 3]);
    }
}
