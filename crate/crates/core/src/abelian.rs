use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Finitely generated abelian group `Z^r ⊕ Z/d_1 ⊕ .. ⊕ Z/d_s` in
/// invariant-factor form: `2 <= d_1 | d_2 | .. | d_s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FgAbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigUint>,
}

impl FgAbelianGroup {
    pub fn zero() -> Self {
        FgAbelianGroup { free_rank: 0, torsion: Vec::new() }
    }

    pub fn integers() -> Self {
        Self::free(1)
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup { free_rank: rank, torsion: Vec::new() }
    }

    /// `Z/mZ`, so `m = 0` gives `Z` and `m = 1` the trivial group.
    pub fn cyclic(m: u128) -> Self {
        match m {
            0 => Self::integers(),
            1 => Self::zero(),
            _ => FgAbelianGroup { free_rank: 0, torsion: alloc::vec![BigUint::from(m)] },
        }
    }

    /// Group from the diagonal of a Smith form: entries equal to one are
    /// dropped, zeros become free summands.
    pub fn from_invariant_factors<'a>(diag: impl IntoIterator<Item = &'a BigUint>) -> Self {
        let mut g = Self::zero();
        for d in diag {
            if d.is_zero() {
                g.free_rank += 1;
            } else if !d.is_one() {
                g.torsion.push(d.clone());
            }
        }
        g.torsion.sort();
        g
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_integers(&self) -> bool {
        self.free_rank == 1 && self.torsion.is_empty()
    }

    /// Number of cyclic summands.
    pub fn generator_count(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn torsion_strings(&self) -> Vec<String> {
        self.torsion.iter().map(|d| alloc::format!("{d}")).collect()
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut first = true;
        for d in &self.torsion {
            if !first {
                f.write_str(" ⊕ ")?;
            }
            write!(f, "Z/{d}")?;
            first = false;
        }
        if self.free_rank > 0 {
            if !first {
                f.write_str(" ⊕ ")?;
            }
            f.write_str("Z")?;
            if self.free_rank > 1 {
                write!(f, "^{}", self.free_rank)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn display() {
        assert_eq!(FgAbelianGroup::cyclic(0).to_string(), "Z");
        assert_eq!(FgAbelianGroup::cyclic(1).to_string(), "0");
        assert_eq!(FgAbelianGroup::cyclic(4).to_string(), "Z/4");
        let g = FgAbelianGroup::from_invariant_factors(&[BigUint::from(1u8), BigUint::from(6u8), BigUint::from(2u8), BigUint::zero(), BigUint::zero()]);
        assert_eq!(g.to_string(), "Z/2 ⊕ Z/6 ⊕ Z^2");
        assert_eq!(g.generator_count(), 4);
    }
}
