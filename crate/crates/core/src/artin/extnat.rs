use core::cmp::Ordering;
use core::fmt;
use core::iter::Sum;
use core::ops::Add;

/// A count in `{0, 1, 2, .., ω}` with `ω` the countable infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtNat {
    Finite(u128),
    Omega,
}

impl ExtNat {
    pub const ZERO: ExtNat = ExtNat::Finite(0);
    pub const ONE: ExtNat = ExtNat::Finite(1);

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Finite(_))
    }

    pub fn finite(self) -> Option<u128> {
        match self {
            ExtNat::Finite(k) => Some(k),
            ExtNat::Omega => None,
        }
    }

    /// Parity of a finite count; `None` for `ω`.
    pub fn is_odd(self) -> Option<bool> {
        self.finite().map(|k| k % 2 == 1)
    }

    /// `min(self, 1)`.
    pub fn min_one(self) -> ExtNat {
        self.min(Self::ONE)
    }
}

impl Default for ExtNat {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<u128> for ExtNat {
    fn from(k: u128) -> Self {
        ExtNat::Finite(k)
    }
}

impl PartialOrd for ExtNat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtNat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtNat::Finite(a), ExtNat::Finite(b)) => a.cmp(b),
            (ExtNat::Finite(_), ExtNat::Omega) => Ordering::Less,
            (ExtNat::Omega, ExtNat::Finite(_)) => Ordering::Greater,
            (ExtNat::Omega, ExtNat::Omega) => Ordering::Equal,
        }
    }
}

/// `ω` absorbs. Panics if a finite sum passes `u128::MAX`, which needs
/// more than `2^64` summands of `u64` size.
impl Add for ExtNat {
    type Output = ExtNat;

    fn add(self, rhs: ExtNat) -> ExtNat {
        match (self, rhs) {
            (ExtNat::Finite(a), ExtNat::Finite(b)) => ExtNat::Finite(a.checked_add(b).expect("ExtNat overflow")),
            _ => ExtNat::Omega,
        }
    }
}

impl Sum for ExtNat {
    fn sum<I: Iterator<Item = ExtNat>>(iter: I) -> ExtNat {
        iter.fold(ExtNat::ZERO, Add::add)
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(k) => write!(f, "{k}"),
            ExtNat::Omega => f.write_str("inf"),
        }
    }
}
