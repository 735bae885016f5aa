//! Clique counts of the flag complex and the Euler characteristic
//! `χ(Γ) = 1 − Σ_{k≥1} (−1)^{k−1} c_k`, where `c_k` is the number of
//! `k`-vertex cliques.
//!
//! Counts are `u128` with checked arithmetic. Cliques are visited one at a
//! time, so a count large enough to overflow could never be reached in
//! practice, but the checks keep the arithmetic exact regardless.

use alloc::vec;
use alloc::vec::Vec;

use crate::graphs::{LimitError, UndirectedGraph, VertexSet};

/// Largest vertex count accepted by [`euler_oracle`].
pub const ORACLE_MAX_N: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EulerError {
    #[error("clique count or Euler characteristic exceeds the exact integer range")]
    Overflow,
    #[error(transparent)]
    Limit(#[from] LimitError),
}

/// `c_1, .., c_n`: `counts()[k - 1]` is the number of `k`-cliques.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CliqueCounts(Vec<u128>);

impl CliqueCounts {
    pub fn counts(&self) -> &[u128] {
        &self.0
    }

    /// Number of `k`-vertex cliques (`k >= 1`); zero beyond the clique number.
    pub fn get(&self, k: usize) -> u128 {
        k.checked_sub(1).and_then(|i| self.0.get(i)).copied().unwrap_or(0)
    }

    pub fn clique_number(&self) -> usize {
        self.0.iter().rposition(|&c| c > 0).map_or(0, |i| i + 1)
    }

    /// `1 + Σ_k (−1)^k c_k`.
    pub fn euler_characteristic(&self) -> Result<i128, EulerError> {
        let mut chi: i128 = 1;
        for (i, &c) in self.0.iter().enumerate() {
            let c = i128::try_from(c).map_err(|_| EulerError::Overflow)?;
            let k = i + 1;
            chi = if k % 2 == 0 { chi.checked_add(c) } else { chi.checked_sub(c) }.ok_or(EulerError::Overflow)?;
        }
        Ok(chi)
    }
}

/// Counts cliques of every size by ordered extension: a clique is only
/// extended by vertices above its current maximum that are adjacent to
/// all of its members, so each clique is produced exactly once.
pub fn clique_counts(g: &UndirectedGraph) -> Result<CliqueCounts, EulerError> {
    let n = g.n();
    let mut counts = vec![0u128; n];
    for v in 0..n {
        counts[0] = counts[0].checked_add(1).ok_or(EulerError::Overflow)?;
        let cand = g.neighbors(v).intersection_above(&VertexSet::full(n), v);
        extend(g, &cand, 1, &mut counts)?;
    }
    Ok(CliqueCounts(counts))
}

fn extend(g: &UndirectedGraph, cand: &VertexSet, depth: usize, counts: &mut [u128]) -> Result<(), EulerError> {
    for w in cand.iter() {
        counts[depth] = counts[depth].checked_add(1).ok_or(EulerError::Overflow)?;
        let next = cand.intersection_above(g.neighbors(w), w);
        if !next.is_empty() {
            extend(g, &next, depth + 1, counts)?;
        }
    }
    Ok(())
}

pub fn euler_characteristic(g: &UndirectedGraph) -> Result<i128, EulerError> {
    clique_counts(g)?.euler_characteristic()
}

/// Independent check of [`euler_characteristic`]: sums `(−1)^{|S|}` over
/// every vertex subset `S` (including the empty one) whose members are
/// pairwise adjacent. Exponential; `n <= 20`.
pub fn euler_oracle(g: &UndirectedGraph) -> Result<i128, EulerError> {
    let n = g.n();
    if n > ORACLE_MAX_N {
        return Err(LimitError { what: "euler_oracle", n, limit: ORACLE_MAX_N }.into());
    }
    let adj: Vec<u32> = (0..n)
        .map(|u| (0..n).filter(|&v| g.has_edge(u, v)).fold(0u32, |m, v| m | 1 << v))
        .collect();
    let mut chi: i128 = 0;
    for subset in 0u32..(1u32 << n) {
        let is_clique = (0..n)
            .filter(|&v| subset >> v & 1 == 1)
            .all(|v| adj[v] & subset == subset & !(1 << v));
        if is_clique {
            chi += if subset.count_ones() % 2 == 0 { 1 } else { -1 };
        }
    }
    Ok(chi)
}
