use alloc::vec;
use alloc::vec::Vec;

const WORD: usize = 64;

/// A fixed-capacity set of vertices backed by 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn with_capacity(n: usize) -> Self {
        VertexSet { words: vec![0; n.div_ceil(WORD)] }
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::with_capacity(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / WORD)
            .is_some_and(|w| w & (1u64 << (v % WORD)) != 0)
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.words[v / WORD] |= 1u64 << (v % WORD);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if let Some(w) = self.words.get_mut(v / WORD) {
            *w &= !(1u64 << (v % WORD));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Elements of `self ∩ other` strictly greater than `floor`.
    pub fn intersection_above(&self, other: &VertexSet, floor: usize) -> VertexSet {
        let mut words: Vec<u64> = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| a & b)
            .collect();
        let cut = floor + 1;
        for (i, w) in words.iter_mut().enumerate() {
            let lo = i * WORD;
            if lo + WORD <= cut {
                *w = 0;
            } else if lo < cut {
                *w &= !0u64 << (cut - lo);
            }
        }
        VertexSet { words }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            core::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * WORD + bit)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn above_masks_across_word_boundary() {
        let a = VertexSet::full(130);
        let b = VertexSet::full(130);
        let s = a.intersection_above(&b, 70);
        assert_eq!(s.iter().next(), Some(71));
        assert_eq!(s.len(), 130 - 71);
        let s = a.intersection_above(&b, 63);
        assert_eq!(s.iter().next(), Some(64));
    }

    #[test]
    fn insert_remove() {
        let mut s = VertexSet::with_capacity(10);
        s.insert(3);
        s.insert(9);
        assert!(s.contains(9) && !s.contains(4));
        s.remove(3);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![9]);
    }
}
