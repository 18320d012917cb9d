//! Dense bitset over vertex labels `0..n`.

use alloc::vec;
use alloc::vec::Vec;

/// A subset of `{0, 1, ..., n-1}` stored as a fixed-width bitset.
///
/// The width is fixed at construction; all vertices passed to the mutating
/// and querying methods must be below it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSubset {
    words: Vec<u64>,
    n: u32,
    len: u32,
}

impl VertexSubset {
    /// Empty subset of a ground set of size `n`.
    pub fn empty(n: u32) -> Self {
        let w = (n as usize).div_ceil(64);
        VertexSubset {
            words: vec![0u64; w],
            n,
            len: 0,
        }
    }

    /// Full subset `{0, ..., n-1}`.
    pub fn full(n: u32) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    /// Subset from an iterator of vertex labels.
    pub fn from_iter_n(n: u32, it: impl IntoIterator<Item = u32>) -> Self {
        let mut s = Self::empty(n);
        for v in it {
            s.insert(v);
        }
        s
    }

    /// Size of the ground set.
    pub fn ground_size(&self) -> u32 {
        self.n
    }

    /// Number of elements in the subset.
    pub fn len(&self) -> u32 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, v: u32) -> bool {
        debug_assert!(v < self.n);
        self.words[(v / 64) as usize] >> (v % 64) & 1 == 1
    }

    /// Inserts `v`; returns true if it was not already present.
    pub fn insert(&mut self, v: u32) -> bool {
        debug_assert!(v < self.n, "vertex {} out of range {}", v, self.n);
        let w = &mut self.words[(v / 64) as usize];
        let bit = 1u64 << (v % 64);
        if *w & bit == 0 {
            *w |= bit;
            self.len += 1;
            true
        } else {
            false
        }
    }

    /// Removes `v`; returns true if it was present.
    pub fn remove(&mut self, v: u32) -> bool {
        debug_assert!(v < self.n);
        let w = &mut self.words[(v / 64) as usize];
        let bit = 1u64 << (v % 64);
        if *w & bit != 0 {
            *w &= !bit;
            self.len -= 1;
            true
        } else {
            false
        }
    }

    /// True if `self` and `other` share no element. Widths must agree.
    pub fn is_disjoint(&self, other: &VertexSubset) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// True if every element of `self` lies in `other`. Widths must agree.
    pub fn is_subset_of(&self, other: &VertexSubset) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// In-place union.
    pub fn union_with(&mut self, other: &VertexSubset) {
        debug_assert_eq!(self.n, other.n);
        let mut len = 0u32;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
            len += a.count_ones();
        }
        self.len = len;
    }

    /// Number of elements shared with `other`.
    pub fn intersection_len(&self, other: &VertexSubset) -> u32 {
        debug_assert_eq!(self.n, other.n);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    /// Ascending iterator over the elements.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let base = wi as u32 * 64;
            BitIter { word: w, base }
        })
    }

    /// Elements collected into an ascending `Vec`.
    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }
}

impl core::fmt::Debug for VertexSubset {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

struct BitIter {
    word: u64,
    base: u32,
}

impl Iterator for BitIter {
    type Item = u32;
    fn next(&mut self) -> Option<u32> {
        if self.word == 0 {
            return None;
        }
        let tz = self.word.trailing_zeros();
        self.word &= self.word - 1;
        Some(self.base + tz)
    }
}
