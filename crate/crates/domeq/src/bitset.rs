//! Fixed-capacity vertex sets backed by 64-bit words.

use std::fmt;

const WORD_BITS: usize = 64;

/// A set of vertex indices drawn from `[0, nbits)`.
///
/// Unused bits of the last word are kept at zero, so derived equality and
/// hashing are exact set equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    nbits: usize,
    words: Vec<u64>,
}

fn word_count(nbits: usize) -> usize {
    nbits.div_ceil(WORD_BITS)
}

impl VertexSet {
    pub fn empty(nbits: usize) -> Self {
        VertexSet {
            nbits,
            words: vec![0; word_count(nbits)],
        }
    }

    pub fn full(nbits: usize) -> Self {
        let mut s = Self::empty(nbits);
        for v in 0..nbits {
            s.insert(v);
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(nbits: usize, indices: I) -> Self {
        let mut s = Self::empty(nbits);
        for v in indices {
            s.insert(v);
        }
        s
    }

    /// Builds a set over `nbits <= 64` vertices from a mask word.
    pub fn from_word(nbits: usize, word: u64) -> Self {
        assert!(nbits <= WORD_BITS);
        let mut s = Self::empty(nbits);
        if nbits > 0 {
            s.words[0] = word & low_mask(nbits);
        }
        s
    }

    /// The mask word of a set over at most 64 vertices.
    pub fn as_word(&self) -> Option<u64> {
        if self.nbits <= WORD_BITS {
            Some(self.words.first().copied().unwrap_or(0))
        } else {
            None
        }
    }

    pub fn capacity(&self) -> usize {
        self.nbits
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.nbits, "vertex {} out of range [0, {})", v, self.nbits);
        self.words[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.nbits);
        self.words[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.nbits && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        assert_eq!(self.nbits, other.nbits);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        assert_eq!(self.nbits, other.nbits);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Complement within the ground set `[0, nbits)`.
    pub fn complement(&self) -> VertexSet {
        let mut s = VertexSet {
            nbits: self.nbits,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.trim();
        s
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let base = wi * WORD_BITS;
            BitIter { word: w, base }
        })
    }

    fn trim(&mut self) {
        let extra = self.words.len() * WORD_BITS - self.nbits;
        if extra > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= !0u64 >> extra;
            }
        }
    }
}

fn low_mask(bits: usize) -> u64 {
    if bits >= 64 {
        !0
    } else {
        (1u64 << bits) - 1
    }
}

struct BitIter {
    word: u64,
    base: usize,
}

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let tz = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(self.base + tz)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
