//! Word-packed vertex sets.
//!
//! [`VertexSet`] stores vertices as bits in 64-bit words, inline for up to
//! 128 vertices and on the heap beyond that. Trailing zero words are always
//! trimmed so that equality and hashing only depend on the members.
//!
//! The counting and path engines run on the crate-internal [`Mask`]
//! abstraction, which is implemented both for a bare `u128` (graphs with at
//! most 128 vertices) and for [`VertexSet`] (the fallback for larger graphs).

use std::fmt;
use std::hash::Hash;

use smallvec::SmallVec;

/// Number of vertices for which the packed `u128` fast path is used.
pub const NARROW_LIMIT: usize = 128;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: SmallVec<[u64; 2]>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The set `{0, 1, ..., n - 1}`.
    pub fn full(n: usize) -> Self {
        let mut words: SmallVec<[u64; 2]> = SmallVec::from_elem(u64::MAX, n / 64);
        if !n.is_multiple_of(64) {
            words.push((1u64 << (n % 64)) - 1);
        }
        VertexSet { words }
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    pub fn insert(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !had
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        if w >= self.words.len() {
            return false;
        }
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        self.trim();
        had
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / 64)
            .is_some_and(|w| w >> (v % 64) & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn min(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn max(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, o) in words.iter_mut().zip(short.words.iter()) {
            *w |= o;
        }
        VertexSet { words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = VertexSet {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a & b)
                .collect(),
        };
        s.trim();
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for (w, o) in s.words.iter_mut().zip(other.words.iter()) {
            *w &= !o;
        }
        s.trim();
        s
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.len() <= other.words.len()
            && self
                .words
                .iter()
                .zip(other.words.iter())
                .all(|(a, b)| a & !b == 0)
    }

    pub(crate) fn to_u128(&self) -> u128 {
        debug_assert!(self.words.len() <= 2);
        self.words
            .iter()
            .enumerate()
            .fold(0, |acc, (i, w)| acc | (*w as u128) << (64 * i))
    }

    #[cfg(test)]
    pub(crate) fn from_u128(mask: u128) -> Self {
        let mut s = VertexSet {
            words: SmallVec::from_buf([mask as u64, (mask >> 64) as u64]),
        };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(vs: [usize; N]) -> Self {
        vs.into_iter().collect()
    }
}

impl From<&[usize]> for VertexSet {
    fn from(vs: &[usize]) -> Self {
        vs.iter().copied().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.index * 64 + bit)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Bit-mask operations shared by the counting and path engines.
pub(crate) trait Mask: Clone + Eq + Hash {
    fn empty() -> Self;
    fn single(v: usize) -> Self;
    fn from_set(s: &VertexSet) -> Self;
    fn is_empty(&self) -> bool;
    fn contains(&self, v: usize) -> bool;
    fn count(&self) -> u32;
    fn and(&self, o: &Self) -> Self;
    fn or(&self, o: &Self) -> Self;
    fn and_not(&self, o: &Self) -> Self;
    fn lowest(&self) -> Option<usize>;
    fn pop_lowest(&mut self) -> Option<usize>;
}

impl Mask for u128 {
    #[inline]
    fn empty() -> Self {
        0
    }
    #[inline]
    fn single(v: usize) -> Self {
        1 << v
    }
    fn from_set(s: &VertexSet) -> Self {
        s.to_u128()
    }
    #[inline]
    fn is_empty(&self) -> bool {
        *self == 0
    }
    #[inline]
    fn contains(&self, v: usize) -> bool {
        self >> v & 1 == 1
    }
    #[inline]
    fn count(&self) -> u32 {
        self.count_ones()
    }
    #[inline]
    fn and(&self, o: &Self) -> Self {
        self & o
    }
    #[inline]
    fn or(&self, o: &Self) -> Self {
        self | o
    }
    #[inline]
    fn and_not(&self, o: &Self) -> Self {
        self & !o
    }
    #[inline]
    fn lowest(&self) -> Option<usize> {
        (*self != 0).then(|| self.trailing_zeros() as usize)
    }
    #[inline]
    fn pop_lowest(&mut self) -> Option<usize> {
        let v = self.lowest()?;
        *self &= *self - 1;
        Some(v)
    }
}

impl Mask for VertexSet {
    fn empty() -> Self {
        VertexSet::new()
    }
    fn single(v: usize) -> Self {
        VertexSet::singleton(v)
    }
    fn from_set(s: &VertexSet) -> Self {
        s.clone()
    }
    fn is_empty(&self) -> bool {
        VertexSet::is_empty(self)
    }
    fn contains(&self, v: usize) -> bool {
        VertexSet::contains(self, v)
    }
    fn count(&self) -> u32 {
        self.len() as u32
    }
    fn and(&self, o: &Self) -> Self {
        self.intersection(o)
    }
    fn or(&self, o: &Self) -> Self {
        self.union(o)
    }
    fn and_not(&self, o: &Self) -> Self {
        self.difference(o)
    }
    fn lowest(&self) -> Option<usize> {
        self.min()
    }
    fn pop_lowest(&mut self) -> Option<usize> {
        let v = self.min()?;
        self.remove(v);
        Some(v)
    }
}
