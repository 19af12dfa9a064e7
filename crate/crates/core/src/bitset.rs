//! Vertex sets.
//!
//! [`VertexSet`] keeps its words inline up to 128 vertices and spills to the
//! heap beyond that. The hot loops in the engine and the clique search are
//! written against [`Mask`], which is implemented both for `VertexSet` and for
//! a bare `u128` (used whenever the host graph has at most 128 vertices).

use std::fmt;
use std::hash::Hash;

use smallvec::SmallVec;

/// Number of vertices that fit in the inline (fixed-width) representation.
pub const INLINE_BITS: usize = 128;

/// Subset of `0..n` of some host graph.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    words: SmallVec<[u64; 2]>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::new();
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_iter_checked<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::new();
        for v in iter {
            s.insert(v);
        }
        s
    }

    pub fn insert(&mut self, v: usize) {
        let w = v / 64;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        let w = v / 64;
        if w < self.words.len() {
            self.words[w] &= !(1 << (v % 64));
            self.trim();
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / 64)
            .is_some_and(|w| w & (1 << (v % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Largest member plus one, or 0 for the empty set.
    pub fn bound(&self) -> usize {
        match self.words.last() {
            None => 0,
            Some(w) => (self.words.len() - 1) * 64 + 64 - w.leading_zeros() as usize,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        let len = self.words.len().max(other.words.len());
        let mut words = SmallVec::with_capacity(len);
        for i in 0..len {
            let a = self.words.get(i).copied().unwrap_or(0);
            let b = other.words.get(i).copied().unwrap_or(0);
            words.push(f(a, b));
        }
        let mut s = Self { words };
        s.trim();
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_iter_checked(iter)
    }
}

/// Set operations needed by the branching algorithms.
pub trait Mask: Clone + Eq + Hash + Send + Sync {
    fn empty() -> Self;
    fn singleton(v: usize) -> Self;
    fn contains(&self, v: usize) -> bool;
    fn is_empty(&self) -> bool;
    fn count(&self) -> usize;
    fn and(&self, other: &Self) -> Self;
    fn or(&self, other: &Self) -> Self;
    fn and_not(&self, other: &Self) -> Self;
    fn lowest(&self) -> Option<usize>;
    fn members(&self) -> Vec<usize>;

    fn with(&self, v: usize) -> Self {
        self.or(&Self::singleton(v))
    }

    fn without(&self, v: usize) -> Self {
        self.and_not(&Self::singleton(v))
    }
}

impl Mask for u128 {
    fn empty() -> Self {
        0
    }
    fn singleton(v: usize) -> Self {
        1 << v
    }
    fn contains(&self, v: usize) -> bool {
        self >> v & 1 == 1
    }
    fn is_empty(&self) -> bool {
        *self == 0
    }
    fn count(&self) -> usize {
        self.count_ones() as usize
    }
    fn and(&self, other: &Self) -> Self {
        self & other
    }
    fn or(&self, other: &Self) -> Self {
        self | other
    }
    fn and_not(&self, other: &Self) -> Self {
        self & !other
    }
    fn lowest(&self) -> Option<usize> {
        (*self != 0).then(|| self.trailing_zeros() as usize)
    }
    fn members(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.count());
        let mut w = *self;
        while w != 0 {
            out.push(w.trailing_zeros() as usize);
            w &= w - 1;
        }
        out
    }
}

impl Mask for VertexSet {
    fn empty() -> Self {
        Self::new()
    }
    fn singleton(v: usize) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }
    fn contains(&self, v: usize) -> bool {
        VertexSet::contains(self, v)
    }
    fn is_empty(&self) -> bool {
        VertexSet::is_empty(self)
    }
    fn count(&self) -> usize {
        self.len()
    }
    fn and(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }
    fn or(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }
    fn and_not(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }
    fn lowest(&self) -> Option<usize> {
        self.iter().next()
    }
    fn members(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Converts a set whose members are all below [`INLINE_BITS`] to a `u128`.
pub(crate) fn to_u128(s: &VertexSet) -> u128 {
    debug_assert!(s.bound() <= INLINE_BITS);
    s.words
        .iter()
        .enumerate()
        .fold(0u128, |acc, (i, &w)| acc | (w as u128) << (64 * i))
}
