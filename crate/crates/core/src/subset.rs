//! Ground sets and subsets of them.
//!
//! A [`Subset`] is a bitmask over element indices `0..n`. Its canonical form
//! is the strictly ascending list of indices, and the total order used for
//! every deterministic iteration in this crate is `(size, lex)`: first by
//! cardinality, then lexicographically on the ascending index sequences.

use std::cmp::Ordering;
use std::fmt;

/// Largest ground set a [`Subset`] bitmask can address.
pub const MAX_BITS: usize = 63;

/// A subset of a ground set `{0, .., n-1}`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(e: usize) -> Self {
        debug_assert!(e < MAX_BITS);
        Subset(1 << e)
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_BITS);
        if n == 0 {
            Subset(0)
        } else {
            Subset(u64::MAX >> (64 - n))
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(Subset::EMPTY, |acc, e| acc.with(e))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e < MAX_BITS && self.0 >> e & 1 == 1
    }

    pub fn with(self, e: usize) -> Self {
        Subset(self.0 | 1 << e)
    }

    pub fn without(self, e: usize) -> Self {
        Subset(self.0 & !(1 << e))
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement inside `{0, .., n-1}`.
    pub fn complement(self, n: usize) -> Self {
        Subset::full(n).difference(self)
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Elements strictly below `e`.
    pub fn below(self, e: usize) -> Self {
        Subset(self.0 & ((1u64 << e) - 1))
    }

    /// Elements strictly above `e`.
    pub fn above(self, e: usize) -> Self {
        if e + 1 >= 64 {
            Subset::EMPTY
        } else {
            Subset(self.0 & !((1u64 << (e + 1)) - 1))
        }
    }

    /// Ascending element indices.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> SubsetsOf {
        SubsetsOf {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Re-index a subset of `{0,..,n-1}` after removing element `e`:
    /// indices above `e` shift down by one. `e` itself must not be present.
    pub fn remove_index(self, e: usize) -> Self {
        debug_assert!(!self.contains(e));
        let low = self.0 & ((1u64 << e) - 1);
        let high = (self.0 >> (e + 1)) << e;
        Subset(low | high)
    }

    /// Inverse of [`Subset::remove_index`]: open a gap at position `e`.
    pub fn insert_index(self, e: usize) -> Self {
        let low = self.0 & ((1u64 << e) - 1);
        let high = (self.0 >> e) << (e + 1);
        Subset(low | high)
    }

    /// Apply a permutation of element indices.
    pub fn map(self, perm: &[usize]) -> Self {
        Subset::from_indices(self.iter().map(|e| perm[e]))
    }

    /// Lexicographic comparison of the ascending sequences of two subsets
    /// of equal size.
    fn lex_cmp_same_size(self, other: Subset) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // The first position where the sequences differ holds the smallest
        // element of the symmetric difference; whichever set owns it is smaller.
        let low = diff & diff.wrapping_neg();
        if self.0 & low != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.lex_cmp_same_size(*other))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_indices(iter)
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

pub struct SubsetsOf {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for SubsetsOf {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(Subset(cur))
    }
}

/// All `2^n` subsets of `{0,..,n-1}` sorted in `(size, lex)` order.
pub fn all_subsets_sorted(n: usize) -> Vec<Subset> {
    let mut v: Vec<Subset> = Subset::full(n).subsets().collect();
    v.sort();
    v
}

/// All `k`-subsets of `within`, in lex order.
pub fn k_subsets(within: Subset, k: usize) -> Vec<Subset> {
    let mut v: Vec<Subset> = within.subsets().filter(|s| s.len() == k).collect();
    v.sort();
    v
}

/// The ground set `{0, .., n-1}` with optional display labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    size: usize,
    labels: Option<Vec<String>>,
}

impl GroundSet {
    pub fn new(size: usize) -> Self {
        GroundSet { size, labels: None }
    }

    /// Ground set labelled `1..=n`, the convention of hand-worked examples.
    pub fn one_based(size: usize) -> Self {
        GroundSet {
            size,
            labels: Some((1..=size).map(|i| i.to_string()).collect()),
        }
    }

    pub fn with_labels(labels: Vec<String>) -> Self {
        GroundSet {
            size: labels.len(),
            labels: Some(labels),
        }
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.size)
    }

    pub fn label(&self, e: usize) -> String {
        match &self.labels {
            Some(l) => l[e].clone(),
            None => e.to_string(),
        }
    }

    /// Index of the element carrying `label`, falling back to a numeric index.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        if let Some(labels) = &self.labels {
            if let Some(i) = labels.iter().position(|l| l == label) {
                return Some(i);
            }
        }
        label.parse().ok().filter(|&i| i < self.size)
    }

    /// The ground set with element `e` removed; later indices shift down.
    pub fn remove(&self, e: usize) -> Self {
        GroundSet {
            size: self.size - 1,
            labels: self.labels.as_ref().map(|l| {
                let mut l = l.clone();
                l.remove(e);
                l
            }),
        }
    }

    /// The ground set extended by one new element at index `n`.
    pub fn push(&self, label: &str) -> Self {
        GroundSet {
            size: self.size + 1,
            labels: self.labels.as_ref().map(|l| {
                let mut l = l.clone();
                l.push(label.to_string());
                l
            }),
        }
    }

    /// Render a subset with labels: concatenated when every label is one
    /// character, comma-joined otherwise; the empty set prints as `-`.
    pub fn format_subset(&self, s: Subset) -> String {
        if s.is_empty() {
            return "-".to_string();
        }
        let parts: Vec<String> = s.iter().map(|e| self.label(e)).collect();
        let compact = (0..self.size).all(|e| self.label(e).chars().count() == 1);
        if compact {
            parts.concat()
        } else {
            parts.join(",")
        }
    }

    /// Parse labels in the same compact or comma form as [`format_subset`].
    ///
    /// [`format_subset`]: GroundSet::format_subset
    pub fn parse_subset(&self, text: &str) -> Option<Subset> {
        let text = text.trim();
        if text == "-" || text.is_empty() {
            return Some(Subset::EMPTY);
        }
        let compact = (0..self.size).all(|e| self.label(e).chars().count() == 1);
        let mut out = Subset::EMPTY;
        if compact && !text.contains(',') {
            for ch in text.chars() {
                out = out.with(self.index_of(&ch.to_string())?);
            }
        } else {
            for part in text.split(',') {
                out = out.with(self.index_of(part.trim())?);
            }
        }
        Some(out)
    }
}
