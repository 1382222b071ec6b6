//! The semimatroid type: a ground set, a downward-closed family of central
//! sets, and a rank function on that family.

mod iso;
mod ops;
mod validate;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::subset::{GroundSet, Subset, MAX_BITS};

pub use validate::{validate, Axiom, ValidationReport, Violation};

/// Largest ground set for operations that walk all `2^n` subsets.
pub const MAX_EXHAUSTIVE_ELEMENTS: usize = 24;

/// Soft size guards applied at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_elements: usize,
    pub max_central: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: 30,
            max_central: 1 << 22,
        }
    }
}

impl Limits {
    pub fn check_elements(&self, n: usize) -> Result<()> {
        if n > self.max_elements || n > MAX_BITS {
            return Err(Error::SizeLimit(format!(
                "{} elements exceeds the limit of {}",
                n,
                self.max_elements.min(MAX_BITS)
            )));
        }
        Ok(())
    }

    pub fn check_central(&self, count: usize) -> Result<()> {
        if count > self.max_central {
            return Err(Error::SizeLimit(format!(
                "{} central sets exceeds the limit of {}",
                count, self.max_central
            )));
        }
        Ok(())
    }
}

pub(crate) fn check_exhaustive(n: usize) -> Result<()> {
    if n > MAX_EXHAUSTIVE_ELEMENTS {
        return Err(Error::SizeLimit(format!(
            "{} elements is too many to enumerate all subsets (limit {})",
            n, MAX_EXHAUSTIVE_ELEMENTS
        )));
    }
    Ok(())
}

/// A validated semimatroid `(S, C, r_C)`. Immutable once built.
#[derive(Clone, Debug)]
pub struct Semimatroid {
    ground: GroundSet,
    ranks: HashMap<Subset, u32>,
    /// Central sets in `(size, lex)` order.
    order: Vec<Subset>,
    rank: u32,
}

impl PartialEq for Semimatroid {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.ranks == other.ranks
    }
}

impl Eq for Semimatroid {}

impl Semimatroid {
    /// Validate and build. Fails with the full report when an axiom breaks.
    pub fn new<I>(ground: GroundSet, central: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Subset, u32)>,
    {
        Self::with_limits(ground, central, Limits::default())
    }

    pub fn with_limits<I>(ground: GroundSet, central: I, limits: Limits) -> Result<Self>
    where
        I: IntoIterator<Item = (Subset, u32)>,
    {
        limits.check_elements(ground.len())?;
        let ranks: HashMap<Subset, u32> = central.into_iter().collect();
        limits.check_central(ranks.len())?;
        let report = validate(ground.len(), &ranks);
        if !report.is_valid() {
            return Err(Error::Validation(report));
        }
        Ok(Self::from_map_unchecked(ground, ranks))
    }

    /// Build from a family already known to satisfy the axioms.
    pub(crate) fn from_map_unchecked(ground: GroundSet, ranks: HashMap<Subset, u32>) -> Self {
        let mut order: Vec<Subset> = ranks.keys().copied().collect();
        order.sort();
        let rank = ranks.values().copied().max().unwrap_or(0);
        Semimatroid {
            ground,
            ranks,
            order,
            rank,
        }
    }

    /// The free semimatroid: every subset central with rank its size.
    pub fn free(ground: GroundSet) -> Result<Self> {
        check_exhaustive(ground.len())?;
        let ranks = ground
            .full()
            .subsets()
            .map(|x| (x, x.len() as u32))
            .collect();
        Ok(Self::from_map_unchecked(ground, ranks))
    }

    /// `({i}, {∅, {i}})` with `r(i) = 1`.
    pub fn isthmus() -> Self {
        let ranks = [(Subset::EMPTY, 0), (Subset::singleton(0), 1)]
            .into_iter()
            .collect();
        Self::from_map_unchecked(GroundSet::new(1), ranks)
    }

    /// `({l}, {∅, {l}})` with `r(l) = 0`.
    pub fn loop_element() -> Self {
        let ranks = [(Subset::EMPTY, 0), (Subset::singleton(0), 0)]
            .into_iter()
            .collect();
        Self::from_map_unchecked(GroundSet::new(1), ranks)
    }

    /// `C = {∅}` on `n` elements.
    pub fn trivial(ground: GroundSet) -> Self {
        let ranks = [(Subset::EMPTY, 0)].into_iter().collect();
        Self::from_map_unchecked(ground, ranks)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    /// Same family, different display labels.
    pub fn relabeled(&self, ground: GroundSet) -> Result<Self> {
        if ground.len() != self.n() {
            return Err(Error::GroundSetMismatch(ground.len(), self.n()));
        }
        Ok(Semimatroid {
            ground,
            ..self.clone()
        })
    }

    pub fn is_central(&self, x: Subset) -> bool {
        self.ranks.contains_key(&x)
    }

    /// Central sets in `(size, lex)` order.
    pub fn central_sets(&self) -> &[Subset] {
        &self.order
    }

    /// `(set, rank)` pairs in `(size, lex)` order.
    pub fn central_ranks(&self) -> impl Iterator<Item = (Subset, u32)> + '_ {
        self.order.iter().map(move |&x| (x, self.ranks[&x]))
    }

    pub fn num_central(&self) -> usize {
        self.order.len()
    }

    /// The central family as a `set → rank` map.
    pub fn rank_map(&self) -> &HashMap<Subset, u32> {
        &self.ranks
    }

    pub fn rank(&self, x: Subset) -> Result<u32> {
        self.ranks.get(&x).copied().ok_or(Error::NotCentral(x))
    }

    pub(crate) fn rank_of(&self, x: Subset) -> Option<u32> {
        self.ranks.get(&x).copied()
    }

    /// The common rank `r_C` of all maximal central sets.
    pub fn semimatroid_rank(&self) -> u32 {
        self.rank
    }

    /// Rank in the underlying matroid: the largest rank of a central subset.
    ///
    /// Independent sets of that matroid are exactly the central sets whose
    /// rank equals their size, so a greedy scan over `x` finds one of
    /// maximum size.
    pub fn extended_rank(&self, x: Subset) -> u32 {
        if let Some(r) = self.rank_of(x) {
            return r;
        }
        let mut indep = Subset::EMPTY;
        for e in x.iter() {
            let cand = indep.with(e);
            if self.rank_of(cand) == Some(cand.len() as u32) {
                indep = cand;
            }
        }
        indep.len() as u32
    }

    /// A central set whose rank equals its size.
    pub fn is_independent(&self, x: Subset) -> bool {
        self.rank_of(x) == Some(x.len() as u32)
    }

    pub fn closure(&self, x: Subset) -> Result<Subset> {
        let r = self.rank(x)?;
        Ok((0..self.n())
            .filter(|&e| self.rank_of(x.with(e)) == Some(r))
            .collect())
    }

    /// Central sets equal to their closure, in `(size, lex)` order.
    pub fn flats(&self) -> Vec<Subset> {
        self.order
            .iter()
            .copied()
            .filter(|&x| self.closure(x).ok() == Some(x))
            .collect()
    }

    pub fn loops(&self) -> Subset {
        (0..self.n())
            .filter(|&e| self.rank_of(Subset::singleton(e)) == Some(0))
            .collect()
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.rank_of(Subset::singleton(e)) == Some(0)
    }

    /// `e` is an isthmus when adding it to any central set avoiding it stays
    /// central and raises the rank by one.
    pub fn is_isthmus(&self, e: usize) -> bool {
        e < self.n()
            && self
                .central_ranks()
                .filter(|(a, _)| !a.contains(e))
                .all(|(a, r)| self.rank_of(a.with(e)) == Some(r + 1))
    }

    pub fn isthmuses(&self) -> Subset {
        (0..self.n()).filter(|&e| self.is_isthmus(e)).collect()
    }

    /// Elements whose singleton is central.
    pub fn central_singletons(&self) -> Subset {
        (0..self.n())
            .filter(|&e| self.is_central(Subset::singleton(e)))
            .collect()
    }

    /// `#C`, the number of central singletons.
    pub fn count_central_singletons(&self) -> usize {
        self.central_singletons().len()
    }

    pub fn is_simple(&self) -> bool {
        let singletons_ok = (0..self.n()).all(|e| self.rank_of(Subset::singleton(e)) == Some(1));
        singletons_ok
            && self
                .central_ranks()
                .filter(|(x, _)| x.len() == 2)
                .all(|(_, r)| r == 2)
    }

    /// Bases: central sets of size and rank `r_C`, in lex order.
    pub fn bases(&self) -> Vec<Subset> {
        let r = self.rank;
        self.order
            .iter()
            .copied()
            .filter(|&b| b.len() as u32 == r && self.rank_of(b) == Some(r))
            .collect()
    }
}
