//! A stripped-down central family used as the state of the recursive
//! engines: no labels, no validation, cheap to delete and contract.

use std::collections::HashMap;

use crate::semimatroid::Semimatroid;
use crate::subset::Subset;

/// Memo key: ground-set size and the sorted `(set, rank)` pairs.
pub(crate) type MinorKey = (usize, Vec<(u64, u32)>);

#[derive(Clone, Debug)]
pub(crate) struct Minor {
    n: usize,
    ranks: HashMap<Subset, u32>,
}

impl Minor {
    pub(crate) fn of(s: &Semimatroid) -> Self {
        Minor {
            n: s.n(),
            ranks: s.central_ranks().collect(),
        }
    }

    pub(crate) fn n(&self) -> usize {
        self.n
    }

    /// `C = {∅}`.
    pub(crate) fn is_trivial(&self) -> bool {
        self.ranks.len() == 1
    }

    pub(crate) fn central_singletons(&self) -> Subset {
        (0..self.n)
            .filter(|&e| self.ranks.contains_key(&Subset::singleton(e)))
            .collect()
    }

    pub(crate) fn key(&self) -> MinorKey {
        let mut sets: Vec<(u64, u32)> = self.ranks.iter().map(|(x, &r)| (x.bits(), r)).collect();
        sets.sort_unstable();
        (self.n, sets)
    }

    /// Drop every element whose singleton is not central, compacting the
    /// remaining indices in order. The family itself is unchanged.
    pub(crate) fn without_noncentral(self) -> Self {
        let keep = self.central_singletons();
        if keep.len() == self.n {
            return self;
        }
        let positions: Vec<usize> = keep.iter().collect();
        let compact = |x: Subset| -> Subset {
            positions
                .iter()
                .enumerate()
                .filter(|(_, &e)| x.contains(e))
                .map(|(i, _)| i)
                .collect()
        };
        Minor {
            n: positions.len(),
            ranks: self.ranks.iter().map(|(&x, &r)| (compact(x), r)).collect(),
        }
    }

    pub(crate) fn is_loop(&self, e: usize) -> bool {
        self.ranks.get(&Subset::singleton(e)) == Some(&0)
    }

    pub(crate) fn is_isthmus(&self, e: usize) -> bool {
        self.ranks
            .iter()
            .filter(|(a, _)| !a.contains(e))
            .all(|(a, &r)| self.ranks.get(&a.with(e)) == Some(&(r + 1)))
    }

    pub(crate) fn delete(&self, e: usize) -> Self {
        Minor {
            n: self.n - 1,
            ranks: self
                .ranks
                .iter()
                .filter(|(a, _)| !a.contains(e))
                .map(|(&a, &r)| (a.remove_index(e), r))
                .collect(),
        }
    }

    pub(crate) fn contract(&self, e: usize) -> Self {
        let re = self.ranks[&Subset::singleton(e)];
        Minor {
            n: self.n - 1,
            ranks: self
                .ranks
                .iter()
                .filter(|(a, _)| a.contains(e))
                .map(|(&a, &r)| (a.without(e).remove_index(e), r - re))
                .collect(),
        }
    }
}
