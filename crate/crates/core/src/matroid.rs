//! Matroids stored as full rank tables.

use crate::error::{Error, Result};
use crate::linalg::{self, Rational};
use crate::semimatroid::check_exhaustive;
use crate::subset::{all_subsets_sorted, GroundSet, Subset};

/// A matroid on `{0,..,n-1}` given by the rank of every subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatroidRank {
    ground: GroundSet,
    table: Vec<u32>,
}

impl MatroidRank {
    /// Build from a rank table indexed by subset bitmask, checking the local
    /// axioms: `r(∅) = 0`, `r(X ∪ a) − r(X) ∈ {0, 1}`, and
    /// `r(X ∪ a) = r(X ∪ b) = r(X) ⇒ r(X ∪ a ∪ b) = r(X)`.
    pub fn new(ground: GroundSet, table: Vec<u32>) -> Result<Self> {
        let m = Self::from_table_unchecked(ground, table)?;
        if let Some(reason) = m.axiom_violation() {
            return Err(Error::NotAMatroid(reason));
        }
        Ok(m)
    }

    pub(crate) fn from_table_unchecked(ground: GroundSet, table: Vec<u32>) -> Result<Self> {
        check_exhaustive(ground.len())?;
        if table.len() != 1usize << ground.len() {
            return Err(Error::NotAMatroid(format!(
                "table has {} entries, expected {}",
                table.len(),
                1usize << ground.len()
            )));
        }
        Ok(MatroidRank { ground, table })
    }

    pub fn from_fn(ground: GroundSet, f: impl Fn(Subset) -> u32) -> Result<Self> {
        check_exhaustive(ground.len())?;
        let table = (0..1u64 << ground.len())
            .map(|bits| f(Subset::from_bits(bits)))
            .collect();
        Self::new(ground, table)
    }

    pub(crate) fn from_fn_unchecked(ground: GroundSet, f: impl Fn(Subset) -> u32) -> Result<Self> {
        check_exhaustive(ground.len())?;
        let table = (0..1u64 << ground.len())
            .map(|bits| f(Subset::from_bits(bits)))
            .collect();
        Self::from_table_unchecked(ground, table)
    }

    /// The free matroid: every set independent.
    pub fn free(ground: GroundSet) -> Result<Self> {
        Self::from_fn_unchecked(ground, |x| x.len() as u32)
    }

    /// Column matroid of a matrix given as rows; column `j` is element `j`.
    pub fn column_matroid(ground: GroundSet, rows: &[Vec<Rational>]) -> Result<Self> {
        Self::from_fn_unchecked(ground, |x| {
            let cols: Vec<Vec<Rational>> = x
                .iter()
                .map(|j| rows.iter().map(|row| row[j].clone()).collect())
                .collect();
            // Row rank of the transpose equals column rank.
            linalg::rank(&cols) as u32
        })
    }

    /// The first broken local axiom, if any.
    pub fn axiom_violation(&self) -> Option<String> {
        let n = self.n();
        if self.table[0] != 0 {
            return Some("r(∅) ≠ 0".to_string());
        }
        for bits in 0..self.table.len() as u64 {
            let x = Subset::from_bits(bits);
            let rx = self.table[bits as usize];
            for a in (0..n).filter(|&a| !x.contains(a)) {
                let ra = self.rank(x.with(a));
                if ra < rx || ra > rx + 1 {
                    return Some(format!("r({:?}) − r({:?}) ∉ {{0,1}}", x.with(a), x));
                }
                if ra != rx {
                    continue;
                }
                for b in (a + 1..n).filter(|&b| !x.contains(b)) {
                    if self.rank(x.with(b)) == rx && self.rank(x.with(a).with(b)) != rx {
                        return Some(format!(
                            "r(X∪a) = r(X∪b) = r(X) but r(X∪a∪b) differs for X={:?}, a={}, b={}",
                            x, a, b
                        ));
                    }
                }
            }
        }
        None
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn rank(&self, x: Subset) -> u32 {
        self.table[x.bits() as usize]
    }

    /// `r(S)`.
    pub fn total_rank(&self) -> u32 {
        self.rank(self.ground.full())
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.rank(Subset::singleton(e)) == 0
    }

    pub fn is_independent(&self, x: Subset) -> bool {
        self.rank(x) == x.len() as u32
    }

    pub fn closure(&self, x: Subset) -> Subset {
        let r = self.rank(x);
        (0..self.n())
            .filter(|&e| self.rank(x.with(e)) == r)
            .collect()
    }

    /// Flats in `(size, lex)` order.
    pub fn flats(&self) -> Vec<Subset> {
        all_subsets_sorted(self.n())
            .into_iter()
            .filter(|&x| self.closure(x) == x)
            .collect()
    }

    /// `M − e` on the ground set with `e` removed.
    pub fn delete(&self, e: usize) -> Result<MatroidRank> {
        if e >= self.n() {
            return Err(Error::NoSuchElement(e));
        }
        Self::from_fn_unchecked(self.ground.remove(e), |a| self.rank(a.insert_index(e)))
    }

    /// `M / e` on the ground set with `e` removed.
    pub fn contract(&self, e: usize) -> Result<MatroidRank> {
        if e >= self.n() {
            return Err(Error::NoSuchElement(e));
        }
        let re = self.rank(Subset::singleton(e));
        Self::from_fn_unchecked(self.ground.remove(e), |a| {
            self.rank(a.insert_index(e).with(e)) - re
        })
    }

    /// `(subset, rank)` for every subset in `(size, lex)` order.
    pub fn entries(&self) -> impl Iterator<Item = (Subset, u32)> + '_ {
        all_subsets_sorted(self.n())
            .into_iter()
            .map(move |x| (x, self.rank(x)))
    }

    pub fn relabeled(&self, ground: GroundSet) -> Result<MatroidRank> {
        if ground.len() != self.n() {
            return Err(Error::GroundSetMismatch(ground.len(), self.n()));
        }
        Ok(MatroidRank {
            ground,
            table: self.table.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational;

    #[test]
    fn rejects_non_matroid() {
        // r(0)=1, r(1)=1, r(∅)=0 but r(01)=0
        let r = MatroidRank::new(GroundSet::new(2), vec![0, 1, 1, 0]);
        assert!(matches!(r, Err(Error::NotAMatroid(_))));
        // R3' failure: r(a)=r(b)=r(∅)=0 but r(ab)=1
        let r = MatroidRank::new(GroundSet::new(2), vec![0, 0, 0, 1]);
        assert!(matches!(r, Err(Error::NotAMatroid(_))));
    }

    #[test]
    fn column_matroid_and_minors() {
        let rows = vec![
            vec![rational(1), rational(0), rational(1)],
            vec![rational(0), rational(1), rational(1)],
        ];
        let m = MatroidRank::column_matroid(GroundSet::new(3), &rows).unwrap();
        assert!(m.axiom_violation().is_none());
        assert_eq!(m.total_rank(), 2);
        assert_eq!(m.rank(Subset::full(3)), 2);
        let c = m.contract(2).unwrap();
        assert_eq!(c.rank(Subset::full(2)), 1);
        let d = m.delete(0).unwrap();
        assert_eq!(d.rank(Subset::full(2)), 2);
        assert_eq!(m.flats().len(), 5);
    }
}
