use std::collections::HashMap;

use super::{check_exhaustive, Semimatroid};
use crate::error::{Error, Result};
use crate::subset::Subset;

impl Semimatroid {
    fn check_element(&self, e: usize) -> Result<()> {
        if e >= self.n() {
            return Err(Error::NoSuchElement(e));
        }
        Ok(())
    }

    fn require_central_singleton(&self, e: usize) -> Result<u32> {
        self.check_element(e)?;
        self.rank_of(Subset::singleton(e))
            .ok_or(Error::NotCentralSingleton(e))
    }

    /// `C − e`: central sets avoiding `e`, on the ground set `S − e`.
    pub fn delete(&self, e: usize) -> Result<Semimatroid> {
        self.require_central_singleton(e)?;
        let ranks = self
            .central_ranks()
            .filter(|(a, _)| !a.contains(e))
            .map(|(a, r)| (a.remove_index(e), r))
            .collect();
        Ok(Semimatroid::from_map_unchecked(
            self.ground().remove(e),
            ranks,
        ))
    }

    /// `C / e`: sets `A ⊆ S − e` with `A ∪ e` central, ranked
    /// `r(A ∪ e) − r(e)`.
    pub fn contract(&self, e: usize) -> Result<Semimatroid> {
        let re = self.require_central_singleton(e)?;
        let ranks = self
            .central_ranks()
            .filter(|(a, _)| a.contains(e))
            .map(|(a, r)| (a.without(e).remove_index(e), r - re))
            .collect();
        Ok(Semimatroid::from_map_unchecked(
            self.ground().remove(e),
            ranks,
        ))
    }

    /// Remove an element whose singleton is not central. The family is
    /// unchanged; only the ground set shrinks.
    pub fn drop_noncentral(&self, e: usize) -> Result<Semimatroid> {
        self.check_element(e)?;
        if self.is_central(Subset::singleton(e)) {
            return Err(Error::CentralSingleton(e));
        }
        let ranks = self
            .central_ranks()
            .map(|(a, r)| (a.remove_index(e), r))
            .collect();
        Ok(Semimatroid::from_map_unchecked(
            self.ground().remove(e),
            ranks,
        ))
    }

    /// Drop every element whose singleton is not central.
    pub fn drop_all_noncentral(&self) -> Semimatroid {
        let mut s = self.clone();
        for e in (0..self.n()).rev() {
            if !s.is_central(Subset::singleton(e)) {
                s = s.drop_noncentral(e).expect("singleton checked non-central");
            }
        }
        s
    }

    /// The dual: `C* = {X | S − X ∉ C}` with `r*(X) = |X| − r_C + r(S − X)`.
    pub fn dual(&self) -> Result<Semimatroid> {
        let n = self.n();
        check_exhaustive(n)?;
        let r = self.semimatroid_rank() as i64;
        let ranks: HashMap<Subset, u32> = Subset::full(n)
            .subsets()
            .filter(|x| !self.is_central(x.complement(n)))
            .map(|x| {
                let rx = x.len() as i64 - r + self.extended_rank(x.complement(n)) as i64;
                (x, rx as u32)
            })
            .collect();
        if ranks.is_empty() {
            return Err(Error::EmptyDual);
        }
        Ok(Semimatroid::from_map_unchecked(
            self.ground().clone(),
            ranks,
        ))
    }
}
