//! Bases, circuits and cocircuits, internal and external activity, and the
//! decomposition of the central family into Boolean intervals
//! `[B − I(B), B ∪ E(B)]`, one per basis.
//!
//! The linear order on the ground set is index order throughout.

use crate::error::{Error, Result};
use crate::poly::BivariatePoly;
use crate::semimatroid::{check_exhaustive, Semimatroid};
use crate::subset::{k_subsets, Subset};
use crate::tutte::TutteEngine;

/// A basis with its internally and externally active elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ActivityRecord {
    pub basis: Subset,
    pub internal: Subset,
    pub external: Subset,
}

impl ActivityRecord {
    /// `B − I(B)`.
    pub fn lower(&self) -> Subset {
        self.basis.difference(self.internal)
    }

    /// `B ∪ E(B)`.
    pub fn upper(&self) -> Subset {
        self.basis.union(self.external)
    }

    /// `2^{i(B) + e(B)}`.
    pub fn interval_size(&self) -> usize {
        1 << (self.internal.len() + self.external.len())
    }

    /// Every set in the interval, in increasing bitmask order.
    pub fn interval(&self) -> impl Iterator<Item = Subset> + '_ {
        let lower = self.lower();
        self.internal
            .union(self.external)
            .subsets()
            .map(move |t| lower.union(t))
    }
}

/// One interval per basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalDecomposition {
    pub records: Vec<ActivityRecord>,
}

impl IntervalDecomposition {
    pub fn sizes(&self) -> Vec<usize> {
        self.records
            .iter()
            .map(ActivityRecord::interval_size)
            .collect()
    }

    /// Whether the intervals are pairwise disjoint and cover exactly `C`.
    pub fn is_partition_of(&self, s: &Semimatroid) -> bool {
        let mut seen = std::collections::HashSet::new();
        for rec in &self.records {
            for x in rec.interval() {
                if !s.is_central(x) || !seen.insert(x) {
                    return false;
                }
            }
        }
        seen.len() == s.num_central()
    }
}

/// Bases in lex order.
pub fn bases(s: &Semimatroid) -> Vec<Subset> {
    s.bases()
}

fn require_basis(s: &Semimatroid, b: Subset) -> Result<()> {
    let r = s.semimatroid_rank();
    if b.len() as u32 == r && s.is_independent(b) {
        Ok(())
    } else {
        Err(Error::NotABasis(b))
    }
}

fn is_dependent_central(s: &Semimatroid, x: Subset) -> bool {
    matches!(s.rank(x), Ok(r) if (r as usize) < x.len())
}

fn is_circuit(s: &Semimatroid, x: Subset) -> bool {
    // Independence is hereditary, so minimality needs only the maximal
    // proper subsets.
    is_dependent_central(s, x) && x.iter().all(|e| s.is_independent(x.without(e)))
}

fn is_cocircuit(s: &Semimatroid, d: Subset) -> bool {
    let r = s.semimatroid_rank();
    let full = s.ground().full();
    s.extended_rank(full.difference(d)) < r
        && d.iter()
            .all(|e| s.extended_rank(full.difference(d.without(e))) == r)
}

/// Inclusion-minimal dependent central sets, in `(size, lex)` order.
pub fn circuits(s: &Semimatroid) -> Vec<Subset> {
    s.central_sets()
        .iter()
        .copied()
        .filter(|&x| is_circuit(s, x))
        .collect()
}

/// Inclusion-minimal sets whose removal lowers the rank, in `(size, lex)` order.
pub fn cocircuits(s: &Semimatroid) -> Result<Vec<Subset>> {
    check_exhaustive(s.n())?;
    Ok(crate::subset::all_subsets_sorted(s.n())
        .into_iter()
        .filter(|&d| is_cocircuit(s, d))
        .collect())
}

/// The circuit inside `B ∪ e` for a basis `B` and `e ∉ B` with `B ∪ e` central.
pub fn unique_circuit(s: &Semimatroid, b: Subset, e: usize) -> Result<Subset> {
    require_basis(s, b)?;
    if e >= s.n() || b.contains(e) || !s.is_central(b.with(e)) {
        return Err(Error::PreconditionFailed(format!(
            "need e ∉ B with B ∪ e central (B = {:?}, e = {})",
            b, e
        )));
    }
    let found: Vec<Subset> = b.with(e).subsets().filter(|&x| is_circuit(s, x)).collect();
    debug_assert_eq!(found.len(), 1, "B ∪ e holds exactly one circuit");
    found
        .first()
        .copied()
        .ok_or_else(|| Error::PreconditionFailed(format!("no circuit in {:?}", b.with(e))))
}

/// The cocircuit inside `(S − B) ∪ i` for a basis `B` and `i ∈ B`.
pub fn unique_cocircuit(s: &Semimatroid, b: Subset, i: usize) -> Result<Subset> {
    require_basis(s, b)?;
    if !b.contains(i) {
        return Err(Error::PreconditionFailed(format!(
            "{} is not in the basis {:?}",
            i, b
        )));
    }
    check_exhaustive(s.n())?;
    let within = s.ground().full().difference(b).with(i);
    let found: Vec<Subset> = within.subsets().filter(|&d| is_cocircuit(s, d)).collect();
    debug_assert_eq!(found.len(), 1, "(S − B) ∪ i holds exactly one cocircuit");
    found
        .first()
        .copied()
        .ok_or_else(|| Error::PreconditionFailed(format!("no cocircuit in {:?}", within)))
}

/// Active elements from rank probes alone:
/// `e ∉ B` is externally active when `B ∪ e` is central and
/// `r(B_{>e} ∪ e) = r(B_{>e})`; `i ∈ B` is internally active when
/// `r((B − i) ∪ S_{<i}) < r`.
pub fn activity(s: &Semimatroid, b: Subset) -> Result<ActivityRecord> {
    require_basis(s, b)?;
    let r = s.semimatroid_rank();
    let full = s.ground().full();
    let external = full
        .difference(b)
        .iter()
        .filter(|&e| {
            let above = b.above(e);
            s.is_central(b.with(e)) && s.extended_rank(above.with(e)) == s.extended_rank(above)
        })
        .collect();
    let internal = b
        .iter()
        .filter(|&i| s.extended_rank(b.without(i).union(full.below(i))) < r)
        .collect();
    let rec = ActivityRecord {
        basis: b,
        internal,
        external,
    };
    #[cfg(debug_assertions)]
    if s.n() <= 10 {
        debug_assert_eq!(Ok(rec), activity_by_definitions(s, b));
    }
    Ok(rec)
}

/// Active elements from the definitions: `e` (resp. `i`) is active when it
/// is the smallest element of its unique circuit (resp. cocircuit).
pub fn activity_by_definitions(s: &Semimatroid, b: Subset) -> Result<ActivityRecord> {
    require_basis(s, b)?;
    let full = s.ground().full();
    let mut external = Subset::EMPTY;
    for e in full.difference(b).iter() {
        if s.is_central(b.with(e)) && unique_circuit(s, b, e)?.min() == Some(e) {
            external = external.with(e);
        }
    }
    let mut internal = Subset::EMPTY;
    for i in b.iter() {
        if unique_cocircuit(s, b, i)?.min() == Some(i) {
            internal = internal.with(i);
        }
    }
    Ok(ActivityRecord {
        basis: b,
        internal,
        external,
    })
}

/// Activity records for every basis, in lex order of bases.
pub fn activities(s: &Semimatroid) -> Vec<ActivityRecord> {
    s.bases()
        .into_iter()
        .map(|b| activity(s, b).expect("bases come from the semimatroid"))
        .collect()
}

/// The lex-largest basis of a central set `X`: scanning from the top and
/// keeping each element that stays independent yields a basis that beats
/// every other one position by position.
pub fn d_map(s: &Semimatroid, x: Subset) -> Result<Subset> {
    if !s.is_central(x) {
        return Err(Error::NotCentral(x));
    }
    let mut d = Subset::EMPTY;
    for e in x.to_vec().into_iter().rev() {
        if s.is_independent(d.with(e)) {
            d = d.with(e);
        }
    }
    Ok(d)
}

/// The lex-smallest basis containing an independent central set `X`.
pub fn u_map(s: &Semimatroid, x: Subset) -> Result<Subset> {
    if !s.is_independent(x) {
        return Err(Error::NoBasisContains(x));
    }
    let mut u = x;
    for e in 0..s.n() {
        if !u.contains(e) && s.is_independent(u.with(e)) {
            u = u.with(e);
        }
    }
    if u.len() as u32 != s.semimatroid_rank() {
        return Err(Error::NoBasisContains(x));
    }
    Ok(u)
}

/// The lex-smallest inclusion-minimal superset of `X` of full rank. All
/// such supersets have `r − r(X)` extra elements, so they are enumerated
/// directly.
pub fn u_extended(s: &Semimatroid, x: Subset) -> Result<Subset> {
    let r = s.semimatroid_rank();
    let rx = s.extended_rank(x);
    let rest = s.ground().full().difference(x);
    k_subsets(rest, (r - rx) as usize)
        .into_iter()
        .map(|z| x.union(z))
        .filter(|&y| s.extended_rank(y) == r)
        .min()
        .ok_or(Error::NoBasisContains(x))
}

/// `φ₁(B, I, E) = B − I ∪ E`.
pub fn phi1(s: &Semimatroid, b: Subset, i: Subset, e: Subset) -> Result<Subset> {
    let rec = activity(s, b)?;
    if !i.is_subset_of(rec.internal) || !e.is_subset_of(rec.external) {
        return Err(Error::PreconditionFailed(format!(
            "I = {:?} and E = {:?} must be active for B = {:?}",
            i, e, b
        )));
    }
    Ok(b.difference(i).union(e))
}

/// `φ₂(X) = (u d X, u d X − d X, X − d X)`.
pub fn phi2(s: &Semimatroid, x: Subset) -> Result<(Subset, Subset, Subset)> {
    let d = d_map(s, x)?;
    let b = u_map(s, d)?;
    Ok((b, b.difference(d), x.difference(d)))
}

pub fn interval_decomposition(s: &Semimatroid) -> IntervalDecomposition {
    IntervalDecomposition {
        records: activities(s),
    }
}

/// `T = Σ_B x^{i(B)} y^{e(B)}`.
pub fn tutte_activity(s: &Semimatroid) -> BivariatePoly {
    let mut t = BivariatePoly::zero();
    for rec in activities(s) {
        t.add_term(
            (rec.internal.len() as u32, rec.external.len() as u32),
            1.into(),
        );
    }
    t
}

/// Sum of `x^{i(B)} y^{e(B)}` over bases.
#[derive(Clone, Copy, Debug, Default)]
pub struct ActivityEngine;

impl TutteEngine for ActivityEngine {
    fn name(&self) -> &'static str {
        "activity"
    }

    fn tutte(&self, s: &Semimatroid) -> Result<BivariatePoly> {
        Ok(tutte_activity(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::fixtures::a5;
    use crate::semimatroid::fixtures::{c3, set};
    use crate::subset::GroundSet;

    fn rec(b: &str, i: &str, e: &str) -> ActivityRecord {
        ActivityRecord {
            basis: set(b),
            internal: set(i),
            external: set(e),
        }
    }

    #[test]
    fn a5_activity_table() {
        let s = a5().semimatroid().unwrap();
        let expected = vec![
            rec("123", "123", ""),
            rec("124", "12", ""),
            rec("134", "1", "2"),
            rec("235", "23", ""),
            rec("245", "2", ""),
            rec("345", "", "2"),
        ];
        assert_eq!(activities(&s), expected);
        let dec = interval_decomposition(&s);
        assert_eq!(dec.sizes(), vec![8, 4, 4, 4, 2, 2]);
        assert!(dec.is_partition_of(&s));
        assert_eq!(
            tutte_activity(&s).display_with("q", "t"),
            "q^3 + 2*q^2 + q*t + q + t"
        );
    }

    #[test]
    fn c3_activity() {
        let s = c3();
        assert_eq!(activity(&s, set("13")).unwrap(), rec("13", "13", ""));
        assert_eq!(activity(&s, set("23")).unwrap(), rec("23", "3", ""));
        assert_eq!(interval_decomposition(&s).sizes(), vec![4, 2]);
        assert_eq!(activity(&s, set("12")), Err(Error::NotABasis(set("12"))));
    }

    #[test]
    fn circuits_and_cocircuits() {
        let a = a5().semimatroid().unwrap();
        assert_eq!(circuits(&a), vec![set("234")]);
        assert!(circuits(&c3()).is_empty());
        assert_eq!(cocircuits(&c3()).unwrap(), vec![set("3"), set("12")]);
        assert_eq!(unique_circuit(&a, set("134"), 1).unwrap(), set("234"));
        assert_eq!(unique_circuit(&a, set("345"), 1).unwrap(), set("234"));
        assert!(matches!(
            unique_circuit(&c3(), set("13"), 1),
            Err(Error::PreconditionFailed(_))
        ));
        assert_eq!(unique_cocircuit(&c3(), set("13"), 2).unwrap(), set("3"));
        assert_eq!(unique_cocircuit(&c3(), set("23"), 1).unwrap(), set("12"));
        assert!(matches!(
            unique_cocircuit(&c3(), set("23"), 0),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn maps_d_and_u() {
        let a = a5().semimatroid().unwrap();
        assert_eq!(d_map(&a, set("234")).unwrap(), set("34"));
        assert_eq!(d_map(&a, set("1234")).unwrap(), set("134"));
        assert_eq!(d_map(&a, set("15")), Err(Error::NotCentral(set("15"))));
        assert_eq!(u_map(&a, set("34")).unwrap(), set("134"));
        assert_eq!(u_map(&c3(), Subset::EMPTY).unwrap(), set("13"));
        assert_eq!(u_extended(&a, set("234")).unwrap(), set("1234"));
    }

    #[test]
    fn phi_maps() {
        let a = a5().semimatroid().unwrap();
        assert_eq!(
            phi1(&a, set("134"), set("1"), set("2")).unwrap(),
            set("234")
        );
        assert_eq!(
            phi1(&a, set("123"), set("123"), Subset::EMPTY).unwrap(),
            Subset::EMPTY
        );
        assert!(phi1(&a, set("134"), set("3"), Subset::EMPTY).is_err());
        assert_eq!(
            phi2(&a, set("234")).unwrap(),
            (set("134"), set("1"), set("2"))
        );
        assert_eq!(
            phi2(&a, set("4")).unwrap(),
            (set("124"), set("12"), Subset::EMPTY)
        );
        assert_eq!(
            phi2(&a, set("245")).unwrap(),
            (set("245"), Subset::EMPTY, Subset::EMPTY)
        );
    }

    #[test]
    fn trivial_family() {
        let s = Semimatroid::trivial(GroundSet::new(2));
        let dec = interval_decomposition(&s);
        assert_eq!(dec.records, vec![rec("", "", "")]);
        assert_eq!(tutte_activity(&s), BivariatePoly::one());
    }
}
