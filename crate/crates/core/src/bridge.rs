//! Correspondences between a semimatroid and matroid data: its underlying
//! matroid with a modular ideal, an elementary preimage, a rank-increasing
//! single-element coextension, and a pointed matroid.
//!
//! The distinguished point `p` is always the last element (index `n`), so
//! the order on the original elements is undisturbed.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::matroid::MatroidRank;
use crate::semimatroid::{check_exhaustive, Semimatroid};
use crate::subset::{GroundSet, Subset};

/// A family of subsets, iterated in `(size, lex)` order.
pub type Family = BTreeSet<Subset>;

/// Label given to the added point when the ground set is labelled.
pub const POINT_LABEL: &str = "p";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedMatroid {
    matroid: MatroidRank,
    point: usize,
}

impl PointedMatroid {
    pub fn new(matroid: MatroidRank, point: usize) -> Result<Self> {
        if point >= matroid.n() {
            return Err(Error::NoSuchElement(point));
        }
        if matroid.is_loop(point) {
            return Err(Error::LoopPoint);
        }
        Ok(PointedMatroid { matroid, point })
    }

    pub fn matroid(&self) -> &MatroidRank {
        &self.matroid
    }

    pub fn point(&self) -> usize {
        self.point
    }

    /// `Ñ − p`.
    pub fn deletion(&self) -> MatroidRank {
        self.matroid.delete(self.point).expect("point is in range")
    }

    /// `Ñ / p`.
    pub fn contraction(&self) -> MatroidRank {
        self.matroid
            .contract(self.point)
            .expect("point is in range")
    }
}

/// `(Ñ, Ñ − p, Ñ / p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    pub coextension: PointedMatroid,
    pub preimage: MatroidRank,
    pub base: MatroidRank,
}

/// The matroid `M_C` whose rank extends `r_C` by maximising over central
/// subsets.
pub fn underlying_matroid(s: &Semimatroid) -> Result<MatroidRank> {
    check_exhaustive(s.n())?;
    let mut table = vec![0u32; 1 << s.n()];
    for bits in 0..table.len() as u64 {
        let x = Subset::from_bits(bits);
        table[bits as usize] = match s.rank(x) {
            Ok(r) => r,
            Err(_) => x
                .iter()
                .map(|e| table[x.without(e).bits() as usize])
                .max()
                .unwrap_or(0),
        };
    }
    MatroidRank::from_table_unchecked(s.ground().clone(), table)
}

/// Why `family` fails to be a modular ideal of `m`, if it does.
pub fn modular_ideal_violation(m: &MatroidRank, family: &Family) -> Option<String> {
    if !family.contains(&Subset::EMPTY) {
        return Some("the empty set is missing".to_string());
    }
    let full = m.ground().full();
    for &x in family {
        if !x.is_subset_of(full) {
            return Some(format!("{:?} is outside the ground set", x));
        }
        if let Some(e) = x.iter().find(|&e| !family.contains(&x.without(e))) {
            return Some(format!(
                "not a simplicial complex: {:?} ∌ {:?}",
                x,
                x.without(e)
            ));
        }
    }
    if let Some(a) = (0..m.n()).find(|&a| !m.is_loop(a) && !family.contains(&Subset::singleton(a)))
    {
        return Some(format!("non-loop {} is missing", a));
    }
    for &x in family {
        for &y in family {
            let modular = m.rank(x) + m.rank(y) == m.rank(x.union(y)) + m.rank(x.intersection(y));
            if modular && !family.contains(&x.union(y)) {
                return Some(format!("modular pair {:?}, {:?} has union outside", x, y));
            }
        }
    }
    None
}

pub fn is_modular_ideal(m: &MatroidRank, family: &Family) -> bool {
    modular_ideal_violation(m, family).is_none()
}

/// The central family of a semimatroid.
pub fn family_of(s: &Semimatroid) -> Family {
    s.central_sets().iter().copied().collect()
}

/// Restrict `r_M` to a modular ideal.
pub fn semimatroid_from_ideal(m: &MatroidRank, ideal: &Family) -> Result<Semimatroid> {
    if let Some(reason) = modular_ideal_violation(m, ideal) {
        return Err(Error::NotAModularIdeal(reason));
    }
    let ranks: HashMap<Subset, u32> = ideal.iter().map(|&x| (x, m.rank(x))).collect();
    Ok(Semimatroid::from_map_unchecked(m.ground().clone(), ranks))
}

/// `r_N = r_M` on the ideal and `r_M + 1` off it.
pub fn preimage_from_ideal(m: &MatroidRank, ideal: &Family) -> Result<MatroidRank> {
    if let Some(reason) = modular_ideal_violation(m, ideal) {
        return Err(Error::NotAModularIdeal(reason));
    }
    MatroidRank::from_fn_unchecked(m.ground().clone(), |a| {
        m.rank(a) + u32::from(!ideal.contains(&a))
    })
}

/// The sets on which `m` and its preimage `n` agree.
pub fn ideal_from_preimage(m: &MatroidRank, n: &MatroidRank) -> Result<Family> {
    if !is_elementary_preimage(n, m)? {
        return Err(Error::NotAPreimage);
    }
    Ok(m.entries()
        .filter(|&(a, r)| n.rank(a) == r)
        .map(|(a, _)| a)
        .collect())
}

/// Whether `n → m` is a quotient map: `r_N(B) − r_N(A) ≥ r_M(B) − r_M(A)`
/// for all `A ⊆ B`. Both sides telescope along chains, so covering pairs
/// `B = A ∪ e` suffice.
pub fn is_quotient_map(n: &MatroidRank, m: &MatroidRank) -> Result<bool> {
    if n.n() != m.n() {
        return Err(Error::GroundSetMismatch(n.n(), m.n()));
    }
    let size = m.n();
    Ok(Subset::full(size).subsets().all(|a| {
        (0..size).filter(|&e| !a.contains(e)).all(|e| {
            let b = a.with(e);
            n.rank(b) + m.rank(a) >= m.rank(b) + n.rank(a)
        })
    }))
}

/// A quotient map whose total ranks differ by 0 or 1.
pub fn is_elementary_preimage(n: &MatroidRank, m: &MatroidRank) -> Result<bool> {
    if !is_quotient_map(n, m)? {
        return Ok(false);
    }
    let gap = n.total_rank() as i64 - m.total_rank() as i64;
    Ok(gap == 0 || gap == 1)
}

/// `r_Ñ(A) = r_N(A)`, `r_Ñ(A ∪ p) = r_M(A) + 1`, with `p` appended last.
pub fn coextension_from_preimage(m: &MatroidRank, n: &MatroidRank) -> Result<PointedMatroid> {
    if !is_elementary_preimage(n, m)? {
        return Err(Error::NotAPreimage);
    }
    let size = m.n();
    let ground = m.ground().push(POINT_LABEL);
    let coext = MatroidRank::from_fn_unchecked(ground, |a| {
        if a.contains(size) {
            m.rank(a.without(size)) + 1
        } else {
            n.rank(a)
        }
    })?;
    PointedMatroid::new(coext, size)
}

/// `N = Ñ − p`.
pub fn preimage_from_coextension(coext: &PointedMatroid) -> MatroidRank {
    coext.deletion()
}

/// `C = {A ⊆ S | p ∉ cl(A)}` with the rank of `Ñ`.
pub fn semimatroid_from_pointed(pm: &PointedMatroid) -> Semimatroid {
    let m = pm.matroid();
    let p = pm.point();
    let ground = m.ground().remove(p);
    let ranks: HashMap<Subset, u32> = Subset::full(ground.len())
        .subsets()
        .filter_map(|a| {
            let lifted = a.insert_index(p);
            let r = m.rank(lifted);
            (m.rank(lifted.with(p)) == r + 1).then_some((a, r))
        })
        .collect();
    Semimatroid::from_map_unchecked(ground, ranks)
}

/// The pointed matroid of a semimatroid, with `p` at index `n`.
pub fn pointed_from_semimatroid(s: &Semimatroid) -> Result<PointedMatroid> {
    let n = s.n();
    check_exhaustive(n + 1)?;
    let m = underlying_matroid(s)?;
    let base = |a: Subset| match s.rank(a) {
        Ok(r) => r,
        Err(_) => m.rank(a) + 1,
    };
    let coext = MatroidRank::from_fn_unchecked(s.ground().push(POINT_LABEL), |a| {
        if a.contains(n) {
            let a = a.without(n);
            base(a) + u32::from(s.is_central(a))
        } else {
            base(a)
        }
    })?;
    PointedMatroid::new(coext, n)
}

/// The triple `(Ñ, Ñ − p, Ñ / p)` of a semimatroid.
pub fn triple(s: &Semimatroid) -> Result<Triple> {
    let coextension = pointed_from_semimatroid(s)?;
    let preimage = coextension.deletion();
    let base = coextension.contraction();
    Ok(Triple {
        coextension,
        preimage,
        base,
    })
}

/// Ground set of a pointed matroid built over `s`.
pub fn pointed_ground(s: &Semimatroid) -> GroundSet {
    s.ground().push(POINT_LABEL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semimatroid::fixtures::{c3, set};

    fn p(labels: &str) -> Subset {
        // 'p' is index 3 over the C3 ground set
        labels
            .chars()
            .map(|c| {
                if c == 'p' {
                    3
                } else {
                    c.to_digit(10).unwrap() as usize - 1
                }
            })
            .collect()
    }

    #[test]
    fn c3_underlying_matroid() {
        let m = underlying_matroid(&c3()).unwrap();
        assert!(m.axiom_violation().is_none());
        assert_eq!(m.rank(set("12")), 1);
        assert_eq!(m.rank(set("123")), 2);
        assert_eq!(m.rank(set("13")), 2);
        let free = Semimatroid::free(GroundSet::new(3)).unwrap();
        assert_eq!(
            underlying_matroid(&free).unwrap(),
            MatroidRank::free(GroundSet::new(3)).unwrap()
        );
    }

    #[test]
    fn c3_family_is_modular_ideal() {
        let s = c3();
        let m = underlying_matroid(&s).unwrap();
        let fam = family_of(&s);
        assert!(is_modular_ideal(&m, &fam));
        let indep: Family = Subset::full(3)
            .subsets()
            .filter(|&x| m.is_independent(x))
            .collect();
        assert!(is_modular_ideal(&m, &indep));
        assert_eq!(indep, fam);
        let mut bigger = fam.clone();
        bigger.insert(set("12"));
        assert!(!is_modular_ideal(&m, &bigger));
        assert_eq!(semimatroid_from_ideal(&m, &fam).unwrap(), s);
        assert!(matches!(
            semimatroid_from_ideal(&m, &bigger),
            Err(Error::NotAModularIdeal(_))
        ));
    }

    #[test]
    fn whole_power_set_is_an_ideal() {
        let m = underlying_matroid(&c3()).unwrap();
        let all: Family = Subset::full(3).subsets().collect();
        let s = semimatroid_from_ideal(&m, &all).unwrap();
        assert_eq!(s.num_central(), 8);
        assert_eq!(preimage_from_ideal(&m, &all).unwrap(), m);
    }

    #[test]
    fn c3_preimage() {
        let s = c3();
        let m = underlying_matroid(&s).unwrap();
        let n = preimage_from_ideal(&m, &family_of(&s)).unwrap();
        assert_eq!(n.rank(set("12")), 2);
        assert_eq!(n.rank(set("123")), 3);
        for x in family_of(&s) {
            assert_eq!(n.rank(x), m.rank(x));
        }
        assert!(n.axiom_violation().is_none());
        assert_eq!(ideal_from_preimage(&m, &n).unwrap(), family_of(&s));
        assert!(is_quotient_map(&n, &m).unwrap());
        assert!(is_elementary_preimage(&n, &m).unwrap());
        assert!(is_elementary_preimage(&m, &m).unwrap());
        assert!(!is_quotient_map(&m, &n).unwrap());
        assert_eq!(ideal_from_preimage(&n, &m), Err(Error::NotAPreimage));
    }

    #[test]
    fn c3_coextension() {
        let s = c3();
        let m = underlying_matroid(&s).unwrap();
        let n = preimage_from_ideal(&m, &family_of(&s)).unwrap();
        let co = coextension_from_preimage(&m, &n).unwrap();
        let r = co.matroid();
        assert!(r.axiom_violation().is_none());
        assert_eq!(r.rank(p("123")), 3);
        assert_eq!(r.rank(p("12p")), 2);
        assert_eq!(r.rank(p("123p")), 3);
        assert_eq!(preimage_from_coextension(&co), n);
        assert_eq!(co.contraction(), m);
        assert_eq!(pointed_from_semimatroid(&s).unwrap(), co);
        assert_eq!(semimatroid_from_pointed(&co), s);
    }

    #[test]
    fn quotient_brute_force_agrees() {
        let s = c3();
        let m = underlying_matroid(&s).unwrap();
        let n = preimage_from_ideal(&m, &family_of(&s)).unwrap();
        for (a, b) in [(&n, &m), (&m, &n), (&m, &m)] {
            let brute = Subset::full(3).subsets().all(|x| {
                Subset::full(3)
                    .subsets()
                    .filter(|y| x.is_subset_of(*y))
                    .all(|y| {
                        a.rank(y) as i64 - a.rank(x) as i64 >= b.rank(y) as i64 - b.rank(x) as i64
                    })
            });
            assert_eq!(is_quotient_map(a, b).unwrap(), brute);
        }
    }

    #[test]
    fn free_pair_gives_single_isthmus() {
        let free = MatroidRank::free(GroundSet::new(2)).unwrap();
        let pm = PointedMatroid::new(free, 1).unwrap();
        assert_eq!(semimatroid_from_pointed(&pm), Semimatroid::isthmus());
        let looped = MatroidRank::new(GroundSet::new(2), vec![0, 1, 0, 1]).unwrap();
        assert_eq!(PointedMatroid::new(looped, 1), Err(Error::LoopPoint));
    }

    #[test]
    fn triple_of_single_free_element() {
        let s = Semimatroid::free(GroundSet::new(1)).unwrap();
        let t = triple(&s).unwrap();
        assert_eq!(
            t.coextension.matroid(),
            &MatroidRank::free(GroundSet::new(2)).unwrap()
        );
        assert_eq!(t.preimage, MatroidRank::free(GroundSet::new(1)).unwrap());
        assert_eq!(t.base, MatroidRank::free(GroundSet::new(1)).unwrap());
    }

    #[test]
    fn ground_mismatch() {
        let a = MatroidRank::free(GroundSet::new(1)).unwrap();
        let b = MatroidRank::free(GroundSet::new(2)).unwrap();
        assert_eq!(is_quotient_map(&a, &b), Err(Error::GroundSetMismatch(1, 2)));
    }
}
