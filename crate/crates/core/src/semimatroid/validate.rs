use std::collections::HashMap;
use std::fmt;

use crate::subset::Subset;

/// Which defining condition a candidate family broke.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// An element index is outside the ground set.
    Range,
    EmptySet,
    DownwardClosure,
    R1,
    R2,
    R3,
    CR1,
    CR2,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Range => "range",
            Axiom::EmptySet => "empty-set",
            Axiom::DownwardClosure => "downward-closure",
            Axiom::R1 => "R1",
            Axiom::R2 => "R2",
            Axiom::R3 => "R3",
            Axiom::CR1 => "CR1",
            Axiom::CR2 => "CR2",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    /// The witnessing sets, in the order named by the axiom (X, then Y).
    pub witnesses: Vec<Subset>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.axiom.name())?;
        for (i, w) in self.witnesses.iter().enumerate() {
            let name = ["X", "Y", "Z"].get(i).copied().unwrap_or("W");
            write!(f, " {}={:?}", name, w)?;
        }
        Ok(())
    }
}

/// Every violated axiom, each with the first witness met in `(size, lex)`
/// order. Empty exactly when the candidate is a semimatroid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violates(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    fn record(&mut self, axiom: Axiom, witnesses: &[Subset]) {
        if !self.violates(axiom) {
            self.violations.push(Violation {
                axiom,
                witnesses: witnesses.to_vec(),
            });
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", v)?;
        }
        Ok(())
    }
}

/// Check a raw subset-to-rank mapping on `{0,..,n-1}` against the
/// semimatroid axioms. Violations are data; this never fails.
pub fn validate(n: usize, ranks: &HashMap<Subset, u32>) -> ValidationReport {
    let mut report = ValidationReport::default();
    let full = Subset::full(n);
    let mut sets: Vec<Subset> = ranks.keys().copied().collect();
    sets.sort();

    for &x in &sets {
        if !x.is_subset_of(full) {
            report.record(Axiom::Range, &[x]);
        }
    }
    match ranks.get(&Subset::EMPTY) {
        None => report.record(Axiom::EmptySet, &[Subset::EMPTY]),
        Some(0) => {}
        Some(_) => report.record(Axiom::R1, &[Subset::EMPTY]),
    }
    for &x in &sets {
        if let Some(e) = x.iter().find(|&e| !ranks.contains_key(&x.without(e))) {
            report.record(Axiom::DownwardClosure, &[x, x.without(e)]);
        }
        if ranks[&x] as usize > x.len() {
            report.record(Axiom::R1, &[x]);
        }
    }

    for &x in &sets {
        let rx = ranks[&x];
        for &y in &sets {
            let ry = ranks[&y];
            if x != y && x.is_subset_of(y) && rx > ry {
                report.record(Axiom::R2, &[x, y]);
            }
            let meet = x.intersection(y);
            let join = x.union(y);
            let r_meet = ranks.get(&meet).copied();
            let r_join = ranks.get(&join).copied();
            if let (Some(rm), Some(rj)) = (r_meet, r_join) {
                if rx + ry < rj + rm {
                    report.record(Axiom::R3, &[x, y]);
                }
            }
            if r_meet == Some(rx) && r_join.is_none() {
                report.record(Axiom::CR1, &[x, y]);
            }
            if rx < ry
                && !y
                    .difference(x)
                    .iter()
                    .any(|e| ranks.contains_key(&x.with(e)))
            {
                report.record(Axiom::CR2, &[x, y]);
            }
        }
    }
    report.violations.sort_by_key(|v| v.axiom);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(sets: &[(&[usize], u32)]) -> HashMap<Subset, u32> {
        sets.iter()
            .map(|(s, r)| (Subset::from_indices(s.iter().copied()), *r))
            .collect()
    }

    #[test]
    fn triangle_minus_edge_is_valid() {
        let c = family(&[
            (&[], 0),
            (&[0], 1),
            (&[1], 1),
            (&[2], 1),
            (&[0, 2], 2),
            (&[1, 2], 2),
        ]);
        assert!(validate(3, &c).is_valid());
    }

    #[test]
    fn minimal_family() {
        let c = family(&[(&[], 0)]);
        assert!(validate(4, &c).is_valid());
    }

    #[test]
    fn removing_13_breaks_cr2_only() {
        let c = family(&[(&[], 0), (&[0], 1), (&[1], 1), (&[2], 1), (&[1, 2], 2)]);
        let report = validate(3, &c);
        assert!(!report.violates(Axiom::DownwardClosure));
        assert_eq!(report.violations.len(), 1);
        let v = &report.violations[0];
        assert_eq!(v.axiom, Axiom::CR2);
        assert_eq!(
            v.witnesses,
            vec![Subset::from_indices([0]), Subset::from_indices([1, 2])]
        );
    }

    #[test]
    fn missing_empty_set() {
        let c = family(&[(&[0], 1)]);
        let report = validate(1, &c);
        assert!(report.violates(Axiom::EmptySet));
        assert!(report.violates(Axiom::DownwardClosure));
    }

    #[test]
    fn rank_axioms() {
        let c = family(&[(&[], 0), (&[0], 2)]);
        assert!(validate(1, &c).violates(Axiom::R1));
        let c = family(&[(&[], 0), (&[0], 1), (&[1], 1), (&[0, 1], 0)]);
        assert!(validate(2, &c).violates(Axiom::R2));
        // r(01)=2, r(02)=2, r(012)=3, r(0)=0 breaks submodularity
        let c = family(&[
            (&[], 0),
            (&[0], 0),
            (&[1], 1),
            (&[2], 1),
            (&[0, 1], 2),
            (&[0, 2], 2),
            (&[1, 2], 2),
            (&[0, 1, 2], 3),
        ]);
        assert!(validate(3, &c).violates(Axiom::R3));
    }

    #[test]
    fn cr1_needs_union() {
        // 0 is a loop but {0,1} is missing
        let c = family(&[(&[], 0), (&[0], 0), (&[1], 1)]);
        let report = validate(2, &c);
        assert!(report.violates(Axiom::CR1));
    }

    #[test]
    fn out_of_range() {
        let c = family(&[(&[], 0), (&[5], 1)]);
        assert!(validate(3, &c).violates(Axiom::Range));
    }
}
