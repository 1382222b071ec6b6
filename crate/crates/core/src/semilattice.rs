//! Finite posets, the poset of flats, and the geometric-semilattice test.
//!
//! A geometric semilattice is a ranked meet semilattice in which every
//! element is a join of atoms and the sets of atoms with a join of rank equal
//! to their size form the independent sets of a matroid. Such posets are
//! exactly the flat posets of simple semimatroids.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::matroid::MatroidRank;
use crate::semimatroid::{check_exhaustive, Semimatroid};
use crate::subset::{GroundSet, Subset};

/// A finite poset with a full `≤` table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    sets: Option<Vec<Subset>>,
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// Subsets ordered by containment.
    pub fn from_containment(sets: Vec<Subset>, ground: &GroundSet) -> Self {
        let leq = sets
            .iter()
            .map(|a| sets.iter().map(|b| a.is_subset_of(*b)).collect())
            .collect();
        Poset {
            names: sets.iter().map(|&x| ground.format_subset(x)).collect(),
            sets: Some(sets),
            leq,
        }
    }

    /// The reflexive–transitive closure of `relations` (pairs `a ≤ b`).
    pub fn from_relation(names: Vec<String>, relations: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in relations {
            if a >= n || b >= n {
                return Err(Error::NotAPoset(format!(
                    "relation ({}, {}) out of range",
                    a, b
                )));
            }
            leq[a][b] = true;
        }
        for k in 0..n {
            let above_k = leq[k].clone();
            for row in leq.iter_mut().filter(|row| row[k]) {
                for (cell, &kj) in row.iter_mut().zip(&above_k) {
                    *cell |= kj;
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if leq[i][j] && leq[j][i] {
                    return Err(Error::NotAPoset(format!(
                        "{} and {} are distinct but mutually below",
                        names[i], names[j]
                    )));
                }
            }
        }
        Ok(Poset {
            names,
            sets: None,
            leq,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// The subsets behind the elements, when built by containment.
    pub fn sets(&self) -> Option<&[Subset]> {
        self.sets.as_deref()
    }

    /// The induced subposet on `keep`, in the given order.
    pub fn induced(&self, keep: &[usize]) -> Poset {
        Poset {
            names: keep.iter().map(|&i| self.names[i].clone()).collect(),
            sets: self
                .sets
                .as_ref()
                .map(|s| keep.iter().map(|&i| s[i]).collect()),
            leq: keep
                .iter()
                .map(|&a| keep.iter().map(|&b| self.leq[a][b]).collect())
                .collect(),
        }
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.len()).find(|&m| (0..self.len()).all(|x| self.leq[m][x]))
    }

    /// `b` covers `a`: `a < b` with nothing strictly between.
    pub fn covers(&self, a: usize, b: usize) -> bool {
        a != b
            && self.leq[a][b]
            && !(0..self.len()).any(|c| c != a && c != b && self.leq[a][c] && self.leq[c][b])
    }

    /// Greatest lower bound of a non-empty set of elements.
    pub fn meet_of(&self, xs: &[usize]) -> Option<usize> {
        let lower: Vec<usize> = (0..self.len())
            .filter(|&l| xs.iter().all(|&x| self.leq[l][x]))
            .collect();
        lower
            .iter()
            .copied()
            .find(|&g| lower.iter().all(|&l| self.leq[l][g]))
    }

    /// Least upper bound, computed as the meet of all upper bounds. `None`
    /// when there is no upper bound at all.
    pub fn join_of(&self, xs: &[usize]) -> Option<usize> {
        let upper: Vec<usize> = (0..self.len())
            .filter(|&u| xs.iter().all(|&x| self.leq[x][u]))
            .collect();
        if upper.is_empty() {
            return None;
        }
        self.meet_of(&upper)
            .filter(|&j| xs.iter().all(|&x| self.leq[x][j]))
    }
}

/// The flats of a semimatroid ordered by containment.
pub fn flats_poset(s: &Semimatroid) -> Poset {
    Poset::from_containment(s.flats(), s.ground())
}

/// The flats of a matroid ordered by containment.
pub fn matroid_flats_poset(m: &MatroidRank) -> Poset {
    Poset::from_containment(m.flats(), m.ground())
}

/// Outcome of [`check_geometric_semilattice`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankedPosetReport {
    pub is_meet_semilattice: bool,
    pub is_ranked: bool,
    pub g1: bool,
    pub g2: bool,
    /// Height of each element above the minimum, when ranked.
    pub ranks: Vec<Option<u32>>,
    /// Atoms in listed order.
    pub atoms: Vec<usize>,
    pub witnesses: Vec<String>,
}

impl RankedPosetReport {
    pub fn is_geometric(&self) -> bool {
        self.is_meet_semilattice && self.is_ranked && self.g1 && self.g2
    }
}

/// Longest atom set examined exhaustively for the matroid condition.
const MAX_ATOMS: usize = 20;

pub fn check_geometric_semilattice(p: &Poset) -> RankedPosetReport {
    let n = p.len();
    let mut report = RankedPosetReport {
        is_meet_semilattice: false,
        is_ranked: false,
        g1: false,
        g2: false,
        ranks: vec![None; n],
        atoms: Vec::new(),
        witnesses: Vec::new(),
    };
    let Some(bottom) = p.minimum() else {
        report.witnesses.push("no minimum element".to_string());
        return report;
    };
    report.is_meet_semilattice = match meet_failure(p) {
        Some((a, b)) => {
            report
                .witnesses
                .push(format!("{} and {} have no meet", p.names[a], p.names[b]));
            false
        }
        None => true,
    };
    report.atoms = (0..n).filter(|&a| p.covers(bottom, a)).collect();

    let (shortest, longest) = chain_lengths(p, bottom);
    report.is_ranked = (0..n).all(|x| shortest[x] == longest[x]);
    if report.is_ranked {
        report.ranks = shortest.iter().map(|&h| Some(h)).collect();
    } else if let Some(x) = (0..n).find(|&x| shortest[x] != longest[x]) {
        report.witnesses.push(format!(
            "maximal chains below {} have lengths {} and {}",
            p.names[x], shortest[x], longest[x]
        ));
    }
    if !report.is_meet_semilattice {
        return report;
    }

    report.g1 = match (0..n).find(|&x| {
        let below: Vec<usize> = report
            .atoms
            .iter()
            .copied()
            .filter(|&a| p.leq(a, x))
            .collect();
        p.join_of(&below) != Some(x)
    }) {
        Some(x) => {
            report.witnesses.push(format!(
                "{} is not the join of the atoms below it",
                p.names[x]
            ));
            false
        }
        None => true,
    };

    if report.is_ranked {
        match atom_matroid_failure(p, &report.atoms, &shortest) {
            Some(w) => report.witnesses.push(w),
            None => report.g2 = true,
        }
    }
    report
}

fn meet_failure(p: &Poset) -> Option<(usize, usize)> {
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p.meet_of(&[a, b]).is_none() {
                return Some((a, b));
            }
        }
    }
    None
}

/// Shortest and longest maximal chain from `bottom` to each element, along
/// cover relations.
fn chain_lengths(p: &Poset, bottom: usize) -> (Vec<u32>, Vec<u32>) {
    let n = p.len();
    // Process elements so that everything below comes first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (0..n).filter(|&y| p.leq(y, x)).count());
    let mut shortest = vec![u32::MAX; n];
    let mut longest = vec![0u32; n];
    shortest[bottom] = 0;
    for &x in &order {
        if x == bottom {
            continue;
        }
        for y in (0..n).filter(|&y| p.covers(y, x)) {
            shortest[x] = shortest[x].min(shortest[y].saturating_add(1));
            longest[x] = longest[x].max(longest[y] + 1);
        }
    }
    (shortest, longest)
}

/// Atom sets `A` with a join of rank `|A|` must be closed under subsets and
/// satisfy augmentation.
fn atom_matroid_failure(p: &Poset, atoms: &[usize], ranks: &[u32]) -> Option<String> {
    if atoms.len() > MAX_ATOMS {
        return Some(format!(
            "{} atoms is too many to check exhaustively",
            atoms.len()
        ));
    }
    let independent: Vec<bool> = (0..1u64 << atoms.len())
        .map(|bits| {
            let chosen: Vec<usize> = Subset::from_bits(bits).iter().map(|i| atoms[i]).collect();
            p.join_of(&chosen)
                .is_some_and(|j| ranks[j] as usize == chosen.len())
        })
        .collect();
    let name = |bits: u64| -> String {
        let names: Vec<&str> = Subset::from_bits(bits)
            .iter()
            .map(|i| p.names[atoms[i]].as_str())
            .collect();
        format!("{{{}}}", names.join(", "))
    };
    for bits in 0..independent.len() as u64 {
        if !independent[bits as usize] {
            continue;
        }
        let a = Subset::from_bits(bits);
        if let Some(e) = a
            .iter()
            .find(|&e| !independent[a.without(e).bits() as usize])
        {
            return Some(format!(
                "independent atom set {} has dependent subset {}",
                name(bits),
                name(a.without(e).bits())
            ));
        }
        for other in 0..independent.len() as u64 {
            let b = Subset::from_bits(other);
            if independent[other as usize]
                && b.len() > a.len()
                && !b
                    .difference(a)
                    .iter()
                    .any(|e| independent[a.with(e).bits() as usize])
            {
                return Some(format!(
                    "independent atom set {} cannot be augmented from {}",
                    name(bits),
                    name(other)
                ));
            }
        }
    }
    None
}

/// The simple semimatroid whose flats form `p`: the ground set is the atoms,
/// a set of atoms is central when it has a join, and its rank is the height
/// of that join.
pub fn semimatroid_from_semilattice(p: &Poset) -> Result<Semimatroid> {
    let report = check_geometric_semilattice(p);
    if !report.is_geometric() {
        return Err(Error::NotGeometricSemilattice);
    }
    let mut atoms = report.atoms.clone();
    if let Some(sets) = p.sets() {
        atoms.sort_by_key(|&a| sets[a]);
    }
    check_exhaustive(atoms.len())?;
    let ground = GroundSet::with_labels(atoms.iter().map(|&a| p.names[a].clone()).collect());
    let mut ranks: HashMap<Subset, u32> = HashMap::new();
    ranks.insert(Subset::EMPTY, 0);
    let mut frontier = vec![Subset::EMPTY];
    while let Some(x) = frontier.pop() {
        let start = x.max().map_or(0, |m| m + 1);
        for e in start..atoms.len() {
            let y = x.with(e);
            let chosen: Vec<usize> = y.iter().map(|i| atoms[i]).collect();
            if let Some(j) = p.join_of(&chosen) {
                let r = report.ranks[j].expect("ranked");
                ranks.insert(y, r);
                frontier.push(y);
            }
        }
    }
    Semimatroid::new(ground, ranks)
}

/// `L − [a, 1̂]`: drop every element above the atom `a`.
pub fn remove_upper_interval(l: &Poset, atom: usize) -> Result<Poset> {
    let bottom = l.minimum().ok_or(Error::NotAnAtom(atom))?;
    if atom >= l.len() || !l.covers(bottom, atom) {
        return Err(Error::NotAnAtom(atom));
    }
    let keep: Vec<usize> = (0..l.len()).filter(|&x| !l.leq(atom, x)).collect();
    Ok(l.induced(&keep))
}
