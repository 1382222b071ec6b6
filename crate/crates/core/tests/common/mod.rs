//! Shared strategies and brute-force oracles for the property suites.
//!
//! The oracles work straight from the definitions with no shortcuts, so they
//! share no logic with the library beyond the `Subset` bitmask type.

#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use semimatroid::generate::{random_arrangement, random_semimatroid};
use semimatroid::matroid::MatroidRank;
use semimatroid::{Arrangement, BivariatePoly, Semimatroid, Subset};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random semimatroids on up to seven elements.
pub fn semimatroids() -> impl Strategy<Value = Semimatroid> {
    (0usize..=7, any::<u64>()).prop_map(|(n, seed)| random_semimatroid(&mut rng(seed), n))
}

/// Random semimatroids on up to `max` elements.
pub fn semimatroids_up_to(max: usize) -> impl Strategy<Value = Semimatroid> {
    (0usize..=max, any::<u64>()).prop_map(|(n, seed)| random_semimatroid(&mut rng(seed), n))
}

/// Random rational arrangements: dimension ≤ 4, at most six hyperplanes.
pub fn arrangements() -> impl Strategy<Value = Arrangement> {
    (1usize..=4, 0usize..=6, any::<u64>())
        .prop_map(|(d, n, seed)| random_arrangement(&mut rng(seed), d, n))
}

pub fn subsets_of(x: Subset) -> Vec<Subset> {
    x.subsets().collect()
}

/// Every subset of `{0..n-1}`.
pub fn all_subsets(n: usize) -> Vec<Subset> {
    (0..1u64 << n).map(Subset::from_bits).collect()
}

/// `max{r(Y) : Y ⊆ X, Y ∈ C}`.
pub fn ext_rank(s: &Semimatroid, x: Subset) -> u32 {
    s.central_ranks()
        .filter(|(y, _)| y.is_subset_of(x))
        .map(|(_, r)| r)
        .max()
        .unwrap_or(0)
}

fn ranks(s: &Semimatroid) -> HashMap<Subset, u32> {
    s.central_ranks().collect()
}

/// All semimatroid axioms checked literally over all pairs.
pub fn axioms_hold(s: &Semimatroid) -> bool {
    let c = ranks(s);
    let n = s.n();
    if c.get(&Subset::EMPTY) != Some(&0) {
        return false;
    }
    for (&x, &rx) in &c {
        if !x.is_subset_of(Subset::full(n)) || rx as usize > x.len() {
            return false;
        }
        if !subsets_of(x).iter().all(|y| c.contains_key(y)) {
            return false;
        }
    }
    for (&x, &rx) in &c {
        for (&y, &ry) in &c {
            if x.is_subset_of(y) && rx > ry {
                return false;
            }
            if let Some(&ru) = c.get(&x.union(y)) {
                if rx + ry < ru + c[&x.intersection(y)] {
                    return false;
                }
            }
            if rx == c[&x.intersection(y)] && !c.contains_key(&x.union(y)) {
                return false;
            }
            if rx < ry && !y.difference(x).iter().any(|e| c.contains_key(&x.with(e))) {
                return false;
            }
        }
    }
    let maximal: Vec<u32> = c
        .iter()
        .filter(|(x, _)| (0..n).all(|e| x.contains(e) || !c.contains_key(&x.with(e))))
        .map(|(_, &r)| r)
        .collect();
    maximal.windows(2).all(|w| w[0] == w[1])
}

/// Global matroid axioms: bounded, monotone, submodular.
pub fn matroid_axioms_hold(m: &MatroidRank) -> bool {
    let subsets = all_subsets(m.n());
    if m.rank(Subset::EMPTY) != 0 {
        return false;
    }
    for &x in &subsets {
        if m.rank(x) as usize > x.len() {
            return false;
        }
        for &y in &subsets {
            if x.is_subset_of(y) && m.rank(x) > m.rank(y) {
                return false;
            }
            if m.rank(x) + m.rank(y) < m.rank(x.union(y)) + m.rank(x.intersection(y)) {
                return false;
            }
        }
    }
    true
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Add `(x − 1)^a (y − 1)^b`, expanded by the binomial theorem.
fn add_shifted(acc: &mut HashMap<(u32, u32), i64>, a: u32, b: u32) {
    for i in 0..=a {
        for j in 0..=b {
            let sign = if (a - i + b - j).is_multiple_of(2) {
                1
            } else {
                -1
            };
            *acc.entry((i, j)).or_insert(0) += sign * binomial(a, i) * binomial(b, j);
        }
    }
}

fn to_poly(acc: HashMap<(u32, u32), i64>) -> BivariatePoly {
    BivariatePoly::from_terms(acc.into_iter().map(|(e, c)| (e, BigInt::from(c))))
}

pub fn tutte(s: &Semimatroid) -> BivariatePoly {
    let r = s.semimatroid_rank();
    let mut acc = HashMap::new();
    for (x, rx) in s.central_ranks() {
        add_shifted(&mut acc, r - rx, x.len() as u32 - rx);
    }
    to_poly(acc)
}

pub fn u_poly(s: &Semimatroid) -> BivariatePoly {
    let r = s.semimatroid_rank();
    let mut acc = HashMap::new();
    for x in all_subsets(s.n()).into_iter().filter(|&x| !s.is_central(x)) {
        let rx = ext_rank(s, x);
        add_shifted(&mut acc, r - rx, x.len() as u32 - rx);
    }
    to_poly(acc)
}

pub fn matroid_tutte(m: &MatroidRank) -> BivariatePoly {
    let r = m.rank(Subset::full(m.n()));
    let mut acc = HashMap::new();
    for x in all_subsets(m.n()) {
        add_shifted(&mut acc, r - m.rank(x), x.len() as u32 - m.rank(x));
    }
    to_poly(acc)
}

pub fn closure(s: &Semimatroid, x: Subset) -> Subset {
    let r = s.rank(x).unwrap();
    (0..s.n())
        .filter(|&e| s.rank(x.with(e)).ok() == Some(r))
        .collect()
}

pub fn is_basis(s: &Semimatroid, b: Subset) -> bool {
    s.rank(b).ok() == Some(s.semimatroid_rank()) && b.len() as u32 == s.semimatroid_rank()
}

fn independent(s: &Semimatroid, x: Subset) -> bool {
    s.rank(x).ok() == Some(x.len() as u32)
}

/// Circuits inside `within`: dependent central sets all of whose proper
/// subsets are independent.
pub fn circuits_within(s: &Semimatroid, within: Subset) -> Vec<Subset> {
    subsets_of(within)
        .into_iter()
        .filter(|&x| {
            s.is_central(x)
                && !independent(s, x)
                && subsets_of(x)
                    .into_iter()
                    .filter(|&y| y != x)
                    .all(|y| independent(s, y))
        })
        .collect()
}

/// Cocircuits inside `within`: minimal `D` with `r(S − D) < r`.
pub fn cocircuits_within(s: &Semimatroid, within: Subset) -> Vec<Subset> {
    let full = Subset::full(s.n());
    let r = s.semimatroid_rank();
    let drops = |d: Subset| ext_rank(s, full.difference(d)) < r;
    subsets_of(within)
        .into_iter()
        .filter(|&d| {
            drops(d)
                && subsets_of(d)
                    .into_iter()
                    .filter(|&y| y != d)
                    .all(|y| !drops(y))
        })
        .collect()
}

/// `(I(B), E(B))` from the smallest-element definitions.
pub fn activity(s: &Semimatroid, b: Subset) -> (Subset, Subset) {
    let full = Subset::full(s.n());
    let mut internal = Subset::EMPTY;
    for i in b.iter() {
        let cocircuits = cocircuits_within(s, full.difference(b).with(i));
        assert_eq!(
            cocircuits.len(),
            1,
            "unique cocircuit for B={:?}, i={}",
            b,
            i
        );
        if cocircuits[0].min() == Some(i) {
            internal = internal.with(i);
        }
    }
    let mut external = Subset::EMPTY;
    for e in full.difference(b).iter() {
        if !s.is_central(b.with(e)) {
            continue;
        }
        let circuits = circuits_within(s, b.with(e));
        assert_eq!(circuits.len(), 1, "unique circuit for B={:?}, e={}", b, e);
        if circuits[0].min() == Some(e) {
            external = external.with(e);
        }
    }
    (internal, external)
}

/// Lexicographic order on ascending sequences.
pub fn lex_key(x: Subset) -> Vec<usize> {
    x.to_vec()
}
