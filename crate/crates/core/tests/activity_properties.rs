mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use semimatroid::activity::{
    activities, activity, activity_by_definitions, circuits, cocircuits, d_map,
    interval_decomposition, phi1, phi2, tutte_activity, u_extended, u_map, unique_circuit,
    unique_cocircuit,
};
use semimatroid::tutte::tutte_sum;
use semimatroid::{BivariatePoly, Subset};

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(256)
}

/// Lex-largest among independent subsets of `x` of rank `r(x)`, by brute force.
fn d_oracle(s: &semimatroid::Semimatroid, x: Subset) -> Subset {
    let rx = s.rank(x).unwrap();
    common::subsets_of(x)
        .into_iter()
        .filter(|&y| y.len() as u32 == rx && s.rank(y).ok() == Some(rx))
        .max_by_key(|&y| common::lex_key(y))
        .unwrap()
}

fn u_extended_oracle(s: &semimatroid::Semimatroid, x: Subset) -> Subset {
    let r = s.semimatroid_rank();
    let candidates: Vec<Subset> = common::all_subsets(s.n())
        .into_iter()
        .filter(|&y| x.is_subset_of(y) && common::ext_rank(s, y) == r)
        .collect();
    candidates
        .iter()
        .copied()
        .filter(|&y| !candidates.iter().any(|&z| z != y && z.is_subset_of(y)))
        .min_by_key(|&y| common::lex_key(y))
        .unwrap()
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn characterisation_matches_definitions(s in common::semimatroids()) {
        for b in s.bases() {
            prop_assert!(common::is_basis(&s, b));
            let rec = activity(&s, b).unwrap();
            let (i, e) = common::activity(&s, b);
            prop_assert_eq!((rec.internal, rec.external), (i, e));
            prop_assert_eq!(activity_by_definitions(&s, b).unwrap(), rec);
            // Internal activity equivalently drops the rank by exactly one.
            let full = Subset::full(s.n());
            for i in rec.internal.iter() {
                prop_assert_eq!(
                    s.extended_rank(b.without(i).union(full.below(i))),
                    s.semimatroid_rank() - 1
                );
            }
        }
    }

    #[test]
    fn unique_circuits_and_cocircuits(s in common::semimatroids()) {
        let full = Subset::full(s.n());
        let all_circuits: HashSet<Subset> = circuits(&s).into_iter().collect();
        let all_cocircuits: HashSet<Subset> = cocircuits(&s).unwrap().into_iter().collect();
        prop_assert_eq!(&all_circuits, &common::circuits_within(&s, full).into_iter().collect());
        prop_assert_eq!(&all_cocircuits, &common::cocircuits_within(&s, full).into_iter().collect());
        for c in &all_circuits {
            prop_assert_eq!(s.rank(*c).unwrap() as usize, c.len() - 1);
        }
        for d in &all_cocircuits {
            prop_assert_eq!(s.extended_rank(full.difference(*d)), s.semimatroid_rank() - 1);
        }
        for b in s.bases() {
            for e in full.difference(b).iter() {
                if s.is_central(b.with(e)) {
                    let c = unique_circuit(&s, b, e).unwrap();
                    prop_assert_eq!(common::circuits_within(&s, b.with(e)), vec![c]);
                }
            }
            for i in b.iter() {
                let d = unique_cocircuit(&s, b, i).unwrap();
                prop_assert_eq!(common::cocircuits_within(&s, full.difference(b).with(i)), vec![d]);
            }
        }
    }

    #[test]
    fn interval_lemmas(s in common::semimatroids()) {
        let r = s.semimatroid_rank();
        for rec in activities(&s) {
            let b = rec.basis;
            for i in rec.internal.subsets() {
                for e in rec.external.subsets() {
                    let x = phi1(&s, b, i, e).unwrap();
                    prop_assert_eq!(x, b.difference(i).union(e));
                    // Rank, d, ud, u d.
                    prop_assert_eq!(s.rank(x).unwrap(), r - i.len() as u32);
                    prop_assert_eq!(d_map(&s, x).unwrap(), b.difference(i));
                    prop_assert_eq!(u_map(&s, d_map(&s, x).unwrap()).unwrap(), b);
                    if s.is_independent(x) {
                        prop_assert_eq!(u_map(&s, x).unwrap(), b.union(e));
                    }
                    let ux = u_extended(&s, x).unwrap();
                    prop_assert_eq!(ux, b.union(e));
                    prop_assert_eq!(d_map(&s, ux).unwrap(), b);
                    prop_assert_eq!(phi2(&s, x).unwrap(), (b, i, e));
                }
            }
        }
    }

    #[test]
    fn maps_match_brute_force(s in common::semimatroids()) {
        for &x in s.central_sets() {
            prop_assert_eq!(d_map(&s, x).unwrap(), d_oracle(&s, x));
            let (b, i, e) = phi2(&s, x).unwrap();
            prop_assert_eq!(phi1(&s, b, i, e).unwrap(), x);
            if s.is_independent(x) {
                let expected = s
                    .bases()
                    .into_iter()
                    .filter(|&b| x.is_subset_of(b))
                    .min_by_key(|&b| common::lex_key(b))
                    .unwrap();
                prop_assert_eq!(u_map(&s, x).unwrap(), expected);
            }
        }
        for x in common::all_subsets(s.n()) {
            prop_assert_eq!(u_extended(&s, x).unwrap(), u_extended_oracle(&s, x));
        }
    }

    #[test]
    fn decomposition_partitions_family(s in common::semimatroids()) {
        let dec = interval_decomposition(&s);
        prop_assert!(dec.is_partition_of(&s));
        prop_assert_eq!(dec.sizes().iter().sum::<usize>(), s.num_central());
        let mut seen = HashSet::new();
        for rec in &dec.records {
            for x in rec.interval() {
                prop_assert!(seen.insert(x));
            }
        }
        prop_assert_eq!(seen.len(), s.num_central());
    }

    #[test]
    fn per_interval_monomials(s in common::semimatroids()) {
        let r = s.semimatroid_rank();
        for rec in activities(&s) {
            let mut sum = BivariatePoly::zero();
            for x in rec.interval() {
                let rx = s.rank(x).unwrap();
                sum = &sum + &BivariatePoly::shifted_monomial(r - rx, x.len() as u32 - rx);
            }
            let monomial = BivariatePoly::monomial(
                1,
                rec.internal.len() as u32,
                rec.external.len() as u32,
            );
            prop_assert_eq!(sum, monomial);
        }
        prop_assert_eq!(tutte_activity(&s), tutte_sum(&s));
    }
}
