mod common;

use proptest::prelude::*;
use semimatroid::bridge::triple;
use semimatroid::semilattice::{
    check_geometric_semilattice, flats_poset, matroid_flats_poset, remove_upper_interval,
    semimatroid_from_semilattice,
};
use semimatroid::Subset;

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(256)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn flats_form_a_geometric_semilattice(s in common::semimatroids()) {
        let p = flats_poset(&s);
        let report = check_geometric_semilattice(&p);
        prop_assert!(report.is_geometric(), "{:?}", report);
        // Poset height agrees with semimatroid rank.
        for (i, &f) in p.sets().unwrap().iter().enumerate() {
            prop_assert_eq!(report.ranks[i], Some(s.rank(f).unwrap()));
        }
    }

    #[test]
    fn flats_are_lattice_minus_interval(s in common::semimatroids()) {
        let t = triple(&s).unwrap();
        let lattice = matroid_flats_poset(t.coextension.matroid());
        prop_assert!(check_geometric_semilattice(&lattice).is_geometric());
        let p = t.coextension.point();
        // The closure of {p} is the atom above which everything is removed.
        let atom_set = t.coextension.matroid().closure(Subset::singleton(p));
        let atom = lattice.sets().unwrap().iter().position(|&f| f == atom_set).unwrap();
        let k = remove_upper_interval(&lattice, atom).unwrap();
        prop_assert!(check_geometric_semilattice(&k).is_geometric());
        let mut got: Vec<Subset> = k.sets().unwrap().to_vec();
        got.sort();
        prop_assert_eq!(got, s.flats());
    }

    #[test]
    fn simple_reconstruction_round_trip(s in common::semimatroids_up_to(6)) {
        let rebuilt = semimatroid_from_semilattice(&flats_poset(&s)).unwrap();
        prop_assert!(rebuilt.is_simple());
        prop_assert!(common::axioms_hold(&rebuilt));
        prop_assert_eq!(flats_poset(&rebuilt).len(), flats_poset(&s).len());
        if s.is_simple() {
            prop_assert!(rebuilt.is_isomorphic(&s));
        }
    }
}

#[test]
fn reconstruction_covers_simple_instances() {
    // Make sure the round trip above is not vacuous.
    let mut r = common::rng(11);
    let simple = (0..400)
        .map(|i| semimatroid::generate::random_semimatroid(&mut r, 2 + i % 5))
        .filter(|s| s.is_simple())
        .count();
    assert!(simple >= 20, "only {} simple instances", simple);
}
