//! Memoised deletion–contraction.

use std::collections::HashMap;

use super::minor::{Minor, MinorKey};
use crate::poly::BivariatePoly;
use crate::semimatroid::Semimatroid;

/// The Tutte polynomial by deletion–contraction.
///
/// Elements with non-central singletons are dropped (they never affect the
/// polynomial). A loop contributes a factor `y`, an isthmus a factor `x`;
/// otherwise the smallest remaining element is split into `C − e` and
/// `C / e`. The trivial family `{∅}` has polynomial `1`.
pub fn tutte_delcon(s: &Semimatroid) -> BivariatePoly {
    DelCon::default().solve(Minor::of(s))
}

#[derive(Default)]
struct DelCon {
    memo: HashMap<MinorKey, BivariatePoly>,
}

impl DelCon {
    fn solve(&mut self, minor: Minor) -> BivariatePoly {
        let minor = minor.without_noncentral();
        if minor.is_trivial() {
            return BivariatePoly::one();
        }
        let key = minor.key();
        if let Some(t) = self.memo.get(&key) {
            return t.clone();
        }
        let t = self.split(&minor);
        self.memo.insert(key, t.clone());
        t
    }

    fn split(&mut self, minor: &Minor) -> BivariatePoly {
        for e in 0..minor.n() {
            if minor.is_loop(e) {
                return &BivariatePoly::y() * &self.solve(minor.contract(e));
            }
            if minor.is_isthmus(e) {
                return &BivariatePoly::x() * &self.solve(minor.delete(e));
            }
        }
        let deleted = self.solve(minor.delete(0));
        let contracted = self.solve(minor.contract(0));
        &deleted + &contracted
    }
}
