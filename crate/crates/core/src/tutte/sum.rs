//! Tutte and companion polynomials as explicit sums over subsets.

use std::collections::HashMap;

use crate::error::Result;
use crate::matroid::MatroidRank;
use crate::poly::{BivariatePoly, UnivariatePoly};
use crate::semimatroid::{check_exhaustive, Semimatroid};
use crate::subset::Subset;

/// Accumulates `(x − 1)^a (y − 1)^b` terms, expanding each exponent pair once.
#[derive(Default)]
struct ShiftedSum {
    counts: HashMap<(u32, u32), i64>,
}

impl ShiftedSum {
    fn add(&mut self, a: u32, b: u32) {
        *self.counts.entry((a, b)).or_insert(0) += 1;
    }

    fn finish(self) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for ((a, b), count) in self.counts {
            out = &out + &BivariatePoly::shifted_monomial(a, b).scale(&count.into());
        }
        out
    }
}

/// `T_C = Σ_{X ∈ C} (x − 1)^{r − r(X)} (y − 1)^{|X| − r(X)}`.
pub fn tutte_sum(s: &Semimatroid) -> BivariatePoly {
    let r = s.semimatroid_rank();
    let mut acc = ShiftedSum::default();
    for (x, rx) in s.central_ranks() {
        acc.add(r - rx, x.len() as u32 - rx);
    }
    acc.finish()
}

/// `U_C = Σ_{X ∉ C} (x − 1)^{r − r(X)} (y − 1)^{|X| − r(X)}` with the
/// extended rank. Every such `X` is dependent, so `y − 1` divides it.
pub fn u_poly(s: &Semimatroid) -> Result<BivariatePoly> {
    check_exhaustive(s.n())?;
    let r = s.semimatroid_rank();
    let mut acc = ShiftedSum::default();
    for x in Subset::full(s.n()).subsets().filter(|&x| !s.is_central(x)) {
        let rx = s.extended_rank(x);
        acc.add(r - rx, x.len() as u32 - rx);
    }
    Ok(acc.finish())
}

/// The Tutte polynomial of a matroid: the state sum with every subset central.
pub fn matroid_tutte(m: &MatroidRank) -> BivariatePoly {
    let r = m.total_rank();
    let mut acc = ShiftedSum::default();
    for x in m.ground().full().subsets() {
        let rx = m.rank(x);
        acc.add(r - rx, x.len() as u32 - rx);
    }
    acc.finish()
}

/// `χ(q) = (−1)^r T(1 − q, 0)`.
pub fn characteristic_from_tutte(t: &BivariatePoly, rank: u32) -> UnivariatePoly {
    let one_minus_q = UnivariatePoly::linear(1, -1);
    let mut out = UnivariatePoly::default();
    for ((a, b), c) in t.terms() {
        if b == 0 {
            out = &out + &one_minus_q.pow(a).scale(c);
        }
    }
    if rank % 2 == 1 {
        out = out.scale(&(-1).into());
    }
    out
}

pub fn characteristic(s: &Semimatroid) -> UnivariatePoly {
    characteristic_from_tutte(&tutte_sum(s), s.semimatroid_rank())
}

/// The characteristic polynomial of a matroid, all subsets central.
pub fn matroid_characteristic(m: &MatroidRank) -> UnivariatePoly {
    characteristic_from_tutte(&matroid_tutte(m), m.total_rank())
}
