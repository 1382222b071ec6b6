//! Random instances for property testing.
//!
//! Semimatroids come from column matroids of small integer matrices with a
//! distinguished non-zero column `p`, so every instance is valid by
//! construction. Arrangements use small rational coefficients chosen to make
//! parallel and concurrent hyperplanes common.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::arrangement::{Arrangement, Hyperplane};
use crate::bridge::{semimatroid_from_pointed, PointedMatroid};
use crate::linalg::{ratio, rational, Rational};
use crate::matroid::MatroidRank;
use crate::semimatroid::Semimatroid;
use crate::subset::GroundSet;

/// Column matroid of a random `rows × (n + 1)` matrix with entries in
/// `-max_entry..=max_entry`; the last column is the point and is never zero.
pub fn random_pointed_matroid<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    rows: usize,
    max_entry: i64,
) -> PointedMatroid {
    let rows = rows.max(1);
    let max_entry = max_entry.max(1);
    let mut matrix: Vec<Vec<Rational>> = (0..rows)
        .map(|_| {
            (0..=n)
                .map(|_| rational(rng.gen_range(-max_entry..=max_entry)))
                .collect()
        })
        .collect();
    while matrix.iter().all(|row| row[n] == rational(0)) {
        for row in matrix.iter_mut() {
            row[n] = rational(rng.gen_range(-max_entry..=max_entry));
        }
    }
    let m = MatroidRank::column_matroid(GroundSet::new(n + 1), &matrix).expect("small ground set");
    PointedMatroid::new(m, n).expect("point column is non-zero")
}

/// A random semimatroid on `n` elements.
pub fn random_semimatroid<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Semimatroid {
    let rows = rng.gen_range(1..=n + 1);
    let max_entry = *[1, 1, 2, 3].choose(rng).expect("non-empty");
    semimatroid_from_pointed(&random_pointed_matroid(rng, n, rows, max_entry))
}

fn random_coefficient<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    match rng.gen_range(0..10) {
        0 => ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3)),
        1..=3 => rational(0),
        _ => rational(rng.gen_range(-2..=2)),
    }
}

/// A random arrangement of `n` hyperplanes in dimension `dim`.
pub fn random_arrangement<R: Rng + ?Sized>(rng: &mut R, dim: usize, n: usize) -> Arrangement {
    let dim = dim.max(1);
    let mut planes: Vec<Hyperplane> = Vec::with_capacity(n);
    while planes.len() < n {
        // Sometimes translate an existing plane to make parallels.
        if !planes.is_empty() && rng.gen_bool(0.2) {
            let base = planes[rng.gen_range(0..planes.len())].clone();
            let offset = rational(rng.gen_range(-2..=2));
            planes.push(Hyperplane::new(base.normal, offset));
            continue;
        }
        let normal: Vec<Rational> = (0..dim).map(|_| random_coefficient(rng)).collect();
        if normal.iter().all(|v| *v == rational(0)) {
            continue;
        }
        let offset = if rng.gen_bool(0.4) {
            rational(0)
        } else {
            random_coefficient(rng)
        };
        planes.push(Hyperplane::new(normal, offset));
    }
    Arrangement::new(dim, planes).expect("normals are non-zero and sized")
}
