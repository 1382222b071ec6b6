//! Exact Gaussian elimination over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Rank of a matrix given as rows. Rows may be ragged only if empty.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    row_reduce(&mut m)
}

/// Reduce `m` in place to row echelon form; returns the rank.
pub fn row_reduce(m: &mut [Vec<Rational>]) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == m.len() {
            break;
        }
        let Some(p) = (pivot_row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, p);
        let inv = Rational::one() / &m[pivot_row][col];
        for v in &mut m[pivot_row][col..] {
            *v *= &inv;
        }
        let pivot = m[pivot_row].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, p) in row[col..].iter_mut().zip(&pivot[col..]) {
                    *v -= &factor * p;
                }
            }
        }
        pivot_row += 1;
    }
    pivot_row
}
