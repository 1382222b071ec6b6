//! Semimatroids: the combinatorics of central sets of affine hyperplane
//! arrangements.
//!
//! A [`Semimatroid`] is a ground set with a downward-closed family of
//! central sets and a rank on them. This crate validates the axioms,
//! computes closures and flats, moves between a semimatroid and its matroid
//! counterparts ([`bridge`]), builds semimatroids from rational
//! [`arrangement`]s, checks the geometric-semilattice structure of the flats
//! ([`semilattice`]), and computes the Tutte polynomial by several
//! independent engines ([`tutte`], [`activity`]).

pub mod activity;
pub mod arrangement;
pub mod bridge;
mod error;
pub mod format;
pub mod generate;
pub mod linalg;
pub mod matroid;
pub mod poly;
pub mod semilattice;
pub mod semimatroid;
pub mod subset;
pub mod tutte;

pub use arrangement::{Arrangement, Hyperplane};
pub use error::{Error, Result};
pub use linalg::Rational;
pub use matroid::MatroidRank;
pub use poly::{BivariatePoly, RationalBivariatePoly, UnivariatePoly};
pub use semimatroid::{Limits, Semimatroid, ValidationReport};
pub use subset::{GroundSet, Subset};
