use thiserror::Error;

use crate::semimatroid::ValidationReport;
use crate::subset::Subset;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("set {0:?} is not central")]
    NotCentral(Subset),
    #[error("singleton {{{0}}} is not central")]
    NotCentralSingleton(usize),
    #[error("singleton {{{0}}} is central")]
    CentralSingleton(usize),
    #[error("element {0} is outside the ground set")]
    NoSuchElement(usize),
    #[error("the dual is undefined: every subset of the ground set is central")]
    EmptyDual,
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("semimatroid axioms violated:\n{0}")]
    Validation(ValidationReport),
    #[error("rank table is not a matroid: {0}")]
    NotAMatroid(String),
    #[error("family is not a modular ideal: {0}")]
    NotAModularIdeal(String),
    #[error("matroid is not an elementary preimage")]
    NotAPreimage,
    #[error("ground sets differ ({0} vs {1} elements)")]
    GroundSetMismatch(usize, usize),
    #[error("the distinguished point is a loop")]
    LoopPoint,
    #[error("subset {0:?} of the arrangement is not central")]
    NotCentralSubset(Subset),
    #[error("hyperplane {0} has a zero normal vector")]
    ZeroNormal(usize),
    #[error("hyperplane {index} has {found} coordinates, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("division is not exact; remainder {0}")]
    InexactDivision(String),
    #[error("the semimatroid has no central singletons")]
    TrivialSemimatroid,
    #[error("weights a and b must be nonzero")]
    ZeroWeight,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("{0:?} is not a basis")]
    NotABasis(Subset),
    #[error("no basis contains {0:?}")]
    NoBasisContains(Subset),
    #[error("poset is not a geometric semilattice")]
    NotGeometricSemilattice,
    #[error("element {0} is not an atom")]
    NotAnAtom(usize),
    #[error("relation is not a partial order: {0}")]
    NotAPoset(String),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

impl Error {
    pub fn parse(line: usize, reason: impl Into<String>) -> Self {
        Error::Parse {
            line,
            reason: reason.into(),
        }
    }
}
