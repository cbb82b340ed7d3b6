use thiserror::Error;

use crate::weight::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("reflection closure exceeded {bound} positive roots; Cartan matrix is not of finite type")]
    NonFiniteType { bound: usize },
    #[error("invalid parabolic: {0}")]
    InvalidParabolic(String),
    #[error("weight {0} is not p-dominant for this parabolic")]
    NotPDominant(Weight),
    #[error("weight {0} is not g-dominant")]
    NotGDominant(Weight),
    #[error("Levi factor of semisimple rank {0} is not supported (rank <= 1 only)")]
    UnsupportedLevi(usize),
    #[error("weight multiset is not the character of a representation (stuck at {0})")]
    NotARepresentation(Weight),
    #[error("exterior power {k} out of range for a representation of rank {rank}")]
    OutOfRange { k: usize, rank: u64 },
    #[error("bundle contains the trivial summand (0,0)")]
    TrivialSummand,
    #[error("summand {0} is not g-dominant, so the bundle is not globally generated")]
    NotGloballyGenerated(Weight),
    #[error("determinant {found} differs from the anticanonical weight {expected}")]
    WrongDeterminant { found: Weight, expected: Weight },
    #[error("rank {rank} exceeds dim G/P - 2 = {bound}")]
    RankTooLarge { rank: u64, bound: u64 },
    #[error("{0}: a rank-one Picard group is required (maximal parabolic)")]
    NotMaximalParabolic(String),
    #[error("Hilbert samples do not lie on an odd two-term cubic: {0}")]
    FitInconsistent(String),
    #[error("Hodge numbers are not fully determined")]
    UndeterminedHodge,
    #[error("no assignment of differentials is consistent with the constraints: {0}")]
    Inconsistent(String),
    #[error("dimension {dim} out of range {lo}..={hi}")]
    DimensionOutOfRange { dim: usize, lo: usize, hi: usize },
    #[error("uniqueness fails on {parabolic}: {count} non-split candidates")]
    TheoremViolated { parabolic: String, count: usize, candidates: Vec<String> },
    #[error("reference rows not produced by the enumeration: {0:?}")]
    MissingReferenceRow(Vec<String>),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
