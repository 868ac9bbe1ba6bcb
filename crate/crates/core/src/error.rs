use thiserror::Error;

use crate::rootsys::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {rank} is below the minimum for family {family}")]
    InvalidRank { family: Family, rank: usize },

    #[error("rank {rank} of family {family} has more positive roots than a root set can hold")]
    TooLarge { family: Family, rank: usize },

    #[error("position ({row}, {col}) lies outside the root diagram")]
    OutOfShape { row: usize, col: usize },

    #[error("operation not available for family {0}")]
    WrongType(Family),

    #[error("{0:?} is not a root")]
    NotARoot(Vec<i64>),

    #[error("{0:?} is not a positive root")]
    NotPositiveRoot(Vec<i64>),

    #[error("the root set is not an abelian ideal")]
    NotAbelian,

    #[error("simple root {0} is not long")]
    NotLongSimple(usize),

    #[error("simple root index {0} out of range")]
    BadIndex(usize),

    #[error("the ideal does not belong to any I_ab(alpha)")]
    NoApex,

    #[error("mark of simple root {index} is {mark}, expected 1")]
    MarkNotOne { index: usize, mark: i64 },

    #[error("root {0:?} is not in the maximal abelian ideal M")]
    NotInM(Vec<i64>),

    #[error("graph is not anti-standard: {0}")]
    NotAntiStandard(AntiStandardViolation),

    #[error("bad spec token `{0}`")]
    BadSpec(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

/// Which defining property of an anti-standard graph failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AntiStandardViolation {
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("edge ({0}, {1}) is a loop, repeated, or leaves the vertex set")]
    BadEdge(usize, usize),
    #[error("vertex {0} is isolated")]
    Isolated(usize),
    #[error("vertex {0} is both a source and a target")]
    SourceAndTarget(usize),
    #[error("edges ({0}, {1}) and ({2}, {3}) cross")]
    Crossing(usize, usize, usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
