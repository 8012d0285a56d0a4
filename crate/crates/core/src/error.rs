use thiserror::Error;

use crate::partition::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error: {0}")]
    Parse(String),

    #[error("partition {partition} cannot be padded to n = {n}: need n >= {min}")]
    PaddingRange {
        partition: Partition,
        n: usize,
        min: usize,
    },

    #[error("class functions live on different groups: S_{left} vs S_{right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("partitions have different sizes: {sizes:?}")]
    SizeMismatch { sizes: Vec<usize> },

    #[error("not a character: multiplicity of V{partition} is {multiplicity}")]
    NotACharacter {
        partition: Partition,
        multiplicity: String,
    },

    #[error("the empty partition is not allowed here")]
    EmptyPartition,

    #[error("{what} out of range: {value} > {limit}")]
    Range {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("not an FI#-module: residual at n = {n} has multiplicity {multiplicity} for V{partition}")]
    NotFiSharp {
        n: usize,
        partition: Partition,
        multiplicity: String,
    },

    #[error("peel-off bound {bound} exceeded: residual at n = {n} is nonzero")]
    BoundExceeded { bound: usize, n: usize },

    #[error("internal invariant violated: stability not observed by n_max = {n_max} (onset {observed}, closed-form bound {bound})")]
    WindowTooSmall {
        bound: usize,
        observed: usize,
        n_max: usize,
    },

    #[error("weight violation: V{padded} occurs at n = {n}, outside weight {d}")]
    WeightViolation {
        padded: Partition,
        n: usize,
        d: usize,
    },

    #[error("spanning set is not S_n-stable (vector {vector} leaves the subspace)")]
    Instability { vector: usize },

    #[error("budget exceeded: {count} basis elements, budget {budget}")]
    BudgetExceeded { count: usize, budget: usize },

    #[error("unsupported grade {grade} (maximum {max})")]
    UnsupportedGrade { grade: usize, max: usize },

    #[error("multiplicity overflow")]
    Overflow,

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable name, used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::PaddingRange { .. } => "padding-range",
            Error::DegreeMismatch { .. } => "degree-mismatch",
            Error::SizeMismatch { .. } => "size-mismatch",
            Error::NotACharacter { .. } => "not-a-character",
            Error::EmptyPartition => "empty-partition",
            Error::Range { .. } => "range",
            Error::NotFiSharp { .. } => "not-fi-sharp",
            Error::BoundExceeded { .. } => "bound-exceeded",
            Error::WindowTooSmall { .. } => "window-too-small",
            Error::WeightViolation { .. } => "weight-violation",
            Error::Instability { .. } => "instability",
            Error::BudgetExceeded { .. } => "budget-exceeded",
            Error::UnsupportedGrade { .. } => "unsupported-grade",
            Error::Overflow => "overflow",
            Error::Internal(_) => "internal-invariant",
        }
    }
}
