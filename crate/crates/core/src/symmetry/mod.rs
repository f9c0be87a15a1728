//! Signed indices, τ-symmetric partitions, the type-C Weyl group action
//! and coset sums.

pub mod parabolic;
pub mod partition;
pub mod weyl;

pub use parabolic::{coset_reps, coset_sum, CosetSpace, Interval, ParabolicSubgroup};
pub use partition::{substitute, Shift, SignedIndex, SymPartition};
pub use weyl::{weyl_act, WeylElem};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymmetryError {
    #[error("listing of {0} violates the mirror property")]
    MirrorViolation(String),
    #[error("cannot shift index {index} out of block {block}")]
    ShiftOutOfRange { index: u32, block: usize },
    #[error("shape mismatch: expected {expected:?}, found {found:?}")]
    ShapeMismatch { expected: Vec<u32>, found: Vec<u32> },
    #[error("not a subgroup")]
    NotASubgroup,
    #[error("function is not invariant under the subgroup")]
    NotInvariantUnderW1,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),
}
