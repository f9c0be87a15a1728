//! Weights, θ-symmetric orbit matrices, composition of orbits and a
//! finite-field flag oracle.

pub mod compose;
pub mod finite_field;
pub mod matrix;
pub mod oracle;
pub mod weight;

pub use compose::{compose_max, compose_set, split_off_elementary, ThetaElementary};
pub use finite_field::{enumerate_flags, intersection_dims, relpos, Fp, FqFlag, Subspace};
pub use matrix::{e_theta, e_theta_unit, enumerate_xi, leq_order, MatrixBlocks, OrbitMatrix};
pub use oracle::{budget_from_env, flag_count, oracle_compose_set, FlagOracle, RelTable};
pub use weight::{enum_weights, WeightVec};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrbitError {
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("invalid orbit matrix: {0}")]
    InvalidMatrix(String),
    #[error("index ({i}, {j}) out of range")]
    IndexOutOfRange { i: usize, j: usize },
    #[error("co(A) differs from ro(B)")]
    RowColMismatch,
    #[error("no unique maximum in M(A, B)")]
    NoUniqueMax,
    #[error("not of the form E^θ_(h,h+1)(v, a): {0}")]
    NotElementary(String),
    #[error("flags are incompatible")]
    IncompatibleFlags,
    #[error("{0} is not prime")]
    NotPrime(u8),
    #[error("{count} flags exceed the budget of {budget}")]
    TooLarge { count: u128, budget: usize },
}
