//! Exact verification of the polynomial representation of the quasi-split
//! twisted Yangian of type AIII_{2n}.
//!
//! The crate is layered bottom-up:
//!
//! * [`arith`]: Gaussian-rational polynomials, rational functions and series.
//! * [`symmetry`]: signed indices, τ-symmetric partitions, the type-C Weyl
//!   group and coset sums.
//! * [`orbit`]: weights, θ-symmetric orbit matrices, orbit composition and a
//!   finite-field flag oracle.
//! * [`rep`]: the representation space and its test bases.
//! * [`operators`]: the `H`, `B`, `Ĥ` and idempotent operators.
//! * [`verify`]: the relation engine and reports.
//! * [`cli`]: the `iyang` command line.

pub mod arith;
pub mod cli;
pub mod operators;
pub mod orbit;
pub mod rep;
pub mod symmetry;
pub mod verify;
