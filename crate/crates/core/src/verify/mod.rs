//! Exact verification of the defining relations on the representation.
//!
//! Each relation instance is a pair of operator expressions; both sides are
//! applied to every orbit-sum basis element of every component up to a
//! degree bound and compared exactly.

mod engine;
mod expr;
mod relations;
mod report;

pub use engine::{
    run, test_vectors, threads_from_env, verify_all, verify_relation, with_pool, SuiteOptions, TestVector,
};
pub use expr::{Evaluator, OpExpr};
pub use relations::{build, enumerate, Check, RelTag, Relation, RelationId};
pub use report::{RelationReport, Status, SuiteParams, SuiteReport, Summary, Witness};

use crate::operators::OperatorError;
use crate::rep::RepError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    Rep(#[from] RepError),
}
