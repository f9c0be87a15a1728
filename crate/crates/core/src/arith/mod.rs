//! Exact arithmetic: rationals, Gaussian rationals, sparse polynomials,
//! rational functions with linear denominators and truncated series.

pub mod gauss;
pub mod partial_fraction;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod series;

pub use gauss::GaussRat;
pub use partial_fraction::{truncate_negative, PartialFractions, RationalInZ};
pub use poly::{Monomial, Poly, MAX_VARS};
pub use ratfunc::{LinFactor, RatFunc};
pub use rational::Rational;
pub use series::{series_reciprocal_linear, SeriesU};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("polynomial is not exactly divisible")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("expected a polynomial of degree one, got `{0}`")]
    NotLinear(String),
    #[error("denominator did not cancel: {0}")]
    DenominatorNotCleared(String),
    #[error("series has the wrong constant term")]
    BadConstantTerm,
    #[error("repeated pole at z = {0}")]
    RepeatedPole(String),
    #[error("parse error: {0}")]
    Parse(String),
}
