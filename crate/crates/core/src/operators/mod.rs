//! The `H`, `B`, `Ĥ` and idempotent operators on `P`.

mod auxiliary;
mod bpaths;
mod context;
mod hseries;

pub use auxiliary::{coset_constant, expected_hhat_top, hhat, hhat_matrix, hhat_matrix_det, idempotent_iv, iv_scalar};
pub use bpaths::{apply_b_pushforward, apply_b_series, phi_product, SeriesElem};
pub use context::{BKernel, OpContext};
pub use hseries::{
    h_negative_part, h_rational_in_z, h_series, poly_series_mul, truncation_identity_holds, uh_negative_part,
};

use crate::arith::{ArithError, GaussRat, Poly, Rational};
use crate::rep::RepError;
use crate::symmetry::SymmetryError;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OperatorError {
    #[error("denominator did not clear: {0}")]
    DenominatorNotCleared(String),
    #[error("coefficient not divisible by ħ: {0}")]
    NotDivisible(String),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error("expected a constant, got {0}")]
    NotAConstant(String),
    #[error("invalid operator index: {0}")]
    InvalidIndex(String),
    #[error("cannot parse operator `{0}`")]
    Parse(String),
}

/// Single-token changes of the operator constants, for mutation tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Mutation {
    #[default]
    None,
    /// `√−1 ↦ 1` in `B`.
    DropSqrtMinusOne,
    /// `+ℏ/4 ↦ −ℏ/4` in the shift of `B`.
    FlipQuarterInB,
    /// `1 − (δ_{in} − δ_{i,n+1})ℏ/(4u) ↦ 1 + …` in `H`.
    FlipHPrefactor,
}

impl Mutation {
    pub const ALL: [Mutation; 3] = [Mutation::DropSqrtMinusOne, Mutation::FlipQuarterInB, Mutation::FlipHPrefactor];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::None => "none",
            Mutation::DropSqrtMinusOne => "drop-sqrt-minus-one",
            Mutation::FlipQuarterInB => "flip-quarter-in-b",
            Mutation::FlipHPrefactor => "flip-h-prefactor",
        }
    }
}

/// Cartan matrix of type `A_{2n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CartanA2n {
    pub n: usize,
}

impl CartanA2n {
    pub fn new(n: usize) -> Self {
        CartanA2n { n }
    }

    pub fn size(&self) -> usize {
        2 * self.n
    }

    /// `τi = 2n + 1 − i`.
    pub fn tau(&self, i: usize) -> usize {
        2 * self.n + 1 - i
    }

    pub fn c(&self, i: usize, j: usize) -> i64 {
        assert!((1..=self.size()).contains(&i) && (1..=self.size()).contains(&j));
        if i == j {
            2
        } else if i.abs_diff(j) == 1 {
            -1
        } else {
            0
        }
    }
}

/// `c_i = (n−i)/2·ℏ + ℏ/4`.
pub fn shift_constant(n: usize, i: usize) -> Poly {
    Poly::hbar_times(Rational::new(n as i64 - i as i64, 2) + Rational::new(1, 4))
}

/// `c_i` as used in `B`, with the quarter optionally flipped.
pub fn b_shift_constant(n: usize, i: usize, m: Mutation) -> Poly {
    let q = if m == Mutation::FlipQuarterInB { Rational::new(-1, 4) } else { Rational::new(1, 4) };
    Poly::hbar_times(Rational::new(n as i64 - i as i64, 2) + q)
}

/// The scalar in front of `B`.
pub fn b_prefactor(m: Mutation) -> GaussRat {
    if m == Mutation::DropSqrtMinusOne {
        GaussRat::one()
    } else {
        GaussRat::i()
    }
}

/// An operator name: `H(i,r)`, `B(i,r)`, `Hhat(i,k)` or `Iv(v)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpSymbol {
    H(usize, usize),
    B(usize, usize),
    Hhat(usize, usize),
    Iv(Vec<u32>),
}

impl fmt::Display for OpSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpSymbol::H(i, r) => write!(f, "H({i},{r})"),
            OpSymbol::B(i, r) => write!(f, "B({i},{r})"),
            OpSymbol::Hhat(i, k) => write!(f, "Hhat({i},{k})"),
            OpSymbol::Iv(v) => {
                let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "Iv({})", s.join(","))
            }
        }
    }
}

impl FromStr for OpSymbol {
    type Err = OperatorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || OperatorError::Parse(s.to_string());
        let s = s.trim();
        let open = s.find('(').ok_or_else(bad)?;
        let inner = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let args: Result<Vec<usize>, _> = inner.split(',').map(|t| t.trim().parse::<usize>()).collect();
        let args = args.map_err(|_| bad())?;
        match (&s[..open], args.as_slice()) {
            ("H", [i, r]) => Ok(OpSymbol::H(*i, *r)),
            ("B", [i, r]) => Ok(OpSymbol::B(*i, *r)),
            ("Hhat", [i, k]) => Ok(OpSymbol::Hhat(*i, *k)),
            ("Iv", v) if !v.is_empty() => Ok(OpSymbol::Iv(v.iter().map(|&x| x as u32).collect())),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_and_shift() {
        let c = CartanA2n::new(1);
        assert_eq!((c.c(1, 1), c.c(1, 2), c.tau(1)), (2, -1, 2));
        assert_eq!(shift_constant(1, 1), "1/4*h".parse().unwrap());
        assert_eq!(shift_constant(1, 2), "-1/4*h".parse().unwrap());
        assert_eq!(b_shift_constant(1, 1, Mutation::FlipQuarterInB), "-1/4*h".parse().unwrap());
    }

    #[test]
    fn op_symbol_roundtrip() {
        for s in ["H(1,0)", "B(2,3)", "Hhat(1,2)", "Iv(1,0,1)"] {
            assert_eq!(s.parse::<OpSymbol>().unwrap().to_string(), s);
        }
        assert!("B(1)".parse::<OpSymbol>().is_err());
    }
}
