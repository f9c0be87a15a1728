//! Noncommutative polynomials in the generators, evaluated on `P`.

use crate::arith::{GaussRat, Poly, Rational};
use crate::operators::{OpContext, OpSymbol, OperatorError};
use crate::rep::PElem;
use std::collections::{BTreeMap, HashMap};

/// `Σ c_w · w` over words `w = g_1 g_2 … g_k`, acting as `g_1 ∘ … ∘ g_k`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OpExpr {
    terms: BTreeMap<Vec<OpSymbol>, Poly>,
}

impl OpExpr {
    pub fn zero() -> Self {
        OpExpr::default()
    }

    pub fn identity() -> Self {
        OpExpr::word(Vec::new())
    }

    pub fn word(w: Vec<OpSymbol>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, Poly::one());
        OpExpr { terms }
    }

    pub fn gen(g: OpSymbol) -> Self {
        OpExpr::word(vec![g])
    }

    pub fn h(i: usize, r: usize) -> Self {
        OpExpr::gen(OpSymbol::H(i, r))
    }

    pub fn b(i: usize, r: usize) -> Self {
        OpExpr::gen(OpSymbol::B(i, r))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<OpSymbol>, &Poly)> {
        self.terms.iter()
    }

    fn add_term(&mut self, w: Vec<OpSymbol>, c: Poly) {
        let sum = match self.terms.remove(&w) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(w, sum);
        }
    }

    pub fn add(&self, other: &OpExpr) -> OpExpr {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &OpExpr) -> OpExpr {
        self.add(&other.scale_poly(&Poly::int(-1)))
    }

    pub fn scale_poly(&self, c: &Poly) -> OpExpr {
        let mut out = OpExpr::zero();
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a * c);
        }
        out
    }

    pub fn scale(&self, r: Rational) -> OpExpr {
        self.scale_poly(&Poly::rational(r))
    }

    /// Composition `self ∘ other`.
    pub fn then(&self, other: &OpExpr) -> OpExpr {
        let mut out = OpExpr::zero();
        for (w1, a) in &self.terms {
            for (w2, b) in &other.terms {
                let mut w = w1.clone();
                w.extend(w2.iter().cloned());
                out.add_term(w, a * b);
            }
        }
        out
    }

    /// `[a, b] = ab − ba`.
    pub fn comm(a: &OpExpr, b: &OpExpr) -> OpExpr {
        a.then(b).sub(&b.then(a))
    }

    /// `{a, b} = ab + ba`.
    pub fn anti(a: &OpExpr, b: &OpExpr) -> OpExpr {
        a.then(b).add(&b.then(a))
    }

    /// Longest word and largest mode, for sizing test runs.
    pub fn max_mode(&self) -> usize {
        self.terms
            .keys()
            .flatten()
            .map(|g| match g {
                OpSymbol::H(_, r) | OpSymbol::B(_, r) | OpSymbol::Hhat(_, r) => *r,
                OpSymbol::Iv(_) => 0,
            })
            .max()
            .unwrap_or(0)
    }
}

/// Evaluates words on a fixed vector, sharing common suffixes.
pub struct Evaluator<'a> {
    ctx: &'a OpContext,
    base: PElem,
    memo: HashMap<Vec<OpSymbol>, PElem>,
}

impl<'a> Evaluator<'a> {
    pub fn new(ctx: &'a OpContext, base: PElem) -> Self {
        Evaluator { ctx, base, memo: HashMap::new() }
    }

    pub fn word(&mut self, w: &[OpSymbol]) -> Result<PElem, OperatorError> {
        if w.is_empty() {
            return Ok(self.base.clone());
        }
        if let Some(e) = self.memo.get(w) {
            return Ok(e.clone());
        }
        let inner = self.word(&w[1..])?;
        let out = if inner.is_zero() { inner } else { self.ctx.apply(&w[0], &inner)? };
        self.memo.insert(w.to_vec(), out.clone());
        Ok(out)
    }

    pub fn expr(&mut self, x: &OpExpr) -> Result<PElem, OperatorError> {
        let mut out = PElem::zero();
        for (w, c) in x.terms() {
            let e = self.word(w)?;
            out = out.add(&if c.as_constant() == Some(GaussRat::one()) { e } else { e.scale_poly(c) });
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutator_algebra() {
        let (a, b) = (OpExpr::h(1, 0), OpExpr::b(1, 0));
        assert!(OpExpr::comm(&a, &a).is_zero());
        let c = OpExpr::comm(&a, &b).add(&OpExpr::comm(&b, &a));
        assert!(c.is_zero());
        assert_eq!(OpExpr::anti(&a, &b).terms().count(), 2);
    }
}
