//! Cached operator tables for one `(n, d)`, shared read-only across threads.

use super::auxiliary::{hhat, idempotent_iv};
use super::hseries::{block_vals, h_poly_coeffs};
use super::{b_prefactor, b_shift_constant, Mutation, OpSymbol, OperatorError};
use crate::arith::{ArithError, GaussRat, Poly, RatFunc, SeriesU};
use crate::orbit::WeightVec;
use crate::rep::{PElem, RepError};
use crate::symmetry::Shift;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// `B_{i,r}` restricted to one output component `v`, written over the
/// common denominator `D = Π_{s<t} (val s − val t)` of the block `[v]_i`:
///
/// `(B_{i,r} f)_v = pre · (Σ_j N_j · f(x_{τ_j^+[v]})) / D`.
#[derive(Clone, Debug)]
pub struct BKernel {
    pub input: WeightVec,
    pub terms: Vec<(Vec<(usize, bool)>, Poly)>,
    pub den: Poly,
    pub prefactor: GaussRat,
}

impl BKernel {
    fn build(i: usize, r: usize, v: &WeightVec, m: Mutation) -> Result<Option<Self>, OperatorError> {
        let n = v.n();
        let tau_i = 2 * n + 1 - i;
        let Some(input) = v.shifted(&[(i, -1), (i + 1, 1), (tau_i, 1), (tau_i + 1, -1)]) else {
            return Ok(None);
        };
        let vals = block_vals(v, i);
        let (lo, _) = v.block(i);
        let part = v.standard_partition();
        let c = b_shift_constant(n, i, m);
        let h = Poly::hbar();
        let k = vals.len();
        let vandermonde = |skip: Option<usize>| {
            let mut p = Poly::one();
            for s in 0..k {
                for t in s + 1..k {
                    if Some(s) != skip && Some(t) != skip {
                        p = &p * &(&vals[s] - &vals[t]);
                    }
                }
            }
            p
        };
        let mut terms = Vec::with_capacity(k);
        for (jj, xj) in vals.iter().enumerate() {
            let shifted = part.tau_shift(lo + jj as u32, Shift::Up)?;
            debug_assert_eq!(shifted.shape(), input.entries());
            let mut num = vandermonde(Some(jj));
            if (k - 1 - jj) % 2 == 1 {
                num = -num;
            }
            for (s, xs) in vals.iter().enumerate() {
                if s != jj {
                    num = &num * &(&(xs - xj) + &h);
                }
            }
            num = &num * &(&-xj - &c).pow(r as u32);
            terms.push((shifted.slot_map()?, num));
        }
        Ok(Some(BKernel { input, terms, den: vandermonde(None), prefactor: b_prefactor(m) }))
    }

    /// Applies the kernel to `f` in component `self.input`.
    pub fn apply(&self, f: &Poly) -> Result<Poly, OperatorError> {
        let mut acc = Poly::zero();
        for (map, num) in &self.terms {
            acc = &acc + &(num * &f.signed_permute(map));
        }
        let q = acc.exact_div(&self.den).map_err(|e| match e {
            ArithError::NotDivisible => OperatorError::DenominatorNotCleared(format!("({acc}) / ({})", self.den)),
            other => OperatorError::Arith(other),
        })?;
        Ok(q.scale(&self.prefactor))
    }
}

type HKey = (usize, usize, WeightVec);
type BKey = (usize, usize, WeightVec);

/// Operator tables for fixed `(n, d)` and a fixed constant mutation.
pub struct OpContext {
    n: usize,
    d: u32,
    mutation: Mutation,
    check: bool,
    h: RwLock<HashMap<HKey, Arc<Poly>>>,
    b: RwLock<HashMap<BKey, Option<Arc<BKernel>>>>,
}

impl OpContext {
    pub fn new(n: usize, d: u32) -> Self {
        OpContext::with_mutation(n, d, Mutation::None)
    }

    pub fn with_mutation(n: usize, d: u32, mutation: Mutation) -> Self {
        OpContext { n, d, mutation, check: true, h: RwLock::new(HashMap::new()), b: RwLock::new(HashMap::new()) }
    }

    /// Turns the output invariance assertion on or off.
    pub fn set_checks(&mut self, on: bool) {
        self.check = on;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn mutation(&self) -> Mutation {
        self.mutation
    }

    fn check_index(&self, i: usize) -> Result<(), OperatorError> {
        if i == 0 || i > 2 * self.n {
            return Err(OperatorError::InvalidIndex(format!("i = {i} outside [1, {}]", 2 * self.n)));
        }
        Ok(())
    }

    fn check_elem(&self, e: &PElem) -> Result<(), OperatorError> {
        for (v, _) in e.components() {
            if v.n() != self.n || v.d() != self.d {
                return Err(OperatorError::Rep(RepError::IncompatibleComponents));
            }
        }
        Ok(())
    }

    /// The scalar `H_{i,r}` on component `v`.
    pub fn h_scalar(&self, i: usize, r: usize, v: &WeightVec) -> Result<Arc<Poly>, OperatorError> {
        self.check_index(i)?;
        let key = (i, r, v.clone());
        if let Some(p) = self.h.read().expect("cache lock").get(&key) {
            return Ok(p.clone());
        }
        let coeffs = h_poly_coeffs(i, v, r + 1, self.mutation);
        let p = coeffs[r + 1]
            .exact_div(&Poly::hbar())
            .map_err(|_| OperatorError::NotDivisible(coeffs[r + 1].to_string()))?;
        let p = Arc::new(p);
        self.h.write().expect("cache lock").insert(key, p.clone());
        Ok(p)
    }

    /// `H_{i,v}(u)` to order `k`, with this context's constants.
    pub fn h_series(&self, i: usize, v: &WeightVec, k: usize) -> SeriesU {
        SeriesU::from_coeffs(h_poly_coeffs(i, v, k, self.mutation).into_iter().map(RatFunc::from_poly).collect())
    }

    /// `B_{i,r}` into component `v`, or `None` when no input weight exists.
    pub fn b_kernel(&self, i: usize, r: usize, v: &WeightVec) -> Result<Option<Arc<BKernel>>, OperatorError> {
        self.check_index(i)?;
        let key = (i, r, v.clone());
        if let Some(k) = self.b.read().expect("cache lock").get(&key) {
            return Ok(k.clone());
        }
        let k = BKernel::build(i, r, v, self.mutation)?.map(Arc::new);
        self.b.write().expect("cache lock").insert(key, k.clone());
        Ok(k)
    }

    pub fn apply_h(&self, i: usize, r: usize, e: &PElem) -> Result<PElem, OperatorError> {
        self.check_elem(e)?;
        let mut out = PElem::zero();
        for (v, f) in e.components() {
            out.add_component(v, &(f * &*self.h_scalar(i, r, v)?));
        }
        self.finish(out)
    }

    pub fn apply_b(&self, i: usize, r: usize, e: &PElem) -> Result<PElem, OperatorError> {
        self.check_elem(e)?;
        self.check_index(i)?;
        let tau_i = 2 * self.n + 1 - i;
        let mut out = PElem::zero();
        for (u, f) in e.components() {
            let Some(v) = u.shifted(&[(i, 1), (i + 1, -1), (tau_i, -1), (tau_i + 1, 1)]) else {
                continue;
            };
            if let Some(k) = self.b_kernel(i, r, &v)? {
                out.add_component(&v, &k.apply(f)?);
            }
        }
        self.finish(out)
    }

    /// Dispatches on the operator name.
    pub fn apply(&self, op: &OpSymbol, e: &PElem) -> Result<PElem, OperatorError> {
        match op {
            OpSymbol::H(i, r) => self.apply_h(*i, *r, e),
            OpSymbol::B(i, r) => self.apply_b(*i, *r, e),
            OpSymbol::Hhat(i, k) => {
                if *i == 0 || *i > self.n {
                    return Err(OperatorError::InvalidIndex(format!("Hhat needs 1 ≤ i ≤ n, got {i}")));
                }
                let mut out = PElem::zero();
                for (v, f) in e.components() {
                    out.add_component(v, &(f * &hhat(*i, *k, v)?));
                }
                self.finish(out)
            }
            OpSymbol::Iv(entries) => {
                let v = WeightVec::new(self.n, self.d, entries.clone()).map_err(RepError::from)?;
                idempotent_iv(self, &v, e)
            }
        }
    }

    fn finish(&self, out: PElem) -> Result<PElem, OperatorError> {
        if self.check {
            out.check_invariance()?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;

    fn w(s: &str) -> WeightVec {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn h_eigenvalues() {
        let ctx = OpContext::new(1, 1);
        let e = PElem::single(w("1,0,1"), Poly::one());
        assert_eq!(ctx.apply_h(1, 0, &e).unwrap(), e.scale(&GaussRat::real(Rational::new(3, 4))));
        let e = PElem::single(w("0,2,0"), Poly::one());
        assert_eq!(ctx.apply_h(1, 0, &e).unwrap(), e.scale(&GaussRat::real(Rational::new(-9, 4))));
    }

    #[test]
    fn b_examples() {
        let ctx = OpContext::new(1, 1);
        let got = ctx.apply_b(1, 0, &PElem::single(w("0,2,0"), Poly::one())).unwrap();
        assert_eq!(got, PElem::single(w("1,0,1"), Poly::constant(GaussRat::i())));
        let got = ctx.apply_b(2, 0, &PElem::single(w("1,0,1"), p("x1"))).unwrap();
        assert_eq!(got, PElem::single(w("0,2,0"), p("i*h")));
        assert!(ctx.apply_b(1, 0, &PElem::single(w("1,0,1"), Poly::one())).unwrap().is_zero());
    }

    #[test]
    fn bad_index() {
        let ctx = OpContext::new(1, 1);
        assert!(matches!(
            ctx.apply_b(3, 0, &PElem::single(w("1,0,1"), Poly::one())),
            Err(OperatorError::InvalidIndex(_))
        ));
    }
}
