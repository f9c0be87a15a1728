//! The representation space `P = ⊕_v R^{[v]^c}[ℏ]`.
//!
//! A component polynomial is written in slot variables `y_1..y_d`, stored as
//! `x_1..x_d` of the shared variable pool.

mod basis;

pub use basis::{basis_of_component, orbit_sum_basis};

use crate::arith::{GaussRat, Poly};
use crate::orbit::{OrbitError, WeightVec};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("component {component} is not invariant under {generator}")]
    InvarianceViolation { component: String, generator: String },
    #[error("components of different (n, d) mixed")]
    IncompatibleComponents,
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error("bad element fixture: {0}")]
    Fixture(String),
}

/// `f ∈ R^{[v]^c}[ℏ]` sitting in component `v`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleElem {
    component: WeightVec,
    f: Poly,
}

impl ModuleElem {
    pub fn new(component: WeightVec, f: Poly) -> Result<Self, RepError> {
        let e = ModuleElem { component, f };
        assert_invariance(&e)?;
        Ok(e)
    }

    pub fn component(&self) -> &WeightVec {
        &self.component
    }

    pub fn poly(&self) -> &Poly {
        &self.f
    }

    pub fn to_pelem(&self) -> PElem {
        PElem::single(self.component.clone(), self.f.clone())
    }
}

/// Passes iff `f` is fixed by every generator of `W_{[v]^c}`.
pub fn assert_invariance(e: &ModuleElem) -> Result<(), RepError> {
    match e.component.parabolic().first_violation(&e.f) {
        None => Ok(()),
        Some(g) => Err(RepError::InvarianceViolation { component: e.component.to_string(), generator: g.to_string() }),
    }
}

/// An element of `P` with finitely many nonzero components.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PElem {
    comps: BTreeMap<WeightVec, Poly>,
}

impl PElem {
    pub fn zero() -> Self {
        PElem::default()
    }

    pub fn single(v: WeightVec, f: Poly) -> Self {
        let mut e = PElem::zero();
        e.add_component(&v, &f);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (&WeightVec, &Poly)> {
        self.comps.iter()
    }

    pub fn component(&self, v: &WeightVec) -> Poly {
        self.comps.get(v).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    /// Adds `f` to component `v`. Panics on mixed `(n, d)`.
    pub fn add_component(&mut self, v: &WeightVec, f: &Poly) {
        if f.is_zero() {
            return;
        }
        if let Some((w, _)) = self.comps.iter().next() {
            assert!(w.n() == v.n() && w.d() == v.d(), "components of different (n, d) mixed");
        }
        let sum = match self.comps.get(v) {
            Some(g) => g + f,
            None => f.clone(),
        };
        if sum.is_zero() {
            self.comps.remove(v);
        } else {
            self.comps.insert(v.clone(), sum);
        }
    }

    pub fn add(&self, other: &PElem) -> PElem {
        let mut out = self.clone();
        for (v, f) in &other.comps {
            out.add_component(v, f);
        }
        out
    }

    pub fn sub(&self, other: &PElem) -> PElem {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PElem {
        PElem { comps: self.comps.iter().map(|(v, f)| (v.clone(), -f)).collect() }
    }

    /// Multiplication by an `ℏ`-polynomial (or any polynomial scalar).
    pub fn scale_poly(&self, c: &Poly) -> PElem {
        let mut out = PElem::zero();
        for (v, f) in &self.comps {
            out.add_component(v, &(f * c));
        }
        out
    }

    pub fn scale(&self, c: &GaussRat) -> PElem {
        let mut out = PElem::zero();
        for (v, f) in &self.comps {
            out.add_component(v, &f.scale(c));
        }
        out
    }

    /// First component that fails invariance.
    pub fn check_invariance(&self) -> Result<(), RepError> {
        for (v, f) in &self.comps {
            assert_invariance(&ModuleElem { component: v.clone(), f: f.clone() })?;
        }
        Ok(())
    }
}

impl fmt::Display for PElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.comps.iter().map(|(v, p)| format!("[{v}] {p}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for PElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// JSON fixture `{"component": [...], "poly": "..."}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ElemFixture {
    pub component: Vec<u32>,
    pub poly: String,
}

impl ElemFixture {
    pub fn from_elem(e: &ModuleElem) -> Self {
        ElemFixture { component: e.component.entries().to_vec(), poly: e.f.to_string() }
    }

    pub fn to_elem(&self) -> Result<ModuleElem, RepError> {
        let v = WeightVec::from_entries(self.component.clone())?;
        let f: Poly = self.poly.parse().map_err(|e| RepError::Fixture(format!("{e}")))?;
        if f.x_len() > v.d() as usize {
            return Err(RepError::Fixture(format!("`{}` uses more than {} variables", self.poly, v.d())));
        }
        ModuleElem::new(v, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> WeightVec {
        s.parse().unwrap()
    }

    #[test]
    fn invariance_examples() {
        assert!(ModuleElem::new(w("0,2,0"), "x1^2".parse().unwrap()).is_ok());
        let err = ModuleElem::new(w("0,2,0"), "x1".parse().unwrap()).unwrap_err();
        assert_eq!(err, RepError::InvarianceViolation { component: "0,2,0".into(), generator: "[-1]".into() });
    }

    #[test]
    fn pelem_arithmetic() {
        let v = w("1,0,1");
        let a = PElem::single(v.clone(), "x1 + h".parse().unwrap());
        let b = PElem::single(v.clone(), "-x1".parse().unwrap());
        assert_eq!(a.add(&b), PElem::single(v.clone(), Poly::hbar()));
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.scale_poly(&Poly::hbar()).component(&v), "x1*h + h^2".parse().unwrap());
    }

    #[test]
    fn fixture_roundtrip() {
        let e = ModuleElem::new(w("1,2,1"), "x1*x2^2".parse().unwrap()).unwrap();
        let fx = ElemFixture::from_elem(&e);
        let json = serde_json::to_string(&fx).unwrap();
        let back: ElemFixture = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_elem().unwrap(), e);
    }
}
