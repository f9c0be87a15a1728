//! Negative parts of rational functions with simple poles, via residues.

use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::series::{series_reciprocal_linear, SeriesU};
use super::ArithError;
use std::fmt;

/// `q(z) / Π_i (z − z_i)` with `q(z) = Σ_k numer[k]·z^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalInZ {
    pub numer: Vec<Poly>,
    pub poles: Vec<Poly>,
}

/// `Σ_i r_i / (z − z_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractions {
    pub terms: Vec<(RatFunc, Poly)>,
}

impl RationalInZ {
    pub fn new(numer: Vec<Poly>, poles: Vec<Poly>) -> Self {
        RationalInZ { numer, poles }
    }

    /// `q(value)` by Horner's rule.
    pub fn eval_numer(&self, value: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.numer.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Multiplies by `1/z`, adding a pole at zero.
    pub fn divided_by_z(&self) -> RationalInZ {
        let mut poles = self.poles.clone();
        poles.push(Poly::zero());
        RationalInZ { numer: self.numer.clone(), poles }
    }

    /// Expansion at `z = ∞` to order `k`; requires `deg q ≤ #poles`.
    pub fn expand(&self, k: usize) -> SeriesU {
        let deg_q = self.numer.len().saturating_sub(1);
        assert!(deg_q <= self.poles.len(), "expansion has positive powers of z");
        let depth = k + deg_q;
        let mut den = SeriesU::one(depth.max(1));
        for z in &self.poles {
            den = den.mul(&series_reciprocal_linear(&(-z), depth.max(1)));
        }
        let mut coeffs = vec![RatFunc::zero(); k + 1];
        for (m, slot) in coeffs.iter_mut().enumerate() {
            let parts: Vec<RatFunc> = self
                .numer
                .iter()
                .enumerate()
                .filter(|(j, _)| m + j <= depth.max(1))
                .map(|(j, qj)| den.coeff(m + j).mul_poly(qj))
                .collect();
            *slot = RatFunc::sum(parts.iter());
        }
        SeriesU::from_coeffs(coeffs)
    }
}

/// `(p(z))°`: the partial-fraction form `Σ_i Res(p, z_i)/(z − z_i)`.
pub fn truncate_negative(p: &RationalInZ) -> Result<PartialFractions, ArithError> {
    let n = p.poles.len();
    for a in 0..n {
        for b in a + 1..n {
            if (&p.poles[a] - &p.poles[b]).is_zero() {
                return Err(ArithError::RepeatedPole(p.poles[a].to_string()));
            }
        }
    }
    let mut terms = Vec::with_capacity(n);
    for i in 0..n {
        let zi = &p.poles[i];
        let mut r = RatFunc::from_poly(p.eval_numer(zi));
        for (j, zj) in p.poles.iter().enumerate() {
            if j != i {
                r = r.div_poly(&(zi - zj))?;
            }
        }
        terms.push((r.simplify(), zi.clone()));
    }
    Ok(PartialFractions { terms })
}

impl PartialFractions {
    /// Expansion at `z = ∞` to order `k`.
    pub fn to_series(&self, k: usize) -> SeriesU {
        let mut s = SeriesU::zero(k);
        for (r, z) in &self.terms {
            s = s.add(&series_reciprocal_linear(&(-z), k).scale(r));
        }
        s
    }

    /// The value at `z = at`, where `at − z_i` is linear or constant.
    pub fn evaluate(&self, at: &Poly) -> Result<RatFunc, ArithError> {
        let mut parts = Vec::with_capacity(self.terms.len());
        for (r, z) in &self.terms {
            parts.push(r.clone().div_poly(&(at - z))?);
        }
        Ok(RatFunc::sum(parts.iter()))
    }
}

impl fmt::Display for PartialFractions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|(r, z)| format!("({r})/(z - ({z}))")).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
