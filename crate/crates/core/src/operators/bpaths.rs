//! Two further computations of `B`: the generating series `B_i(u)` and the
//! pushforward along the closed orbit `O_{E^θ_{i,i+1}(v'',1)}`.

use super::hseries::{block_vals, phi_vals};
use super::{shift_constant, OperatorError};
use crate::arith::{series_reciprocal_linear, GaussRat, Poly, RatFunc, SeriesU};
use crate::orbit::{e_theta, WeightVec};
use crate::rep::{PElem, RepError};
use crate::symmetry::{substitute, CosetSpace, Shift, SignedIndex};
use std::collections::BTreeMap;

/// `Φ_I(z) = Π_{s ∈ I} φ(val s − z)` with `φ(x) = 1 + ℏ/x`.
pub fn phi_product(indices: &[SignedIndex], z: &Poly) -> Result<RatFunc, OperatorError> {
    let vals: Vec<Poly> = indices.iter().map(|s| s.val_poly()).collect();
    phi_vals(&vals, z)
}

/// An element of `P[[u^{-1}]]`, one truncated series per component.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SeriesElem {
    pub comps: BTreeMap<WeightVec, SeriesU>,
}

impl SeriesElem {
    pub fn is_zero(&self) -> bool {
        self.comps.values().all(|s| s.is_zero())
    }

    /// The coefficient of `u^{-m}` as an element of `P`.
    pub fn coefficient(&self, m: usize) -> Result<PElem, OperatorError> {
        let mut out = PElem::zero();
        for (v, s) in &self.comps {
            out.add_component(v, &s.coeff(m).to_poly()?);
        }
        Ok(out)
    }
}

fn output_weight(i: usize, u: &WeightVec) -> Option<WeightVec> {
    let tau_i = 2 * u.n() + 1 - i;
    u.shifted(&[(i, 1), (i + 1, -1), (tau_i, -1), (tau_i + 1, 1)])
}

/// `B_i(u) f = √−1 Σ_t ℏ/(u + val t + c_i) · Φ_{[v]_i∖t}(val t) · f(x_{τ_t^+[v]})`
/// to order `k`.
pub fn apply_b_series(i: usize, e: &PElem, k: usize) -> Result<SeriesElem, OperatorError> {
    let mut out = SeriesElem::default();
    for (u, f) in e.components() {
        let n = u.n();
        if i == 0 || i > 2 * n {
            return Err(OperatorError::InvalidIndex(format!("i = {i}")));
        }
        let Some(v) = output_weight(i, u) else { continue };
        let c = shift_constant(n, i);
        let part = v.standard_partition();
        let (lo, hi) = v.block(i);
        let block: Vec<SignedIndex> = (lo..=hi).map(|t| SignedIndex::new(t, v.d())).collect();
        let mut acc = SeriesU::zero(k);
        for (jj, t) in block.iter().enumerate() {
            let rest: Vec<SignedIndex> = block.iter().enumerate().filter(|(s, _)| *s != jj).map(|(_, s)| *s).collect();
            let xt = t.val_poly();
            let f_sub = substitute(f, u.entries(), &part.tau_shift(t.get(), Shift::Up)?)?;
            let w = phi_product(&rest, &xt)?.mul_poly(&f_sub).mul_poly(&Poly::hbar());
            acc = acc.add(&series_reciprocal_linear(&(&xt + &c), k).scale(&w));
        }
        let acc = acc.scale_const(&GaussRat::i());
        let slot = out.comps.entry(v).or_insert_with(|| SeriesU::zero(k));
        *slot = slot.add(&acc);
    }
    out.comps.retain(|_, s| !s.is_zero());
    Ok(out)
}

/// `√−1 · W_{[v]^c}/W_{[E^θ_{i,i+1}(v'',1)]^c} ( Π_{t ≠ v̄_i} (ℏ + x_t − x_{v̄_i})/(x_t − x_{v̄_i})
/// · (−x_{v̄_i} − c_i)^r · f )` for `i ≤ n+1`, with `t` over `[v]_i` and
/// signed values throughout.
pub fn apply_b_pushforward(i: usize, r: usize, e: &PElem) -> Result<PElem, OperatorError> {
    let mut out = PElem::zero();
    for (u, f) in e.components() {
        let n = u.n();
        if i == 0 || i > n + 1 {
            return Err(OperatorError::InvalidIndex(format!("pushforward needs 1 ≤ i ≤ n+1, got {i}")));
        }
        let Some(v) = output_weight(i, u) else { continue };
        let tau_i = 2 * n + 1 - i;
        let v2 = v
            .shifted(&[(i, -1), (tau_i + 1, -1)])
            .ok_or_else(|| OperatorError::InvalidIndex(format!("v'' undefined for {v}")))?;
        let orbit = e_theta(i, i + 1, &v2, 1).map_err(RepError::from)?;
        let space = CosetSpace::new(orbit.blocks().parabolic(), v.parabolic())?;
        let vals = block_vals(&v, i);
        let top = vals.last().expect("v_i ≥ 1").clone();
        let mut g = RatFunc::from_poly(f * &(&-&top - &shift_constant(n, i)).pow(r as u32));
        for xt in &vals[..vals.len() - 1] {
            let diff = xt - &top;
            g = g.mul(&RatFunc::quotient(&Poly::hbar() + &diff, &diff)?);
        }
        let sum = space.sum(&g.simplify())?;
        let p = sum.to_poly().map_err(|_| OperatorError::DenominatorNotCleared(sum.to_string()))?;
        out.add_component(&v, &p.scale(&GaussRat::i()));
    }
    out.check_invariance()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::OpContext;
    use crate::rep::basis_of_component;

    #[test]
    fn phi_examples() {
        assert_eq!(phi_product(&[], &Poly::x(0)).unwrap(), RatFunc::one());
        let got = phi_product(&[SignedIndex::new(2, 1)], &Poly::x(0)).unwrap();
        let want = RatFunc::quotient("-2*x1 + h".parse().unwrap(), &"-2*x1".parse().unwrap()).unwrap();
        assert!(got.value_eq(&want));
    }

    #[test]
    fn three_paths_agree_small() {
        for (n, d) in [(1, 1), (1, 2)] {
            let ctx = OpContext::new(n, d);
            for v in crate::orbit::enum_weights(n, d) {
                for b in basis_of_component(&v, 2).unwrap() {
                    let e = b.to_pelem();
                    for i in 1..=2 * n {
                        let s = apply_b_series(i, &e, 4).unwrap();
                        for r in 0..=2 {
                            let p1 = ctx.apply_b(i, r, &e).unwrap();
                            assert_eq!(
                                s.coefficient(r + 1).unwrap(),
                                p1.scale_poly(&Poly::hbar()),
                                "series i={i} r={r} {e}"
                            );
                            if i <= n + 1 {
                                assert_eq!(apply_b_pushforward(i, r, &e).unwrap(), p1, "push i={i} r={r} {e}");
                            }
                        }
                    }
                }
            }
        }
    }
}
