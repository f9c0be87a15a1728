//! The series `H_{i,v}(u)` and its partial-fraction forms.

use super::{shift_constant, Mutation, OperatorError};
use crate::arith::{truncate_negative, GaussRat, Poly, RatFunc, Rational, RationalInZ, SeriesU};
use crate::orbit::WeightVec;
use crate::symmetry::SignedIndex;

/// Signed values `val(t)` for `t ∈ [v]_j`, one-based `j ∈ [1, N]`.
pub(crate) fn block_vals(v: &WeightVec, j: usize) -> Vec<Poly> {
    let (lo, hi) = v.block(j);
    (lo..=hi).map(|t| SignedIndex::new(t, v.d()).val_poly()).collect()
}

/// `δ_{i,n} − δ_{i,n+1}`.
pub(crate) fn delta(n: usize, i: usize) -> i64 {
    (i == n) as i64 - (i == n + 1) as i64
}

/// Truncated product of `Σ a_k u^{-k}` and `Σ b_k u^{-k}` with polynomial
/// coefficients.
pub fn poly_series_mul(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let k = a.len().min(b.len());
    (0..k)
        .map(|m| {
            let mut acc = Poly::zero();
            for j in 0..=m {
                if !a[j].is_zero() && !b[m - j].is_zero() {
                    acc = &acc + &(&a[j] * &b[m - j]);
                }
            }
            acc
        })
        .collect()
}

/// `1 + s·ℏ/(u + a)` to order `k`, with `s = ±1`.
fn linear_factor(a: &Poly, s: i64, k: usize) -> Vec<Poly> {
    let mut out = vec![Poly::zero(); k + 1];
    out[0] = Poly::one();
    let minus_a = -a;
    let mut power = Poly::hbar().scale(&GaussRat::int(s));
    for slot in out.iter_mut().skip(1) {
        *slot = power.clone();
        power = &power * &minus_a;
    }
    out
}

/// Coefficients `c_0..c_K` of `H_{i,v}(u)` in `u^{-1}`.
pub(crate) fn h_poly_coeffs(i: usize, v: &WeightVec, k: usize, m: Mutation) -> Vec<Poly> {
    let n = v.n();
    let c = shift_constant(n, i);
    let tau_i = 2 * n + 1 - i;
    let sign = if m == Mutation::FlipHPrefactor { 1 } else { -1 };
    let mut acc = vec![Poly::zero(); k + 1];
    acc[0] = Poly::one();
    acc[1] = Poly::hbar_times(Rational::new(sign * delta(n, i), 4));
    for x in block_vals(v, i) {
        acc = poly_series_mul(&acc, &linear_factor(&(&x + &c), 1, k));
    }
    for x in block_vals(v, tau_i) {
        acc = poly_series_mul(&acc, &linear_factor(&(&c - &x), -1, k));
    }
    acc
}

/// `H_{i,v}(u)` to order `k`.
pub fn h_series(i: usize, v: &WeightVec, k: usize) -> SeriesU {
    SeriesU::from_coeffs(h_poly_coeffs(i, v, k, Mutation::None).into_iter().map(RatFunc::from_poly).collect())
}

/// `z^ε·H_{i,v}(z)` as a ratio of polynomials in `z`, with `ε = 1` for
/// `i ∈ {n, n+1}` so that the `1/z` of the prefactor cancels.
pub fn h_rational_in_z(i: usize, v: &WeightVec) -> RationalInZ {
    let n = v.n();
    let c = shift_constant(n, i);
    let tau_i = 2 * n + 1 - i;
    let mut numer = vec![Poly::one()];
    let mut poles = Vec::new();
    let mul_linear = |numer: &Vec<Poly>, root_shift: &Poly| -> Vec<Poly> {
        // (z + root_shift)·q(z)
        let mut out = vec![Poly::zero(); numer.len() + 1];
        for (j, q) in numer.iter().enumerate() {
            out[j + 1] = &out[j + 1] + q;
            out[j] = &out[j] + &(q * root_shift);
        }
        out
    };
    let d = delta(n, i);
    if d != 0 {
        numer = mul_linear(&numer, &Poly::hbar_times(Rational::new(-d, 4)));
    }
    for x in block_vals(v, i) {
        let a = &x + &c;
        numer = mul_linear(&numer, &(&a + &Poly::hbar()));
        poles.push(-a);
    }
    for x in block_vals(v, tau_i) {
        let b = &c - &x;
        numer = mul_linear(&numer, &(&b - &Poly::hbar()));
        poles.push(-b);
    }
    RationalInZ::new(numer, poles)
}

/// `Φ_I(z) = Π_{s ∈ I} (1 + ℏ/(val s − z))` over a list of signed values.
pub(crate) fn phi_vals(vals: &[Poly], z: &Poly) -> Result<RatFunc, OperatorError> {
    let mut out = RatFunc::one();
    for x in vals {
        let diff = x - z;
        out = out.mul(&RatFunc::quotient(&diff + &Poly::hbar(), &diff)?);
    }
    Ok(out.simplify())
}

fn without(vals: &[Poly], k: usize) -> Vec<Poly> {
    vals.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, x)| x.clone()).collect()
}

/// `Σ_t w_t/(u + a_t) + Σ_s w_s/(u + b_s)` to order `k`, with weights
/// given by `num_t`, `num_s`.
fn residue_series(
    i: usize,
    v: &WeightVec,
    k: usize,
    num_t: impl Fn(&Poly, &Poly) -> Poly,
    num_s: impl Fn(&Poly, &Poly) -> Poly,
) -> Result<SeriesU, OperatorError> {
    let n = v.n();
    let c = shift_constant(n, i);
    let vi = block_vals(v, i);
    let vt = block_vals(v, 2 * n + 1 - i);
    let mut out = SeriesU::zero(k);
    for (j, x) in vi.iter().enumerate() {
        let w = phi_vals(&without(&vi, j), x)?.mul(&phi_vals(&vt, &-x)?).mul_poly(&num_t(x, &c));
        out = out.add(&crate::arith::series_reciprocal_linear(&(x + &c), k).scale(&w));
    }
    for (j, x) in vt.iter().enumerate() {
        let w = phi_vals(&vi, &-x)?.mul(&phi_vals(&without(&vt, j), x)?).mul_poly(&num_s(x, &c));
        out = out.add(&crate::arith::series_reciprocal_linear(&(&c - x), k).scale(&w));
    }
    Ok(out)
}

/// The displayed expansion of `H°_{i,v}(u)` for `i ∉ {n, n+1}`.
pub fn h_negative_part(i: usize, v: &WeightVec, k: usize) -> Result<SeriesU, OperatorError> {
    let n = v.n();
    if i == n || i == n + 1 {
        return Err(OperatorError::InvalidIndex(format!("H° form needs i ∉ {{n, n+1}}, got {i}")));
    }
    residue_series(i, v, k, |_, _| Poly::hbar(), |_, _| -Poly::hbar())
}

/// The displayed expansion of `(u·H_{i,v}(u))°` for `i ≠ n+1`.
pub fn uh_negative_part(i: usize, v: &WeightVec, k: usize) -> Result<SeriesU, OperatorError> {
    let n = v.n();
    if i == n + 1 {
        return Err(OperatorError::InvalidIndex(format!("(uH)° form needs i ≠ n+1, got {i}")));
    }
    let h = Poly::hbar();
    if i == n {
        let half = Poly::hbar_times(Rational::new(1, 2));
        residue_series(i, v, k, |x, _| -(&h * &(x + &half)), |x, _| -(&h * &(x - &half)))
    } else {
        residue_series(i, v, k, |x, c| -(&h * &(x + c)), |x, c| -(&h * &(x - c)))
    }
}

/// `u·(p̃(u))° + v·(p̃(−v))° = (p(u))° − (p(−v))°` for `p = z^ε·H_{i,v}`,
/// with `u`, `v` the free variables `x_{d+1}`, `x_{d+2}`.
pub fn truncation_identity_holds(i: usize, v: &WeightVec) -> Result<bool, OperatorError> {
    let p = h_rational_in_z(i, v);
    let big = truncate_negative(&p)?;
    let small = truncate_negative(&p.divided_by_z())?;
    let d = v.d() as usize;
    let (u, w) = (Poly::x(d), Poly::x(d + 1));
    let lhs = small.evaluate(&u)?.mul_poly(&u).add(&small.evaluate(&-&w)?.mul_poly(&w));
    let rhs = big.evaluate(&u)?.sub(&big.evaluate(&-&w)?);
    Ok(lhs.value_eq(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> WeightVec {
        s.parse().unwrap()
    }

    fn h0(i: usize, v: &str) -> Poly {
        h_poly_coeffs(i, &w(v), 2, Mutation::None)[1].exact_div(&Poly::hbar()).unwrap()
    }

    #[test]
    fn first_coefficient_eigenvalues() {
        assert_eq!(h0(1, "1,0,1"), Poly::rational(Rational::new(3, 4)));
        assert_eq!(h0(1, "0,2,0"), Poly::rational(Rational::new(-9, 4)));
        assert_eq!(h0(2, "1,0,1"), Poly::rational(Rational::new(-3, 4)));
    }

    #[test]
    fn series_matches_rational_expansion() {
        for v in ["1,0,1", "0,2,0", "1,1,0,1,1", "0,1,2,1,0"] {
            let v = w(v);
            for i in 1..=2 * v.n() {
                let s = h_series(i, &v, 5);
                let p = h_rational_in_z(i, &v);
                let p = if i == v.n() || i == v.n() + 1 { p.divided_by_z() } else { p };
                assert!(p.expand(5).value_eq(&s), "i={i}");
            }
        }
    }

    #[test]
    fn negative_parts_and_truncation() {
        for v in ["1,0,1", "0,2,0", "1,1,0,1,1", "2,0,0,0,2", "0,1,2,1,0"] {
            let v = w(v);
            let n = v.n();
            for i in 1..=2 * n {
                let h = h_series(i, &v, 6);
                if i != n && i != n + 1 {
                    assert!(h_negative_part(i, &v, 6).unwrap().value_eq(&h.negative_part()));
                }
                if i != n + 1 {
                    let uh = h.times_u().negative_part();
                    assert!(uh_negative_part(i, &v, 5).unwrap().value_eq(&uh), "i={i} v={v}");
                }
                assert!(truncation_identity_holds(i, &v).unwrap(), "i={i} v={v}");
            }
        }
    }
}
