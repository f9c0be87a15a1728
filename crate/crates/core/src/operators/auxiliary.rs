//! `Ĥ_{i,k}`, the idempotents `I_v` and two constants from the orbit
//! calculus.

use super::context::OpContext;
use super::hseries::h_series;
use super::{shift_constant, OperatorError};
use crate::arith::{GaussRat, Poly, RatFunc, Rational};
use crate::orbit::WeightVec;
use crate::rep::PElem;
use crate::symmetry::{CosetSpace, ParabolicSubgroup};
use num_integer::binomial;

/// `Ĥ_{i,k}` on component `v`, defined by
/// `H_{i,v}(z) = exp(ℏ Σ_r Ĥ_{i,r} (−z − c_i)^{−r−1})`.
pub fn hhat(i: usize, k: usize, v: &WeightVec) -> Result<Poly, OperatorError> {
    let order = k + 1;
    let log = h_series(i, v, order).log()?.poly_coeffs()?;
    let minus_c = -shift_constant(v.n(), i);
    let h = Poly::hbar();
    // ℓ_m = ℏ Σ_{r<m} Ĥ_r (−1)^{r+1} C(m−1, r) (−c)^{m−1−r}.
    let mut out: Vec<Poly> = Vec::with_capacity(order);
    for m in 1..=order {
        let mut rest = log[m].clone();
        for (r, hr) in out.iter().enumerate() {
            let sign = if (r + 1) % 2 == 0 { 1 } else { -1 };
            let coeff = GaussRat::int(sign * binomial(m as i64 - 1, r as i64));
            let term = &(&h * hr) * &minus_c.pow((m - 1 - r) as u32);
            rest = &rest - &term.scale(&coeff);
        }
        let sign = if m % 2 == 0 { 1 } else { -1 };
        let hr = rest.exact_div(&h).map_err(|_| OperatorError::NotDivisible(rest.to_string()))?;
        out.push(hr.scale(&GaussRat::int(sign)));
    }
    Ok(out.pop().expect("order ≥ 1"))
}

/// The stated top-degree part of `Ĥ_{i,k}` on `v`, for `1 ≤ i ≤ n`.
pub fn expected_hhat_top(i: usize, k: usize, v: &WeightVec) -> Poly {
    let n = v.n();
    let power_sum = |(lo, hi): (u32, u32), sign: i64| {
        let mut p = Poly::zero();
        for j in lo..=hi {
            p = &p + &Poly::x(j as usize - 1).pow(k as u32).scale(&GaussRat::int(sign));
        }
        p
    };
    let mut p = power_sum(v.block(i), -1);
    if i < n {
        p = &p + &power_sum(v.block(i + 1), 1);
    } else {
        let rest = (v.bar(n) + 1, v.d());
        p = &p + &power_sum(rest, 1);
        p = &p + &power_sum(rest, if k % 2 == 0 { 1 } else { -1 });
    }
    p
}

/// The `(n+1) × (n+1)` matrix relating leading terms of `Ĥ_{i,k}` to power
/// sums for even `k`.
pub fn hhat_matrix(n: usize) -> Vec<Vec<i64>> {
    let m = n + 1;
    let mut a = vec![vec![0; m]; m];
    for (r, row) in a.iter_mut().enumerate().take(n) {
        row[r] = -1;
        row[r + 1] = if r + 1 == n { 2 } else { 1 };
    }
    a[n] = vec![1; m];
    a
}

/// Exact determinant of [`hhat_matrix`] by fraction-free elimination.
pub fn hhat_matrix_det(n: usize) -> i64 {
    let mut a: Vec<Vec<i128>> = hhat_matrix(n).into_iter().map(|r| r.into_iter().map(i128::from).collect()).collect();
    let m = a.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..m - 1 {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..m).find(|&r| a[r][k] != 0) else { return 0 };
            a.swap(k, p);
            sign = -sign;
        }
        for r in k + 1..m {
            for c in k + 1..m {
                a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
            }
            a[r][k] = 0;
        }
        prev = a[k][k];
    }
    (sign * a[m - 1][m - 1]) as i64
}

/// The scalar by which `I_v` acts on `P_u`, with `m` ranging over
/// `[−width, width]`.
pub fn iv_scalar(ctx: &OpContext, v: &WeightVec, u: &WeightVec, width: i64) -> Result<Rational, OperatorError> {
    let n = v.n();
    let mut acc = Rational::one();
    for i in 1..=n {
        let target = v.get(i) as i64 - v.get(i + 1) as i64;
        let h0 = ctx
            .h_scalar(i, 0, u)?
            .as_constant()
            .ok_or_else(|| OperatorError::NotAConstant(ctx.h_scalar(i, 0, u).unwrap().to_string()))?;
        let mut eig = h0.re.clone();
        if i == n {
            eig = &eig + &Rational::new(1, 4);
        }
        for m in -width..=width {
            if m == target {
                continue;
            }
            let num = &eig - &Rational::from_int(m);
            acc = &(&acc * &num) / &Rational::from_int(target - m);
        }
    }
    Ok(acc)
}

/// `I_v`: the product of `(H_{i,0} − m + δ_{in}/4)/(v_i − v_{i+1} − m)` over
/// `1 ≤ i ≤ n` and `m ∈ [−2d, 2d] ∖ {v_i − v_{i+1}}`.
pub fn idempotent_iv(ctx: &OpContext, v: &WeightVec, e: &PElem) -> Result<PElem, OperatorError> {
    let width = 2 * v.d() as i64;
    let mut out = PElem::zero();
    for (u, f) in e.components() {
        let s = iv_scalar(ctx, v, u, width)?;
        out.add_component(u, &f.scale(&GaussRat::real(s)));
    }
    Ok(out)
}

/// `S_{[t, d−v]}/S_{[t+1, d−v]} ( Π_{t<j≤d−v} (ℏ − x_j + x_t)/(x_j − x_t) )`
/// with `t = d − v − a`.
pub fn coset_constant(a: u32, d: u32, v: u32) -> Result<GaussRat, OperatorError> {
    if a + v + 1 > d {
        return Err(OperatorError::InvalidIndex(format!("need a + v + 1 ≤ d, got a={a}, v={v}, d={d}")));
    }
    let t = d - v - a;
    let top = d - v;
    let xt = Poly::x(t as usize - 1);
    let mut g = RatFunc::one();
    for j in t + 1..=top {
        let xj = Poly::x(j as usize - 1);
        let num = &(&Poly::hbar() - &xj) + &xt;
        g = g.mul(&RatFunc::quotient(num, &(&xj - &xt))?);
    }
    let sub = ParabolicSubgroup::new(d as usize, vec![(t + 1, top)], None)?;
    let whole = ParabolicSubgroup::new(d as usize, vec![(t, top)], None)?;
    let sum = CosetSpace::new(sub, whole)?.sum(&g)?;
    let p = sum.to_poly().map_err(|_| OperatorError::NotAConstant(sum.to_string()))?;
    p.as_constant().ok_or_else(|| OperatorError::NotAConstant(p.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> WeightVec {
        s.parse().unwrap()
    }

    #[test]
    fn determinants() {
        assert_eq!(hhat_matrix(1), vec![vec![-1, 2], vec![1, 1]]);
        assert_eq!((1..=4).map(hhat_matrix_det).collect::<Vec<_>>(), vec![-3, 5, -7, 9]);
    }

    #[test]
    fn coset_constant_values() {
        let got: Vec<GaussRat> = (0..4).map(|a| coset_constant(a, a + 1, 0).unwrap()).collect();
        assert_eq!(got, [1, -2, 3, -4].map(GaussRat::int).to_vec());
        assert_eq!(coset_constant(1, 3, 1).unwrap(), GaussRat::int(-2));
    }

    #[test]
    fn hhat_top_parts() {
        for v in ["1,2,1", "2,0,2", "0,4,0", "1,1,0,1,1", "0,1,2,1,0", "1,0,2,0,1"] {
            let v = w(v);
            for i in 1..=v.n() {
                for k in 1..=3 {
                    let got = hhat(i, k, &v).unwrap().top_part(k as u32);
                    assert_eq!(got, expected_hhat_top(i, k, &v), "i={i} k={k} v={v}");
                }
            }
        }
    }

    #[test]
    fn iv_range_matters() {
        let ctx = OpContext::new(1, 1);
        let (v, u) = (w("1,0,1"), w("0,2,0"));
        assert_eq!(iv_scalar(&ctx, &v, &u, 1).unwrap(), Rational::one());
        assert_eq!(iv_scalar(&ctx, &v, &u, 2).unwrap(), Rational::zero());
        assert_eq!(iv_scalar(&ctx, &v, &v, 2).unwrap(), Rational::one());
    }
}
