//! Truncated formal series `c_0 + c_1 u^{-1} + … + c_K u^{-K}` with
//! rational-function coefficients.

use super::gauss::GaussRat;
use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::rational::Rational;
use super::ArithError;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesU {
    coeffs: Vec<RatFunc>,
}

impl SeriesU {
    /// The zero series of order `k`.
    pub fn zero(k: usize) -> Self {
        assert!(k >= 1, "series order must be at least 1");
        SeriesU { coeffs: vec![RatFunc::zero(); k + 1] }
    }

    pub fn one(k: usize) -> Self {
        SeriesU::constant(RatFunc::one(), k)
    }

    pub fn constant(c: RatFunc, k: usize) -> Self {
        let mut s = SeriesU::zero(k);
        s.coeffs[0] = c;
        s
    }

    /// Builds a series from `c_0..c_K`; `K = coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<RatFunc>) -> Self {
        assert!(coeffs.len() >= 2, "series order must be at least 1");
        SeriesU { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn const_term(&self) -> &RatFunc {
        &self.coeffs[0]
    }

    /// Coefficient of `u^{-k}`.
    pub fn coeff(&self, k: usize) -> &RatFunc {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn truncate(&self, k: usize) -> SeriesU {
        assert!(k >= 1 && k <= self.order());
        SeriesU { coeffs: self.coeffs[..=k].to_vec() }
    }

    pub fn add(&self, other: &SeriesU) -> SeriesU {
        let k = self.order().min(other.order());
        SeriesU { coeffs: (0..=k).map(|i| self.coeffs[i].add(&other.coeffs[i])).collect() }
    }

    pub fn sub(&self, other: &SeriesU) -> SeriesU {
        let k = self.order().min(other.order());
        SeriesU { coeffs: (0..=k).map(|i| self.coeffs[i].sub(&other.coeffs[i])).collect() }
    }

    pub fn scale(&self, c: &RatFunc) -> SeriesU {
        SeriesU { coeffs: self.coeffs.iter().map(|a| a.mul(c).simplify()).collect() }
    }

    pub fn scale_poly(&self, p: &Poly) -> SeriesU {
        SeriesU { coeffs: self.coeffs.iter().map(|a| a.mul_poly(p).simplify()).collect() }
    }

    pub fn scale_const(&self, c: &GaussRat) -> SeriesU {
        SeriesU { coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect() }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &SeriesU) -> SeriesU {
        let k = self.order().min(other.order());
        let mut coeffs = Vec::with_capacity(k + 1);
        for n in 0..=k {
            let parts: Vec<RatFunc> = (0..=n)
                .filter(|&a| !self.coeffs[a].is_zero() && !other.coeffs[n - a].is_zero())
                .map(|a| self.coeffs[a].mul(&other.coeffs[n - a]))
                .collect();
            coeffs.push(RatFunc::sum(parts.iter()));
        }
        SeriesU { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Coefficientwise equality of values, up to the smaller order.
    pub fn value_eq(&self, other: &SeriesU) -> bool {
        let k = self.order().min(other.order());
        (0..=k).all(|i| self.coeffs[i].value_eq(&other.coeffs[i]))
    }

    /// `S(u) ↦ S(−u)`.
    pub fn negate_variable(&self) -> SeriesU {
        SeriesU {
            coeffs: self.coeffs.iter().enumerate().map(|(k, c)| if k % 2 == 1 { c.neg() } else { c.clone() }).collect(),
        }
    }

    /// The part of `S` with strictly negative powers of `u`.
    pub fn negative_part(&self) -> SeriesU {
        let mut s = self.clone();
        s.coeffs[0] = RatFunc::zero();
        s
    }

    /// `u·S(u)` with its `u^1` term discarded; the order drops by one.
    pub fn times_u(&self) -> SeriesU {
        assert!(self.order() >= 2, "times_u needs order at least 2");
        SeriesU { coeffs: self.coeffs[1..].to_vec() }
    }

    /// Formal logarithm; requires constant term 1.
    pub fn log(&self) -> Result<SeriesU, ArithError> {
        if !self.coeffs[0].value_eq(&RatFunc::one()) {
            return Err(ArithError::BadConstantTerm);
        }
        let k = self.order();
        let x = self.negative_part();
        let mut out = SeriesU::zero(k);
        let mut power = x.clone();
        for m in 1..=k {
            let sign = if m % 2 == 1 { 1 } else { -1 };
            let c = GaussRat::real(Rational::new(sign, m as i64));
            out = out.add(&power.scale_const(&c));
            power = power.mul(&x);
        }
        Ok(out)
    }

    /// Formal exponential; requires constant term 0.
    pub fn exp(&self) -> Result<SeriesU, ArithError> {
        if !self.coeffs[0].is_zero() {
            return Err(ArithError::BadConstantTerm);
        }
        let k = self.order();
        let mut out = SeriesU::one(k);
        let mut power = SeriesU::one(k);
        for m in 1..=k {
            power = power.mul(self).scale_const(&GaussRat::real(Rational::new(1, m as i64)));
            out = out.add(&power);
        }
        Ok(out)
    }

    /// Every coefficient as a polynomial.
    pub fn poly_coeffs(&self) -> Result<Vec<Poly>, ArithError> {
        self.coeffs.iter().map(|c| c.to_poly()).collect()
    }
}

/// `1/(u + p) = Σ_{k≥0} (−p)^k u^{−k−1}` truncated at order `k`.
pub fn series_reciprocal_linear(p: &Poly, k: usize) -> SeriesU {
    let mut s = SeriesU::zero(k);
    let minus_p = -p;
    let mut power = Poly::one();
    for j in 1..=k {
        s.coeffs[j] = RatFunc::from_poly(power.clone());
        power = &power * &minus_p;
    }
    s
}

impl fmt::Display for SeriesU {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k == 0 {
                parts.push(format!("({c})"));
            } else {
                parts.push(format!("({c})*u^-{k}"));
            }
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{} + O(u^-{})", parts.join(" + "), self.order() + 1)
    }
}
