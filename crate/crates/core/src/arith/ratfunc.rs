//! Rational functions whose denominators are products of linear forms.
//!
//! The value of a [`RatFunc`] is `scale · num / Π den_k^{m_k}` where every
//! `den_k` is a [`LinFactor`] in canonical form. Cancellation happens by
//! trial division of `num` by each stored factor.

use super::gauss::GaussRat;
use super::poly::Poly;
use super::rational::{gcd_numerators, lcm_denominators, Rational};
use super::ArithError;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A non-constant polynomial of degree one, normalized so that its
/// coefficients are coprime Gaussian integers and its leading coefficient
/// is a positive integer.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinFactor {
    poly: Poly,
}

impl LinFactor {
    /// Splits `p = k · L` with `L` canonical. Fails unless `deg p == 1`.
    pub fn canonicalize(p: &Poly) -> Result<(LinFactor, GaussRat), ArithError> {
        if p.degree() != Some(1) {
            return Err(ArithError::NotLinear(p.to_string()));
        }
        let (_, lc) = p.lead().expect("nonzero");
        let lc = lc.clone();
        let monic = p.scale(&lc.recip());
        let parts: Vec<Rational> = monic.terms().flat_map(|(_, c)| [c.re.clone(), c.im.clone()]).collect();
        let l = lcm_denominators(parts.iter());
        let scaled: Vec<Rational> = parts.iter().map(|r| r * &Rational::from(l.clone())).collect();
        let g = gcd_numerators(scaled.iter());
        let g = if g.is_zero() { num_bigint::BigInt::one() } else { g };
        let factor = Rational::from_bigints(l, g);
        let canon = monic.scale(&GaussRat::real(factor.clone()));
        Ok((LinFactor { poly: canon }, lc.scale(&factor.recip())))
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }
}

impl fmt::Debug for LinFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.poly)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    scale: GaussRat,
    num: Poly,
    den: BTreeMap<LinFactor, u32>,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn from_poly(num: Poly) -> Self {
        RatFunc { scale: GaussRat::one(), num, den: BTreeMap::new() }
    }

    pub fn constant(c: GaussRat) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn scale_factor(&self) -> &GaussRat {
        &self.scale
    }

    pub fn den(&self) -> impl Iterator<Item = (&LinFactor, u32)> {
        self.den.iter().map(|(f, m)| (f, *m))
    }

    pub fn den_degree(&self) -> u32 {
        self.den.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `num / den` where `den` has degree at most one.
    pub fn quotient(num: Poly, den: &Poly) -> Result<RatFunc, ArithError> {
        RatFunc::from_poly(num).div_poly(den)
    }

    /// Divides by a constant or a linear polynomial.
    pub fn div_poly(mut self, p: &Poly) -> Result<RatFunc, ArithError> {
        if p.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if let Some(c) = p.as_constant() {
            self.scale = &self.scale / &c;
            return Ok(self);
        }
        let (f, k) = LinFactor::canonicalize(p)?;
        self.scale = &self.scale / &k;
        *self.den.entry(f).or_insert(0) += 1;
        Ok(self)
    }

    pub fn mul_poly(&self, p: &Poly) -> RatFunc {
        RatFunc { scale: self.scale.clone(), num: &self.num * p, den: self.den.clone() }
    }

    pub fn scale(&self, c: &GaussRat) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { scale: &self.scale * c, num: self.num.clone(), den: self.den.clone() }
    }

    pub fn neg(&self) -> RatFunc {
        self.scale(&GaussRat::int(-1))
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        let mut den = self.den.clone();
        for (f, m) in &other.den {
            *den.entry(f.clone()).or_insert(0) += m;
        }
        RatFunc { scale: &self.scale * &other.scale, num: &self.num * &other.num, den }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        RatFunc::sum([self, other])
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    /// Sums over a common denominator, then simplifies.
    pub fn sum<'a>(terms: impl IntoIterator<Item = &'a RatFunc>) -> RatFunc {
        let terms: Vec<&RatFunc> = terms.into_iter().filter(|t| !t.is_zero()).collect();
        match terms.len() {
            0 => return RatFunc::zero(),
            1 => return terms[0].clone(),
            _ => {}
        }
        let mut lcm: BTreeMap<LinFactor, u32> = BTreeMap::new();
        for t in &terms {
            for (f, m) in &t.den {
                let e = lcm.entry(f.clone()).or_insert(0);
                *e = (*e).max(*m);
            }
        }
        let mut num = Poly::zero();
        for t in terms {
            let mut part = t.num.scale(&t.scale);
            for (f, m) in &lcm {
                let have = t.den.get(f).copied().unwrap_or(0);
                for _ in have..*m {
                    part = &part * f.poly();
                }
            }
            num = &num + &part;
        }
        RatFunc { scale: GaussRat::one(), num, den: lcm }.simplify()
    }

    /// Cancels every denominator factor that divides the numerator.
    pub fn simplify(mut self) -> RatFunc {
        if self.num.is_zero() {
            return RatFunc::zero();
        }
        let factors: Vec<LinFactor> = self.den.keys().cloned().collect();
        for f in factors {
            let mut m = self.den[&f];
            while m > 0 {
                match self.num.exact_div(f.poly()) {
                    Ok(q) => {
                        self.num = q;
                        m -= 1;
                    }
                    Err(_) => break,
                }
            }
            if m == 0 {
                self.den.remove(&f);
            } else {
                self.den.insert(f, m);
            }
        }
        if self.den.is_empty() && !self.scale.is_one() {
            self.num = self.num.scale(&self.scale);
            self.scale = GaussRat::one();
        }
        self
    }

    /// The polynomial value, if every denominator cancels.
    pub fn to_poly(&self) -> Result<Poly, ArithError> {
        let s = self.clone().simplify();
        if !s.den.is_empty() {
            return Err(ArithError::DenominatorNotCleared(s.to_string()));
        }
        Ok(s.num.scale(&s.scale))
    }

    pub fn is_poly(&self) -> bool {
        self.clone().simplify().den.is_empty()
    }

    /// Equality of values.
    pub fn value_eq(&self, other: &RatFunc) -> bool {
        self.sub(other).is_zero()
    }

    /// Applies `x_{k+1} ↦ ±x_{map[k].0+1}` to numerator and denominator.
    pub fn signed_permute(&self, map: &[(usize, bool)]) -> RatFunc {
        let num = self.num.signed_permute(map);
        let mut out = RatFunc { scale: self.scale.clone(), num, den: BTreeMap::new() };
        for (f, m) in &self.den {
            let img = f.poly().signed_permute(map);
            for _ in 0..*m {
                out = out.div_poly(&img).expect("image of a linear form is linear");
            }
        }
        out
    }

    /// Substitutes `x_{k+1} ↦ value` with `value` of degree at most one.
    pub fn substitute(&self, k: usize, value: &Poly) -> Result<RatFunc, ArithError> {
        let num = self.num.substitute(k, value);
        let mut out = RatFunc { scale: self.scale.clone(), num, den: BTreeMap::new() };
        for (f, m) in &self.den {
            let img = f.poly().substitute(k, value);
            for _ in 0..*m {
                out = out.div_poly(&img)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let scaled = self.num.scale(&self.scale);
        if self.den.is_empty() {
            return write!(f, "{scaled}");
        }
        let dens: Vec<String> = self
            .den
            .iter()
            .map(|(l, m)| if *m == 1 { format!("({})", l.poly()) } else { format!("({})^{m}", l.poly()) })
            .collect();
        write!(f, "({scaled})/({})", dens.join("*"))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_linear_forms() {
        let (a, ka) = LinFactor::canonicalize(&p("-2*x1 + 4*x2")).unwrap();
        let (b, kb) = LinFactor::canonicalize(&p("1/3*x1 - 2/3*x2")).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.poly(), &p("x1 - 2*x2"));
        assert_eq!(ka, GaussRat::int(-2));
        assert_eq!(kb, GaussRat::frac(1, 3));
        assert!(LinFactor::canonicalize(&p("x1^2")).is_err());
    }

    #[test]
    fn simplify_examples() {
        let r = RatFunc::quotient(p("x1^2 - x2^2"), &p("x1 - x2")).unwrap().simplify();
        assert_eq!(r.to_poly().unwrap(), p("x1 + x2"));
        let r = RatFunc::quotient(p("h"), &p("x1")).unwrap().simplify();
        assert_eq!(r.den_degree(), 1);
        assert!(r.to_poly().is_err());
    }

    #[test]
    fn b20_sum_clears() {
        // (1 − ℏ/2x1)(−x1) + (1 + ℏ/2x1)(x1) = ℏ
        let t1 = RatFunc::quotient(p("2*x1 - h"), &p("2*x1")).unwrap().mul_poly(&p("-x1"));
        let t2 = RatFunc::quotient(p("2*x1 + h"), &p("2*x1")).unwrap().mul_poly(&p("x1"));
        assert_eq!(RatFunc::sum([&t1, &t2]).to_poly().unwrap(), p("h"));
    }

    #[test]
    fn value_equality_and_permutation() {
        let a = RatFunc::quotient(p("1"), &p("x1 - x2")).unwrap();
        let b = RatFunc::quotient(p("-1"), &p("x2 - x1")).unwrap();
        assert!(a.value_eq(&b));
        let swapped = a.signed_permute(&[(1, false), (0, false)]);
        assert!(swapped.value_eq(&a.neg()));
    }
}
