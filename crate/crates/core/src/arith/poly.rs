//! Sparse multivariate polynomials over the Gaussian rationals in
//! `x_1..x_m` and `ℏ`.
//!
//! Monomials are packed into a `u128`: byte 15 holds the total degree,
//! byte `15-k` the exponent of `x_k` (`k = 1..=14`) and byte 0 the exponent
//! of `ℏ`. Integer comparison of the packed word is then exactly graded
//! lexicographic order with `x_1 > x_2 > … > ℏ`.

use super::gauss::GaussRat;
use super::rational::Rational;
use super::ArithError;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Number of `x` variables a monomial can carry.
pub const MAX_VARS: usize = 14;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(u128);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    #[inline]
    fn byte(self, b: usize) -> u8 {
        (self.0 >> (8 * b)) as u8
    }

    #[inline]
    fn x_byte(k: usize) -> usize {
        assert!(k < MAX_VARS, "variable x{} out of range", k + 1);
        14 - k
    }

    /// `x_{k+1}^e` (zero-based `k`).
    pub fn x(k: usize, e: u8) -> Self {
        Monomial(((e as u128) << (8 * Self::x_byte(k))) | ((e as u128) << 120))
    }

    pub fn hbar(e: u8) -> Self {
        Monomial((e as u128) | ((e as u128) << 120))
    }

    /// Exponent of the zero-based variable `x_{k+1}`.
    pub fn exp(self, k: usize) -> u8 {
        self.byte(Self::x_byte(k))
    }

    pub fn hbar_exp(self) -> u8 {
        self.byte(0)
    }

    pub fn degree(self) -> u32 {
        self.byte(15) as u32
    }

    pub fn x_degree(self) -> u32 {
        self.degree() - self.hbar_exp() as u32
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    /// Exponents of `x_1..x_m`.
    pub fn x_exps(self, m: usize) -> Vec<u8> {
        (0..m).map(|k| self.exp(k)).collect()
    }

    /// Index of the highest `x` variable present, plus one.
    pub fn x_len(self) -> usize {
        (0..MAX_VARS).rev().find(|&k| self.exp(k) > 0).map_or(0, |k| k + 1)
    }

    pub fn mul(self, other: Monomial) -> Monomial {
        let deg = self.degree() + other.degree();
        assert!(deg <= 255, "monomial degree overflow");
        Monomial(self.0 + other.0)
    }

    pub fn divides(self, other: Monomial) -> bool {
        (0..16).all(|b| self.byte(b) <= other.byte(b))
    }

    /// `other / self`, assuming `self | other`.
    pub fn div_into(self, other: Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial(other.0 - self.0)
    }

    /// Sends `x_{k+1}` to `±x_{map[k].0+1}`; returns the image and whether
    /// the sign flips. Variables beyond `map.len()` and `ℏ` are fixed.
    pub fn signed_permute(self, map: &[(usize, bool)]) -> (Monomial, bool) {
        let x_mask: u128 = ((1u128 << 120) - 1) & !0xff;
        let mut out = self.0 & !x_mask;
        let mut neg = false;
        for (k, &(t, flip)) in map.iter().enumerate() {
            let e = self.exp(k);
            if e == 0 {
                continue;
            }
            if flip && e % 2 == 1 {
                neg = !neg;
            }
            out |= (e as u128) << (8 * Self::x_byte(t));
        }
        for k in map.len()..MAX_VARS {
            let e = self.exp(k);
            out |= (e as u128) << (8 * Self::x_byte(k));
        }
        (Monomial(out), neg)
    }

    /// Removes the `x_{k+1}` factor, returning the monomial and the exponent.
    pub fn split_var(self, k: usize) -> (Monomial, u8) {
        let e = self.exp(k);
        (Monomial::x(k, e).div_into(self), e)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_monomial(*self).unwrap_or_else(|| "1".into()))
    }
}

fn format_monomial(m: Monomial) -> Option<String> {
    let mut parts = Vec::new();
    for k in 0..MAX_VARS {
        match m.exp(k) {
            0 => {}
            1 => parts.push(format!("x{}", k + 1)),
            e => parts.push(format!("x{}^{}", k + 1, e)),
        }
    }
    match m.hbar_exp() {
        0 => {}
        1 => parts.push("h".to_string()),
        e => parts.push(format!("h^{e}")),
    }
    if parts.is_empty() {
        None
    } else {
        Some(parts.join("*"))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, GaussRat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        Poly::term(Monomial::ONE, c)
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(GaussRat::int(n))
    }

    pub fn rational(r: Rational) -> Self {
        Poly::constant(GaussRat::real(r))
    }

    pub fn term(m: Monomial, c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    /// The zero-based variable `x_{k+1}`.
    pub fn x(k: usize) -> Self {
        Poly::term(Monomial::x(k, 1), GaussRat::one())
    }

    pub fn hbar() -> Self {
        Poly::term(Monomial::hbar(1), GaussRat::one())
    }

    /// `r·ℏ` for a rational `r`.
    pub fn hbar_times(r: Rational) -> Self {
        Poly::term(Monomial::hbar(1), GaussRat::real(r))
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, GaussRat)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = &*e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> GaussRat {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// Leading term under graded-lex order.
    pub fn lead(&self) -> Option<(Monomial, &GaussRat)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn constant_term(&self) -> GaussRat {
        self.coeff(Monomial::ONE)
    }

    /// The value if `self` is constant.
    pub fn as_constant(&self) -> Option<GaussRat> {
        if self.is_constant() {
            Some(self.constant_term())
        } else {
            None
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Maximum total degree in the `x` variables alone.
    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.x_degree()).max()
    }

    /// One more than the highest `x` variable index that occurs.
    pub fn x_len(&self) -> usize {
        self.terms.keys().map(|m| m.x_len()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &GaussRat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: Monomial, c: &GaussRat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Keeps the terms selected by `keep`.
    pub fn filter(&self, mut keep: impl FnMut(Monomial) -> bool) -> Poly {
        Poly { terms: self.terms.iter().filter(|(m, _)| keep(**m)).map(|(m, c)| (*m, c.clone())).collect() }
    }

    /// Terms with no `ℏ` and total `x`-degree `k`.
    pub fn top_part(&self, k: u32) -> Poly {
        self.filter(|m| m.hbar_exp() == 0 && m.x_degree() == k)
    }

    /// Exact quotient `self / q`.
    pub fn exact_div(&self, q: &Poly) -> Result<Poly, ArithError> {
        let (lm, lc) = match q.lead() {
            Some((m, c)) => (m, c.clone()),
            None => return Err(ArithError::DivisionByZero),
        };
        let lc_inv = lc.recip();
        if q.len() == 1 {
            let mut out = BTreeMap::new();
            for (m, c) in &self.terms {
                if !lm.divides(*m) {
                    return Err(ArithError::NotDivisible);
                }
                out.insert(lm.div_into(*m), c * &lc_inv);
            }
            return Ok(Poly { terms: out });
        }
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.lead() {
            if !lm.divides(m) {
                return Err(ArithError::NotDivisible);
            }
            let tm = lm.div_into(m);
            let tc = c * &lc_inv;
            for (qm, qc) in &q.terms {
                rem.add_term(qm.mul(tm), -(qc * &tc));
            }
            quot.add_term(tm, tc);
        }
        Ok(quot)
    }

    /// Applies `x_{k+1} ↦ ±x_{map[k].0+1}` for `k < map.len()`.
    pub fn signed_permute(&self, map: &[(usize, bool)]) -> Poly {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let (m2, neg) = m.signed_permute(map);
            out.insert(m2, if neg { -c } else { c.clone() });
        }
        Poly { terms: out }
    }

    /// Coefficients of `self` as a polynomial in `x_{k+1}`.
    pub fn coeffs_in_var(&self, k: usize) -> Vec<Poly> {
        let mut out: Vec<Poly> = Vec::new();
        for (m, c) in &self.terms {
            let (rest, e) = m.split_var(k);
            let e = e as usize;
            if out.len() <= e {
                out.resize(e + 1, Poly::zero());
            }
            out[e].add_term(rest, c.clone());
        }
        out
    }

    /// Substitutes `x_{k+1} ↦ value`.
    pub fn substitute(&self, k: usize, value: &Poly) -> Poly {
        let cs = self.coeffs_in_var(k);
        let mut acc = Poly::zero();
        for c in cs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&GaussRat) -> GaussRat) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Every coefficient real.
    pub fn is_real(&self) -> bool {
        self.terms.values().all(|c| c.is_real())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if rhs.len() == 1 {
            let (m, c) = rhs.terms.iter().next().unwrap();
            return self.mul_monomial(*m, c);
        }
        if self.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            return rhs.mul_monomial(*m, c);
        }
        let mut acc: std::collections::HashMap<Monomial, GaussRat> =
            std::collections::HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let prod = ca * cb;
                acc.entry(ma.mul(*mb)).and_modify(|e| *e = &*e + &prod).or_insert(prod);
            }
        }
        Poly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            for (part, imag) in [(&c.re, false), (&c.im, true)] {
                if part.is_zero() {
                    continue;
                }
                let neg = part.signum() < 0;
                let mag = part.abs();
                if first {
                    if neg {
                        write!(f, "-")?;
                    }
                } else {
                    write!(f, " {} ", if neg { '-' } else { '+' })?;
                }
                first = false;
                let mut factors = Vec::new();
                if !mag.is_one() {
                    factors.push(mag.to_string());
                }
                if imag {
                    factors.push("i".to_string());
                }
                if let Some(s) = format_monomial(*m) {
                    factors.push(s);
                }
                if factors.is_empty() {
                    factors.push("1".to_string());
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Poly {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |msg: &str| ArithError::Parse(format!("{msg} in `{s}`"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty polynomial"));
        }
        let mut out = Poly::zero();
        for (neg, body) in split_signed_terms(&compact).map_err(|m| bad(&m))? {
            let t = parse_term(&body).map_err(|m| bad(&m))?;
            out = &out + &(if neg { -t } else { t });
        }
        Ok(out)
    }
}

/// Splits `s` into signed term bodies.
fn split_signed_terms(s: &str) -> Result<Vec<(bool, String)>, String> {
    let mut out = Vec::new();
    let mut neg = false;
    let mut cur = String::new();
    let mut prev: Option<char> = None;
    for ch in s.chars() {
        let is_sign = (ch == '+' || ch == '-') && prev != Some('^');
        if is_sign {
            if !cur.is_empty() {
                out.push((neg, std::mem::take(&mut cur)));
                neg = false;
            }
            if ch == '-' {
                neg = !neg;
            }
        } else {
            cur.push(ch);
        }
        prev = Some(ch);
    }
    if cur.is_empty() {
        return Err("trailing operator".into());
    }
    out.push((neg, cur));
    Ok(out)
}

fn parse_term(body: &str) -> Result<Poly, String> {
    let mut coeff = GaussRat::one();
    let mut mono = Monomial::ONE;
    for factor in body.split('*') {
        if factor.is_empty() {
            return Err("empty factor".into());
        }
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => {
                let e: u8 = e.parse().map_err(|_| format!("bad exponent `{e}`"))?;
                (b, e)
            }
            None => (factor, 1),
        };
        if base == "i" {
            coeff = &coeff * &GaussRat::i().pow(exp as u32);
        } else if base == "h" {
            mono = mono.mul(Monomial::hbar(exp));
        } else if let Some(idx) = base.strip_prefix('x') {
            let k: usize = idx.parse().map_err(|_| format!("bad variable `{base}`"))?;
            if k == 0 || k > MAX_VARS {
                return Err(format!("variable `{base}` out of range"));
            }
            mono = mono.mul(Monomial::x(k - 1, exp));
        } else {
            let r: Rational = base.parse().map_err(|_| format!("bad factor `{base}`"))?;
            coeff = &coeff * &GaussRat::real(r.pow(exp as u32));
        }
    }
    Ok(Poly::term(mono, coeff))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn monomial_order_is_grlex() {
        let x1 = Monomial::x(0, 1);
        let x2sq = Monomial::x(1, 2);
        let h = Monomial::hbar(1);
        assert!(x2sq > x1);
        assert!(x1 > Monomial::x(1, 1));
        assert!(Monomial::x(1, 1) > h);
        assert_eq!(x1.mul(h).degree(), 2);
    }

    #[test]
    fn parse_print_roundtrip() {
        let q = p("3/2*i*x1^2*h - x2");
        assert_eq!(q.to_string(), "3/2*i*x1^2*h - x2");
        assert_eq!(p("x1 - x1"), Poly::zero());
        assert_eq!(p("-x2 + 2"), &Poly::int(2) - &Poly::x(1));
        assert_eq!(p("2*3*x1"), p("6*x1"));
        assert!("x1 +".parse::<Poly>().is_err());
        assert!("x0".parse::<Poly>().is_err());
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(p("x1^2 - h^2").exact_div(&p("x1 - h")).unwrap(), p("x1 + h"));
        assert_eq!(Poly::zero().exact_div(&p("x1")).unwrap(), Poly::zero());
        assert_eq!(p("h*x1 + h*x2").exact_div(&p("h")).unwrap(), p("x1 + x2"));
        assert_eq!(p("x1^2 + 1").exact_div(&p("x1 - 1")), Err(ArithError::NotDivisible));
        assert_eq!(p("x1").exact_div(&Poly::zero()), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn signed_permutation() {
        // x1*x2^2 under x1 -> x2, x2 -> -x1
        let q = p("x1*x2^2").signed_permute(&[(1, false), (0, true)]);
        assert_eq!(q, p("x2*x1^2"));
        let q = p("x1^3*h").signed_permute(&[(0, true)]);
        assert_eq!(q, p("-x1^3*h"));
    }

    #[test]
    fn substitution() {
        let q = p("x1^2 + x2").substitute(0, &p("x2 + h"));
        assert_eq!(q, p("x2^2 + 2*x2*h + h^2 + x2"));
    }
}
