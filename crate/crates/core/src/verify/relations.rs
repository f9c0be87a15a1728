//! The defining relations as pairs of operator expressions.

use super::expr::OpExpr;
use super::VerifyError;
use crate::arith::{Poly, Rational};
use crate::operators::CartanA2n;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RelTag {
    #[serde(rename = "HH")]
    Hh,
    #[serde(rename = "HTAU0")]
    Htau0,
    #[serde(rename = "HTAU-R")]
    HtauR,
    #[serde(rename = "H0B")]
    H0b,
    #[serde(rename = "H1B")]
    H1b,
    #[serde(rename = "HRB2")]
    Hrb2,
    #[serde(rename = "BB-MIXED")]
    BbMixed,
    #[serde(rename = "SERRE-CIJ0")]
    SerreCij0,
    #[serde(rename = "SERRE-CIJ1")]
    SerreCij1,
    #[serde(rename = "SERRE-TAU")]
    SerreTau,
    #[serde(rename = "SERRE-TAU-REDUCED")]
    SerreTauReduced,
    #[serde(rename = "SERIES-HTAU")]
    SeriesHtau,
    #[serde(rename = "SERIES-BB0")]
    SeriesBb0,
}

impl RelTag {
    pub const ALL: [RelTag; 13] = [
        RelTag::Hh,
        RelTag::Htau0,
        RelTag::HtauR,
        RelTag::H0b,
        RelTag::H1b,
        RelTag::Hrb2,
        RelTag::BbMixed,
        RelTag::SerreCij0,
        RelTag::SerreCij1,
        RelTag::SerreTau,
        RelTag::SerreTauReduced,
        RelTag::SeriesHtau,
        RelTag::SeriesBb0,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RelTag::Hh => "HH",
            RelTag::Htau0 => "HTAU0",
            RelTag::HtauR => "HTAU-R",
            RelTag::H0b => "H0B",
            RelTag::H1b => "H1B",
            RelTag::Hrb2 => "HRB2",
            RelTag::BbMixed => "BB-MIXED",
            RelTag::SerreCij0 => "SERRE-CIJ0",
            RelTag::SerreCij1 => "SERRE-CIJ1",
            RelTag::SerreTau => "SERRE-TAU",
            RelTag::SerreTauReduced => "SERRE-TAU-REDUCED",
            RelTag::SeriesHtau => "SERIES-HTAU",
            RelTag::SeriesBb0 => "SERIES-BB0",
        }
    }

    pub fn parse(s: &str) -> Option<RelTag> {
        RelTag::ALL.into_iter().find(|t| t.as_str().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for RelTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A relation instance: tag plus named parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RelationId {
    pub relation: RelTag,
    pub params: BTreeMap<String, usize>,
}

impl RelationId {
    pub fn new(tag: RelTag, params: &[(&str, usize)]) -> Self {
        RelationId { relation: tag, params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect() }
    }

    pub fn param(&self, k: &str) -> Result<usize, VerifyError> {
        self.params.get(k).copied().ok_or_else(|| VerifyError::ParameterMismatch(format!("{self}: missing `{k}`")))
    }
}

impl fmt::Display for RelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}({})", self.relation, ps.join(","))
    }
}

/// What is compared on each test vector.
#[derive(Clone, Debug)]
pub enum Check {
    /// `lhs·e = rhs·e`.
    Ops { lhs: OpExpr, rhs: OpExpr },
    /// `h_{τi}(u) = h_i(−u)` on the component of `e`, to order `k`.
    SeriesHtau { i: usize, k: usize },
}

#[derive(Clone, Debug)]
pub struct Relation {
    pub id: RelationId,
    pub check: Check,
}

fn q(n: i64, d: i64) -> Poly {
    Poly::rational(Rational::new(n, d))
}

fn hb() -> Poly {
    Poly::hbar()
}

fn sign(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Builds one relation instance, checking its side condition.
pub fn build(n: usize, id: &RelationId) -> Result<Relation, VerifyError> {
    use OpExpr as E;
    let cm = CartanA2n::new(n);
    let size = cm.size();
    let idx = |k: &str| -> Result<usize, VerifyError> {
        let v = id.param(k)?;
        if v == 0 || v > size {
            return Err(VerifyError::ParameterMismatch(format!("{id}: {k} = {v} outside [1, {size}]")));
        }
        Ok(v)
    };
    let mismatch = |why: &str| Err(VerifyError::ParameterMismatch(format!("{id}: {why}")));
    let ops = |lhs: OpExpr, rhs: OpExpr| Ok(Relation { id: id.clone(), check: Check::Ops { lhs, rhs } });
    match id.relation {
        RelTag::Hh => {
            let (i, j, r, s) = (idx("i")?, idx("j")?, id.param("r")?, id.param("s")?);
            ops(E::comm(&E::h(i, r), &E::h(j, s)), E::zero())
        }
        RelTag::Htau0 => {
            let i = idx("i")?;
            ops(E::h(cm.tau(i), 0), E::h(i, 0).scale(Rational::from_int(-1)))
        }
        RelTag::HtauR => {
            let (i, r) = (idx("i")?, id.param("r")?);
            ops(E::h(cm.tau(i), r), E::h(i, r).scale(Rational::from_int(sign(r + 1))))
        }
        RelTag::H0b => {
            let (i, j, r) = (idx("i")?, idx("j")?, id.param("r")?);
            let k = cm.c(i, j) - cm.c(cm.tau(i), j);
            ops(E::comm(&E::h(i, 0), &E::b(j, r)), E::b(j, r).scale(Rational::from_int(k)))
        }
        RelTag::H1b => {
            let (i, j, r) = (idx("i")?, idx("j")?, id.param("r")?);
            let (c, ct) = (cm.c(i, j), cm.c(cm.tau(i), j));
            let rhs = E::b(j, r + 1)
                .scale(Rational::from_int(c + ct))
                .add(&E::anti(&E::h(i, 0), &E::b(j, r)).scale_poly(&(&hb() * &q(c - ct, 2))));
            ops(E::comm(&E::h(i, 1), &E::b(j, r)), rhs)
        }
        RelTag::Hrb2 => {
            let (i, j, r, s) = (idx("i")?, idx("j")?, id.param("r")?, id.param("s")?);
            let (c, ct) = (cm.c(i, j), cm.c(cm.tau(i), j));
            let lhs = E::comm(&E::h(i, r + 2), &E::b(j, s)).sub(&E::comm(&E::h(i, r), &E::b(j, s + 2)));
            let rhs = E::anti(&E::h(i, r + 1), &E::b(j, s))
                .scale_poly(&(&hb() * &q(c - ct, 2)))
                .add(&E::anti(&E::h(i, r), &E::b(j, s + 1)).scale_poly(&(&hb() * &q(c + ct, 2))))
                .add(&E::comm(&E::h(i, r), &E::b(j, s)).scale_poly(&(&hb().pow(2) * &q(c * ct, 4))));
            ops(lhs, rhs)
        }
        RelTag::BbMixed => {
            let (i, j, r, s) = (idx("i")?, idx("j")?, id.param("r")?, id.param("s")?);
            let lhs = E::comm(&E::b(i, r + 1), &E::b(j, s)).sub(&E::comm(&E::b(i, r), &E::b(j, s + 1)));
            let mut rhs = E::anti(&E::b(i, r), &E::b(j, s)).scale_poly(&(&hb() * &q(cm.c(i, j), 2)));
            if cm.tau(i) == j {
                rhs = rhs.add(&E::h(j, r + s + 1).scale(Rational::from_int(-2 * sign(r))));
            }
            ops(lhs, rhs)
        }
        RelTag::SerreCij0 => {
            let (i, j, r, s) = (idx("i")?, idx("j")?, id.param("r")?, id.param("s")?);
            if cm.c(i, j) != 0 {
                return mismatch("needs c_ij = 0");
            }
            let rhs = if cm.tau(i) == j { E::h(j, r + s).scale(Rational::from_int(sign(r))) } else { E::zero() };
            ops(E::comm(&E::b(i, r), &E::b(j, s)), rhs)
        }
        RelTag::SerreCij1 => {
            let (i, j) = (idx("i")?, idx("j")?);
            let (k1, k2, r) = (id.param("k1")?, id.param("k2")?, id.param("r")?);
            if cm.c(i, j) != -1 || j == cm.tau(i) {
                return mismatch("needs c_ij = −1 and j ≠ τi");
            }
            let term = |a: usize, b: usize| E::comm(&E::b(i, a), &E::comm(&E::b(i, b), &E::b(j, r)));
            ops(term(k1, k2).add(&term(k2, k1)), E::zero())
        }
        RelTag::SerreTau => {
            let i = idx("i")?;
            let (k1, k2, r) = (id.param("k1")?, id.param("k2")?, id.param("r")?);
            let ti = cm.tau(i);
            if cm.c(i, ti) != -1 {
                return mismatch("needs c_{i,τi} = −1");
            }
            let lhs_term = |a: usize, b: usize| E::comm(&E::b(i, a), &E::comm(&E::b(i, b), &E::b(ti, r)));
            let rhs_term = |a: usize, b: usize| {
                let mut acc = E::zero();
                for p in 0..=a + r {
                    let w = E::comm(&E::b(i, b + p), &E::h(ti, a + r - p));
                    acc = acc.add(&w.scale(Rational::new(1, 3).pow(p as u32)));
                }
                acc.scale(Rational::new(4 * sign(a), 3))
            };
            ops(lhs_term(k1, k2).add(&lhs_term(k2, k1)), rhs_term(k1, k2).add(&rhs_term(k2, k1)))
        }
        RelTag::SerreTauReduced => {
            let i = idx("i")?;
            let ti = cm.tau(i);
            if cm.c(i, ti) != -1 {
                return mismatch("needs i ∈ {n, n+1}");
            }
            let lhs = E::comm(&E::b(i, 0), &E::comm(&E::b(i, 0), &E::b(ti, 0)));
            ops(lhs, E::b(i, 0).scale(Rational::from_int(4)))
        }
        RelTag::SeriesHtau => {
            let i = idx("i")?;
            let k = id.param("K")?;
            Ok(Relation { id: id.clone(), check: Check::SeriesHtau { i, k } })
        }
        RelTag::SeriesBb0 => {
            // Coefficient of u^{-a} v^{-b} in
            // (u+v)[b_i(u), b_j(v)] = δ_{τi,j} ℏ (h_j(v) − h_i(u)).
            let (i, j, a, b) = (idx("i")?, idx("j")?, id.param("a")?, id.param("b")?);
            if cm.c(i, j) != 0 {
                return mismatch("needs c_ij = 0");
            }
            let h2 = hb().pow(2);
            let coeff = |x: usize, y: usize| {
                if x == 0 || y == 0 {
                    E::zero()
                } else {
                    E::comm(&E::b(i, x - 1), &E::b(j, y - 1)).scale_poly(&h2)
                }
            };
            let lhs = coeff(a + 1, b).add(&coeff(a, b + 1));
            let delta = cm.tau(i) == j;
            let rhs = match (delta, a, b) {
                (true, 0, b) if b >= 1 => E::h(j, b - 1).scale_poly(&h2),
                (true, a, 0) if a >= 1 => E::h(i, a - 1).scale_poly(&-&h2),
                _ => E::zero(),
            };
            ops(lhs, rhs)
        }
    }
}

/// Every instance within the bounds, in a fixed order.
pub fn enumerate(n: usize, rmax: usize, serre_max: usize, series_k: usize) -> Vec<RelationId> {
    let cm = CartanA2n::new(n);
    let size = cm.size();
    let idx = 1..=size;
    let mut out = Vec::new();
    let mut push = |tag, p: &[(&str, usize)]| out.push(RelationId::new(tag, p));
    for i in idx.clone() {
        for j in idx.clone() {
            for r in 0..=rmax {
                for s in 0..=rmax {
                    push(RelTag::Hh, &[("i", i), ("j", j), ("r", r), ("s", s)]);
                }
            }
        }
    }
    for i in idx.clone() {
        push(RelTag::Htau0, &[("i", i)]);
        for r in 0..=rmax {
            push(RelTag::HtauR, &[("i", i), ("r", r)]);
        }
    }
    for i in idx.clone() {
        for j in idx.clone() {
            for r in 0..=rmax {
                push(RelTag::H0b, &[("i", i), ("j", j), ("r", r)]);
                push(RelTag::H1b, &[("i", i), ("j", j), ("r", r)]);
            }
        }
    }
    for i in idx.clone() {
        for j in idx.clone() {
            for r in 0..=rmax {
                for s in 0..=rmax {
                    push(RelTag::Hrb2, &[("i", i), ("j", j), ("r", r), ("s", s)]);
                    push(RelTag::BbMixed, &[("i", i), ("j", j), ("r", r), ("s", s)]);
                    if cm.c(i, j) == 0 {
                        push(RelTag::SerreCij0, &[("i", i), ("j", j), ("r", r), ("s", s)]);
                    }
                }
            }
        }
    }
    for i in idx.clone() {
        for j in idx.clone() {
            if cm.c(i, j) != -1 || j == cm.tau(i) {
                continue;
            }
            for k1 in 0..=serre_max {
                for k2 in k1..=serre_max {
                    for r in 0..=serre_max {
                        push(RelTag::SerreCij1, &[("i", i), ("j", j), ("k1", k1), ("k2", k2), ("r", r)]);
                    }
                }
            }
        }
    }
    for i in [n, n + 1] {
        for k1 in 0..=serre_max {
            for k2 in k1..=serre_max {
                for r in 0..=serre_max {
                    push(RelTag::SerreTau, &[("i", i), ("k1", k1), ("k2", k2), ("r", r)]);
                }
            }
        }
        push(RelTag::SerreTauReduced, &[("i", i)]);
    }
    for i in idx.clone() {
        push(RelTag::SeriesHtau, &[("i", i), ("K", series_k)]);
    }
    for i in idx.clone() {
        for j in idx.clone() {
            if cm.c(i, j) != 0 {
                continue;
            }
            for a in 0..=series_k {
                for b in 0..=series_k {
                    push(RelTag::SeriesBb0, &[("i", i), ("j", j), ("a", a), ("b", b)]);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn side_conditions() {
        let bad = RelationId::new(RelTag::SerreCij0, &[("i", 1), ("j", 2), ("r", 0), ("s", 0)]);
        assert!(matches!(build(1, &bad), Err(VerifyError::ParameterMismatch(_))));
        let ok = RelationId::new(RelTag::SerreTauReduced, &[("i", 1)]);
        assert!(build(1, &ok).is_ok());
        let out_of_range = RelationId::new(RelTag::Htau0, &[("i", 3)]);
        assert!(build(1, &out_of_range).is_err());
    }

    #[test]
    fn enumeration_is_buildable() {
        for n in 1..=2 {
            let ids = enumerate(n, 1, 1, 2);
            assert!(ids.iter().all(|id| build(n, id).is_ok()));
            let tags: std::collections::BTreeSet<RelTag> = ids.iter().map(|id| id.relation).collect();
            if n == 2 {
                assert_eq!(tags.len(), RelTag::ALL.len());
            }
        }
    }
}
