//! The type-C Weyl group `Z_2^d ⋊ S_d` as signed permutations.
//!
//! An element `w` is stored through its signed images `w(k) = ±σ(k)`. It
//! acts on polynomials by `(w·f)(x_1..x_d) = f(x_{w(1)}, …, x_{w(d)})` with
//! `x_{−m} = −x_m`, and products compose as maps, right factor first. This
//! makes `(w1 w2)·f = w1·(w2·f)`.

use crate::arith::{Poly, RatFunc};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElem {
    images: Vec<i32>,
}

impl WeylElem {
    pub fn identity(d: usize) -> Self {
        WeylElem { images: (1..=d as i32).collect() }
    }

    /// From signed images `w(1), …, w(d)`.
    pub fn from_images(images: Vec<i32>) -> Option<Self> {
        let d = images.len();
        let mut seen = vec![false; d + 1];
        for &m in &images {
            let a = m.unsigned_abs() as usize;
            if a == 0 || a > d || seen[a] {
                return None;
            }
            seen[a] = true;
        }
        Some(WeylElem { images })
    }

    pub fn transposition(d: usize, a: usize, b: usize) -> Self {
        let mut w = WeylElem::identity(d);
        w.images.swap(a - 1, b - 1);
        w
    }

    /// `ι_m`: `x_m ↦ −x_m`.
    pub fn iota(d: usize, m: usize) -> Self {
        let mut w = WeylElem::identity(d);
        w.images[m - 1] = -w.images[m - 1];
        w
    }

    pub fn d(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// Underlying permutation `σ`.
    pub fn perm(&self) -> Vec<usize> {
        self.images.iter().map(|m| m.unsigned_abs() as usize).collect()
    }

    pub fn signs(&self) -> Vec<i8> {
        self.images.iter().map(|m| m.signum() as i8).collect()
    }

    fn apply_signed(&self, m: i32) -> i32 {
        let img = self.images[m.unsigned_abs() as usize - 1];
        if m < 0 {
            -img
        } else {
            img
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElem) -> WeylElem {
        WeylElem { images: other.images.iter().map(|&m| self.apply_signed(m)).collect() }
    }

    pub fn inverse(&self) -> WeylElem {
        let mut inv = vec![0; self.d()];
        for (k, &m) in self.images.iter().enumerate() {
            let k = k as i32 + 1;
            inv[m.unsigned_abs() as usize - 1] = if m < 0 { -k } else { k };
        }
        WeylElem { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &m)| m == k as i32 + 1)
    }

    /// Slot map for [`Poly::signed_permute`].
    pub fn slot_map(&self) -> Vec<(usize, bool)> {
        self.images.iter().map(|&m| (m.unsigned_abs() as usize - 1, m < 0)).collect()
    }

    pub fn act(&self, f: &Poly) -> Poly {
        f.signed_permute(&self.slot_map())
    }

    pub fn act_ratfunc(&self, g: &RatFunc) -> RatFunc {
        g.signed_permute(&self.slot_map())
    }
}

/// `weyl_act(w, f) = w·f`.
pub fn weyl_act(w: &WeylElem, f: &Poly) -> Poly {
    w.act(f)
}

impl fmt::Display for WeylElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|m| m.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for WeylElem {
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
    fn generator_actions() {
        assert_eq!(WeylElem::transposition(2, 1, 2).act(&p("x1")), p("x2"));
        assert_eq!(WeylElem::iota(1, 1).act(&p("x1^2")), p("x1^2"));
        assert_eq!(WeylElem::iota(1, 1).act(&p("x1^3")), p("-x1^3"));
    }

    #[test]
    fn composition_convention() {
        let s = WeylElem::transposition(2, 1, 2);
        let i1 = WeylElem::iota(2, 1);
        let f = p("x1*x2^2");
        // ι_1∘(1,2): swap first, then negate x_1.
        assert_eq!(i1.compose(&s).act(&f), p("x2*x1^2"));
        // (1,2)∘ι_1: negate x_1 first, then swap.
        assert_eq!(s.compose(&i1).act(&f), p("-x2*x1^2"));
        assert_eq!(i1.compose(&s).act(&f), i1.act(&s.act(&f)));
    }

    #[test]
    fn inverse_roundtrip() {
        let w = WeylElem::from_images(vec![-3, 1, -2]).unwrap();
        assert!(w.compose(&w.inverse()).is_identity());
        assert!(w.inverse().compose(&w).is_identity());
        assert!(WeylElem::from_images(vec![1, 1]).is_none());
    }
}
