//! Block subgroups `S_{I_1} × … × S_{I_k} × (Z_2^m ⋊ S_J)` of the type-C
//! Weyl group and averaging over their cosets.

use super::weyl::WeylElem;
use super::SymmetryError;
use crate::arith::{Poly, RatFunc};
use itertools::Itertools;
use std::collections::HashSet;
use std::fmt;

/// Closed interval `[lo, hi]` of `[1, d]`; `lo > hi` means empty.
pub type Interval = (u32, u32);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParabolicSubgroup {
    d: usize,
    sym_blocks: Vec<Interval>,
    hyp_block: Option<Interval>,
}

fn len(iv: Interval) -> u32 {
    if iv.0 > iv.1 {
        0
    } else {
        iv.1 - iv.0 + 1
    }
}

fn within(inner: Interval, outer: Interval) -> bool {
    len(inner) == 0 || (outer.0 <= inner.0 && inner.1 <= outer.1 && len(outer) > 0)
}

impl ParabolicSubgroup {
    /// Empty and singleton symmetric blocks are dropped; an empty
    /// hyperoctahedral block is dropped.
    pub fn new(d: usize, sym_blocks: Vec<Interval>, hyp_block: Option<Interval>) -> Result<Self, SymmetryError> {
        let sym_blocks: Vec<Interval> = sym_blocks.into_iter().filter(|b| len(*b) > 1).collect();
        let hyp_block = hyp_block.filter(|b| len(*b) > 0);
        let mut used = vec![false; d + 1];
        for b in sym_blocks.iter().chain(hyp_block.iter()) {
            if b.0 == 0 || b.1 as usize > d {
                return Err(SymmetryError::InvalidSubgroup(format!("block {b:?} outside [1,{d}]")));
            }
            for k in b.0..=b.1 {
                if used[k as usize] {
                    return Err(SymmetryError::InvalidSubgroup(format!("blocks overlap at {k}")));
                }
                used[k as usize] = true;
            }
        }
        Ok(ParabolicSubgroup { d, sym_blocks, hyp_block })
    }

    pub fn trivial(d: usize) -> Self {
        ParabolicSubgroup { d, sym_blocks: Vec::new(), hyp_block: None }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn sym_blocks(&self) -> &[Interval] {
        &self.sym_blocks
    }

    pub fn hyp_block(&self) -> Option<Interval> {
        self.hyp_block
    }

    pub fn order(&self) -> u64 {
        let fact = |k: u32| (1..=k as u64).product::<u64>();
        let mut o: u64 = self.sym_blocks.iter().map(|b| fact(len(*b))).product();
        if let Some(h) = self.hyp_block {
            o *= fact(len(h)) << len(h);
        }
        o
    }

    /// Adjacent transpositions in every block, plus `ι_lo` of the
    /// hyperoctahedral block.
    pub fn generators(&self) -> Vec<WeylElem> {
        let mut gens = Vec::new();
        for b in self.sym_blocks.iter().chain(self.hyp_block.iter()) {
            for k in b.0..b.1 {
                gens.push(WeylElem::transposition(self.d, k as usize, k as usize + 1));
            }
        }
        if let Some(h) = self.hyp_block {
            gens.push(WeylElem::iota(self.d, h.0 as usize));
        }
        gens
    }

    /// All elements, sorted.
    pub fn elements(&self) -> Vec<WeylElem> {
        let mut factors: Vec<Vec<Vec<(usize, i32)>>> = Vec::new();
        for b in &self.sym_blocks {
            let idx: Vec<u32> = (b.0..=b.1).collect();
            factors.push(
                idx.iter()
                    .copied()
                    .permutations(idx.len())
                    .map(|p| idx.iter().zip(p).map(|(&k, m)| (k as usize, m as i32)).collect())
                    .collect(),
            );
        }
        if let Some(h) = self.hyp_block {
            let idx: Vec<u32> = (h.0..=h.1).collect();
            let m = idx.len();
            let mut opts = Vec::new();
            for p in idx.iter().copied().permutations(m) {
                for mask in 0..(1u32 << m) {
                    opts.push(
                        idx.iter()
                            .zip(&p)
                            .enumerate()
                            .map(|(t, (&k, &v))| {
                                let s = if mask >> t & 1 == 1 { -1 } else { 1 };
                                (k as usize, s * v as i32)
                            })
                            .collect(),
                    );
                }
            }
            factors.push(opts);
        }
        let mut out = Vec::new();
        let base = WeylElem::identity(self.d).images().to_vec();
        if factors.is_empty() {
            return vec![WeylElem::identity(self.d)];
        }
        for combo in factors.iter().map(|f| f.iter()).multi_cartesian_product() {
            let mut images = base.clone();
            for assignment in combo {
                for &(k, v) in assignment {
                    images[k - 1] = v;
                }
            }
            out.push(WeylElem::from_images(images).expect("block product is a signed permutation"));
        }
        out.sort();
        out
    }

    /// Whether `other` is a subgroup of `self`, checked blockwise.
    pub fn contains(&self, other: &ParabolicSubgroup) -> bool {
        if self.d != other.d {
            return false;
        }
        let sym_ok = other
            .sym_blocks
            .iter()
            .all(|b| self.sym_blocks.iter().chain(self.hyp_block.iter()).any(|o| within(*b, *o)));
        let hyp_ok = match (other.hyp_block, self.hyp_block) {
            (None, _) => true,
            (Some(b), Some(o)) => within(b, o),
            (Some(_), None) => false,
        };
        sym_ok && hyp_ok
    }

    /// First generator not fixing `f`.
    pub fn first_violation(&self, f: &Poly) -> Option<WeylElem> {
        self.generators().into_iter().find(|g| &g.act(f) != f)
    }

    pub fn is_invariant(&self, f: &Poly) -> bool {
        self.first_violation(f).is_none()
    }

    pub fn is_invariant_ratfunc(&self, g: &RatFunc) -> bool {
        self.generators().iter().all(|w| w.act_ratfunc(g).value_eq(g))
    }
}

impl fmt::Display for ParabolicSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.sym_blocks.iter().map(|b| format!("S[{},{}]", b.0, b.1)).collect();
        if let Some(h) = self.hyp_block {
            parts.push(format!("C[{},{}]", h.0, h.1));
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        write!(f, "{}", parts.join("×"))
    }
}

impl fmt::Debug for ParabolicSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One representative per left coset `σW1` of `W1` in `W2`: the smallest
/// element of each coset.
pub fn coset_reps(w1: &ParabolicSubgroup, w2: &ParabolicSubgroup) -> Result<Vec<WeylElem>, SymmetryError> {
    if !w2.contains(w1) {
        return Err(SymmetryError::NotASubgroup);
    }
    let sub = w1.elements();
    let mut covered: HashSet<WeylElem> = HashSet::new();
    let mut reps = Vec::new();
    for s in w2.elements() {
        if covered.contains(&s) {
            continue;
        }
        for h in &sub {
            covered.insert(s.compose(h));
        }
        reps.push(s);
    }
    debug_assert_eq!(reps.len() as u64 * w1.order(), w2.order());
    Ok(reps)
}

/// Left cosets of `W1` in `W2` with chosen representatives.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    pub sub: ParabolicSubgroup,
    pub whole: ParabolicSubgroup,
    pub reps: Vec<WeylElem>,
}

impl CosetSpace {
    pub fn new(sub: ParabolicSubgroup, whole: ParabolicSubgroup) -> Result<Self, SymmetryError> {
        let reps = coset_reps(&sub, &whole)?;
        Ok(CosetSpace { sub, whole, reps })
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }

    /// `Σ_{σ ∈ W2/W1} σ(g)` for `W1`-invariant `g`.
    pub fn sum(&self, g: &RatFunc) -> Result<RatFunc, SymmetryError> {
        if !self.sub.is_invariant_ratfunc(g) {
            return Err(SymmetryError::NotInvariantUnderW1);
        }
        Ok(self.sum_unchecked(g, &self.reps))
    }

    /// The same sum over an arbitrary list of representatives.
    pub fn sum_unchecked(&self, g: &RatFunc, reps: &[WeylElem]) -> RatFunc {
        let terms: Vec<RatFunc> = reps.iter().map(|s| s.act_ratfunc(g)).collect();
        RatFunc::sum(terms.iter())
    }
}

/// `coset_sum(W2/W1, g)`.
pub fn coset_sum(space: &CosetSpace, g: &RatFunc) -> Result<RatFunc, SymmetryError> {
    space.sum(g)
}
