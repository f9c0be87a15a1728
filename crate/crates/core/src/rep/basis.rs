use super::{ModuleElem, RepError};
use crate::arith::{GaussRat, Monomial, Poly};
use crate::orbit::WeightVec;
use crate::symmetry::ParabolicSubgroup;
use itertools::Itertools;

/// Non-increasing sequences of length `len` with entries in `step·ℕ` and sum
/// `≤ max`.
fn partitions(len: usize, max: u32, step: u32) -> Vec<Vec<u32>> {
    fn rec(len: usize, left: u32, cap: u32, step: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let mut e = 0;
        while e <= cap.min(left) {
            cur.push(e);
            rec(len, left - e, e, step, cur, out);
            cur.pop();
            e += step;
        }
    }
    let mut out = Vec::new();
    rec(len, max, max, step, &mut Vec::new(), &mut out);
    out
}

/// Monomial symmetric polynomial in `x_lo..x_hi` for exponents `lambda`.
fn monomial_symmetric(lo: u32, lambda: &[u32]) -> Poly {
    let mut out = Poly::zero();
    for perm in lambda.iter().copied().permutations(lambda.len()).unique() {
        let mut m = Monomial::ONE;
        for (t, e) in perm.into_iter().enumerate() {
            if e > 0 {
                m = m.mul(Monomial::x((lo as usize - 1) + t, e as u8));
            }
        }
        out.add_term(m, GaussRat::one());
    }
    out
}

fn block_len(b: (u32, u32)) -> usize {
    if b.0 > b.1 {
        0
    } else {
        (b.1 - b.0 + 1) as usize
    }
}

/// Orbit sums of monomials of total degree `≤ max_deg` under `g`, acting on
/// `x_1..x_d`. Sorted by degree, then leading monomial.
pub fn orbit_sum_basis(g: &ParabolicSubgroup, max_deg: u32) -> Vec<Poly> {
    let d = g.d() as u32;
    // Every variable lies in exactly one block; untouched variables are
    // singleton symmetric blocks.
    let mut blocks: Vec<((u32, u32), u32)> = g.sym_blocks().iter().map(|&b| (b, 1)).collect();
    if let Some(h) = g.hyp_block() {
        blocks.push((h, 2));
    }
    let mut covered = vec![false; d as usize + 1];
    for (b, _) in &blocks {
        for k in b.0..=b.1 {
            covered[k as usize] = true;
        }
    }
    for k in 1..=d {
        if !covered[k as usize] {
            blocks.push(((k, k), 1));
        }
    }
    blocks.sort();
    let mut out: Vec<Poly> = Vec::new();
    fn rec(blocks: &[((u32, u32), u32)], left: u32, acc: Poly, out: &mut Vec<Poly>) {
        let Some((&(b, step), rest)) = blocks.split_first() else {
            out.push(acc);
            return;
        };
        for lambda in partitions(block_len(b), left, step) {
            let used: u32 = lambda.iter().sum();
            let m = monomial_symmetric(b.0, &lambda);
            rec(rest, left - used, &acc * &m, out);
        }
    }
    rec(&blocks, max_deg, Poly::one(), &mut out);
    out.sort_by_key(|p| {
        let (m, _) = p.lead().expect("orbit sums are nonzero");
        (m.degree(), m)
    });
    out
}

/// [`orbit_sum_basis`] for `W_{[v]^c}`, as module elements.
pub fn basis_of_component(v: &WeightVec, max_deg: u32) -> Result<Vec<ModuleElem>, RepError> {
    orbit_sum_basis(&v.parabolic(), max_deg).into_iter().map(|f| ModuleElem::new(v.clone(), f)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strs(v: &str, deg: u32) -> Vec<String> {
        basis_of_component(&v.parse().unwrap(), deg).unwrap().iter().map(|e| e.poly().to_string()).collect()
    }

    #[test]
    fn basis_examples() {
        assert_eq!(strs("1,0,1", 2), vec!["1", "x1", "x1^2"]);
        assert_eq!(strs("0,2,0", 2), vec!["1", "x1^2"]);
        assert_eq!(strs("1,2,1", 2), vec!["1", "x1", "x2^2", "x1^2"]);
    }

    #[test]
    fn symmetric_block() {
        let g = ParabolicSubgroup::new(2, vec![(1, 2)], None).unwrap();
        let b: Vec<String> = orbit_sum_basis(&g, 2).iter().map(|p| p.to_string()).collect();
        assert_eq!(b, vec!["1", "x1 + x2", "x1*x2", "x1^2 + x2^2"]);
    }
}
