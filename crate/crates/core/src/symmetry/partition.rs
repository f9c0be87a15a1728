//! Signed indices and τ-symmetric partitions of `{1..2d}`.

use super::SymmetryError;
use crate::arith::Poly;
use std::fmt;
use std::str::FromStr;

/// An index `m ∈ [1, 2d]` standing for `x_m` (`m ≤ d`) or `−x_{2d+1−m}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SignedIndex {
    m: u32,
    d: u32,
}

impl SignedIndex {
    pub fn new(m: u32, d: u32) -> Self {
        assert!(m >= 1 && m <= 2 * d, "signed index {m} out of range for d = {d}");
        SignedIndex { m, d }
    }

    pub fn get(self) -> u32 {
        self.m
    }

    /// `m' = 2d + 1 − m`.
    pub fn mirror(self) -> Self {
        SignedIndex { m: 2 * self.d + 1 - self.m, d: self.d }
    }

    /// Zero-based variable and sign of `val(m)`.
    pub fn val(self) -> (usize, bool) {
        if self.m <= self.d {
            ((self.m - 1) as usize, false)
        } else {
            ((2 * self.d - self.m) as usize, true)
        }
    }

    pub fn val_poly(self) -> Poly {
        let (k, neg) = self.val();
        if neg {
            -Poly::x(k)
        } else {
            Poly::x(k)
        }
    }
}

/// Direction of a τ-shift.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Shift {
    Up,
    Down,
}

/// Blocks `I_1..I_N` covering `{1..2d}` with `r ∈ I_j ⟺ r' ∈ I_{N+1−j}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymPartition {
    n: usize,
    d: u32,
    blocks: Vec<Vec<u32>>,
}

impl SymPartition {
    pub fn new(n: usize, d: u32, mut blocks: Vec<Vec<u32>>) -> Result<Self, SymmetryError> {
        let big_n = 2 * n + 1;
        if blocks.len() != big_n {
            return Err(SymmetryError::InvalidPartition(format!("expected {big_n} blocks, got {}", blocks.len())));
        }
        let mut seen = vec![false; 2 * d as usize + 1];
        for b in blocks.iter_mut() {
            b.sort_unstable();
            for &m in b.iter() {
                if m == 0 || m > 2 * d || seen[m as usize] {
                    return Err(SymmetryError::InvalidPartition(format!("bad or repeated index {m}")));
                }
                seen[m as usize] = true;
            }
        }
        if seen.iter().skip(1).any(|s| !s) {
            return Err(SymmetryError::InvalidPartition("blocks do not cover 1..2d".into()));
        }
        let p = SymPartition { n, d, blocks };
        for (j, b) in p.blocks.iter().enumerate() {
            for &m in b {
                let mirror = 2 * d + 1 - m;
                if !p.blocks[big_n - 1 - j].contains(&mirror) {
                    return Err(SymmetryError::InvalidPartition(format!(
                        "{m} in block {} but {mirror} not in block {}",
                        j + 1,
                        big_n - j
                    )));
                }
            }
        }
        Ok(p)
    }

    /// Consecutive intervals of sizes `shape`: `[v]_i = [v̄_{i−1}+1, v̄_i]`.
    pub fn standard(n: usize, d: u32, shape: &[u32]) -> Result<Self, SymmetryError> {
        let mut blocks = Vec::with_capacity(shape.len());
        let mut next = 1;
        for &s in shape {
            blocks.push((next..next + s).collect());
            next += s;
        }
        SymPartition::new(n, d, blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    /// Block `I_j`, one-based.
    pub fn block(&self, j: usize) -> &[u32] {
        &self.blocks[j - 1]
    }

    pub fn shape(&self) -> Vec<u32> {
        self.blocks.iter().map(|b| b.len() as u32).collect()
    }

    /// One-based index of the block containing `m`.
    pub fn block_of(&self, m: u32) -> usize {
        self.blocks.iter().position(|b| b.contains(&m)).expect("partition covers 1..2d") + 1
    }

    /// Blocks concatenated in order, ascending within each block.
    pub fn listing(&self) -> Result<Vec<SignedIndex>, SymmetryError> {
        let list: Vec<SignedIndex> =
            self.blocks.iter().flat_map(|b| b.iter().map(|&m| SignedIndex::new(m, self.d))).collect();
        let len = list.len();
        for k in 0..len {
            if list[len - 1 - k] != list[k].mirror() {
                return Err(SymmetryError::MirrorViolation(self.to_string()));
            }
        }
        Ok(list)
    }

    /// Slot substitution `y_k ↦ val(listing_k)` for `k ≤ d`, as a signed
    /// variable map.
    pub fn slot_map(&self) -> Result<Vec<(usize, bool)>, SymmetryError> {
        Ok(self.listing()?[..self.d as usize].iter().map(|s| s.val()).collect())
    }

    /// `τ_j^±`: moves `j` from its block `I_s` to `I_{s±1}` and `j'` from
    /// `I_{N+1−s}` to `I_{N+1−s∓1}`.
    pub fn tau_shift(&self, j: u32, dir: Shift) -> Result<Self, SymmetryError> {
        let big_n = 2 * self.n + 1;
        let s = self.block_of(j);
        let target = match dir {
            Shift::Up if s < big_n => s + 1,
            Shift::Down if s > 1 => s - 1,
            _ => return Err(SymmetryError::ShiftOutOfRange { index: j, block: s }),
        };
        let jm = 2 * self.d + 1 - j;
        let sm = big_n + 1 - s;
        let tm = big_n + 1 - target;
        let mut blocks = self.blocks.clone();
        blocks[s - 1].retain(|&m| m != j);
        blocks[target - 1].push(j);
        blocks[sm - 1].retain(|&m| m != jm);
        blocks[tm - 1].push(jm);
        SymPartition::new(self.n, self.d, blocks)
    }
}

/// `f(x_I)`: reads the slot variables of `f` through the listing of `I`.
pub fn substitute(f: &Poly, shape: &[u32], part: &SymPartition) -> Result<Poly, SymmetryError> {
    if part.shape() != shape {
        return Err(SymmetryError::ShapeMismatch { expected: shape.to_vec(), found: part.shape() });
    }
    Ok(f.signed_permute(&part.slot_map()?))
}

impl fmt::Display for SymPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let inner: Vec<String> = b.iter().map(|m| m.to_string()).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

impl fmt::Debug for SymPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SymPartition {
    type Err = SymmetryError;

    /// Parses `{1,2}|{3,4}|{5,6}`; `n` and `d` are inferred.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SymmetryError::InvalidPartition(s.to_string());
        let mut blocks = Vec::new();
        for raw in s.split('|') {
            let raw = raw.trim();
            let inner = raw.strip_prefix('{').and_then(|r| r.strip_suffix('}')).ok_or_else(bad)?;
            let mut b = Vec::new();
            for t in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                b.push(t.parse::<u32>().map_err(|_| bad())?);
            }
            blocks.push(b);
        }
        if blocks.len() % 2 == 0 {
            return Err(bad());
        }
        let total: usize = blocks.iter().map(Vec::len).sum();
        if total % 2 == 1 {
            return Err(bad());
        }
        SymPartition::new((blocks.len() - 1) / 2, (total / 2) as u32, blocks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> SymPartition {
        s.parse().unwrap()
    }

    #[test]
    fn listing_examples() {
        let std = SymPartition::standard(1, 1, &[1, 0, 1]).unwrap();
        let l: Vec<u32> = std.listing().unwrap().iter().map(|s| s.get()).collect();
        assert_eq!(l, vec![1, 2]);
        let i = part("{2}|{1,3,4,6}|{5}");
        let l: Vec<u32> = i.listing().unwrap().iter().map(|s| s.get()).collect();
        assert_eq!(l, vec![2, 1, 3, 4, 6, 5]);
    }

    #[test]
    fn shift_examples() {
        let i = part("{1,2}|{3,4}|{5,6}");
        assert_eq!(i.tau_shift(1, Shift::Up).unwrap(), part("{2}|{1,3,4,6}|{5}"));
        let j = part("{}|{1,2}|{}");
        assert_eq!(j.tau_shift(1, Shift::Up).unwrap(), part("{2}|{}|{1}"));
        assert_eq!(i.tau_shift(1, Shift::Up).unwrap().tau_shift(1, Shift::Down).unwrap(), i);
        assert!(matches!(i.tau_shift(5, Shift::Up), Err(SymmetryError::ShiftOutOfRange { .. })));
    }

    #[test]
    fn substitute_examples() {
        let y1: Poly = "x1".parse().unwrap();
        let r = substitute(&y1, &[1, 0, 1], &part("{2}|{}|{1}")).unwrap();
        assert_eq!(r, -Poly::x(0));
        let std = SymPartition::standard(1, 1, &[1, 0, 1]).unwrap();
        assert_eq!(substitute(&y1, &[1, 0, 1], &std).unwrap(), y1);
        let y1y2: Poly = "x1*x2".parse().unwrap();
        let r = substitute(&y1y2, &[1, 4, 1], &part("{2}|{1,3,4,6}|{5}")).unwrap();
        assert_eq!(r, "x2*x1".parse().unwrap());
        assert!(matches!(substitute(&y1, &[0, 2, 0], &std), Err(SymmetryError::ShapeMismatch { .. })));
    }

    #[test]
    fn asymmetric_partition_rejected() {
        assert!(SymPartition::new(1, 1, vec![vec![1, 2], vec![], vec![]]).is_err());
    }
}
