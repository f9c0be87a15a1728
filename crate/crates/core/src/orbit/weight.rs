//! Weights `v ∈ ℕ^N` with `v_i = v_{N+1−i}` and `Σ v_i = 2d`.

use super::OrbitError;
use crate::symmetry::{Interval, ParabolicSubgroup, SymPartition};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVec {
    n: usize,
    d: u32,
    entries: Vec<u32>,
}

impl WeightVec {
    pub fn new(n: usize, d: u32, entries: Vec<u32>) -> Result<Self, OrbitError> {
        let big_n = 2 * n + 1;
        if n == 0 || entries.len() != big_n {
            return Err(OrbitError::InvalidWeight(format!("{entries:?} has wrong length for n = {n}")));
        }
        if (0..big_n).any(|i| entries[i] != entries[big_n - 1 - i]) {
            return Err(OrbitError::InvalidWeight(format!("{entries:?} is not palindromic")));
        }
        if entries.iter().sum::<u32>() != 2 * d {
            return Err(OrbitError::InvalidWeight(format!("{entries:?} does not sum to {}", 2 * d)));
        }
        Ok(WeightVec { n, d, entries })
    }

    /// Infers `n` and `d` from the entries.
    pub fn from_entries(entries: Vec<u32>) -> Result<Self, OrbitError> {
        if entries.len() % 2 == 0 {
            return Err(OrbitError::InvalidWeight(format!("{entries:?} has even length")));
        }
        let total: u32 = entries.iter().sum();
        if total % 2 == 1 {
            return Err(OrbitError::InvalidWeight(format!("{entries:?} has odd sum")));
        }
        WeightVec::new((entries.len() - 1) / 2, total / 2, entries)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn big_n(&self) -> usize {
        2 * self.n + 1
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// `v_i`, one-based.
    pub fn get(&self, i: usize) -> u32 {
        self.entries[i - 1]
    }

    /// `v̄_i = v_1 + … + v_i`.
    pub fn bar(&self, i: usize) -> u32 {
        self.entries[..i].iter().sum()
    }

    /// `[v]_i = [v̄_{i−1}+1, v̄_i]`.
    pub fn block(&self, i: usize) -> Interval {
        (self.bar(i - 1) + 1, self.bar(i))
    }

    pub fn standard_partition(&self) -> SymPartition {
        SymPartition::standard(self.n, self.d, &self.entries).expect("weights give symmetric partitions")
    }

    /// `W_{[v]^c} = S_{[v]_1} × … × S_{[v]_n} × (Z_2^k ⋊ S_{[v̄_n+1, d]})`.
    pub fn parabolic(&self) -> ParabolicSubgroup {
        let sym = (1..=self.n).map(|i| self.block(i)).collect();
        ParabolicSubgroup::new(self.d as usize, sym, Some((self.bar(self.n) + 1, self.d)))
            .expect("weight blocks are disjoint")
    }

    /// `v + Σ δ·e_i`; `None` if an entry would go negative. The result
    /// must again be a weight (possibly with a different `d`).
    pub fn shifted(&self, deltas: &[(usize, i64)]) -> Option<WeightVec> {
        let mut e: Vec<i64> = self.entries.iter().map(|&x| x as i64).collect();
        for &(i, dl) in deltas {
            e[i - 1] += dl;
        }
        if e.iter().any(|&x| x < 0) {
            return None;
        }
        WeightVec::from_entries(e.into_iter().map(|x| x as u32).collect()).ok()
    }
}

/// Every weight of `Λ_{c,d}`, sorted.
pub fn enum_weights(n: usize, d: u32) -> Vec<WeightVec> {
    fn rec(half: &mut Vec<u32>, left: u32, slots: usize, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            out.push(half.clone());
            return;
        }
        for x in 0..=left {
            half.push(x);
            rec(half, left - x, slots - 1, out);
            half.pop();
        }
    }
    let mut halves = Vec::new();
    rec(&mut Vec::new(), d, n, &mut halves);
    let mut out: Vec<WeightVec> = halves
        .into_iter()
        .map(|h| {
            let used: u32 = h.iter().sum();
            let mut e = h.clone();
            e.push(2 * (d - used));
            e.extend(h.iter().rev());
            WeightVec::new(n, d, e).expect("constructed weights are valid")
        })
        .collect();
    out.sort();
    out
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for WeightVec {
    type Err = OrbitError;

    /// Parses `1,0,1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let entries: Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        let entries = entries.map_err(|_| OrbitError::InvalidWeight(s.to_string()))?;
        WeightVec::from_entries(entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> WeightVec {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enum_weights(1, 1), vec![w("0,2,0"), w("1,0,1")]);
        assert_eq!(enum_weights(1, 2), vec![w("0,4,0"), w("1,2,1"), w("2,0,2")]);
        assert_eq!(enum_weights(2, 2).len(), 6);
    }

    #[test]
    fn blocks_and_subgroups() {
        let v = w("1,0,1");
        assert_eq!(v.standard_partition().to_string(), "{1}|{}|{2}");
        assert_eq!(v.parabolic().hyp_block(), None);
        let v = w("0,2,0");
        assert_eq!(v.standard_partition().to_string(), "{}|{1,2}|{}");
        assert_eq!(v.parabolic().hyp_block(), Some((1, 1)));
    }

    #[test]
    fn rejects_invalid() {
        assert!("1,0,0".parse::<WeightVec>().is_err());
        assert!("1,1".parse::<WeightVec>().is_err());
    }
}
