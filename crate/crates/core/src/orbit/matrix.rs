//! θ-symmetric orbit matrices `Ξ_d` and the order `⪯`.

use super::weight::WeightVec;
use super::OrbitError;
use crate::symmetry::{Interval, ParabolicSubgroup};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// `N×N` matrix over `ℕ` with `a_{ij} = a_{N+1−i,N+1−j}` and entry sum `2d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitMatrix {
    n: usize,
    d: u32,
    a: Vec<u32>,
    ro: WeightVec,
    co: WeightVec,
}

impl OrbitMatrix {
    pub fn new(n: usize, d: u32, rows: Vec<Vec<u32>>) -> Result<Self, OrbitError> {
        let big_n = 2 * n + 1;
        if rows.len() != big_n || rows.iter().any(|r| r.len() != big_n) {
            return Err(OrbitError::InvalidMatrix(format!("expected a {big_n}×{big_n} matrix")));
        }
        let a: Vec<u32> = rows.into_iter().flatten().collect();
        Self::from_flat(n, d, a)
    }

    pub fn from_flat(n: usize, d: u32, a: Vec<u32>) -> Result<Self, OrbitError> {
        let big_n = 2 * n + 1;
        if a.len() != big_n * big_n {
            return Err(OrbitError::InvalidMatrix("wrong number of entries".into()));
        }
        for i in 0..big_n {
            for j in 0..big_n {
                if a[i * big_n + j] != a[(big_n - 1 - i) * big_n + (big_n - 1 - j)] {
                    return Err(OrbitError::InvalidMatrix(format!("not θ-symmetric at ({}, {})", i + 1, j + 1)));
                }
            }
        }
        if a.iter().sum::<u32>() != 2 * d {
            return Err(OrbitError::InvalidMatrix(format!("entries do not sum to {}", 2 * d)));
        }
        let ro = (0..big_n).map(|i| (0..big_n).map(|j| a[i * big_n + j]).sum()).collect();
        let co = (0..big_n).map(|j| (0..big_n).map(|i| a[i * big_n + j]).sum()).collect();
        let ro = WeightVec::new(n, d, ro)?;
        let co = WeightVec::new(n, d, co)?;
        Ok(OrbitMatrix { n, d, a, ro, co })
    }

    pub fn diag(v: &WeightVec) -> Self {
        let big_n = v.big_n();
        let mut a = vec![0; big_n * big_n];
        for i in 0..big_n {
            a[i * big_n + i] = v.entries()[i];
        }
        OrbitMatrix::from_flat(v.n(), v.d(), a).expect("diagonal of a weight is θ-symmetric")
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

    /// `a_{ij}`, one-based.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.a[(i - 1) * self.big_n() + (j - 1)]
    }

    pub fn ro(&self) -> &WeightVec {
        &self.ro
    }

    pub fn co(&self) -> &WeightVec {
        &self.co
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.a.chunks(self.big_n()).map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self) -> OrbitMatrix {
        let big_n = self.big_n();
        let a = (0..big_n * big_n).map(|k| self.a[(k % big_n) * big_n + k / big_n]).collect();
        OrbitMatrix::from_flat(self.n, self.d, a).expect("transpose stays θ-symmetric")
    }

    pub fn is_diagonal(&self) -> bool {
        let big_n = self.big_n();
        (0..big_n).all(|i| (0..big_n).all(|j| i == j || self.a[i * big_n + j] == 0))
    }

    /// Entries as signed integers, for matrix arithmetic.
    pub fn to_signed(&self) -> Vec<i64> {
        self.a.iter().map(|&x| x as i64).collect()
    }

    pub fn from_signed(n: usize, d: u32, a: &[i64]) -> Result<Self, OrbitError> {
        if a.iter().any(|&x| x < 0) {
            return Err(OrbitError::InvalidMatrix("negative entry".into()));
        }
        OrbitMatrix::from_flat(n, d, a.iter().map(|&x| x as u32).collect())
    }

    /// Blocks `[A]_{ij}` in left-lex order and the subgroup `W_{[A]^c}`.
    pub fn blocks(&self) -> MatrixBlocks {
        let mid = self.n + 1;
        let mut intervals = BTreeMap::new();
        let mut prefix = 0;
        for i in 1..=self.big_n() {
            for j in 1..=self.big_n() {
                if (i, j) >= (mid, mid) {
                    break;
                }
                let a = self.get(i, j);
                intervals.insert((i, j), (prefix + 1, prefix + a));
                prefix += a;
            }
            if i >= mid {
                break;
            }
        }
        MatrixBlocks { d: self.d, intervals, hyp: (prefix + 1, self.d) }
    }
}

/// `[A]_{ij}` for `(i,j) < (n+1,n+1)` and `[A]^c_{n+1,n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixBlocks {
    d: u32,
    pub intervals: BTreeMap<(usize, usize), Interval>,
    pub hyp: Interval,
}

impl MatrixBlocks {
    pub fn parabolic(&self) -> ParabolicSubgroup {
        ParabolicSubgroup::new(self.d as usize, self.intervals.values().copied().collect(), Some(self.hyp))
            .expect("matrix blocks are disjoint")
    }
}

/// The unit matrix `E^θ_{ij} = E_{ij} + E_{τi+1,τj+1}` as signed entries.
pub fn e_theta_unit(n: usize, i: usize, j: usize) -> Result<Vec<i64>, OrbitError> {
    let big_n = 2 * n + 1;
    if i == 0 || j == 0 || i > big_n || j > big_n {
        return Err(OrbitError::IndexOutOfRange { i, j });
    }
    let mut a = vec![0; big_n * big_n];
    a[(i - 1) * big_n + (j - 1)] += 1;
    a[(big_n - i) * big_n + (big_n - j)] += 1;
    Ok(a)
}

/// `E^θ_{ij}(v, a) = diag(v) + a·E^θ_{ij}` for `v ∈ Λ_{c,d−a}`.
pub fn e_theta(i: usize, j: usize, v: &WeightVec, a: u32) -> Result<OrbitMatrix, OrbitError> {
    let unit = e_theta_unit(v.n(), i, j)?;
    let mut m = OrbitMatrix::diag(v).to_signed();
    for (x, u) in m.iter_mut().zip(unit) {
        *x += a as i64 * u;
    }
    OrbitMatrix::from_signed(v.n(), v.d() + a, &m)
}

/// `A ⪯ B`: equal row and column sums and
/// `Σ_{r≤i, s≥j} a_{rs} ≤ Σ_{r≤i, s≥j} b_{rs}` for all `i < j`.
pub fn leq_order(a: &OrbitMatrix, b: &OrbitMatrix) -> bool {
    if a.n != b.n || a.d != b.d || a.ro != b.ro || a.co != b.co {
        return false;
    }
    let big_n = a.big_n();
    for i in 1..big_n {
        for j in i + 1..=big_n {
            let mut sa = 0;
            let mut sb = 0;
            for r in 1..=i {
                for s in j..=big_n {
                    sa += a.get(r, s);
                    sb += b.get(r, s);
                }
            }
            if sa > sb {
                return false;
            }
        }
    }
    true
}

/// Every matrix of `Ξ_d`, sorted.
pub fn enumerate_xi(n: usize, d: u32) -> Vec<OrbitMatrix> {
    let big_n = 2 * n + 1;
    let mid = n;
    // Representatives of the θ-orbits on cells: the centre is fixed, all
    // other cells pair up.
    let mut reps = Vec::new();
    for i in 0..big_n {
        for j in 0..big_n {
            let (mi, mj) = (big_n - 1 - i, big_n - 1 - j);
            if (i, j) < (mi, mj) {
                reps.push((i, j));
            }
        }
    }
    let mut out = Vec::new();
    let mut vals = vec![0u32; reps.len()];
    fn rec(
        k: usize,
        left: u32,
        vals: &mut Vec<u32>,
        reps: &[(usize, usize)],
        big_n: usize,
        mid: usize,
        n: usize,
        d: u32,
        out: &mut Vec<OrbitMatrix>,
    ) {
        if k == reps.len() {
            let mut a = vec![0u32; big_n * big_n];
            for (t, &(i, j)) in reps.iter().enumerate() {
                a[i * big_n + j] = vals[t];
                a[(big_n - 1 - i) * big_n + (big_n - 1 - j)] = vals[t];
            }
            a[mid * big_n + mid] = 2 * left;
            out.push(OrbitMatrix::from_flat(n, d, a).expect("constructed θ-symmetric"));
            return;
        }
        for x in 0..=left {
            vals[k] = x;
            rec(k + 1, left - x, vals, reps, big_n, mid, n, d, out);
        }
        vals[k] = 0;
    }
    rec(0, d, &mut vals, &reps, big_n, mid, n, d, &mut out);
    out.sort();
    out
}

impl fmt::Display for OrbitMatrix {
    /// The matrix file format: `n d` followed by `N` rows.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.d)?;
        for row in self.rows() {
            let parts: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for OrbitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

impl FromStr for OrbitMatrix {
    type Err = OrbitError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |m: &str| OrbitError::InvalidMatrix(m.to_string());
        let mut nums = s.split_whitespace().map(|t| t.parse::<u32>());
        let n = nums.next().ok_or_else(|| bad("missing n"))?.map_err(|_| bad("bad n"))? as usize;
        let d = nums.next().ok_or_else(|| bad("missing d"))?.map_err(|_| bad("bad d"))?;
        let rest: Result<Vec<u32>, _> = nums.collect();
        let rest = rest.map_err(|_| bad("bad entry"))?;
        OrbitMatrix::from_flat(n, d, rest)
    }
}
