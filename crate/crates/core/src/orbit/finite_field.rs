//! Isotropic flags in `F_q^{2d}` and their relative positions.
//!
//! The form is `Ω = [[0, J_d], [−J_d, 0]]` with `J_d` the antidiagonal
//! identity.

use super::matrix::OrbitMatrix;
use super::weight::WeightVec;
use super::OrbitError;
use itertools::Itertools;

/// Arithmetic in `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fp {
    p: u8,
    inv: Vec<u8>,
}

impl Fp {
    pub fn new(p: u8) -> Result<Self, OrbitError> {
        if p < 2 || (2..p).any(|k| p % k == 0) {
            return Err(OrbitError::NotPrime(p));
        }
        let mut inv = vec![0u8; p as usize];
        for a in 1..p {
            inv[a as usize] = (1..p).find(|&b| (a as u32 * b as u32) % p as u32 == 1).expect("field");
        }
        Ok(Fp { p, inv })
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        ((a as u16 + b as u16) % self.p as u16) as u8
    }

    pub fn neg(&self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.p as u16) as u8
    }

    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "inverse of zero");
        self.inv[a as usize]
    }

    /// Reduced row echelon form; zero rows removed.
    pub fn rref(&self, rows: &[Vec<u8>]) -> Vec<Vec<u8>> {
        let mut m: Vec<Vec<u8>> = rows.to_vec();
        let cols = m.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..cols {
            let Some(piv) = (r..m.len()).find(|&k| m[k][c] != 0) else { continue };
            m.swap(r, piv);
            let s = self.inv(m[r][c]);
            for x in m[r].iter_mut() {
                *x = self.mul(*x, s);
            }
            for k in 0..m.len() {
                if k != r && m[k][c] != 0 {
                    let f = self.neg(m[k][c]);
                    for t in 0..cols {
                        let v = self.mul(f, m[r][t]);
                        m[k][t] = self.add(m[k][t], v);
                    }
                }
            }
            r += 1;
            if r == m.len() {
                break;
            }
        }
        m.truncate(r);
        m
    }

    /// Basis of `{c : Σ_k c_k rows_k = 0}`.
    pub fn left_kernel(&self, rows: &[Vec<u8>]) -> Vec<Vec<u8>> {
        let k = rows.len();
        if k == 0 {
            return Vec::new();
        }
        let cols = rows[0].len();
        // Augment with the identity and eliminate on the left part.
        let aug: Vec<Vec<u8>> = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut v = r.clone();
                v.extend((0..k).map(|t| u8::from(t == i)));
                v
            })
            .collect();
        let mut m = aug;
        let mut r = 0;
        for c in 0..cols {
            let Some(piv) = (r..k).find(|&t| m[t][c] != 0) else { continue };
            m.swap(r, piv);
            let s = self.inv(m[r][c]);
            for x in m[r].iter_mut() {
                *x = self.mul(*x, s);
            }
            for t in 0..k {
                if t != r && m[t][c] != 0 {
                    let f = self.neg(m[t][c]);
                    for u in 0..cols + k {
                        let v = self.mul(f, m[r][u]);
                        m[t][u] = self.add(m[t][u], v);
                    }
                }
            }
            r += 1;
        }
        m[r..].iter().map(|row| row[cols..].to_vec()).collect()
    }
}

/// A subspace given by its reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    dim_ambient: usize,
    basis: Vec<Vec<u8>>,
}

impl Subspace {
    pub fn span(f: &Fp, dim_ambient: usize, vectors: &[Vec<u8>]) -> Self {
        Subspace { dim_ambient, basis: f.rref(vectors) }
    }

    pub fn zero(dim_ambient: usize) -> Self {
        Subspace { dim_ambient, basis: Vec::new() }
    }

    pub fn whole(dim_ambient: usize) -> Self {
        let basis = (0..dim_ambient).map(|i| (0..dim_ambient).map(|j| u8::from(i == j)).collect()).collect();
        Subspace { dim_ambient, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.basis
    }

    pub fn sum(&self, f: &Fp, other: &Subspace) -> Subspace {
        let all: Vec<Vec<u8>> = self.basis.iter().chain(&other.basis).cloned().collect();
        Subspace::span(f, self.dim_ambient, &all)
    }

    pub fn intersect(&self, f: &Fp, other: &Subspace) -> Subspace {
        if self.basis.is_empty() || other.basis.is_empty() {
            return Subspace::zero(self.dim_ambient);
        }
        // αU = βW ⟺ (α, −β) lies in the left kernel of [U; W].
        let stacked: Vec<Vec<u8>> = self.basis.iter().chain(&other.basis).cloned().collect();
        let vecs: Vec<Vec<u8>> = f
            .left_kernel(&stacked)
            .into_iter()
            .map(|c| {
                let mut v = vec![0u8; self.dim_ambient];
                for (t, row) in self.basis.iter().enumerate() {
                    for (x, &b) in v.iter_mut().zip(row) {
                        *x = f.add(*x, f.mul(c[t], b));
                    }
                }
                v
            })
            .collect();
        Subspace::span(f, self.dim_ambient, &vecs)
    }

    pub fn contains(&self, f: &Fp, other: &Subspace) -> bool {
        self.sum(f, other).dim() == self.dim()
    }

    /// `U^⊥` for the form `Ω`.
    pub fn perp(&self, f: &Fp) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::whole(self.dim_ambient);
        }
        // v ∈ U^⊥ ⟺ (u Ω) · v = 0 for every basis u.
        let forms: Vec<Vec<u8>> = self.basis.iter().map(|u| omega_row(f, u)).collect();
        let transposed: Vec<Vec<u8>> = (0..self.dim_ambient).map(|c| forms.iter().map(|r| r[c]).collect()).collect();
        Subspace::span(f, self.dim_ambient, &f.left_kernel(&transposed))
    }

    pub fn is_isotropic(&self, f: &Fp) -> bool {
        self.basis.iter().all(|u| {
            let w = omega_row(f, u);
            self.basis.iter().all(|v| dot(f, &w, v) == 0)
        })
    }
}

/// `u Ω` with `Ω_{i,2d+1−i} = 1` for `i ≤ d`, `−1` for `i > d`.
fn omega_row(f: &Fp, u: &[u8]) -> Vec<u8> {
    let m = u.len();
    let d = m / 2;
    let mut out = vec![0u8; m];
    for i in 0..m {
        let j = m - 1 - i;
        out[j] = if i < d { u[i] } else { f.neg(u[i]) };
    }
    out
}

fn dot(f: &Fp, a: &[u8], b: &[u8]) -> u8 {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// Every `k`-dimensional subspace of `F_p^m`, via reduced echelon forms.
pub fn subspaces(f: &Fp, m: usize, k: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    for pivots in (0..m).combinations(k) {
        let free: Vec<(usize, usize)> =
            (0..k).flat_map(|r| ((pivots[r] + 1)..m).filter(|c| !pivots.contains(c)).map(move |c| (r, c))).collect();
        let total = (f.p() as usize).pow(free.len() as u32);
        for code in 0..total {
            let mut rows = vec![vec![0u8; m]; k];
            for (r, &c) in pivots.iter().enumerate() {
                rows[r][c] = 1;
            }
            let mut x = code;
            for &(r, c) in &free {
                rows[r][c] = (x % f.p() as usize) as u8;
                x /= f.p() as usize;
            }
            out.push(Subspace { dim_ambient: m, basis: rows });
        }
    }
    out
}

/// `V_1 ⊂ … ⊂ V_N = F_q^{2d}` with `V_i = V_{N−i}^⊥`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqFlag {
    p: u8,
    ty: WeightVec,
    spaces: Vec<Subspace>,
}

impl FqFlag {
    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn weight(&self) -> &WeightVec {
        &self.ty
    }

    /// `V_i`, `0 ≤ i ≤ N`.
    pub fn space(&self, i: usize) -> &Subspace {
        &self.spaces[i]
    }

    /// Completes the isotropic half `V_1..V_n` by perpendiculars.
    pub fn from_half(f: &Fp, ty: WeightVec, half: Vec<Subspace>) -> Result<Self, OrbitError> {
        let n = ty.n();
        let m = 2 * ty.d() as usize;
        if half.len() != n {
            return Err(OrbitError::IncompatibleFlags);
        }
        let mut spaces = vec![Subspace::zero(m)];
        spaces.extend(half);
        for i in (0..=n).rev() {
            let perp = spaces[i].perp(f);
            spaces.push(perp);
        }
        for i in 1..spaces.len() {
            if spaces[i].dim() != ty.bar(i) as usize || !spaces[i].contains(f, &spaces[i - 1]) {
                return Err(OrbitError::IncompatibleFlags);
            }
        }
        Ok(FqFlag { p: f.p(), ty, spaces })
    }
}

/// Every isotropic flag of type `v` over `F_p`.
pub fn enumerate_flags(f: &Fp, v: &WeightVec) -> Vec<FqFlag> {
    let m = 2 * v.d() as usize;
    let n = v.n();
    let levels: Vec<Vec<Subspace>> = (1..=n)
        .map(|i| subspaces(f, m, v.bar(i) as usize).into_iter().filter(|s| s.is_isotropic(f)).collect())
        .collect();
    let mut out = Vec::new();
    let mut chain: Vec<Subspace> = Vec::new();
    fn rec(f: &Fp, levels: &[Vec<Subspace>], chain: &mut Vec<Subspace>, v: &WeightVec, out: &mut Vec<FqFlag>) {
        let i = chain.len();
        if i == levels.len() {
            out.push(FqFlag::from_half(f, v.clone(), chain.clone()).expect("isotropic chain"));
            return;
        }
        for s in &levels[i] {
            if chain.last().map_or(true, |prev| s.contains(f, prev)) {
                chain.push(s.clone());
                rec(f, levels, chain, v, out);
                chain.pop();
            }
        }
    }
    rec(f, &levels, &mut chain, v, &mut out);
    out
}

/// `a_{ij} = dim (V_i ∩ V'_j) / (V_{i−1} ∩ V'_j + V_i ∩ V'_{j−1})`.
pub fn relpos(f: &Fp, a: &FqFlag, b: &FqFlag) -> Result<OrbitMatrix, OrbitError> {
    if a.p != b.p || a.p != f.p() || a.ty.n() != b.ty.n() || a.ty.d() != b.ty.d() {
        return Err(OrbitError::IncompatibleFlags);
    }
    let big_n = a.ty.big_n();
    let cap: Vec<Vec<Subspace>> =
        (0..=big_n).map(|i| (0..=big_n).map(|j| a.spaces[i].intersect(f, &b.spaces[j])).collect()).collect();
    let mut entries = Vec::with_capacity(big_n * big_n);
    for i in 1..=big_n {
        for j in 1..=big_n {
            let lower = cap[i - 1][j].sum(f, &cap[i][j - 1]);
            entries.push((cap[i][j].dim() - lower.dim()) as u32);
        }
    }
    OrbitMatrix::from_flat(a.ty.n(), a.ty.d(), entries)
}

/// `dim(V_i ∩ V'_j)` for all `i, j`.
pub fn intersection_dims(f: &Fp, a: &FqFlag, b: &FqFlag) -> Vec<Vec<usize>> {
    let big_n = a.ty.big_n();
    (0..=big_n).map(|i| (0..=big_n).map(|j| a.spaces[i].intersect(f, &b.spaces[j]).dim()).collect()).collect()
}
