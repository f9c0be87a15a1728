//! Brute-force `M(A, B)` from flag triples over `F_q`.

use super::finite_field::{enumerate_flags, relpos, Fp, FqFlag};
use super::matrix::OrbitMatrix;
use super::weight::WeightVec;
use super::OrbitError;
use rayon::prelude::*;
use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

/// Default cap on the number of flags of a single type.
pub const DEFAULT_BUDGET: usize = 20_000;

/// `IYANG_BUDGET`, falling back to [`DEFAULT_BUDGET`].
pub fn budget_from_env() -> usize {
    std::env::var("IYANG_BUDGET").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_BUDGET)
}

/// Relative positions between all flags of two types, interned.
#[derive(Debug)]
pub struct RelTable {
    pub mats: Vec<OrbitMatrix>,
    rows: usize,
    cols: usize,
    idx: Vec<u32>,
}

impl RelTable {
    pub fn get(&self, r: usize, c: usize) -> &OrbitMatrix {
        &self.mats[self.idx[r * self.cols + c] as usize]
    }

    fn id_of(&self, m: &OrbitMatrix) -> Option<u32> {
        self.mats.iter().position(|x| x == m).map(|k| k as u32)
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
}

/// Gaussian-binomial style count of isotropic flags of type `v` over `F_q`.
pub fn flag_count(v: &WeightVec, q: u64) -> u128 {
    // Choose V_1 ⊂ … ⊂ V_n isotropic: at step i pick a subspace of
    // dimension v_i inside (V_{i−1})^⊥ / V_{i−1}, isotropic.
    let d = v.d() as u64;
    let mut total: u128 = 1;
    let mut used = 0u64;
    for i in 1..=v.n() {
        let k = v.get(i) as u64;
        let rank = d - used;
        // Isotropic k-subspaces of a symplectic space of dimension 2·rank.
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for t in 0..k {
            num *= (q as u128).pow(2 * (rank - t) as u32) - 1;
            den *= (q as u128).pow((t + 1) as u32) - 1;
        }
        total *= num / den;
        used += k;
    }
    total
}

/// Flags and relative-position tables over one prime field, cached.
pub struct FlagOracle {
    f: Fp,
    budget: usize,
    flags: HashMap<WeightVec, Arc<Vec<FqFlag>>>,
    tables: HashMap<(WeightVec, WeightVec), Arc<RelTable>>,
}

impl FlagOracle {
    pub fn new(q: u8, budget: usize) -> Result<Self, OrbitError> {
        Ok(FlagOracle { f: Fp::new(q)?, budget, flags: HashMap::new(), tables: HashMap::new() })
    }

    pub fn field(&self) -> &Fp {
        &self.f
    }

    pub fn flags(&mut self, v: &WeightVec) -> Result<Arc<Vec<FqFlag>>, OrbitError> {
        if let Some(fl) = self.flags.get(v) {
            return Ok(fl.clone());
        }
        let count = flag_count(v, self.f.p() as u64);
        if count > self.budget as u128 {
            return Err(OrbitError::TooLarge { count, budget: self.budget });
        }
        let fl = Arc::new(enumerate_flags(&self.f, v));
        debug_assert_eq!(fl.len() as u128, count);
        self.flags.insert(v.clone(), fl.clone());
        Ok(fl)
    }

    pub fn table(&mut self, v: &WeightVec, w: &WeightVec) -> Result<Arc<RelTable>, OrbitError> {
        let key = (v.clone(), w.clone());
        if let Some(t) = self.tables.get(&key) {
            return Ok(t.clone());
        }
        let fv = self.flags(v)?;
        let fw = self.flags(w)?;
        let f = &self.f;
        let rows: Vec<Vec<OrbitMatrix>> =
            fv.par_iter().map(|a| fw.iter().map(|b| relpos(f, a, b).expect("same field and d")).collect()).collect();
        let mut mats: Vec<OrbitMatrix> = rows.iter().flatten().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        mats.shrink_to_fit();
        let idx = rows.iter().flatten().map(|m| mats.binary_search(m).expect("interned") as u32).collect();
        let t = Arc::new(RelTable { mats, rows: fv.len(), cols: fw.len(), idx });
        self.tables.insert(key, t.clone());
        Ok(t)
    }

    /// `{ relpos(F, F'') : relpos(F, F') = A, relpos(F', F'') = B }`, sorted.
    pub fn compose_set(&mut self, a: &OrbitMatrix, b: &OrbitMatrix) -> Result<Vec<OrbitMatrix>, OrbitError> {
        if a.co() != b.ro() {
            return Err(OrbitError::RowColMismatch);
        }
        let (v, w, u) = (a.ro().clone(), a.co().clone(), b.co().clone());
        let t_vw = self.table(&v, &w)?;
        let t_wu = self.table(&w, &u)?;
        let t_vu = self.table(&v, &u)?;
        let (Some(ia), Some(ib)) = (t_vw.id_of(a), t_wu.id_of(b)) else {
            return Ok(Vec::new());
        };
        let (nv, nw) = t_vw.dims();
        let nu = t_wu.dims().1;
        // For each F', the F'' in position B.
        let by_mid: Vec<Vec<usize>> =
            (0..nw).map(|m| (0..nu).filter(|&z| t_wu.idx[m * nu + z] == ib).collect()).collect();
        let found: BTreeSet<u32> = (0..nv)
            .into_par_iter()
            .map(|x| {
                let mut reach = vec![false; nu];
                for m in 0..nw {
                    if t_vw.idx[x * nw + m] == ia {
                        for &z in &by_mid[m] {
                            reach[z] = true;
                        }
                    }
                }
                (0..nu).filter(|&z| reach[z]).map(|z| t_vu.idx[x * nu + z]).collect::<BTreeSet<u32>>()
            })
            .reduce(BTreeSet::new, |mut s, o| {
                s.extend(o);
                s
            });
        Ok(found.into_iter().map(|k| t_vu.mats[k as usize].clone()).collect())
    }
}

/// One-shot [`FlagOracle::compose_set`] with the budget from the environment.
pub fn oracle_compose_set(a: &OrbitMatrix, b: &OrbitMatrix, q: u8) -> Result<Vec<OrbitMatrix>, OrbitError> {
    FlagOracle::new(q, budget_from_env())?.compose_set(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> OrbitMatrix {
        s.parse().unwrap()
    }

    #[test]
    fn xi1_example_over_f3() {
        let a = m("1 1\n0 1 0\n0 0 0\n0 1 0");
        let b = m("1 1\n0 0 0\n1 0 1\n0 0 0");
        let got = oracle_compose_set(&a, &b, 3).unwrap();
        let mut want = vec![m("1 1\n0 0 1\n0 0 0\n1 0 0"), m("1 1\n1 0 0\n0 0 0\n0 0 1")];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn counts_match_formula() {
        let v: WeightVec = "1,1,0,1,1".parse().unwrap();
        assert_eq!(flag_count(&v, 3), 160);
        let mut o = FlagOracle::new(3, 1000).unwrap();
        assert_eq!(o.flags(&v).unwrap().len(), 160);
        let mut tiny = FlagOracle::new(3, 10).unwrap();
        assert!(matches!(tiny.flags(&v), Err(OrbitError::TooLarge { .. })));
    }
}
