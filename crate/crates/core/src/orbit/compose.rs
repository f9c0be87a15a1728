//! The sets `M(A, B)` for `A = E^θ_{h,h+1}(v, a)` and their maxima.

use super::matrix::{e_theta, e_theta_unit, leq_order, OrbitMatrix};
use super::weight::WeightVec;
use super::OrbitError;

/// `E^θ_{h,h+1}(v, a)` with `v ∈ Λ_{c,d−a}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaElementary {
    pub h: usize,
    pub base: WeightVec,
    pub a: u32,
}

impl ThetaElementary {
    pub fn new(h: usize, base: WeightVec, a: u32) -> Result<Self, OrbitError> {
        if h == 0 || h >= base.big_n() {
            return Err(OrbitError::IndexOutOfRange { i: h, j: h + 1 });
        }
        Ok(ThetaElementary { h, base, a })
    }

    pub fn matrix(&self) -> OrbitMatrix {
        e_theta(self.h, self.h + 1, &self.base, self.a).expect("h, h+1 in range")
    }

    /// Recovers `(h, v, a)` from a matrix of that form. Diagonal matrices
    /// are read with `h = 1, a = 0`.
    pub fn recognize(m: &OrbitMatrix) -> Result<Self, OrbitError> {
        let big_n = m.big_n();
        let n = m.n();
        let mut diag: Vec<u32> = (1..=big_n).map(|i| m.get(i, i)).collect();
        if m.is_diagonal() {
            let base = WeightVec::new(n, m.d(), diag)?;
            return ThetaElementary::new(1, base, 0);
        }
        for h in 1..big_n {
            let a = m.get(h, h + 1);
            if a == 0 {
                continue;
            }
            let unit = e_theta_unit(n, h, h + 1)?;
            let mut rest = m.to_signed();
            for (x, u) in rest.iter_mut().zip(&unit) {
                *x -= a as i64 * u;
            }
            let off_diag_zero = (0..big_n).all(|i| (0..big_n).all(|j| i == j || rest[i * big_n + j] == 0));
            if !off_diag_zero || (0..big_n).any(|i| rest[i * big_n + i] < 0) {
                continue;
            }
            diag = (0..big_n).map(|i| rest[i * big_n + i] as u32).collect();
            let base = WeightVec::new(n, m.d() - a, diag)?;
            return ThetaElementary::new(h, base, a);
        }
        Err(OrbitError::NotElementary(format!("{m:?}")))
    }
}

/// All `s ∈ ℕ^N` with `Σ s_j = a` and `s_j ≤ caps_j`.
fn bounded_compositions(a: u32, caps: &[u32]) -> Vec<Vec<u32>> {
    fn rec(k: usize, left: u32, caps: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == caps.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest: u32 = caps[k + 1..].iter().sum();
        let lo = left.saturating_sub(rest);
        for x in lo..=caps[k].min(left) {
            cur.push(x);
            rec(k + 1, left - x, caps, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, a, caps, &mut Vec::new(), &mut out);
    out
}

/// `C = B + Σ_j s_j (E^θ_{hj} − E^θ_{h+1,j})`.
fn generic_candidate(h: usize, s: &[u32], b: &OrbitMatrix) -> Vec<i64> {
    let n = b.n();
    let mut c = b.to_signed();
    for (j0, &sj) in s.iter().enumerate() {
        if sj == 0 {
            continue;
        }
        let plus = e_theta_unit(n, h, j0 + 1).expect("in range");
        let minus = e_theta_unit(n, h + 1, j0 + 1).expect("in range");
        for k in 0..c.len() {
            c[k] += sj as i64 * (plus[k] - minus[k]);
        }
    }
    c
}

/// The `h = n+1` candidate written cell by cell:
/// `C = B − Σ_j s_j (E_{n,τj+1} + E_{n+2,j}) + Σ_j (s_j + s_{τj+1}) E_{n+1,j}`.
fn middle_row_candidate(s: &[u32], b: &OrbitMatrix) -> Vec<i64> {
    let n = b.n();
    let big_n = b.big_n();
    let mut c = b.to_signed();
    let cell = |i: usize, j: usize| (i - 1) * big_n + (j - 1);
    for j in 1..=big_n {
        let sj = s[j - 1] as i64;
        let tj1 = big_n + 1 - j;
        c[cell(n, tj1)] -= sj;
        c[cell(n + 2, j)] -= sj;
        c[cell(n + 1, j)] += sj + s[tj1 - 1] as i64;
    }
    c
}

/// `M(A, B)`: every `C` allowed by the case analysis on `h`, sorted.
pub fn compose_set(a: &ThetaElementary, b: &OrbitMatrix) -> Result<Vec<OrbitMatrix>, OrbitError> {
    let am = a.matrix();
    if am.co() != b.ro() {
        return Err(OrbitError::RowColMismatch);
    }
    let n = b.n();
    let big_n = b.big_n();
    let h = a.h;
    let mut out = Vec::new();
    if h == n {
        // Row n+1 loses s_j + s_{τj+1} in column j.
        let caps: Vec<u32> = (1..=big_n).map(|j| b.get(n + 1, j)).collect();
        for s in bounded_compositions(a.a, &caps) {
            let ok = (1..=big_n).all(|j| s[j - 1] + s[big_n - j] <= b.get(n + 1, j));
            if ok {
                out.push(generic_candidate(h, &s, b));
            }
        }
    } else {
        let caps: Vec<u32> = (1..=big_n).map(|j| b.get(h + 1, j)).collect();
        for s in bounded_compositions(a.a, &caps) {
            let c = generic_candidate(h, &s, b);
            if h == n + 1 {
                let direct = middle_row_candidate(&s, b);
                assert_eq!(direct, c, "h = n+1 cellwise form disagrees with the generic formula");
                let ok = (1..=big_n).all(|j| s[j - 1] <= b.get(n, big_n + 1 - j));
                assert!(ok, "θ-symmetry makes both caps agree");
            }
            out.push(c);
        }
    }
    let mut mats = Vec::with_capacity(out.len());
    for c in out {
        let m = OrbitMatrix::from_signed(n, b.d(), &c)
            .map_err(|e| OrbitError::InvalidMatrix(format!("compose_set produced an invalid matrix: {e}")))?;
        debug_assert_eq!(m.ro(), am.ro());
        debug_assert_eq!(m.co(), b.co());
        mats.push(m);
    }
    mats.sort();
    mats.dedup();
    Ok(mats)
}

/// `A∘B`: the unique `⪯`-maximum of `M(A, B)`.
pub fn compose_max(a: &ThetaElementary, b: &OrbitMatrix) -> Result<OrbitMatrix, OrbitError> {
    let set = compose_set(a, b)?;
    let maxima: Vec<&OrbitMatrix> = set.iter().filter(|c| set.iter().all(|o| leq_order(o, c))).collect();
    match maxima.as_slice() {
        [m] => Ok((*m).clone()),
        _ => Err(OrbitError::NoUniqueMax),
    }
}

/// For nondiagonal `C`, the pair `(A, B)` with `(h, l)` the right-lex largest
/// off-diagonal position above the diagonal with `c_{hl} ≠ 0`.
pub fn split_off_elementary(c: &OrbitMatrix) -> Result<(ThetaElementary, OrbitMatrix), OrbitError> {
    let big_n = c.big_n();
    let n = c.n();
    let mut best: Option<(usize, usize)> = None;
    for l in 1..=big_n {
        for h in 1..l {
            if c.get(h, l) != 0 {
                best = Some((h, l));
            }
        }
    }
    let (h, l) = best.ok_or_else(|| OrbitError::NotElementary("diagonal matrix".into()))?;
    let chl = c.get(h, l);
    let up = e_theta_unit(n, h + 1, l)?;
    let down = e_theta_unit(n, h, l)?;
    let mut bm = c.to_signed();
    for k in 0..bm.len() {
        bm[k] += chl as i64 * (up[k] - down[k]);
    }
    let b = OrbitMatrix::from_signed(n, c.d(), &bm)?;
    let mut base: Vec<i64> = c.ro().entries().iter().map(|&x| x as i64).collect();
    base[h - 1] -= chl as i64;
    base[big_n - h] -= chl as i64;
    if base.iter().any(|&x| x < 0) {
        return Err(OrbitError::InvalidMatrix("negative base weight".into()));
    }
    let base = WeightVec::new(n, c.d() - chl, base.into_iter().map(|x| x as u32).collect())?;
    Ok((ThetaElementary::new(h, base, chl)?, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::matrix::enumerate_xi;

    fn m(s: &str) -> OrbitMatrix {
        s.parse().unwrap()
    }

    #[test]
    fn xi1_example() {
        let a = ThetaElementary::recognize(&m("1 1\n0 1 0\n0 0 0\n0 1 0")).unwrap();
        assert_eq!((a.h, a.a), (1, 1));
        let b = m("1 1\n0 0 0\n1 0 1\n0 0 0");
        let set = compose_set(&a, &b).unwrap();
        let expected = vec![m("1 1\n0 0 1\n0 0 0\n1 0 0"), m("1 1\n1 0 0\n0 0 0\n0 0 1")];
        let mut expected = expected;
        expected.sort();
        assert_eq!(set, expected);
        assert_eq!(compose_max(&a, &b).unwrap(), m("1 1\n0 0 1\n0 0 0\n1 0 0"));
    }

    #[test]
    fn zero_a_gives_b() {
        let b = m("1 1\n0 0 0\n1 0 1\n0 0 0");
        let a = ThetaElementary::new(1, b.ro().clone(), 0).unwrap();
        assert_eq!(compose_set(&a, &b).unwrap(), vec![b.clone()]);
        assert_eq!(compose_max(&a, &b).unwrap(), b);
    }

    #[test]
    fn round_trip_small() {
        for c in enumerate_xi(1, 2).into_iter().filter(|c| !c.is_diagonal()) {
            let (a, b) = split_off_elementary(&c).unwrap();
            assert_eq!(compose_max(&a, &b).unwrap(), c);
        }
    }
}
