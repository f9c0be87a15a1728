//! Acceptance suite: one PASS/FAIL line per criterion.

use iyang::arith::{GaussRat, Poly};
use iyang::operators::{
    apply_b_pushforward, apply_b_series, coset_constant, expected_hhat_top, h_negative_part, h_series, hhat,
    hhat_matrix_det, idempotent_iv, iv_scalar, truncation_identity_holds, uh_negative_part, Mutation, OpContext,
};
use iyang::orbit::{
    budget_from_env, compose_max, compose_set, e_theta, enum_weights, enumerate_xi, leq_order, split_off_elementary,
    FlagOracle, OrbitMatrix, ThetaElementary,
};
use iyang::rep::{basis_of_component, PElem};
use iyang::verify::{verify_all, RelTag, SuiteOptions, SuiteReport};
use rand::{Rng, SeedableRng};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

const CASES: [(usize, u32); 3] = [(1, 1), (1, 2), (2, 2)];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn is_series(tag: RelTag) -> bool {
    matches!(tag, RelTag::SeriesHtau | RelTag::SeriesBb0)
}

fn first_failure(r: &SuiteReport, series: bool) -> Option<String> {
    r.failures().find(|f| is_series(f.id.relation) == series).map(|f| {
        let w = f.witness.as_ref().expect("witness");
        format!("{} on [{}] {}: {} != {}", f.id, w.component, w.element, w.lhs, w.rhs)
    })
}

fn c1(reports: &[SuiteReport], elapsed: Duration) -> Outcome {
    let mut counts = Vec::new();
    for r in reports {
        let s = &r.suite;
        if let Some(f) = first_failure(r, false) {
            return Err(format!("(n,d)=({},{}): {f}", s.n, s.d));
        }
        let tags: std::collections::BTreeSet<RelTag> =
            r.results.iter().map(|x| x.id.relation).filter(|t| !is_series(*t)).collect();
        // For n = 1 no pair has c_ij = 0, and the only pair with c_ij = −1 is (i, τi).
        let expected: std::collections::BTreeSet<RelTag> = RelTag::ALL
            .into_iter()
            .filter(|t| !is_series(*t))
            .filter(|t| s.n > 1 || !matches!(t, RelTag::SerreCij0 | RelTag::SerreCij1))
            .collect();
        ensure(tags == expected, || format!("families {tags:?}, expected {expected:?}"))?;
        counts.push(format!("({},{}):{}", s.n, s.d, r.results.iter().filter(|x| !is_series(x.id.relation)).count()));
    }
    ensure(elapsed <= Duration::from_secs(600), || format!("took {elapsed:?}"))?;
    Ok(format!("instances {} in {:.1}s", counts.join(" "), elapsed.as_secs_f64()))
}

fn c2(reports: &[SuiteReport]) -> Outcome {
    let mut total = 0;
    for r in reports {
        let s = &r.suite;
        if let Some(f) = first_failure(r, true) {
            return Err(format!("(n,d)=({},{}): {f}", s.n, s.d));
        }
        let k_ok =
            r.results.iter().filter(|x| x.id.relation == RelTag::SeriesHtau).all(|x| x.id.param("K").ok() == Some(5));
        ensure(k_ok, || "series checks not at K=5".into())?;
        let n = r.results.iter().filter(|x| is_series(x.id.relation)).count();
        ensure(n > 0, || "no series checks ran".into())?;
        total += n;
    }
    Ok(format!("{total} series instances at K=5"))
}

fn c3() -> Outcome {
    let mut checked = 0usize;
    for (n, d) in CASES {
        let ctx = OpContext::new(n, d);
        for v in enum_weights(n, d) {
            for b in basis_of_component(&v, 3).map_err(|e| e.to_string())? {
                let e = b.to_pelem();
                for i in 1..=n + 1 {
                    let s = apply_b_series(i, &e, 3).map_err(|e| e.to_string())?;
                    for r in 0..=2 {
                        let direct = ctx.apply_b(i, r, &e).map_err(|e| e.to_string())?;
                        let from_series = s.coefficient(r + 1).map_err(|e| e.to_string())?;
                        ensure(from_series == direct.scale_poly(&Poly::hbar()), || {
                            format!("series path differs: n={n} d={d} i={i} r={r} on {e}")
                        })?;
                        let push = apply_b_pushforward(i, r, &e).map_err(|e| e.to_string())?;
                        ensure(push == direct, || format!("pushforward differs: n={n} d={d} i={i} r={r} on {e}"))?;
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{checked} (element, i, r) triples agree on all three paths"))
}

fn c4() -> Outcome {
    let mut vals = Vec::new();
    for a in 0..=3u32 {
        let got = coset_constant(a, a + 1, 0).map_err(|e| e.to_string())?;
        let want = GaussRat::from(if a % 2 == 0 { 1 } else { -1 } * (a as i64 + 1));
        ensure(got == want, || format!("a={a}: got {got}, want {want}"))?;
        vals.push(got.to_string());
    }
    Ok(format!("constants {}", vals.join(", ")))
}

fn c5() -> Outcome {
    let mut pairs = 0;
    for (n, d) in CASES {
        let ctx = OpContext::new(n, d);
        let weights = enum_weights(n, d);
        for v in &weights {
            for u in &weights {
                let s = iv_scalar(&ctx, v, u, 2 * d as i64).map_err(|e| e.to_string())?;
                let want = if u == v { 1 } else { 0 };
                ensure(s == iyang::arith::Rational::from_int(want), || format!("I_{v} on P_{u} acts by {s}"))?;
                for b in basis_of_component(u, 2).map_err(|e| e.to_string())? {
                    let e = b.to_pelem();
                    let got = idempotent_iv(&ctx, v, &e).map_err(|e| e.to_string())?;
                    let expect = if u == v { e.clone() } else { PElem::zero() };
                    ensure(got == expect, || format!("I_{v} on {e} gave {got}"))?;
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} (v, u) pairs"))
}

fn c6() -> Outcome {
    for n in 1..=4usize {
        let det = hhat_matrix_det(n);
        let want = if n % 2 == 0 { 1 } else { -1 } * (2 * n as i64 + 1);
        ensure(det == want, || format!("n={n}: det {det}, want {want}"))?;
    }
    let mut checked = 0;
    for (n, d) in [(1, 2), (2, 2)] {
        for v in enum_weights(n, d) {
            for i in 1..=n {
                for k in 1..=3usize {
                    let got = hhat(i, k, &v).map_err(|e| e.to_string())?.top_part(k as u32);
                    let want = expected_hhat_top(i, k, &v);
                    ensure(got == want, || format!("i={i} k={k} v={v}: {got} vs {want}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("determinants for n ≤ 4; {checked} top parts"))
}

/// Every `E^θ_{h,h+1}(v, a)` in `Ξ_d` with `a ≥ 1`.
fn elementaries(n: usize, d: u32) -> Vec<ThetaElementary> {
    let big_n = 2 * n + 1;
    let mut out = Vec::new();
    for a in 1..=d {
        for base in enum_weights(n, d - a) {
            for h in 1..big_n {
                if e_theta(h, h + 1, &base, a).is_ok() {
                    out.push(ThetaElementary::new(h, base.clone(), a).expect("valid h"));
                }
            }
        }
    }
    out
}

fn pairs(n: usize, d: u32) -> Vec<(ThetaElementary, OrbitMatrix)> {
    let xi = enumerate_xi(n, d);
    let mut out = Vec::new();
    for a in elementaries(n, d) {
        let am = a.matrix();
        for b in xi.iter().filter(|b| b.ro() == am.co()) {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

fn c7() -> Outcome {
    let mut n_pairs = 0;
    let mut n_round = 0;
    for n in 1..=2usize {
        for d in 1..=2u32 {
            let xi = enumerate_xi(n, d);
            for (a, b) in pairs(n, d) {
                let am = a.matrix();
                let set = compose_set(&a, &b).map_err(|e| e.to_string())?;
                ensure(!set.is_empty(), || format!("empty M(A,B) for {am:?}, {b:?}"))?;
                for c in &set {
                    ensure(xi.contains(c) && c.ro() == am.ro() && c.co() == b.co(), || {
                        format!("{c:?} violates the constraints for {am:?}, {b:?}")
                    })?;
                }
                let max = compose_max(&a, &b).map_err(|e| format!("{am:?}, {b:?}: {e}"))?;
                let tops = set.iter().filter(|c| set.iter().all(|o| leq_order(o, c))).count();
                ensure(tops == 1 && set.iter().all(|o| leq_order(o, &max)), || {
                    format!("maximum not unique for {am:?}, {b:?}")
                })?;
                n_pairs += 1;
            }
            if d == 2 {
                for c in xi.iter().filter(|c| !c.is_diagonal()) {
                    let (a, b) = split_off_elementary(c).map_err(|e| e.to_string())?;
                    let back = compose_max(&a, &b).map_err(|e| e.to_string())?;
                    ensure(&back == c, || format!("round trip of {c:?} gave {back:?}"))?;
                    n_round += 1;
                }
            }
        }
    }
    Ok(format!("{n_pairs} pairs, {n_round} round trips over Ξ_2"))
}

fn c8() -> Outcome {
    let start = Instant::now();
    let mut equal_q3 = 0;
    let mut total_q3 = 0;
    let mut strict = Vec::new();
    for q in [2u8, 3] {
        let mut oracle = FlagOracle::new(q, budget_from_env()).map_err(|e| e.to_string())?;
        for n in 1..=2usize {
            for d in 1..=2u32 {
                for (a, b) in pairs(n, d) {
                    let am = a.matrix();
                    let comb = compose_set(&a, &b).map_err(|e| e.to_string())?;
                    let found = oracle.compose_set(&am, &b).map_err(|e| e.to_string())?;
                    ensure(found.iter().all(|m| comb.contains(m)), || {
                        format!("q={q}: oracle found a matrix outside M(A,B) for {am:?}, {b:?}")
                    })?;
                    if q == 3 {
                        total_q3 += 1;
                        if found == comb {
                            equal_q3 += 1;
                        } else {
                            strict.push(format!("{am:?} ∘ {b:?}"));
                        }
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed <= Duration::from_secs(120), || format!("took {elapsed:?}"))?;
    for s in &strict {
        println!("    q=3 strict subset: {s}");
    }
    Ok(format!("subset for q ∈ {{2,3}}; equality at q=3 in {equal_q3}/{total_q3} cases; {:.1}s", elapsed.as_secs_f64()))
}

fn random_elem<R: Rng>(rng: &mut R, n: usize, d: u32) -> Result<PElem, String> {
    let mut e = PElem::zero();
    for v in enum_weights(n, d) {
        for b in basis_of_component(&v, 3).map_err(|e| e.to_string())? {
            if rng.gen_bool(0.5) {
                let c = GaussRat::from(rng.gen_range(-3..=3));
                e.add_component(&v, &b.poly().scale(&c));
            }
        }
    }
    Ok(e)
}

fn c9() -> Outcome {
    let mut outputs = 0;
    for (n, d) in CASES {
        let ctx = OpContext::new(n, d);
        for v in enum_weights(n, d) {
            for b in basis_of_component(&v, 3).map_err(|e| e.to_string())? {
                let e = b.to_pelem();
                for i in 1..=2 * n {
                    for r in 0..=3 {
                        for out in [ctx.apply_h(i, r, &e), ctx.apply_b(i, r, &e)] {
                            let out = out.map_err(|err| format!("i={i} r={r} on {e}: {err}"))?;
                            out.check_invariance().map_err(|err| format!("i={i} r={r} on {e}: {err}"))?;
                            outputs += 1;
                        }
                    }
                }
            }
        }
        let mut rng = seeded(n as u64 * 31 + d as u64);
        for _ in 0..20 {
            let e = random_elem(&mut rng, n, d)?;
            let i = rng.gen_range(1..=2 * n);
            let r = rng.gen_range(0..=3);
            let out = ctx.apply_b(i, r, &e).map_err(|err| format!("random i={i} r={r}: {err}"))?;
            out.check_invariance().map_err(|err| err.to_string())?;
            outputs += 1;
        }
        for v in enum_weights(n, d) {
            for i in 1..=2 * n {
                let h = h_series(i, &v, 6);
                if i != n && i != n + 1 {
                    let got = h_negative_part(i, &v, 6).map_err(|e| e.to_string())?;
                    ensure(got.value_eq(&h.negative_part()), || format!("H° differs at i={i} v={v}"))?;
                }
                if i != n + 1 {
                    let got = uh_negative_part(i, &v, 5).map_err(|e| e.to_string())?;
                    ensure(got.value_eq(&h.times_u().negative_part()), || format!("(uH)° differs at i={i} v={v}"))?;
                }
                ensure(truncation_identity_holds(i, &v).map_err(|e| e.to_string())?, || {
                    format!("truncation identity fails at i={i} v={v}")
                })?;
            }
        }
    }
    Ok(format!("{outputs} operator outputs invariant; series identities to K=6"))
}

fn seeded(seed: u64) -> rand::rngs::StdRng {
    rand::rngs::StdRng::seed_from_u64(seed)
}

fn c10() -> Outcome {
    let mut caught = Vec::new();
    for m in Mutation::ALL {
        let mut opts = SuiteOptions::new(1, 2, 3, 3);
        opts.mutation = m;
        let r = verify_all(&opts).map_err(|e| e.to_string())?;
        ensure(r.summary.fail > 0, || format!("{} not detected", m.name()))?;
        caught.push(format!("{}:{}", m.name(), r.summary.fail));
    }
    Ok(format!("failing instances {}", caught.join(" ")))
}

fn main() {
    let mut all_ok = true;
    let mut report = |k: usize, name: &str, f: &mut dyn FnMut() -> Outcome| {
        let t = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = t.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("PASS criterion {k}: {name}: {detail} [{secs:.1}s]"),
            Err(why) => {
                all_ok = false;
                println!("FAIL criterion {k}: {name}: {why} [{secs:.1}s]");
            }
        }
    };

    let start = Instant::now();
    let suites: Result<Vec<SuiteReport>, String> =
        CASES.iter().map(|&(n, d)| verify_all(&SuiteOptions::new(n, d, 3, 3)).map_err(|e| e.to_string())).collect();
    let elapsed = start.elapsed();

    report(1, "relation suite", &mut || c1(suites.as_ref().map_err(|e| e.clone())?, elapsed));
    report(2, "series forms", &mut || c2(suites.as_ref().map_err(|e| e.clone())?));
    report(3, "three B paths", &mut c3);
    report(4, "coset-sum constant", &mut c4);
    report(5, "idempotent selectivity", &mut c5);
    report(6, "determinant and Ĥ top parts", &mut c6);
    report(7, "orbit composition", &mut c7);
    report(8, "finite-field oracle", &mut c8);
    report(9, "structural properties", &mut c9);
    report(10, "mutation sensitivity", &mut c10);

    if !all_ok {
        std::process::exit(1);
    }
}
