//! Runs relation instances on every basis element of every component.

use super::expr::Evaluator;
use super::relations::{build, enumerate, Check, Relation, RelationId};
use super::report::{RelationReport, Status, SuiteParams, SuiteReport, Witness};
use super::VerifyError;
use crate::operators::{Mutation, OpContext};
use crate::orbit::{enum_weights, WeightVec};
use crate::rep::{basis_of_component, ModuleElem};
use rayon::prelude::*;

/// `IYANG_THREADS`, if set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var("IYANG_THREADS").ok().and_then(|s| s.parse().ok()).filter(|&t| t > 0)
}

/// Runs `f` on a pool capped by `IYANG_THREADS`.
pub fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    match threads_from_env() {
        Some(t) => rayon::ThreadPoolBuilder::new().num_threads(t).build().expect("thread pool").install(f),
        None => f(),
    }
}

/// A test vector with its position in the canonical order
/// `(degree, component, index)`.
#[derive(Clone, Debug)]
pub struct TestVector {
    pub degree: u32,
    pub component: WeightVec,
    pub index: usize,
    pub elem: ModuleElem,
}

/// Orbit-sum basis elements of degree `≤ deg`, over all of `Λ_{c,d}`.
pub fn test_vectors(n: usize, d: u32, deg: u32) -> Result<Vec<TestVector>, VerifyError> {
    let mut out = Vec::new();
    for v in enum_weights(n, d) {
        for (index, elem) in basis_of_component(&v, deg)?.into_iter().enumerate() {
            let degree = elem.poly().degree().unwrap_or(0);
            out.push(TestVector { degree, component: v.clone(), index, elem });
        }
    }
    out.sort_by(|a, b| (a.degree, &a.component, a.index).cmp(&(b.degree, &b.component, b.index)));
    Ok(out)
}

fn check_one(ev: &mut Evaluator, ctx: &OpContext, rel: &Relation, tv: &TestVector) -> Option<Witness> {
    let fail = |lhs: String, rhs: String| Witness {
        component: tv.component.to_string(),
        degree: tv.degree,
        index: tv.index,
        element: tv.elem.poly().to_string(),
        lhs,
        rhs,
    };
    match &rel.check {
        Check::Ops { lhs, rhs } => match (ev.expr(lhs), ev.expr(rhs)) {
            (Ok(a), Ok(b)) if a == b => None,
            (Ok(a), Ok(b)) => Some(fail(a.to_string(), b.to_string())),
            (Err(e), _) | (_, Err(e)) => Some(fail(format!("error: {e}"), String::new())),
        },
        Check::SeriesHtau { i, k } => {
            let v = &tv.component;
            let a = ctx.h_series(ctx.n() * 2 + 1 - i, v, *k);
            let b = ctx.h_series(*i, v, *k).negate_variable();
            if a.value_eq(&b) {
                None
            } else {
                Some(fail(a.to_string(), b.to_string()))
            }
        }
    }
}

/// Checks `relations` on `vectors`; the witness of a failing relation is
/// its first failure in the order of `vectors`.
pub fn run(ctx: &OpContext, relations: &[Relation], vectors: &[TestVector]) -> Vec<RelationReport> {
    let per_vector: Vec<Vec<Option<Witness>>> = with_pool(|| {
        vectors
            .par_iter()
            .map(|tv| {
                let mut ev = Evaluator::new(ctx, tv.elem.to_pelem());
                relations.iter().map(|rel| check_one(&mut ev, ctx, rel, tv)).collect()
            })
            .collect()
    });
    relations
        .iter()
        .enumerate()
        .map(|(k, rel)| {
            let witness = per_vector.iter().find_map(|row| row[k].clone());
            RelationReport {
                id: rel.id.clone(),
                status: if witness.is_some() { Status::Fail } else { Status::Pass },
                witness,
            }
        })
        .collect()
}

/// Options for a full suite run.
#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub n: usize,
    pub d: u32,
    pub rmax: usize,
    pub deg: u32,
    /// Serre modes `k1, k2, r` range over `0..=serre_max`.
    pub serre_max: usize,
    /// Series truncation order.
    pub series_k: usize,
    pub mutation: Mutation,
}

impl SuiteOptions {
    pub fn new(n: usize, d: u32, rmax: usize, deg: u32) -> Self {
        SuiteOptions { n, d, rmax, deg, serre_max: 2.min(rmax), series_k: rmax + 2, mutation: Mutation::None }
    }
}

/// One relation instance, with its side condition checked.
pub fn verify_relation(id: &RelationId, n: usize, d: u32, deg: u32) -> Result<RelationReport, VerifyError> {
    let rel = build(n, id)?;
    let ctx = OpContext::new(n, d);
    let vectors = test_vectors(n, d, deg)?;
    Ok(run(&ctx, &[rel], &vectors).pop().expect("one relation"))
}

/// Every relation instance within the bounds.
pub fn verify_all(opts: &SuiteOptions) -> Result<SuiteReport, VerifyError> {
    let ids = enumerate(opts.n, opts.rmax, opts.serre_max, opts.series_k);
    let relations: Vec<Relation> = ids.iter().map(|id| build(opts.n, id)).collect::<Result<_, _>>()?;
    let ctx = OpContext::with_mutation(opts.n, opts.d, opts.mutation);
    let vectors = test_vectors(opts.n, opts.d, opts.deg)?;
    let results = run(&ctx, &relations, &vectors);
    Ok(SuiteReport::new(
        SuiteParams { n: opts.n, d: opts.d, rmax: opts.rmax, deg: opts.deg, mutation: opts.mutation },
        results,
    ))
}
