//! Parallel-versus-sequential benchmarks for the data-parallel kernels:
//! group-closure enumeration, order profiling, and the batched polynomial
//! substitutions behind the form identities.
//!
//! Build with the default `parallel` feature; each kernel is measured in
//! both modes through the same entry points.

use criterion::{criterion_group, criterion_main, Criterion};
use psl213::invariants::forms::{delta_nu, g_basis};
use psl213::invariants::act_many;
use psl213::matrep::catalog::Catalog;
use psl213::matrep::closure;
use psl213::par::Mode;
use std::hint::black_box;

fn bench_closure(c: &mut Criterion) {
    let cat = Catalog::new();
    let gens = [cat.h.clone(), cat.t.clone()];
    let mut group = c.benchmark_group("closure_order_78");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| closure(black_box(&gens), 256, Mode::Sequential).unwrap().len())
    });
    group.bench_function("parallel", |b| {
        b.iter(|| closure(black_box(&gens), 256, Mode::Parallel).unwrap().len())
    });
    group.finish();
}

fn bench_order_profile(c: &mut Criterion) {
    let cat = Catalog::new();
    let g = closure(&[cat.h.clone(), cat.t.clone()], 256, Mode::Parallel).unwrap();
    let mut group = c.benchmark_group("order_profile_78");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| g.order_profile(Mode::Sequential).unwrap())
    });
    group.bench_function("parallel", |b| b.iter(|| g.order_profile(Mode::Parallel).unwrap()));
    group.finish();
}

fn bench_delta_expansions(c: &mut Criterion) {
    let cat = Catalog::new();
    let mut group = c.benchmark_group("sextic_expansions_13");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| {
            (0..13)
                .map(|nu| delta_nu(black_box(&cat), nu, Mode::Sequential).num_terms())
                .sum::<usize>()
        })
    });
    group.bench_function("parallel", |b| {
        b.iter(|| {
            use psl213::par;
            par::map_range(Mode::Parallel, 0..13, |nu| {
                delta_nu(&cat, nu as i64, Mode::Sequential).num_terms()
            })
            .into_iter()
            .sum::<usize>()
        })
    });
    group.finish();
}

fn bench_sextic_substitution(c: &mut Criterion) {
    let cat = Catalog::new();
    // A four-form slice keeps the full degree-6 substitution cost visible
    // without making the default bench run take minutes per sample.
    let g: Vec<_> = g_basis().into_iter().take(4).collect();
    let mut group = c.benchmark_group("substitute_s_into_sextics");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| act_many(black_box(&cat.s), &g, Mode::Sequential).len())
    });
    group.bench_function("parallel", |b| {
        b.iter(|| act_many(black_box(&cat.s), &g, Mode::Parallel).len())
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_closure,
    bench_order_profile,
    bench_delta_expansions,
    bench_sextic_substitution
);
criterion_main!(benches);
