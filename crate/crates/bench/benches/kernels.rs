use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use twothree_bench::searched_pair;
use twothree_core::engine::{closure_with, ClosureOptions};
use twothree_core::matgrp::{element_order, invariant_factors};
use twothree_core::paperlib::Target;
use twothree_core::polyring::Var;
use twothree_core::reptools::meataxe_irreducible;
use twothree_core::BivarPoly;

fn closure(c: &mut Criterion) {
    let mut g = c.benchmark_group("closure");
    g.sample_size(10);
    for (target, q) in [(Target::Sl3, 3), (Target::Sl3, 5), (Target::Su3, 4)] {
        let pair = searched_pair(target, q);
        let gens = pair.gens();
        for (label, opts) in [("parallel", ClosureOptions::default()), ("sequential", ClosureOptions::default().sequential())] {
            g.bench_with_input(BenchmarkId::new(format!("{target:?}/{label}"), q), &gens, |b, gens| {
                b.iter(|| closure_with(gens, opts).unwrap().order)
            });
        }
    }
    g.finish();
}

fn matrix_kernels(c: &mut Criterion) {
    let pair = searched_pair(Target::Sl5, 16);
    let z = pair.z();
    c.bench_function("element_order/sl5-16", |b| b.iter(|| element_order(black_box(&z)).unwrap()));
    c.bench_function("invariant_factors/sl5-16", |b| b.iter(|| invariant_factors(black_box(&z))));
    let gens = pair.gens();
    c.bench_function("meataxe/sl5-16", |b| b.iter(|| meataxe_irreducible(black_box(&gens)).unwrap()));
}

fn resultant(c: &mut Criterion) {
    let f1 = BivarPoly::from_terms("a", "b", &[(1, 3, 0), (-3, 2, 2), (1, 1, 4), (4, 1, 1), (-1, 0, 3), (-1, 0, 0)]);
    let f2 = BivarPoly::from_terms("a", "b", &[(3, 2, 1), (-4, 1, 3), (-2, 1, 0), (1, 0, 5), (3, 0, 2)]);
    c.bench_function("resultant/degree-15", |b| b.iter(|| f1.resultant(&f2, Var::Second).unwrap()));
}

criterion_group!(benches, closure, matrix_kernels, resultant);
criterion_main!(benches);
