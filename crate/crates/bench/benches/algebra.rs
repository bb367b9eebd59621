use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};
use orbitwist_core::catalog::Case;
use orbitwist_core::drinfeld::DoubleAlgebra;
use orbitwist_core::modp::transgression_search;
use orbitwist_core::projrep::irreducibles;
use orbitwist_core::{Cochain, Group, TwistData};

fn double(c: &mut Criterion) {
    let omega = Case::by_id("d4-pullback").unwrap().cocycle;
    let alg = DoubleAlgebra::new(&omega).unwrap();
    c.bench_function("double associativity, D4 exhaustive", |b| b.iter(|| black_box(alg.check_associativity())));
    c.bench_function("double quasitriangularity, D4", |b| b.iter(|| black_box(alg.check_quasitriangular())));
}

fn irreps(c: &mut Criterion) {
    let h = Arc::new(Group::extraspecial(3).unwrap());
    let alpha = Cochain::trivial(h.clone(), 2);
    c.bench_function("irreducibles, extra-special 27", |b| {
        b.iter(|| black_box(irreducibles(h.clone(), &alpha, 0).unwrap().len()))
    });
}

fn stringy(c: &mut Criterion) {
    let omega = Case::by_id("z3cube-typeIII").unwrap().cocycle;
    c.bench_function("twist data, (Z3)^3 type III", |b| b.iter(|| black_box(TwistData::new(&omega, 0).unwrap())));
    let data = TwistData::new(&omega, 0).unwrap();
    let mut group = c.benchmark_group("stringy (Z3)^3 type III");
    group.sample_size(10);
    group.bench_function("ring iso, 200 pairs", |b| b.iter(|| black_box(data.verify_ring_iso(Some(200), 1).unwrap())));
    group.bench_function("associativity, 500 triples", |b| {
        b.iter(|| black_box(data.verify_associativity(Some(500), 1).unwrap()))
    });
    group.finish();
}

fn modp(c: &mut Criterion) {
    c.bench_function("kernel search p=3 n=3 degree 4", |b| b.iter(|| black_box(transgression_search(3, 3, 4).unwrap())));
}

criterion_group!(benches, double, irreps, stringy, modp);
criterion_main!(benches);
