use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mobiuskit::corpus;
use mobiuskit::enriched::{self, MetricSpace};
use mobiuskit::incidence;
use mobiuskit::matrix::RigMatrix;
use mobiuskit::matrixrig;
use mobiuskit::par;
use mobiuskit::rig::{Integers, Rationals};
use num_bigint::BigInt;

fn pools() -> Vec<(&'static str, usize)> {
    let all = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    vec![("sequential", 1), ("pool", all)]
}

fn fine_mobius(c: &mut Criterion) {
    let cat = corpus::boolean_lattice(5);
    let mut group = c.benchmark_group("fine_mobius_boolean5");
    for (label, threads) in pools() {
        group.bench_with_input(BenchmarkId::from_parameter(label), &threads, |b, &t| {
            par::with_threads(t, || b.iter(|| incidence::fine_mobius(&cat, &Rationals).unwrap()))
        });
    }
    group.finish();
}

fn det_plus_minus(c: &mut Criterion) {
    let m = RigMatrix::from_fn(8, |i, j| BigInt::from(((i * 7 + j * 3) % 5) as i64 - 2));
    let mut group = c.benchmark_group("det_plus_minus_8");
    for (label, threads) in pools() {
        group.bench_with_input(BenchmarkId::from_parameter(label), &threads, |b, &t| {
            par::with_threads(t, || b.iter(|| matrixrig::det_plus_minus(&Integers, &m).unwrap()))
        });
    }
    group.finish();
}

fn magnitude(c: &mut Criterion) {
    let space = MetricSpace::segment(401, 2.0);
    let mut group = c.benchmark_group("magnitude_segment_401");
    group.sample_size(20);
    for (label, threads) in pools() {
        group.bench_with_input(BenchmarkId::from_parameter(label), &threads, |b, &t| {
            par::with_threads(t, || b.iter(|| enriched::magnitude(&space).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, fine_mobius, det_plus_minus, magnitude);
criterion_main!(benches);
