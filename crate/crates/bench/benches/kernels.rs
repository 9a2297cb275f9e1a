use criterion::{criterion_group, criterion_main, Criterion};
use nikulin_bench::*;
use nikulin_core::discriminant::{discriminant_quintic, lines_through_point_of_ltau};
use nikulin_core::forms::{intersect_plane_curves, macaulay_resultant, sylvester_resultant};
use nikulin_core::quotient::branch_sextic;
use nikulin_core::tau_geometry::{fixed_points_on_s, Sampler};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

fn resultants(c: &mut Criterion) {
    let inst = rational_instance();
    let conic = inst.conic_part();
    c.bench_function("sylvester conic/cubic over Q", |b| {
        b.iter(|| sylvester_resultant(black_box(&conic), black_box(&inst.f3), 2).unwrap())
    });
    let system = quadric_system();
    c.bench_function("macaulay five quadrics over Q", |b| b.iter(|| macaulay_resultant(black_box(&system)).unwrap()));
    let reduced: Vec<_> = system.iter().map(|f| f.reduce_mod(BENCH_PRIME).unwrap()).collect();
    c.bench_function("macaulay five quadrics over F_p", |b| b.iter(|| macaulay_resultant(black_box(&reduced)).unwrap()));
}

fn geometry(c: &mut Criterion) {
    let inst = rational_instance();
    c.bench_function("plane intersection conic/cubic over Q", |b| {
        b.iter(|| intersect_plane_curves(black_box(&inst.conic_part()), black_box(&inst.f3)).unwrap())
    });
    c.bench_function("discriminant quintic over Q", |b| b.iter(|| discriminant_quintic(black_box(&inst)).unwrap()));
    c.bench_function("fixed points over Q", |b| b.iter(|| fixed_points_on_s(black_box(&inst), 0).unwrap()));
    let small = prime_instance(13);
    let t = fixed_line_point(13, 2);
    c.bench_function("lines through a point over F_13", |b| {
        b.iter(|| lines_through_point_of_ltau(black_box(&small), black_box(&t), 13))
    });
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    c.bench_function("branch sextic over Q", |b| b.iter(|| branch_sextic(black_box(&inst), 0, BENCH_PRIME, &mut rng).unwrap()));
}

fn sampling(c: &mut Criterion) {
    let mut group = c.benchmark_group("sampling");
    group.sample_size(10);
    group.bench_function("gated instance over Q", |b| b.iter(|| Sampler::new(10).sample(black_box(7)).unwrap()));
    group.finish();
}

criterion_group!(benches, resultants, geometry, sampling);
criterion_main!(benches);
