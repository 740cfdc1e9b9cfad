use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use polycontact::graph::families;
use polycontact::{bip3d, cubic3d, cyclesq3d, gen3d, verify_scene};

fn complete(c: &mut Criterion) {
    let mut group = c.benchmark_group("complete");
    group.sample_size(10);
    for n in [6, 9, 12] {
        group.bench_with_input(BenchmarkId::new("represent", n), &n, |b, &n| b.iter(|| gen3d::represent_complete(n).unwrap()));
        let s = gen3d::represent_complete(n).unwrap();
        group.bench_with_input(BenchmarkId::new("verify", n), &s, |b, s| b.iter(|| verify_scene(s, 0.0)));
    }
    group.finish();
}

fn cubic(c: &mut Criterion) {
    let mut group = c.benchmark_group("cubic");
    group.sample_size(10);
    let petersen = families::petersen();
    group.bench_function("petersen", |b| b.iter(|| cubic3d::represent_2ec_cubic(&petersen).unwrap()));
    for k in [2, 4] {
        let g = families::bridge_chain(k);
        group.bench_with_input(BenchmarkId::new("bridge_chain", k), &g, |b, g| b.iter(|| cubic3d::represent_cubic(g).unwrap()));
    }
    group.finish();
}

fn bipartite_and_cycles(c: &mut Criterion) {
    let g = families::complete_bipartite(6, 8);
    c.bench_function("bipartite_grid_6_8", |b| b.iter(|| bip3d::represent_bipartite_grid(&g).unwrap()));
    c.bench_function("cycle_square_11", |b| b.iter(|| cyclesq3d::represent_cycle_square(11).unwrap()));
}

criterion_group!(benches, complete, cubic, bipartite_and_cycles);
criterion_main!(benches);
