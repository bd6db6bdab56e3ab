use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use domcells::cells::color_cells_with;
use domcells::harness::{fuzz_with, worked_example, FuzzConfig};
use domcells::par::Parallelism;

const MODES: [(&str, Parallelism); 2] = [
    ("sequential", Parallelism::Sequential),
    ("parallel", Parallelism::Parallel),
];

fn campaign(c: &mut Criterion) {
    let cfg = FuzzConfig {
        instances: 16,
        seed: 1,
        max_x: 6,
        max_y: 4,
        n_values: vec![1, 2, 3],
        p_values: vec![0.3, 0.5],
        node_budget: 100_000,
        product_cap: 72,
    };
    let mut group = c.benchmark_group("fuzz");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| fuzz_with(&cfg, mode).unwrap())
        });
    }
    group.finish();
}

fn coloring(c: &mut Criterion) {
    let e = worked_example(2).unwrap();
    let mut group = c.benchmark_group("color_cells");
    for (name, mode) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| color_cells_with(&e.partition, &e.product, &e.dset, mode).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, campaign, coloring);
criterion_main!(benches);
