use criterion::{black_box, criterion_group, criterion_main, Criterion};

use cliquerich::{rank_vertices, swap_distance};

fn swap(c: &mut Criterion) {
    let n = 10_000u64;
    let a = rank_vertices(
        &(0..n)
            .map(|i| (i * 2_654_435_761) % 1_000)
            .collect::<Vec<_>>(),
    );
    let b = rank_vertices(&(0..n).map(|i| (i * 40_503) % 997).collect::<Vec<_>>());
    c.bench_function("swap_distance_10k", |bench| {
        bench.iter(|| swap_distance(black_box(&a), black_box(&b)).unwrap())
    });
}

criterion_group!(benches, swap);
criterion_main!(benches);
