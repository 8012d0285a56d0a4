use criterion::Criterion;
use fistab::oracle::{arnold_cohomology, coinvariant_piece, coinvariant_total_dim, DEFAULT_BUDGET};

pub fn bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    group.bench_function("H^2(P_8)", |b| {
        b.iter(|| arnold_cohomology(2, 8, DEFAULT_BUDGET).unwrap())
    });
    group.bench_function("R^(2)_(2,2)(4)", |b| {
        b.iter(|| coinvariant_piece(2, &[2, 2], 4, DEFAULT_BUDGET).unwrap())
    });
    group.bench_function("dim R^(1)(5)", |b| {
        b.iter(|| coinvariant_total_dim(1, 5, DEFAULT_BUDGET).unwrap())
    });
    group.finish();
}
