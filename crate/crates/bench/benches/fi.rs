use std::hint::black_box;

use criterion::Criterion;
use fistab::fi::{charpoly_of, schur_apply, stability_profile, tensor};
use fistab::FiSharpModule;

pub fn bench(c: &mut Criterion) {
    let m2: FiSharpModule = "M[2]".parse().unwrap();
    let m21: FiSharpModule = "M[2,1]".parse().unwrap();
    c.bench_function("tensor M[2,1] x M[2,1]", |b| {
        b.iter(|| tensor(black_box(&m21), black_box(&m21)).unwrap())
    });
    c.bench_function("wedge^2 M[2]", |b| {
        b.iter(|| schur_apply(&"[1,1]".parse().unwrap(), black_box(&m2)).unwrap())
    });
    let h2: FiSharpModule = "M[2,1] + M[3,1]".parse().unwrap();
    c.bench_function("charpoly H^2", |b| b.iter(|| charpoly_of(black_box(&h2))));
    c.bench_function("stability profile M[3,1]", |b| {
        let v: FiSharpModule = "M[3,1]".parse().unwrap();
        b.iter(|| stability_profile(black_box(&v), 3, 9).unwrap())
    });
}
