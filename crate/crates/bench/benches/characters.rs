use std::hint::black_box;

use criterion::Criterion;
use fistab::characters::{character_value, decompose, lr_coefficient};
use fistab::partition::{partitions_of, Partition};
use fistab::ClassFunction;

pub fn bench(c: &mut Criterion) {
    // Murnaghan–Nakayama values are memoized globally, so only the first
    // pass over a table is cold. The full table is what callers pay for.
    c.bench_function("character table S_12", |b| {
        let shapes = partitions_of(12);
        b.iter(|| {
            for l in &shapes {
                for rho in &shapes {
                    black_box(character_value(l, rho));
                }
            }
        })
    });

    let lambda: Partition = "[4,3,2,1]".parse().unwrap();
    let mu: Partition = "[3,2,1]".parse().unwrap();
    let nu: Partition = "[5,4,3,2,1,1]".parse().unwrap();
    c.bench_function("lr coefficient |ν|=16", |b| {
        b.iter(|| lr_coefficient(black_box(&lambda), black_box(&mu), black_box(&nu)))
    });

    c.bench_function("decompose regular S_9", |b| {
        let regular = ClassFunction::regular(9);
        b.iter(|| decompose(black_box(&regular)).unwrap())
    });
}
