use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kleene::interval::{exactness_check_with, ClosureTask, Interval};
use kleene::linalg::{mat_mul_with, star_elimination_with, ClosureAlgorithm, Matrix};
use kleene::semiring::{MinPlus, PlusTimes};
use kleene::Execution;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

/// Deterministic nonnegative weights with some missing arcs.
fn minplus_matrix(n: usize) -> Matrix<f64> {
    Matrix::from_fn(n, n, |i, j| match (i * 31 + j * 17) % 7 {
        0 => f64::INFINITY,
        r => (r * ((i + 2 * j) % 5 + 1)) as f64,
    })
}

fn mat_mul(c: &mut Criterion) {
    let mut group = c.benchmark_group("mat_mul");
    for n in [64, 128, 256] {
        let a = minplus_matrix(n);
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &a, |b, a| {
                b.iter(|| mat_mul_with(&MinPlus, black_box(a), black_box(a), exec).unwrap())
            });
        }
    }
    group.finish();
}

fn closure(c: &mut Criterion) {
    let mut group = c.benchmark_group("star_elimination");
    group.sample_size(20);
    for n in [64, 128, 256] {
        let a = minplus_matrix(n);
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &a, |b, a| {
                b.iter(|| star_elimination_with(&MinPlus, black_box(a), exec).unwrap())
            });
        }
    }
    let s = PlusTimes::completed();
    let p = Matrix::from_fn(128, 128, |i, j| ((i + j) % 3) as f64 / 512.0);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(format!("plustimes/{name}"), 128), &p, |b, p| {
            b.iter(|| star_elimination_with(&s, black_box(p), exec).unwrap())
        });
    }
    group.finish();
}

fn exactness(c: &mut Criterion) {
    let mut group = c.benchmark_group("exactness_check");
    group.sample_size(10);
    let n = 8;
    let a = minplus_matrix(n);
    let input: Vec<_> = a
        .data()
        .iter()
        .map(|&x| Interval::new(&MinPlus, x, if x.is_finite() { x - 1.0 } else { x }).unwrap())
        .collect();
    let task = ClosureTask::new(n, ClosureAlgorithm::Elimination).unwrap();
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, 2000), |b| {
            b.iter(|| exactness_check_with(&task, &MinPlus, black_box(&input), 2000, 7, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, mat_mul, closure, exactness);
criterion_main!(benches);
