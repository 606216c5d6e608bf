use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use staircase::diagonal::factorial_moment_a;
use staircase::enumerate::{count_ab_with, fold_ab};
use staircase::measure::{MeasureParams, Sampler};
use staircase::rational::{frac, int};
use staircase::tableau::Symbol;
use staircase::Exec;

fn strategies() -> Vec<(&'static str, Exec)> {
    let mut v = vec![("sequential", Exec::Sequential)];
    if cfg!(feature = "parallel") {
        v.push(("parallel", Exec::Parallel));
    }
    v
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("count_ab");
    g.sample_size(10);
    for n in [7, 8] {
        for (name, exec) in strategies() {
            g.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| b.iter(|| count_ab_with(black_box(n), exec).unwrap()));
        }
    }
    g.finish();
}

fn event_counts(c: &mut Criterion) {
    let mut g = c.benchmark_group("second_diagonal_alpha_counts");
    g.sample_size(10);
    let n = 8;
    for (name, exec) in strategies() {
        g.bench_function(BenchmarkId::new(name, n), |b| {
            b.iter(|| {
                fold_ab(
                    n,
                    exec,
                    vec![0u64; n],
                    |acc: &mut Vec<u64>, t| {
                        let k = (1..n).filter(|&j| t.second_diagonal(j) == Symbol::Alpha).count();
                        acc[k] += 1;
                    },
                    |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect(),
                )
                .unwrap()
            })
        });
    }
    g.finish();
}

fn sampling(c: &mut Criterion) {
    let mut g = c.benchmark_group("sample_n6");
    g.sample_size(10);
    let params = MeasureParams::new(frac(1, 2), int(3)).unwrap();
    let sampler = Sampler::new(6, &params).unwrap();
    for (name, exec) in strategies() {
        g.bench_function(BenchmarkId::new(name, 50_000), |b| b.iter(|| sampler.sample_with(black_box(7), 50_000, exec)));
    }
    g.finish();
}

fn moments(c: &mut Criterion) {
    let params = MeasureParams::new(int(1), int(1)).unwrap();
    c.bench_function("factorial_moment_a_n40_r3", |b| b.iter(|| factorial_moment_a(black_box(40), &params, 3).unwrap()));
}

criterion_group!(benches, enumeration, event_counts, sampling, moments);
criterion_main!(benches);
