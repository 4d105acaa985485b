use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rug::{Float, Rational};
use trig_enclose::best_constants::{huygens_a_b, wilker_lambda_mu};
use trig_enclose::exact_numbers::{bernoulli, euler_number};
use trig_enclose::inequality_verifier::verify;
use trig_enclose::polygamma::polygamma;
use trig_enclose::remainder_series::{eval_with_enclosure, RemainderFunction};

fn remainders(c: &mut Criterion) {
    let mut g = c.benchmark_group("remainder");
    for prec in [128u32, 256, 1024] {
        let t = Float::with_val(prec, 1.2);
        for func in [RemainderFunction::Tan, RemainderFunction::Cot, RemainderFunction::Sec2tan] {
            g.bench_with_input(BenchmarkId::new(func.name(), prec), &prec, |b, &prec| {
                b.iter(|| eval_with_enclosure(func, 3, black_box(&t), prec).unwrap())
            });
        }
    }
    g.finish();
}

fn exact_numbers(c: &mut Criterion) {
    c.bench_function("bernoulli 200", |b| b.iter(|| bernoulli(black_box(200)).unwrap()));
    c.bench_function("euler 200", |b| b.iter(|| euler_number(black_box(200)).unwrap()));
    let z = Rational::from((7, 2));
    c.bench_function("trigamma 7/2 @256", |b| b.iter(|| polygamma(1, black_box(&z), 256).unwrap()));
}

fn constants(c: &mut Criterion) {
    c.bench_function("wilker N=3 @256", |b| b.iter(|| wilker_lambda_mu(black_box(3), 256).unwrap()));
    c.bench_function("huygens N=3 @256", |b| b.iter(|| huygens_a_b(black_box(3), 256).unwrap()));
}

fn verification(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    for id in ["becker-stark", "wilker.sharp.N2", "sun-zhu.open"] {
        g.bench_function(id, |b| b.iter(|| verify(black_box(id), 201, 256).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, remainders, exact_numbers, constants, verification);
criterion_main!(benches);
