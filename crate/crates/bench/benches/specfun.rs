use std::hint::black_box;

use cespot::specfun::{gamma_ratio, hyp2f1, lngamma, Hyp2F1Params};
use cespot::{make_exponents, Complex64};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn bench_lngamma(c: &mut Criterion) {
    let mut group = c.benchmark_group("lngamma");
    for (name, z) in [
        ("right", Complex64::new(7.5, 2.2)),
        ("reflected", Complex64::new(-11.2, 0.8)),
        ("large_im", Complex64::new(0.5, 300.0)),
    ] {
        group.bench_with_input(BenchmarkId::from_parameter(name), &z, |b, &z| {
            b.iter(|| lngamma(black_box(z)))
        });
    }
    group.finish();

    let num = [Complex64::new(0.5, -4.0), Complex64::new(1.0, -3.46)];
    let den = [Complex64::new(1.5, -7.46), Complex64::new(-0.5, 2.0)];
    c.bench_function("gamma_ratio", |b| {
        b.iter(|| gamma_ratio(black_box(&num), black_box(&den)))
    });
}

fn bench_hyp2f1(c: &mut Criterion) {
    let mut group = c.benchmark_group("hyp2f1");
    for omega in [2.0, 15.0] {
        let (_, p) = make_exponents(Complex64::new(omega, 0.0), 1.0).unwrap();
        for z in [0.3, 0.55, 0.95] {
            let params = Hyp2F1Params::new(p.a1, p.b1, p.c1, z).unwrap();
            group.bench_with_input(
                BenchmarkId::new(format!("omega_{omega}"), z),
                &params,
                |b, &params| b.iter(|| hyp2f1(black_box(params))),
            );
        }
    }
    group.finish();
}

criterion_group!(benches, bench_lngamma, bench_hyp2f1);
criterion_main!(benches);
