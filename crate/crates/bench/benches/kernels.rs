//! Criterion benchmarks for the numeric kernels: the theta integral, the
//! Euler-Maclaurin zeta, the theta sum, and the series logarithm.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use xi_forge_core::apcore::series_log;
use xi_forge_core::pustylnikov::xi_coeff;
use xi_forge_core::specfun::{omega, xi_direct, zeta_fn, SpecFunContext};
use xi_forge_core::{APComplex, APReal, PowerSeries, SeriesVar};

fn bench_xi_coeff(c: &mut Criterion) {
    let ctx = SpecFunContext::new(30);
    c.bench_function("xi_coeff_r3_30_digits", |b| {
        b.iter(|| xi_coeff(black_box(3), &ctx))
    });
}

fn bench_zeta(c: &mut Criterion) {
    let p = 30;
    let s = APComplex::new(
        APReal::parse("0.5", p).unwrap(),
        APReal::parse("3.7", p).unwrap(),
    );
    c.bench_function("zeta_complex_30_digits", |b| {
        b.iter(|| zeta_fn(black_box(&s), p).unwrap())
    });
}

fn bench_xi_direct(c: &mut Criterion) {
    let ctx = SpecFunContext::new(30);
    let s = APComplex::from_real(APReal::parse("9.5", 30).unwrap());
    c.bench_function("xi_direct_real_30_digits", |b| {
        b.iter(|| xi_direct(black_box(&s), &ctx))
    });
}

fn bench_omega(c: &mut Criterion) {
    let ctx = SpecFunContext::new(40);
    let x = APReal::parse("1.5", 40).unwrap();
    c.bench_function("omega_40_digits", |b| {
        b.iter(|| omega(black_box(&x), &ctx).unwrap())
    });
}

fn bench_series_log(c: &mut Criterion) {
    let p = 30;
    let coeffs: Vec<APReal> = (0..=32)
        .map(|n| APReal::from_i64(if n == 0 { 3 } else { 100 - 3 * n }, p).shift10(-2))
        .collect();
    let series = PowerSeries::new(APReal::zero(p), SeriesVar::W, coeffs);
    c.bench_function("series_log_order_32", |b| {
        b.iter(|| series_log(black_box(&series)).unwrap())
    });
}

criterion_group!(
    kernels,
    bench_xi_coeff,
    bench_zeta,
    bench_xi_direct,
    bench_omega,
    bench_series_log
);
criterion_main!(kernels);
