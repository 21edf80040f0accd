use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use covg_core::field::{PrimeField, Rationals, DEFAULT_PRIME};
use covg_core::harmonics::{big_hilbert_via_nbc, big_locus, hilbert_series, small_locus, BigContext};
use covg_core::matroidal::TotalOrder;
use covg_core::realize::braid_com;

fn big_rank(c: &mut Criterion) {
    let mut g = c.benchmark_group("big_locus_rank");
    g.sample_size(10);
    for n in 3..=5 {
        let l = big_locus(&braid_com(n).unwrap());
        g.bench_with_input(BenchmarkId::new("rational", n), &l, |b, l| {
            b.iter(|| hilbert_series(Rationals, l).unwrap())
        });
        let p = PrimeField::new(DEFAULT_PRIME).unwrap();
        g.bench_with_input(BenchmarkId::new("fp", n), &l, |b, l| {
            b.iter(|| hilbert_series(p, l).unwrap())
        });
    }
    g.finish();
}

fn small_rank(c: &mut Criterion) {
    let mut g = c.benchmark_group("small_locus_rank");
    for n in 3..=5 {
        let l = small_locus(&braid_com(n).unwrap());
        g.bench_with_input(BenchmarkId::from_parameter(n), &l, |b, l| {
            b.iter(|| hilbert_series(Rationals, l).unwrap())
        });
    }
    g.finish();
}

fn big_nbc(c: &mut Criterion) {
    let mut g = c.benchmark_group("big_series_nbc");
    for n in 3..=5 {
        let m = braid_com(n).unwrap();
        let ord = TotalOrder::natural(m.ground().len());
        g.bench_function(BenchmarkId::from_parameter(n), |b| {
            b.iter(|| big_hilbert_via_nbc(&BigContext::new(&m).unwrap(), &ord))
        });
    }
    g.finish();
}

criterion_group!(benches, big_rank, small_rank, big_nbc);
criterion_main!(benches);
