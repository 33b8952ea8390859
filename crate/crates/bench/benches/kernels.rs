use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use sievelab::pattern::{self, DivisorFamily, IndexSpace, DEFAULT_MEMORY_CAP_BITS};
use sievelab::{gaps, goldbach, twin, wheel};
use sievelab_bench::{GAPS_LIMIT, GOLDBACH_TARGET, PATTERN_PRIME, SIEVE_LIMIT, TWIN_N_MAX};

fn bench_prime_bitmap(c: &mut Criterion) {
    c.bench_function("prime_bitmap_1e7", |b| {
        b.iter(|| wheel::prime_bitmap(black_box(SIEVE_LIMIT)))
    });
}

fn bench_twin_marks(c: &mut Criterion) {
    c.bench_function("twin_marks_1e6", |b| {
        b.iter(|| twin::build_twin_marks(black_box(TWIN_N_MAX)))
    });
}

fn bench_goldbach_marks(c: &mut Criterion) {
    c.bench_function("goldbach_marks_1e5", |b| {
        b.iter(|| goldbach::build_goldbach_marks(black_box(GOLDBACH_TARGET)).unwrap())
    });
}

fn bench_window_scan(c: &mut Criterion) {
    let pattern = pattern::build_pattern(
        PATTERN_PRIME,
        IndexSpace::OddIntegers,
        DivisorFamily::AllOdds,
        DEFAULT_MEMORY_CAP_BITS,
    )
    .unwrap();
    let len = pattern.canonical_window_length();
    c.bench_function("odd_window_scan_p17", |b| {
        b.iter(|| pattern::scan_windows(black_box(&pattern), black_box(len)).unwrap())
    });
}

fn bench_gap_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("gaps");
    group.sample_size(10);
    group.bench_function("scan_1e7", |b| {
        b.iter(|| gaps::scan_gaps(black_box(GAPS_LIMIT), 1 << 22).unwrap())
    });
    group.finish();
}

criterion_group!(
    kernels,
    bench_prime_bitmap,
    bench_twin_marks,
    bench_goldbach_marks,
    bench_window_scan,
    bench_gap_scan
);
criterion_main!(kernels);
