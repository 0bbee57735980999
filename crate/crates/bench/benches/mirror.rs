use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mirrorgraph::lab::twin_asymmetric_cubic;
use mirrorgraph::*;

fn realize(c: &mut Criterion) {
    let mut group = c.benchmark_group("mirror_realize");
    for n in [16usize, 64, 256] {
        let p = DegreeSequence::sorted((0..n).map(|i| (i * 7 + 3) % (n / 2) + 1).collect());
        assert!(gale_ryser_check(&p, &p));
        group.bench_with_input(BenchmarkId::from_parameter(n), &p, |b, p| {
            b.iter(|| mirror_realize(black_box(p)).unwrap())
        });
    }
    group.finish();

    let p = DegreeSequence::sorted((0..256).map(|i| i % 97).collect());
    c.bench_function("gale_ryser_256", |b| {
        b.iter(|| gale_ryser_check(black_box(&p), &p))
    });
    c.bench_function("havel_hakimi_256", |b| b.iter(|| hh_check(black_box(&p), &p)));
}

fn detect(c: &mut Criterion) {
    let h = LGraph::from_fn(12, |i, j| (i * j + i + j) % 3 == 0).unwrap();
    let m = kronecker_k2(&h);
    let rows: Vec<usize> = (0..12).map(|i| (i * 5) % 12).collect();
    let cols: Vec<usize> = (0..12).map(|i| (i * 7 + 3) % 12).collect();
    let g = m.graph().relabeled(&rows, &cols);
    c.bench_function("find_mirror_pairing_12", |b| {
        b.iter(|| find_mirror_pairing(black_box(&g)).unwrap())
    });

    let cubic = twin_asymmetric_cubic();
    c.bench_function("is_mirror_rejects_cubic", |b| {
        b.iter(|| is_mirror(black_box(&cubic)))
    });
    c.bench_function("canonical_form_12", |b| b.iter(|| canonical_form(black_box(&g))));
}

fn lab(c: &mut Criterion) {
    let mut group = c.benchmark_group("lab");
    group.sample_size(10);
    group.bench_function("regular_survey_6_3", |b| {
        b.iter(|| regular_survey(6, 3, &EnumerationOptions::default()).unwrap())
    });
    let p = DegreeSequence::new(vec![3, 3, 2, 2, 1, 1]).unwrap();
    group.bench_function("report_332211", |b| {
        b.iter(|| bipp_mirr_report(black_box(&p), &EnumerationOptions::default()).unwrap())
    });
    group.finish();
}

criterion_group!(benches, realize, detect, lab);
criterion_main!(benches);
