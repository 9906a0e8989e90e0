use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use borsuk_bench::{klein_homs, sample_klein_braid, sample_torus_braid, sample_word, torus_classes};
use borsuk_core::bu::{decide_klein, decide_torus, InvolutionId};
use borsuk_core::klein::{self, ZxZ};
use borsuk_core::oracle::{search_klein_witness, search_torus_witness, SearchBounds};
use borsuk_core::torus;

fn word_multiply(c: &mut Criterion) {
    let mut group = c.benchmark_group("word_multiply");
    for length in [16usize, 64, 256] {
        let left = sample_word(length);
        let right = left.invert();
        group.bench_with_input(BenchmarkId::from_parameter(length), &length, |b, _| {
            b.iter(|| left.multiply(&right));
        });
    }
    group.finish();
}

fn theta_apply(c: &mut Criterion) {
    let mut group = c.benchmark_group("theta_apply");
    for length in [8usize, 32, 128] {
        let word = sample_word(length);
        group.bench_with_input(BenchmarkId::from_parameter(length), &length, |b, _| {
            b.iter(|| klein::theta_apply(ZxZ::new(3, -2), &word));
        });
    }
    group.finish();
}

fn sigma_conjugation(c: &mut Criterion) {
    let mut group = c.benchmark_group("sigma_conjugation");
    for length in [8usize, 32, 128] {
        let on_torus = sample_torus_braid(length);
        let on_klein = sample_klein_braid(length);
        group.bench_with_input(BenchmarkId::new("torus", length), &length, |b, _| {
            b.iter(|| on_torus.lsigma());
        });
        group.bench_with_input(BenchmarkId::new("klein", length), &length, |b, _| {
            b.iter(|| on_klein.lsigma());
        });
    }
    group.finish();
}

fn presentation_suites(c: &mut Criterion) {
    c.bench_function("verify_torus_presentation", |b| {
        b.iter(torus::verify_presentation);
    });
    c.bench_function("verify_klein_presentations", |b| {
        b.iter(klein::verify_presentations);
    });
    c.bench_function("verify_pure_rewrite", |b| {
        b.iter(klein::verify_pure_rewrite);
    });
}

fn decision_grids(c: &mut Criterion) {
    let classes = torus_classes(2);
    let homs = klein_homs(2);
    c.bench_function("decide_torus_grid", |b| {
        b.iter(|| {
            classes
                .iter()
                .map(|class| decide_torus(*class, InvolutionId::Tau2).bu)
                .filter(|bu| *bu)
                .count()
        });
    });
    c.bench_function("decide_klein_grid", |b| {
        b.iter(|| homs.iter().map(|hom| decide_klein(hom).bu).filter(|bu| *bu).count());
    });
}

fn witness_searches(c: &mut Criterion) {
    let torus_class = "0,1;0,1".parse().expect("class parses");
    let klein_hom = "(1,0),(0,1)".parse().expect("hom parses");
    c.bench_function("search_torus_witness", |b| {
        b.iter(|| {
            search_torus_witness(torus_class, InvolutionId::Tau1, SearchBounds::new(2, 1))
                .expect("witness in range")
        });
    });
    c.bench_function("search_klein_witness", |b| {
        b.iter(|| {
            search_klein_witness(&klein_hom, SearchBounds::new(3, 1)).expect("witness in range")
        });
    });
}

criterion_group!(
    benches,
    word_multiply,
    theta_apply,
    sigma_conjugation,
    presentation_suites,
    decision_grids,
    witness_searches
);
criterion_main!(benches);
