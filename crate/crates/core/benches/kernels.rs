use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use poset_cone::enumerator::fq_poset_cone_with;
use poset_cone::oracle::fq_integer_points_with;
use poset_cone::par::Strategy;
use poset_cone::poset::Poset;
use poset_cone::survey::f0_survey;
use poset_cone::verify::{run_suite, Suite};

const STRATEGIES: [(&str, Strategy); 2] = [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)];

fn flag_sum(c: &mut Criterion) {
    let mut group = c.benchmark_group("fq_poset_cone");
    let posets = [
        ("antichain7", Poset::antichain(7)),
        ("k33", Poset::complete_bipartite(3, 3)),
        ("star8", Poset::star(8)),
    ];
    for (name, p) in &posets {
        for (label, s) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(label, name), p, |b, p| b.iter(|| fq_poset_cone_with(black_box(p), s)));
        }
    }
    group.finish();
}

fn integer_points(c: &mut Criterion) {
    let mut group = c.benchmark_group("fq_integer_points");
    group.sample_size(10);
    let p = Poset::complete_bipartite(2, 2);
    for (label, s) in STRATEGIES {
        group.bench_function(BenchmarkId::new(label, "k22_m5"), |b| b.iter(|| fq_integer_points_with(black_box(&p), 5, s).unwrap()));
    }
    group.finish();
}

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    for (label, s) in STRATEGIES {
        group.bench_function(BenchmarkId::new(label, "f0_survey_n5"), |b| b.iter(|| f0_survey(5, s).unwrap()));
        group.bench_function(BenchmarkId::new(label, "antipode_n4"), |b| b.iter(|| run_suite(Suite::Antipode, 4, 3, s).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, flag_sum, integer_points, sweeps);
criterion_main!(benches);
