use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use typeseq_core::{run_suite, IdealStrategy, Parallelism, SuiteConfig};

fn bench_suite(c: &mut Criterion) {
    let universes = [
        ("maximal-g9", SuiteConfig { max_genus: 9, ..Default::default() }),
        (
            "all-ideals-g5",
            SuiteConfig { max_genus: 5, ideal_strategy: IdealStrategy::AllUpToBound { k: 2 }, ..Default::default() },
        ),
    ];
    let mut group = c.benchmark_group("suite");
    group.sample_size(10);
    for (name, cfg) in universes {
        for (mode, parallelism) in [("sequential", Parallelism::Sequential), ("parallel", Parallelism::Auto)] {
            let cfg = SuiteConfig { parallelism, ..cfg.clone() };
            group.bench_with_input(BenchmarkId::new(mode, name), &cfg, |b, cfg| {
                b.iter(|| black_box(run_suite(cfg).unwrap().total_failed))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench_suite);
criterion_main!(benches);
