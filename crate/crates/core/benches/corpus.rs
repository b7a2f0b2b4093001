use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use bcx::verify::{corpus, run_suite_on, Runner, Suite, VerifyConfig};

fn runners(c: &mut Criterion) {
    let mut group = c.benchmark_group("suite");
    group.sample_size(10);
    for suite in [Suite::Delta1EqP2, Suite::OrderingInvariance, Suite::ContractionLaw] {
        let graphs = corpus(suite, 7).unwrap();
        for (name, runner) in [("sequential", Runner::Sequential), ("parallel", Runner::Parallel { jobs: 0 })] {
            let cfg = VerifyConfig {
                max: 7,
                seeds: 3,
                stop_on_fail: false,
                runner,
            };
            group.bench_with_input(BenchmarkId::new(name, suite.name()), &graphs, |b, g| {
                b.iter(|| run_suite_on(suite, g, &cfg).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, runners);
criterion_main!(benches);
