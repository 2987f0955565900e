use arbor::check::{check_corpus, CheckOptions};
use arbor::corpus::CorpusSpec;
use arbor::par::Execution;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn corpus_sweep(c: &mut Criterion) {
    let opts = CheckOptions::default();
    let mut group = c.benchmark_group("check_corpus");
    group.sample_size(10);
    for spec in ["exhaustive:5", "classes:6", "mixed:300,10,1"] {
        let graphs = spec.parse::<CorpusSpec>().unwrap().generate().unwrap();
        for (name, exec) in [("parallel", Execution::Parallel), ("sequential", Execution::Sequential)] {
            group.bench_with_input(BenchmarkId::new(name, spec), &graphs, |b, graphs| {
                b.iter(|| check_corpus(graphs, spec, &opts, exec))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, corpus_sweep);
criterion_main!(benches);
