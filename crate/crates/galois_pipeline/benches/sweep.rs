use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use exactmath::q;
use galois_pipeline::{proposition1_certificate_with, proposition2_certificate_with, sample_s, Execution, Family};

fn bench(c: &mut Criterion) {
    let mut g = c.benchmark_group("sample_sweep");
    g.sample_size(10);
    let (b, d) = (q(3, 1), q(2, 1));
    let s11 = sample_s(Family::Linear11Distinct, &b, &d, 25, 7);
    let s12 = sample_s(Family::Quadratic12, &b, &d, 25, 7);
    let mut modes = vec![("sequential", Execution::Sequential)];
    #[cfg(feature = "parallel")]
    modes.push(("parallel", Execution::Parallel));
    for (name, exec) in modes {
        g.bench_with_input(BenchmarkId::new("family11", name), &exec, |bch, &e| {
            bch.iter(|| proposition1_certificate_with(&b, &d, 2, &s11, e).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("family12", name), &exec, |bch, &e| {
            bch.iter(|| proposition2_certificate_with(&b, &d, 3, &s12, e).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
