use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hopflab::{check_hopf, group_michaelis_verify, michaelis_verify};
use hopflab_bench::{dense_matrix, diagonal_s3, truncated_five};

fn rref(c: &mut Criterion) {
    let mut group = c.benchmark_group("rref");
    for n in [8, 16, 32] {
        let m = dense_matrix(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| m.rref()));
    }
    group.finish();
}

fn certificates(c: &mut Criterion) {
    let t5 = truncated_five();
    c.bench_function("check_hopf truncated_poly(5)", |b| b.iter(|| check_hopf(&t5)));
    c.bench_function("michaelis truncated_poly(5)", |b| {
        b.iter(|| michaelis_verify(&t5).unwrap())
    });
    let s3 = diagonal_s3();
    c.bench_function("group_michaelis diag(S3, Q)", |b| {
        b.iter(|| group_michaelis_verify(&s3).unwrap())
    });
}

criterion_group!(benches, rref, certificates);
criterion_main!(benches);
