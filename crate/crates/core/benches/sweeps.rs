use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use twospinor::field::{sample_field, Grid, DEFAULT_RESIDUAL_TOL};
use twospinor::verify::Suite;
use twospinor::Execution;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn identity_sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("identity_sweep");
    for n in [1_000usize, 10_000] {
        for (label, exec) in MODES {
            let suite = Suite::new(42, exec);
            group.bench_with_input(BenchmarkId::new(format!("equivariance/{label}"), n), &n, |b, &n| {
                b.iter(|| black_box(suite.equivariance(n)))
            });
            group.bench_with_input(BenchmarkId::new(format!("beta_round_trip/{label}"), n), &n, |b, &n| {
                b.iter(|| black_box(suite.beta_round_trip(n)))
            });
        }
    }
    group.finish();
}

fn section_sampling(c: &mut Criterion) {
    let mut group = c.benchmark_group("sample_field");
    group.sample_size(20);
    for nodes in [11usize, 21] {
        let grid = Grid::Cartesian { extent: 2.0, nodes };
        for (label, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(label, nodes), &grid, |b, grid| {
                b.iter(|| black_box(sample_field(1.0, grid, DEFAULT_RESIDUAL_TOL, exec).unwrap()))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, identity_sweeps, section_sampling);
criterion_main!(benches);
