use conncat::catalog;
use conncat::category::NormalCategory;
use conncat::cones::{enumerate_cones, DEFAULT_CONE_CAP};
use conncat::semigroup::GreensData;
use conncat::Exec;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn associativity(c: &mut Criterion) {
    let t4 = catalog::transformation_monoid(4).unwrap();
    let mut group = c.benchmark_group("associativity_t4");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| black_box(t4.associativity_violation(exec)))
        });
    }
    group.finish();
}

fn greens(c: &mut Criterion) {
    let t4 = catalog::transformation_monoid(4).unwrap();
    let mut group = c.benchmark_group("greens_t4");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| black_box(GreensData::compute_with(&t4, exec)))
        });
    }
    group.finish();
}

fn cones(c: &mut Criterion) {
    let p3 = NormalCategory::new(catalog::powerset_category(3).unwrap()).unwrap();
    let mut group = c.benchmark_group("cones_p3");
    group.sample_size(20);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| black_box(enumerate_cones(&p3, DEFAULT_CONE_CAP, exec).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, associativity, greens, cones);
criterion_main!(benches);
