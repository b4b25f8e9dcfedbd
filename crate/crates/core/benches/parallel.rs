//! One worker versus the default rayon pool on the parallel hot paths.
//! With `--no-default-features` both variants run the sequential code.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use coblekit::config::{build_incidence, configuration_automorphisms};
use coblekit::geometry::{build_igusa, fp_singular_scan, projectivity_extension_count};
use coblekit::groups::subgroups_up_to_conjugacy;
use coblekit::rigidity::aut_x6;
use coblekit::{LinearForm, Rational};

fn pools() -> Vec<(&'static str, rayon::ThreadPool)> {
    let default = rayon::ThreadPoolBuilder::new().build().expect("pool");
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().expect("pool");
    vec![("1-thread", single), ("default", default)]
}

fn bench(c: &mut Criterion) {
    let m = build_igusa();
    let inc = build_incidence();
    let x6 = LinearForm::<Rational>::parse("x6", 6).expect("form");
    let ambient = aut_x6().expect("order 240");
    let mut group = c.benchmark_group("parallel");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::new("fp_scan_p13", name), |b| {
            b.iter(|| pool.install(|| fp_singular_scan(&m, 13).expect("prime")))
        });
        group.bench_function(BenchmarkId::new("extension_x6", name), |b| {
            b.iter(|| pool.install(|| projectivity_extension_count(&m, &x6).expect("section")))
        });
        group.bench_function(BenchmarkId::new("subgroup_classes", name), |b| {
            b.iter(|| pool.install(|| subgroups_up_to_conjugacy(&ambient).expect("order 240")))
        });
        group.bench_function(BenchmarkId::new("config_automorphisms", name), |b| {
            b.iter(|| pool.install(|| configuration_automorphisms(&inc)))
        });
    }
    group.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
