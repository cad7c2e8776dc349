use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use scalext_bench::{descriptor, left_ext, phi_pair};
use scalext_core::check::CheckOptions;
use scalext_core::scalarext::{bm_tau, build_maps_phi, left_scalar_ext, symmetric_hopf_via_phi, verify_tau_antihom};

fn tau_sweep(c: &mut Criterion) {
    let o = CheckOptions::default();
    let mut g = c.benchmark_group("tau_antihom");
    for name in ["h4", "s3"] {
        let d = descriptor(name);
        let ext = left_ext(name);
        let tau = bm_tau(&d.left_yd, &ext.smash);
        g.bench_function(name, |b| b.iter(|| black_box(verify_tau_antihom(&d.left_yd, &ext.smash, &tau, &o))));
    }
    g.finish();
}

fn bialgebroid(c: &mut Criterion) {
    let o = CheckOptions::default();
    let mut g = c.benchmark_group("bialgebroid");
    g.sample_size(10);
    for name in ["h4", "s3"] {
        let d = descriptor(name);
        g.bench_function(format!("build/{name}"), |b| b.iter(|| black_box(left_scalar_ext(&d.left_yd).unwrap())));
        let ext = left_ext(name);
        g.bench_function(format!("verify/{name}"), |b| b.iter(|| black_box(ext.bialgebroid.verify(&o))));
    }
    g.finish();
}

fn symmetric(c: &mut Criterion) {
    let o = CheckOptions::default();
    let mut g = c.benchmark_group("symmetric");
    g.sample_size(10);
    let p = phi_pair("s3");
    g.bench_function("maps/s3", |b| b.iter(|| black_box(build_maps_phi(&p).unwrap())));
    let bundle = symmetric_hopf_via_phi(&p).unwrap();
    g.bench_function("verify/s3", |b| b.iter(|| black_box(bundle.on_lh.verify(&o))));
    g.finish();
}

criterion_group!(benches, tau_sweep, bialgebroid, symmetric);
criterion_main!(benches);
