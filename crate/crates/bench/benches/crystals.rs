use criterion::{black_box, criterion_group, criterion_main, Criterion};
use fock_bench::vertices;
use fock_core::crystal::e_tilde;
use fock_core::{
    crystal_graph, crystal_position, is_unitary, run_sweep, Abacus, Check, CrystalKind, FockParam,
    SweepSpec,
};

fn operators(c: &mut Criterion) {
    let vs = vertices(3, 1, 8);
    c.bench_function("e_tilde all residues, |nu| <= 8", |b| {
        b.iter(|| {
            vs.iter()
                .map(|nu| (0..3).filter(|&i| e_tilde(nu, i).is_some()).count())
                .sum::<usize>()
        })
    });
    c.bench_function("abacus round trip, |nu| <= 8", |b| {
        b.iter(|| vs.iter().all(|nu| Abacus::from_charged(nu).to_charged() == *nu))
    });
    c.bench_function("crystal position, |nu| <= 8", |b| {
        b.iter(|| vs.iter().filter(|nu| crystal_position(nu).is_ok()).count())
    });
    c.bench_function("unitarity, |nu| <= 8", |b| {
        b.iter(|| vs.iter().filter(|nu| is_unitary(&nu.label(), nu.param()).unitary).count())
    });
}

fn graphs(c: &mut Criterion) {
    let param = FockParam::new(3, 1).unwrap();
    c.bench_function("affine graph, n <= 8", |b| {
        b.iter(|| crystal_graph(param, black_box(8), CrystalKind::Sle).unwrap())
    });
    c.bench_function("level-rank graph, n <= 8", |b| {
        b.iter(|| crystal_graph(param, black_box(8), CrystalKind::Slinf).unwrap())
    });
}

fn sweep(c: &mut Criterion) {
    let spec = SweepSpec::new(vec![2, 3], vec![0, 1, 2], 6, &Check::UNITARITY);
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    group.bench_function("unitarity checks, e 2..3, s 0..2, n <= 6", |b| {
        b.iter(|| run_sweep(&spec).unwrap())
    });
    group.finish();
}

criterion_group!(benches, operators, graphs, sweep);
criterion_main!(benches);
