use criterion::{criterion_group, criterion_main, Criterion};
use korbit::graph::GraphContext;
use korbit::verify::verify;
use korbit::{hasse, Family, FamilyTag};

fn bench_hasse(c: &mut Criterion) {
    for f in [Family::AIII { p: 3, q: 3 }, Family::CI { m: 3 }, Family::AI { n: 6 }] {
        c.bench_function(&format!("hasse {f}"), |b| b.iter(|| hasse(&f).unwrap()));
    }
}

fn bench_graph(c: &mut Criterion) {
    for f in [Family::AIII { p: 3, q: 3 }, Family::AII { n: 8 }] {
        c.bench_function(&format!("graph {f}"), |b| b.iter(|| GraphContext::new(&f).unwrap()));
    }
}

fn bench_verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    group.bench_function("CII <= 8", |b| b.iter(|| verify(FamilyTag::CII, 8).unwrap()));
    group.finish();
}

criterion_group!(benches, bench_hasse, bench_graph, bench_verify);
criterion_main!(benches);
