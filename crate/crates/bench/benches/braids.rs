use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use braidmon::{enum_simple, graph_simple_braids, graph_simple_perms, BraidEngine, BraidWord, Limits};

fn canonical(c: &mut Criterion) {
    let words: Vec<BraidWord> = ["5: 4 3 3 2 3", "5: 1 3 2 2 3", "6: 1 2 1 3 2 1 4 3 2 1"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let mut group = c.benchmark_group("canonical");
    for w in &words {
        group.bench_with_input(BenchmarkId::from_parameter(w), w, |b, w| {
            // fresh engine so the memo cache does not hide the closure
            b.iter(|| BraidEngine::new(Limits::default()).canonical(black_box(w)).unwrap())
        });
    }
    group.finish();
}

fn simple_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enum_simple");
    for n in [5, 7, 9] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            let engine = BraidEngine::default();
            b.iter(|| enum_simple(&engine, black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn graphs(c: &mut Criterion) {
    let mut group = c.benchmark_group("graph");
    group.sample_size(20);
    group.bench_function("sb6", |b| {
        b.iter(|| graph_simple_braids(&BraidEngine::default(), 6).unwrap())
    });
    group.bench_function("ssigma5", |b| {
        let engine = BraidEngine::default();
        b.iter(|| graph_simple_perms(&engine, 5).unwrap())
    });
    group.finish();
}

fn planarity(c: &mut Criterion) {
    let engine = BraidEngine::default();
    let sb6 = graph_simple_braids(&engine, 6).unwrap();
    let ss5 = graph_simple_perms(&engine, 5).unwrap();
    let mut group = c.benchmark_group("planarity");
    group.bench_function("decide/sb6", |b| b.iter(|| black_box(&sb6).planar()));
    group.bench_function("witness/sb6", |b| b.iter(|| black_box(&sb6).is_planar()));
    group.bench_function("witness/ssigma5", |b| b.iter(|| black_box(&ss5).is_planar()));
    group.finish();
}

criterion_group!(benches, canonical, simple_enumeration, graphs, planarity);
criterion_main!(benches);
