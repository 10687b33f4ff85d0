use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use alphatau::{encode_graph6, parse_graph6, Graph};

fn bench_codec(c: &mut Criterion) {
    let g = Graph::complete_bipartite(10, 10).unwrap();
    let line = encode_graph6(&g).unwrap();
    c.bench_function("encode K10,10", |b| {
        b.iter(|| encode_graph6(black_box(&g)).unwrap())
    });
    c.bench_function("parse K10,10", |b| {
        b.iter(|| parse_graph6(black_box(&line)).unwrap())
    });

    let lines: Vec<String> = alphatau::harness::labeled_enumeration(5)
        .unwrap()
        .map(|g| encode_graph6(&g).unwrap())
        .collect();
    let blob = lines.join("\n");
    c.bench_function("stream 1024 graphs", |b| {
        b.iter(|| {
            alphatau::Graph6Reader::new(black_box(blob.as_bytes()), true)
                .filter(|r| matches!(r, Ok(Ok(_))))
                .count()
        })
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = bench_codec
}
criterion_main!(benches);
