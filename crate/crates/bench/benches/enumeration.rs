use criterion::{black_box, criterion_group, criterion_main, Criterion};
use hessberg_bench::weyl_group;
use hessberg_core::catalog::build_catalog;
use hessberg_core::hessenberg::enumerate_all;
use hessberg_core::weyl::{enumerate_weyl, DEFAULT_ELEMENT_CAP};
use hessberg_core::RootSystem;

fn weyl_enumeration(c: &mut Criterion) {
    for t in ["A3", "B4", "F4"] {
        let rs = RootSystem::from_type(t).unwrap();
        c.bench_function(&format!("enumerate_weyl/{t}"), |b| {
            b.iter(|| enumerate_weyl(black_box(rs.clone()), DEFAULT_ELEMENT_CAP).unwrap())
        });
    }
}

fn catalog(c: &mut Criterion) {
    for t in ["A3", "B3"] {
        let g = weyl_group(t);
        let spaces = enumerate_all(g.root_system()).unwrap();
        c.bench_function(&format!("catalog/{t}"), |b| b.iter(|| build_catalog(&g, black_box(&spaces), 1).unwrap()));
    }
}

fn hessenberg_spaces(c: &mut Criterion) {
    let rs = RootSystem::from_type("F4").unwrap();
    c.bench_function("enumerate_hessenberg/F4", |b| b.iter(|| enumerate_all(black_box(&rs)).unwrap()));
}

criterion_group!(benches, weyl_enumeration, catalog, hessenberg_spaces);
criterion_main!(benches);
