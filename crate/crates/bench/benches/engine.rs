use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use polyaut_core::engine::{automorphism_group, polynomial_function_closure, FunctionChain};
use polyaut_core::group::catalog_group;

const CLOSURE_GROUPS: &[&str] = &["S3", "D8", "Q8", "D10"];
const CHAIN_GROUPS: &[&str] = &["D8", "A4", "Frob20", "S4", "Heis27"];
const AUT_GROUPS: &[&str] = &["D8", "A4", "S4", "C2xC4"];

fn closure(c: &mut Criterion) {
    let mut group = c.benchmark_group("closure_enumerate");
    group.sample_size(10);
    for name in CLOSURE_GROUPS {
        let g = catalog_group(name, usize::MAX).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| polynomial_function_closure(black_box(g), 1 << 22).unwrap().len())
        });
    }
    group.finish();
}

fn chain(c: &mut Criterion) {
    let mut group = c.benchmark_group("closure_chain");
    for name in CHAIN_GROUPS {
        let g = catalog_group(name, usize::MAX).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| FunctionChain::polynomial_functions(black_box(g)).order())
        });
    }
    group.finish();
}

fn automorphisms(c: &mut Criterion) {
    let mut group = c.benchmark_group("automorphism_group");
    for name in AUT_GROUPS {
        let g = catalog_group(name, usize::MAX).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| automorphism_group(black_box(g), 1 << 24).unwrap().len())
        });
    }
    group.finish();
}

criterion_group!(benches, closure, chain, automorphisms);
criterion_main!(benches);
