use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use polyaut_core::fm::{build_ia_endoform, endoform_to_polyform, parse_word, FreeMetabelian, IASpec};
use polyaut_core::GroupOps;

fn multiply(c: &mut Criterion) {
    let g = FreeMetabelian::new(3).unwrap();
    let x = parse_word("(a b^-2 c)^7 [a,c]^3").unwrap().to_fm(3).unwrap();
    let y = parse_word("[[a,b],c]^-4 b^5 [c,b,a]").unwrap().to_fm(3).unwrap();
    c.bench_function("fm_mul_rank3", |b| b.iter(|| g.op(black_box(&x), black_box(&y))));
    c.bench_function("fm_commutator_rank3", |b| {
        b.iter(|| g.commutator(black_box(&x), black_box(&y)))
    });
}

fn ia_conversion(c: &mut Criterion) {
    let g = FreeMetabelian::new(2).unwrap();
    let v = parse_word("[a,b]^3 [[a,b],a]^-2 [[a,b],b,b]").unwrap().to_fm(2).unwrap();
    let w = parse_word("[[a,b],a^-3]^2 [a,b]^-1").unwrap().to_fm(2).unwrap();
    let spec = IASpec::new(v, w).unwrap();
    c.bench_function("build_ia_endoform", |b| b.iter(|| build_ia_endoform(black_box(&spec)).unwrap()));
    let form = build_ia_endoform(&spec).unwrap().form;
    c.bench_function("endoform_to_polyform", |b| {
        b.iter(|| endoform_to_polyform(black_box(&form), &g.identity()))
    });
}

criterion_group!(benches, multiply, ia_conversion);
criterion_main!(benches);
