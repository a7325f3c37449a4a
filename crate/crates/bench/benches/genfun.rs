use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use wreathchar::genfun::main_theorem_rhs;
use wreathchar::{CharacterSpec, Strategy, WreathElement};
use wreathchar_bench::worked_example;

fn small_expansions(c: &mut Criterion) {
    let spec = CharacterSpec::parse("2,1/1", "st").unwrap();
    c.bench_function("rhs_n4_d2", |b| b.iter(|| main_theorem_rhs(black_box(&spec), Strategy::Auto)));
    let spec = CharacterSpec::parse("2/1/1", "sts").unwrap();
    c.bench_function("rhs_n4_d3", |b| b.iter(|| main_theorem_rhs(black_box(&spec), Strategy::Auto)));
}

fn worked(c: &mut Criterion) {
    let spec = worked_example();
    let mut group = c.benchmark_group("worked_example");
    group.sample_size(10);
    group.bench_function("rhs_n6_d3", |b| b.iter(|| main_theorem_rhs(black_box(&spec), Strategy::Auto)));
    let g = WreathElement::parse_one_line("6 2 3 4@1 5 1@1", 3).unwrap();
    let oracle = spec.oracle();
    group.bench_function("oracle_n6_d3", |b| b.iter(|| oracle.eval(black_box(&g))));
    group.finish();
}

criterion_group!(benches, small_expansions, worked);
criterion_main!(benches);
