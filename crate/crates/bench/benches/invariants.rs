use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use braidlink::braid::{delta_power, family, FamilyKind};
use braidlink::prohibitor::{degree9_enumerate, SieveOptions};
use braidlink::seifert::{conway_potential, link_det, signature_nullity};
use braidlink::skeinpoly::{a_matrix_det_symbolic, PmSign};
use braidlink::FamilyParams;

fn seifert(c: &mut Criterion) {
    let mut g = c.benchmark_group("seifert");
    for n in [3i64, 6, 9] {
        let b = delta_power(n, 2);
        g.bench_with_input(BenchmarkId::new("signature_delta_sq", n), &b, |bn, b| bn.iter(|| signature_nullity(black_box(b))));
        g.bench_with_input(BenchmarkId::new("det_delta_sq", n), &b, |bn, b| bn.iter(|| link_det(black_box(b))));
    }
    let b = family(FamilyKind::B, &FamilyParams::new(3, 2, vec![1, 2, 3]).unwrap()).unwrap();
    g.bench_function("conway_b_family", |bn| bn.iter(|| conway_potential(black_box(&b))));
    g.finish();
}

fn skein(c: &mut Criterion) {
    let mut g = c.benchmark_group("skeinpoly");
    for j in [4usize, 8, 12] {
        g.bench_with_input(BenchmarkId::new("a_matrix_det_symbolic", j), &j, |bn, &j| {
            bn.iter(|| a_matrix_det_symbolic(black_box(j), PmSign::Plus).unwrap())
        });
    }
    g.finish();
}

fn sieve(c: &mut Criterion) {
    let opts = SieveOptions { gamma_balance: true, ..Default::default() };
    c.bench_function("degree9_enumerate_m_curve", |bn| bn.iter(|| degree9_enumerate(black_box(2), 1, 23, opts).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = seifert, skein, sieve
}
criterion_main!(benches);
