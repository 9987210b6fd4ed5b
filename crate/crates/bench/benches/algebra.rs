use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use llvkit::clifford::CliffordAlgebra;
use llvkit::exact::factor_rational;
use llvkit::graded::{exterior_algebra, surface_ring};
use llvkit::groupalg::{central_idempotents, FiniteGroup};
use llvkit::lie::minimal_ideals;
use llvkit::linalg::{det, rref};
use llvkit::llv::{llv_algebra, LefschetzSampler};
use llvkit::spinor::{spinor_rep, SpinorContext};
use llvkit::{qi, Mat, Poly};

fn linalg(c: &mut Criterion) {
    let m = Mat::from_fn(8, 8, |i, j| qi(((i * 7 + j * 3) % 11) as i64 - 5));
    c.bench_function("rref 8x8", |b| b.iter(|| rref(black_box(&m))));
    c.bench_function("det 8x8", |b| b.iter(|| det(black_box(&m))));
    let f = &Poly::monomial(qi(1), 12) - &Poly::one();
    c.bench_function("factor x^12-1", |b| b.iter(|| factor_rational(black_box(&f)).unwrap()));
}

fn llv(c: &mut Criterion) {
    let mut g = c.benchmark_group("llv");
    g.sample_size(10);
    let s = LefschetzSampler::with_seed(0);
    let ext = exterior_algebra(4);
    g.bench_function("exterior 4", |b| b.iter(|| llv_algebra(black_box(&ext), &s).unwrap()));
    let b5 = Mat::diag(&[qi(1), qi(1), qi(1), qi(-1), qi(-1)]);
    let surf = surface_ring(&b5).unwrap();
    g.bench_function("surface m=5", |b| b.iter(|| llv_algebra(black_box(&surf), &s).unwrap()));
    let so8 = llv_algebra(&ext, &s).unwrap().algebra;
    g.bench_function("minimal ideals so(8)", |b| b.iter(|| minimal_ideals(black_box(&so8)).unwrap()));
    g.finish();
}

fn spinor(c: &mut Criterion) {
    let ctx = SpinorContext::new(3);
    let basis = ctx.so_basis();
    c.bench_function("spinor rep n=3 basis", |b| {
        b.iter(|| basis.iter().map(|x| spinor_rep(x, &ctx).unwrap()).collect::<Vec<_>>())
    });
}

fn clifford(c: &mut Criterion) {
    let alg = CliffordAlgebra::diagonal(&[qi(1), qi(2), qi(-1), qi(3)]);
    let x = alg.element((0..16).map(|i| qi(i % 5 - 2)).collect()).unwrap();
    let y = alg.element((0..16).map(|i| qi(i % 3 - 1)).collect()).unwrap();
    c.bench_function("clifford product n=4", |b| b.iter(|| alg.cmul(black_box(&x), black_box(&y)).unwrap()));
    let even = alg.cmul(&alg.vector(&[qi(1), qi(1), qi(0), qi(0)]), &alg.vector(&[qi(0), qi(1), qi(1), qi(1)])).unwrap();
    c.bench_function("gspin test n=4", |b| b.iter(|| alg.is_gspin(black_box(&even))));
}

fn groupalg(c: &mut Criterion) {
    c.bench_function("central idempotents S4", |b| {
        b.iter_batched(|| FiniteGroup::symmetric(4), |g| central_idempotents(&g), BatchSize::SmallInput)
    });
}

criterion_group!(benches, linalg, llv, spinor, clifford, groupalg);
criterion_main!(benches);
