use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use facering::arith::{gaussian_echelon_with, random_point, Matrix, Mersenne61};
use facering::certify::check_poincare_duality;
use facering::exec::{self, Strategy};
use facering::ring::{generic_coords, ArtinianAlgebra, GorensteinAlgebra};
use facering::simplicial::{named, pseudomanifold_check, SimplicialComplex};

fn strategies() -> Vec<(&'static str, Strategy)> {
    let mut out = vec![("sequential", Strategy::Sequential)];
    #[cfg(feature = "parallel")]
    out.push(("rayon", Strategy::Rayon));
    out
}

fn echelon(c: &mut Criterion) {
    let mut group = c.benchmark_group("echelon");
    group.sample_size(10);
    for n in [96usize, 192] {
        let v = random_point::<Mersenne61>(n * n, n as u64, 0);
        let m = Matrix::from_fn(n, n, |i, j| v[i * n + j]);
        for (name, s) in strategies() {
            group.bench_with_input(BenchmarkId::new(name, n), &m, |b, m| b.iter(|| gaussian_echelon_with(black_box(m), s).rank()));
        }
    }
    group.finish();
}

fn algebra(c: &mut Criterion) {
    let mut group = c.benchmark_group("artinian");
    group.sample_size(10);
    for (label, cx) in [("simplex-5", named::boundary_simplex(5)), ("cross-4", named::cross_polytope_boundary(4))] {
        for (name, s) in strategies() {
            group.bench_function(BenchmarkId::new(name, label), |b| {
                b.iter(|| {
                    let coords = generic_coords::<Mersenne61>(cx.top_size(), cx.universe(), 1, 0);
                    ArtinianAlgebra::with_strategy(cx.clone(), coords, cx.top_size(), s).unwrap().dims()
                })
            });
        }
    }
    group.finish();
}

fn duality_check(cx: &SimplicialComplex) -> bool {
    let mu = pseudomanifold_check::<Mersenne61>(cx).fundamental_class.unwrap();
    let a =
        ArtinianAlgebra::with_strategy(cx.clone(), generic_coords(cx.top_size(), cx.universe(), 2, 0), cx.top_size(), Strategy::Sequential).unwrap();
    check_poincare_duality(&GorensteinAlgebra::new(a, &mu).unwrap()).unwrap().passed()
}

fn corpus(c: &mut Criterion) {
    let mut group = c.benchmark_group("corpus-duality");
    group.sample_size(10);
    let spheres: Vec<SimplicialComplex> = (2..=5).map(named::boundary_simplex).chain((2..=4).map(named::cross_polytope_boundary)).collect();
    for (name, s) in strategies() {
        group.bench_function(name, |b| b.iter(|| exec::map(s, spheres.clone(), |cx| duality_check(&cx))));
    }
    group.finish();
}

criterion_group!(benches, echelon, algebra, corpus);
criterion_main!(benches);
