use serde_json::json;

use super::{fingerprint_of, rank_bound, vector_json, Certificate, InputFingerprint, Timer, Verdict};
use crate::arith::{seeded_rng, ErrorBound, FiniteField, Matrix};
use crate::ring::{FaceMonomial, GorensteinAlgebra};
use crate::simplicial::Face;
use crate::{Error, Result};

fn rank_or_zero<S: crate::arith::Scalar>(m: &Matrix<S>) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        0
    } else {
        m.rank()
    }
}

/// If `β(ker α)` meets `im α` only in zero, then `ker(α + tβ) = ker α ∩ ker β`
/// for every nonzero `t`. Checks the hypothesis by rank arithmetic and the
/// conclusion at `trials` random `t`.
pub fn kronecker_transversality<S: FiniteField>(alpha: &Matrix<S>, beta: &Matrix<S>, trials: usize, seed: u64) -> Result<Certificate> {
    let timer = Timer::start("kronecker-transversality");
    if alpha.rows() != beta.rows() || alpha.cols() != beta.cols() {
        return Err(Error::Domain(format!("shapes {}x{} and {}x{} differ", alpha.rows(), alpha.cols(), beta.rows(), beta.cols())));
    }
    let n = alpha.cols();
    let rank_alpha = rank_or_zero(alpha);
    let ker_alpha = alpha.kernel();
    // columns of β·K span β(ker α)
    let beta_ker: Vec<Vec<S>> = ker_alpha.iter().map(|v| beta.mul_vec(v)).collect::<Result<_>>()?;
    let beta_ker_m = Matrix::from_columns(alpha.rows(), &beta_ker);
    let dim_beta_ker = rank_or_zero(&beta_ker_m);
    let dim_sum = rank_or_zero(&beta_ker_m.hstack(alpha)?);
    let transversal = dim_beta_ker + rank_alpha == dim_sum;
    let common = n - rank_or_zero(&alpha.vstack(beta)?);

    let mut rng = seeded_rng(seed, 0);
    let mut counterexample = None;
    let mut kernel_dims = Vec::new();
    for _ in 0..trials {
        let t = loop {
            let t = S::random(&mut rng);
            if !crate::arith::Scalar::is_zero(&t) {
                break t;
            }
        };
        let comb = Matrix::from_fn(alpha.rows(), n, |i, j| *alpha.get(i, j) + t * *beta.get(i, j));
        let dim = n - rank_or_zero(&comb);
        kernel_dims.push(dim);
        if dim != common && counterexample.is_none() {
            counterexample = Some(json!({ "t": t.to_string(), "kernel_dim": dim }));
        }
    }
    let verdict = if !transversal { Verdict::ReportOnly } else { Verdict::from_bool(counterexample.is_none()) };
    let witness = json!({
        "rank_alpha": rank_alpha,
        "dim_beta_ker_alpha": dim_beta_ker,
        "dim_sum": dim_sum,
        "transversal": transversal,
        "common_kernel_dim": common,
        "kernel_dims": kernel_dims,
        "counterexample": counterexample,
    });
    // exact for each t; the draws only choose which t are tested
    Ok(timer.finish(InputFingerprint::of_matrices(&[alpha, beta]), verdict, witness, ErrorBound::ZERO, Some(seed)))
}

/// `ker Σ_{v∈W} c_v x_v = ∩_{v∈W} ker x_v` on `B^k` for random `c`.
pub fn transversal_prime_check<S: FiniteField>(g: &GorensteinAlgebra<S>, w: Face, k: usize, seed: u64) -> Result<Certificate> {
    let timer = Timer::start("transversal-prime");
    let d = g.d();
    if w.is_empty() {
        return Err(Error::Domain("empty vertex set".into()));
    }
    if k >= d {
        return Err(Error::Domain(format!("k = {k} must be below d = {d}")));
    }
    let c = g.artinian().complex();
    let dim = g.dim(k);
    let target = g.dim(k + 1);
    let mut rng = seeded_rng(seed, 0);
    let mut combo = Matrix::<S>::zeros(dim, target);
    let mut stacked = Matrix::<S>::zeros(dim, 0);
    let mut coeffs = Vec::new();
    for v in w.vertices() {
        let m = g.multiplication_matrix(k, &g.reduce_monomial(&FaceMonomial::var(v)))?;
        let cv = S::random(&mut rng);
        coeffs.push(cv);
        combo = Matrix::from_fn(dim, target, |i, j| *combo.get(i, j) + cv * *m.get(i, j));
        stacked = stacked.hstack(&m)?;
    }
    let ker_combo = dim - rank_or_zero(&combo);
    let ker_common = dim - rank_or_zero(&stacked);
    let all_vertices = w == c.vertex_set();
    let ok = ker_combo == ker_common && (!all_vertices || ker_common == 0);
    let bound = rank_bound(g.artinian(), dim - ker_combo, 1).0.union(ErrorBound::schwartz_zippel((dim - ker_combo) as u128, S::order()));
    let witness = json!({
        "k": k,
        "vertices": c.face_labels(w),
        "dim": dim,
        "kernel_of_combination": ker_combo,
        "common_kernel": ker_common,
        "all_vertices": all_vertices,
        "lefschetz_injective": if all_vertices { Some(ker_combo == 0) } else { None },
        "coefficients": vector_json(&coeffs),
    });
    let fp = fingerprint_of(g);
    Ok(timer.finish(fp, Verdict::from_bool(ok), witness, bound, Some(seed)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Mersenne61, Scalar, F101};
    use crate::ring::{generic_coords, ArtinianAlgebra};
    use crate::simplicial::{named, pseudomanifold_check, SimplicialComplex};
    use rand::Rng;

    fn m(rows: Vec<Vec<i64>>) -> Matrix<F101> {
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(F101::from_i64).collect()).collect()).unwrap()
    }

    #[test]
    fn trivial_cases() {
        let cert = kronecker_transversality(&m(vec![vec![0, 0], vec![0, 0]]), &m(vec![vec![1, 0], vec![0, 1]]), 8, 1).unwrap();
        assert_eq!(cert.verdict, Verdict::Pass);
        assert_eq!(cert.witness["common_kernel_dim"], json!(0));
        let cert = kronecker_transversality(&m(vec![vec![1, 0], vec![0, 0]]), &m(vec![vec![0, 0], vec![0, 1]]), 8, 1).unwrap();
        assert_eq!(cert.verdict, Verdict::Pass);
        assert!(kronecker_transversality(&m(vec![vec![1, 0]]), &m(vec![vec![1], vec![0]]), 1, 1).is_err());
    }

    #[test]
    fn non_transversal_is_report_only() {
        // β maps ker α onto im α
        let cert = kronecker_transversality(&m(vec![vec![1, 0], vec![0, 0]]), &m(vec![vec![0, 1], vec![0, 0]]), 4, 2).unwrap();
        assert_eq!(cert.verdict, Verdict::ReportOnly);
    }

    #[test]
    fn random_transversal_instances() {
        let mut rng = seeded_rng(42, 0);
        let mut seen = 0;
        while seen < 20 {
            let rank = rng.gen_range(0..4);
            // low-rank α so the hypothesis is not automatic
            let u = Matrix::<Mersenne61>::from_fn(6, rank, |_, _| Mersenne61::random(&mut rng));
            let v = Matrix::<Mersenne61>::from_fn(rank, 4, |_, _| Mersenne61::random(&mut rng));
            let alpha = if rank == 0 { Matrix::zeros(6, 4) } else { u.mul(&v).unwrap() };
            let beta = Matrix::from_fn(6, 4, |_, _| Mersenne61::random(&mut rng));
            let cert = kronecker_transversality(&alpha, &beta, 8, seen).unwrap();
            if cert.witness["transversal"] == json!(true) {
                assert_eq!(cert.verdict, Verdict::Pass);
                seen += 1;
            }
        }
    }

    fn gorenstein(c: &SimplicialComplex, seed: u64) -> GorensteinAlgebra<Mersenne61> {
        let mu = pseudomanifold_check::<Mersenne61>(c).fundamental_class.unwrap();
        let a = ArtinianAlgebra::new(c.clone(), generic_coords(c.top_size(), c.universe(), seed, 0), c.top_size()).unwrap();
        GorensteinAlgebra::new(a, &mu).unwrap()
    }

    #[test]
    fn prime_property_on_the_tetrahedron() {
        let g = gorenstein(&named::boundary_simplex(3), 1);
        let all = g.artinian().complex().vertex_set();
        let cert = transversal_prime_check(&g, all, 1, 3).unwrap();
        assert_eq!(cert.verdict, Verdict::Pass);
        assert_eq!(cert.witness["lefschetz_injective"], json!(true));
        let single = transversal_prime_check(&g, Face::from_vertices([2]), 1, 3).unwrap();
        assert_eq!(single.verdict, Verdict::Pass);
        assert!(transversal_prime_check(&g, Face::EMPTY, 1, 3).is_err());
    }

    #[test]
    fn antipodal_pair_on_the_octahedron() {
        let g = gorenstein(&named::cross_polytope_boundary(3), 2);
        let cert = transversal_prime_check(&g, Face::from_vertices([0, 1]), 1, 5).unwrap();
        assert!(cert.witness["common_kernel"].as_u64().unwrap() <= cert.witness["kernel_of_combination"].as_u64().unwrap());
    }
}
