use serde_json::json;

use super::{
    element_json, fingerprint_of, left_kernel_vector, rank_bound, vector_json, Certificate, ElementMode, InputFingerprint, LefschetzQuery, Timer,
    Verdict,
};
use crate::arith::{ErrorBound, FiniteField, Scalar};
use crate::ring::{socle, ArtinianAlgebra, GorensteinAlgebra};
use crate::simplicial::{cm_check, fhg_vectors, is_m_vector, Chain, CycleSubspace};
use crate::{Error, Result};

/// Every pairing `B^k × B^{d-k} → B^d` is perfect.
pub fn check_poincare_duality<S: Scalar>(g: &GorensteinAlgebra<S>) -> Result<Certificate> {
    let timer = Timer::start("poincare-duality");
    let d = g.d();
    let mut ranks = Vec::new();
    let mut bound = ErrorBound::ZERO;
    let mut failure = None;
    for k in 0..=d {
        let p = g.pairing_matrix(k)?;
        let rank = p.rank();
        ranks.push(rank);
        bound = bound.union(rank_bound(g.artinian(), rank, 0).0);
        if failure.is_none() && (p.rows() != p.cols() || rank < p.rows()) {
            failure = Some(json!({
                "degree": k,
                "shape": [p.rows(), p.cols()],
                "rank": rank,
                "kernel_vector": left_kernel_vector(&p).map(|v| vector_json(&v)),
            }));
        }
    }
    let verdict = Verdict::from_bool(failure.is_none());
    let witness = json!({ "dims": g.dims(), "pairing_ranks": ranks, "failure": failure });
    Ok(timer.finish(fingerprint_of(g), verdict, witness, bound, fingerprint_of(g).seed))
}

/// Builds the quotient for `mu` and checks duality; an inconsistent degree
/// map is reported as a failure with the solver's witness.
pub fn check_poincare_duality_from<S: Scalar>(alg: ArtinianAlgebra<S>, mu: &Chain<S>) -> Result<Certificate> {
    let fingerprint = InputFingerprint::of_algebra(&alg);
    let timer = Timer::start("poincare-duality");
    match GorensteinAlgebra::new(alg, mu) {
        Ok(g) => check_poincare_duality(&g),
        Err(Error::CycleDegreeInconsistency(msg)) | Err(Error::FatalInconsistency(msg)) => {
            let seed = fingerprint.seed;
            Ok(timer.finish(fingerprint, Verdict::Fail, json!({ "degree_map": msg }), ErrorBound::ZERO, seed))
        }
        Err(e) => Err(e),
    }
}

/// `ℓ^{d-2k}: B^k → B^{d-k}` is an isomorphism.
pub fn certify_hard_lefschetz<S: FiniteField>(g: &GorensteinAlgebra<S>, q: &LefschetzQuery<S>) -> Result<Certificate> {
    let timer = Timer::start("hard-lefschetz");
    let d = g.d();
    let ks: Vec<usize> = match q.k {
        Some(k) if 2 * k > d => return Err(Error::Domain(format!("k = {k} exceeds d/2 for d = {d}"))),
        Some(k) => vec![k],
        None => (0..=d / 2).collect(),
    };
    let coeffs = q.ell.coefficients(g.artinian().complex().universe())?;
    let ell = g.linear_form(&coeffs)?;
    let mut ranks = Vec::new();
    let mut bound = ErrorBound::ZERO;
    let mut failure = None;
    for &k in &ks {
        let e = d - 2 * k;
        let m = g.multiplication_matrix(k, &g.power(&ell, e)?)?;
        let rank = m.rank();
        ranks.push(json!({ "k": k, "power": e, "dim": g.dim(k), "target_dim": g.dim(d - k), "rank": rank }));
        bound = bound.union(rank_bound(g.artinian(), rank, e).0);
        if failure.is_none() && (rank < g.dim(k) || g.dim(k) != g.dim(d - k)) {
            failure = Some(json!({ "k": k, "kernel_vector": left_kernel_vector(&m).map(|v| vector_json(&v)) }));
        }
    }
    let verdict = match q.ell {
        // no theorem covers a single variable: probe only
        ElementMode::SingleVariable(_) => Verdict::ReportOnly,
        _ => Verdict::from_bool(failure.is_none()),
    };
    let witness = json!({
        "ell": q.ell.describe(),
        "ell_coefficients": vector_json(&coeffs),
        "dims": g.dims(),
        "maps": ranks,
        "failure": failure,
        "degree_bound": rank_bound(g.artinian(), g.dims().into_iter().max().unwrap_or(0), d).1,
    });
    let seed = q.ell.seed().or(fingerprint_of(g).seed);
    Ok(timer.finish(fingerprint_of(g), verdict, witness, bound, seed))
}

/// Injectivity of `ℓ^{d-2k}: B^k(M) → B^{d-k}(M)` for a generic `ℓ`. For
/// doubly Cohen-Macaulay complexes also checks levelness and the injectivity
/// of `ℓ: A^j → A^{j+1}` for `2j < d`, and that the g-vector is an M-vector.
pub fn certify_top_heavy<S: FiniteField>(alg: &ArtinianAlgebra<S>, m: &CycleSubspace<S>, k: usize, seed: u64) -> Result<Certificate> {
    let timer = Timer::start("top-heavy-lefschetz");
    let d = alg.d();
    if m.generators.is_empty() {
        return Err(Error::Domain("empty cycle subspace".into()));
    }
    if 2 * k > d {
        return Err(Error::Domain(format!("k = {k} exceeds d/2 for d = {d}")));
    }
    let fingerprint = InputFingerprint::of_algebra(alg);
    let n = alg.complex().universe();
    let coeffs = ElementMode::<S>::Generic { seed }.coefficients(n)?;

    let cm = cm_check::<S>(alg.complex(), 2);
    let soc = socle(alg)?;
    let g = GorensteinAlgebra::for_subspace(clone_algebra(alg)?, &m.generators)?;
    let ell = g.linear_form(&coeffs)?;
    let map = g.multiplication_matrix(k, &g.power(&ell, d - 2 * k)?)?;
    let rank = map.rank();
    let injective = rank == g.dim(k);
    let mut bound = rank_bound(alg, rank, d - 2 * k).0;

    let mut successive = Vec::new();
    let mut successive_ok = true;
    let fhg = fhg_vectors(alg.complex());
    let g_vector_ok = is_m_vector(&fhg.g);
    if cm.is_s_cm {
        let ell_a = alg.linear_form(&coeffs)?;
        for j in (0..d).filter(|j| 2 * j < d) {
            let r = alg.multiplication_matrix(j, &ell_a)?.rank();
            bound = bound.union(rank_bound(alg, r, 1).0);
            successive_ok &= r == alg.dim(j);
            successive.push(json!({ "from": j, "dim": alg.dim(j), "target_dim": alg.dim(j + 1), "rank": r }));
        }
    }
    let precondition_ok = !cm.is_s_cm || soc.is_level;
    let ok = injective && precondition_ok && (!cm.is_s_cm || (successive_ok && g_vector_ok));
    let witness = json!({
        "k": k,
        "power": d - 2 * k,
        "subspace_dim": m.generators.len(),
        "dims_quotient": g.dims(),
        "dims_artinian": alg.dims(),
        "rank": rank,
        "injective": injective,
        "doubly_cohen_macaulay": cm.is_s_cm,
        "socle": soc,
        "level": soc.is_level,
        "successive_maps": successive,
        "g_vector": fhg.g,
        "g_is_m_vector": g_vector_ok,
        "ell_coefficients": vector_json(&coeffs),
        "one": element_json(&g.one()),
    });
    Ok(timer.finish(fingerprint, Verdict::from_bool(ok), witness, bound, Some(seed)))
}

fn clone_algebra<S: Scalar>(alg: &ArtinianAlgebra<S>) -> Result<ArtinianAlgebra<S>> {
    ArtinianAlgebra::with_strategy(alg.complex().clone(), alg.coords().clone(), alg.d(), alg.strategy())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Gf2_63, Mersenne61};
    use crate::ring::generic_coords;
    use crate::simplicial::{named, pseudomanifold_check, SimplicialComplex};

    fn gorenstein<S: FiniteField>(c: &SimplicialComplex, seed: u64) -> GorensteinAlgebra<S> {
        let mu = pseudomanifold_check::<S>(c).fundamental_class.unwrap();
        let a = ArtinianAlgebra::new(c.clone(), generic_coords(c.top_size(), c.universe(), seed, 0), c.top_size()).unwrap();
        GorensteinAlgebra::new(a, &mu).unwrap()
    }

    #[test]
    fn duality_on_spheres() {
        let cert = check_poincare_duality(&gorenstein::<Mersenne61>(&named::boundary_simplex(3), 1)).unwrap();
        assert_eq!(cert.verdict, Verdict::Pass);
        assert_eq!(cert.witness["pairing_ranks"], json!([1, 1, 1, 1]));
        let cert = check_poincare_duality(&gorenstein::<Mersenne61>(&named::cross_polytope_boundary(3), 1)).unwrap();
        assert_eq!(cert.witness["pairing_ranks"], json!([1, 3, 3, 1]));
        assert!(cert.error_probability_bound.numerator > 0);
        assert!(cert.error_probability_bound.log2() < -40.0);
    }

    #[test]
    fn duality_fails_before_the_quotient() {
        let c = named::rp2_6();
        let mu = pseudomanifold_check::<Gf2_63>(&c).fundamental_class.unwrap();
        let a = ArtinianAlgebra::new(c.clone(), generic_coords(3, 6, 4, 0), 3).unwrap();
        let raw = GorensteinAlgebra::without_quotient(a, &mu).unwrap();
        let cert = check_poincare_duality(&raw).unwrap();
        assert_eq!(cert.verdict, Verdict::Fail);
        assert_eq!(cert.witness["failure"]["degree"], json!(1));
    }

    #[test]
    fn truncated_degree_map_fails() {
        let c = named::boundary_simplex(3);
        let mut mu = pseudomanifold_check::<Mersenne61>(&c).fundamental_class.unwrap();
        let f = c.facets()[0];
        mu = mu.plus(&Chain::from_terms(3, [(f, -mu.coeff(f))]).unwrap());
        let a = ArtinianAlgebra::new(c, generic_coords(3, 4, 2, 0), 3).unwrap();
        let cert = check_poincare_duality_from(a, &mu).unwrap();
        assert_eq!(cert.verdict, Verdict::Fail);
        assert!(cert.witness["degree_map"].is_string());
    }

    #[test]
    fn lefschetz_on_octahedron() {
        let g = gorenstein::<Mersenne61>(&named::cross_polytope_boundary(3), 3);
        let cert = certify_hard_lefschetz(&g, &LefschetzQuery { k: None, ell: ElementMode::Generic { seed: 5 } }).unwrap();
        assert_eq!(cert.verdict, Verdict::Pass);
        assert_eq!(cert.witness["maps"][1]["rank"], json!(3));
        let probe = certify_hard_lefschetz(&g, &LefschetzQuery { k: Some(1), ell: ElementMode::SingleVariable(0) }).unwrap();
        assert_eq!(probe.verdict, Verdict::ReportOnly);
        assert!(certify_hard_lefschetz(&g, &LefschetzQuery { k: Some(2), ell: ElementMode::SumOfVariables }).is_err());
    }

    #[test]
    fn doubly_cm_octahedron() {
        let c = named::cross_polytope_boundary(3);
        let mu = pseudomanifold_check::<Mersenne61>(&c).fundamental_class.unwrap();
        let a = ArtinianAlgebra::new(c, generic_coords(3, 6, 8, 0), 3).unwrap();
        let m = CycleSubspace { generators: vec![mu] };
        for k in 0..=1 {
            let cert = certify_top_heavy(&a, &m, k, 17).unwrap();
            assert_eq!(cert.verdict, Verdict::Pass, "{}", cert.witness);
            assert_eq!(cert.witness["doubly_cohen_macaulay"], json!(true));
            assert_eq!(cert.witness["level"], json!(true));
            assert_eq!(cert.witness["g_vector"], json!([1, 2]));
        }
        assert!(certify_top_heavy(&a, &CycleSubspace { generators: vec![] }, 0, 1).is_err());
    }
}
