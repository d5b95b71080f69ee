use serde_json::json;

use super::{certify_hall_laman, vector_json, Certificate, InputFingerprint, Timer, Verdict};
use crate::arith::{seeded_rng, FiniteField};
use crate::ring::{embed, generic_coords, ArtinianAlgebra, FaceMonomial, GorensteinAlgebra, IdealBasis};
use crate::simplicial::{Chain, SimplicialComplex};
use crate::{Error, Result};

/// Both algebras of the suspension comparison together with the two
/// subcomplexes.
pub struct SuspensionSetup<S> {
    /// Quotient for the base cycle at the base coordinates.
    pub base: GorensteinAlgebra<S>,
    /// Quotient for the suspended cycle at the lifted coordinates.
    pub suspended: GorensteinAlgebra<S>,
    pub north: usize,
    pub south: usize,
    pub heights: Vec<S>,
    /// `Γ'` on the base vertex indices.
    pub gamma_base: SimplicialComplex,
    /// `ΣΓ' ∪ s * |μ'|` on the suspension.
    pub gamma_suspended: SimplicialComplex,
}

/// Suspended cycle: `F ∪ n` gets `μ_F` and `F ∪ s` gets `-μ_F`, with the
/// two apexes ordered after every base vertex.
pub fn suspend_cycle<S: crate::arith::Scalar>(mu: &Chain<S>, north: usize, south: usize) -> Result<Chain<S>> {
    let terms = mu.terms().flat_map(|(f, c)| [(f.with(north), c.clone()), (f.with(south), -c.clone())]);
    Chain::from_terms(mu.face_size() + 1, terms)
}

pub fn suspension_setup<S: FiniteField>(
    complex: &SimplicialComplex,
    mu: &Chain<S>,
    gamma: &SimplicialComplex,
    seed: u64,
) -> Result<SuspensionSetup<S>> {
    let d = complex.top_size();
    let n = complex.universe();
    let gamma_base = embed(complex, gamma)?;
    let coords = generic_coords::<S>(d, n, seed, 0);
    let mut rng = seeded_rng(seed, 1);
    let heights: Vec<S> = (0..n).map(|_| S::random(&mut rng)).collect();
    let lifted = coords.suspension_lift(&heights, S::random(&mut rng))?;

    let susp = complex.suspension();
    let (north, south) = (susp.north, susp.south);
    let mut facets = Vec::new();
    for &g in gamma_base.facets() {
        facets.push(g.with(north));
        facets.push(g.with(south));
    }
    facets.extend(mu.support().into_iter().map(|f| f.with(south)));
    let gamma_suspended = SimplicialComplex::new(susp.complex.labels().to_vec(), facets)?;

    let base = GorensteinAlgebra::new(ArtinianAlgebra::new(complex.clone(), coords, d)?, mu)?;
    let smu = suspend_cycle(mu, north, south)?;
    if !smu.boundary().is_zero() {
        return Err(Error::Domain("base chain is not a cycle".into()));
    }
    let suspended = GorensteinAlgebra::new(ArtinianAlgebra::new(susp.complex, lifted, d + 1)?, &smu).map_err(|e| match e {
        Error::DegenerateCoordinates(m) => Error::DegenerateCoordinates(format!("suspension lift: {m}")),
        other => other,
    })?;
    Ok(SuspensionSetup { base, suspended, north, south, heights, gamma_base, gamma_suspended })
}

/// Hall-Laman for `K^{k+1}(Σμ', ΣΓ' ∪ s * |μ'|)` with respect to `x_n`
/// against Hall-Laman for `K^k(μ', Γ')` with respect to the height form
/// `Σ h_v x_v`. Passes when the two verdicts agree.
pub fn suspension_equivalence<S: FiniteField>(
    complex: &SimplicialComplex,
    mu: &Chain<S>,
    gamma: &SimplicialComplex,
    k: usize,
    seed: u64,
) -> Result<Certificate> {
    let timer = Timer::start("suspension-equivalence");
    let d = complex.top_size();
    if 2 * k >= d {
        return Err(Error::Domain(format!("need 2k < d, got k = {k}, d = {d}")));
    }
    let setup = suspension_setup(complex, mu, gamma, seed)?;

    let theta = setup.base.linear_form(&setup.heights)?;
    let base_ideal = IdealBasis::nonface_ideal(&setup.base, &setup.gamma_base)?;
    let base_cert = certify_hall_laman(&setup.base, &base_ideal, k, &theta)?;

    let x_n = setup.suspended.reduce_monomial(&FaceMonomial::var(setup.north));
    let susp_ideal = IdealBasis::nonface_ideal(&setup.suspended, &setup.gamma_suspended)?;
    let susp_cert = certify_hall_laman(&setup.suspended, &susp_ideal, k + 1, &x_n)?;

    // exponent bookkeeping: (d + 1) - 2(k + 1) = d - 2k - 1
    let susp_power = susp_cert.witness["power"].as_u64().unwrap_or(u64::MAX) as usize;
    if susp_power + 1 != d - 2 * k {
        return Err(Error::FatalInconsistency("suspension exponent mismatch".into()));
    }
    let agree = base_cert.verdict == susp_cert.verdict;
    let witness = json!({
        "k": k,
        "lift": "base columns unchanged, heights in the new coordinate, north at +e, south at -e",
        "heights": vector_json(&setup.heights),
        "base": { "verdict": base_cert.verdict, "power": d - 2 * k, "witness": base_cert.witness },
        "suspension": { "verdict": susp_cert.verdict, "power": susp_power, "witness": susp_cert.witness },
        "agree": agree,
    });
    let bound = base_cert.error_probability_bound.union(susp_cert.error_probability_bound);
    let fp = InputFingerprint::of_algebra(setup.suspended.artinian());
    Ok(timer.finish(fp, Verdict::from_bool(agree), witness, bound, Some(seed)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Mersenne61;
    use crate::certify::certify_biased_pairing;
    use crate::simplicial::{named, pseudomanifold_check};

    fn void(c: &SimplicialComplex) -> SimplicialComplex {
        SimplicialComplex::new(c.labels().to_vec(), vec![]).unwrap()
    }

    #[test]
    fn suspended_cycle_is_a_cycle() {
        let c = named::boundary_simplex(2);
        let mu = pseudomanifold_check::<Mersenne61>(&c).fundamental_class.unwrap();
        let s = suspend_cycle(&mu, 3, 4).unwrap();
        assert!(s.boundary().is_zero());
        assert_eq!(s.support().len(), 6);
    }

    #[test]
    fn triangle_agrees() {
        let c = named::boundary_simplex(2);
        let mu = pseudomanifold_check::<Mersenne61>(&c).fundamental_class.unwrap();
        let cert = suspension_equivalence(&c, &mu, &void(&c), 0, 3).unwrap();
        assert_eq!(cert.verdict, Verdict::Pass);
        assert_eq!(cert.witness["base"]["verdict"], json!("pass"));
        assert!(suspension_equivalence(&c, &mu, &void(&c), 1, 3).is_err());
    }

    #[test]
    fn octahedron_with_a_closed_facet() {
        let c = named::cross_polytope_boundary(3);
        let mu = pseudomanifold_check::<Mersenne61>(&c).fundamental_class.unwrap();
        let facet = SimplicialComplex::from_labeled(&["1", "3", "5"], &[vec!["1", "3", "5"]]).unwrap();
        for k in 0..=1 {
            let cert = suspension_equivalence(&c, &mu, &facet, k, 7).unwrap();
            assert_eq!(cert.verdict, Verdict::Pass, "{}", cert.witness);
        }
        // in the middle degree the suspended side is biased pairing
        let setup = suspension_setup(&c, &mu, &facet, 7).unwrap();
        let bp = certify_biased_pairing(&setup.suspended, &setup.gamma_suspended, 2).unwrap();
        let cert = suspension_equivalence(&c, &mu, &facet, 1, 7).unwrap();
        assert_eq!(json!(bp.verdict), cert.witness["suspension"]["verdict"]);
    }
}
