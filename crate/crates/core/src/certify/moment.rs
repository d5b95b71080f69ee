use serde_json::json;

use super::{certify_hard_lefschetz, check_poincare_duality, Certificate, ElementMode, InputFingerprint, LefschetzQuery, Timer, Verdict};
use crate::arith::{seeded_rng, ErrorBound, FiniteField};
use crate::ring::{ArtinianAlgebra, CoordMatrix, GorensteinAlgebra};
use crate::simplicial::{Chain, SimplicialComplex};
use crate::{Error, Result};

fn demote(mut cert: Certificate) -> Certificate {
    let observed = cert.verdict;
    cert.verdict = Verdict::ReportOnly;
    if let Some(obj) = cert.witness.as_object_mut() {
        obj.insert("observed".into(), json!(observed));
    } else {
        cert.witness = json!({ "observed": observed, "witness": cert.witness });
    }
    cert
}

/// Duality and Lefschetz at vertices placed on the moment curve
/// `(t, t², …, t^d)`. Nothing here is backed by a theorem, so every
/// certificate is report-only and carries the observed verdict.
pub fn moment_curve_probe<S: FiniteField>(c: &SimplicialComplex, mu: &Chain<S>, params: &[i64], seed: u64) -> Result<Vec<Certificate>> {
    let d = c.top_size();
    if params.len() != c.universe() {
        return Err(Error::Domain(format!("{} parameters for {} vertices", params.len(), c.universe())));
    }
    let mut rng = seeded_rng(seed, 0);
    let reference: Vec<S> = (0..d).map(|_| S::random(&mut rng)).collect();
    let coords = CoordMatrix::<S>::moment_curve(d, params, reference)?;

    let timer = Timer::start("moment-curve");
    let built = ArtinianAlgebra::new(c.clone(), coords.clone(), d).and_then(|a| GorensteinAlgebra::new(a, mu));
    let g = match built {
        Ok(g) => g,
        Err(e) => {
            let witness = json!({ "params": params, "error": e.to_string() });
            let fp = InputFingerprint::of(c, &coords);
            return Ok(vec![timer.finish(fp, Verdict::ReportOnly, witness, ErrorBound::ZERO, Some(seed))]);
        }
    };
    let mut out = vec![demote(check_poincare_duality(&g)?)];
    for ell in [ElementMode::SumOfVariables, ElementMode::Generic { seed }] {
        let cert = certify_hard_lefschetz(&g, &LefschetzQuery { k: None, ell })?;
        out.push(demote(cert));
    }
    for cert in &mut out {
        if let Some(obj) = cert.witness.as_object_mut() {
            obj.insert("moment_curve".into(), json!(params));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Mersenne61;
    use crate::simplicial::{named, pseudomanifold_check};

    #[test]
    fn report_only_on_small_spheres() {
        for (c, params) in [(named::boundary_simplex(3), vec![1, 2, 3, 4]), (named::cross_polytope_boundary(3), vec![1, 2, 3, 4, 5, 6])] {
            let mu = pseudomanifold_check::<Mersenne61>(&c).fundamental_class.unwrap();
            let certs = moment_curve_probe(&c, &mu, &params, 5).unwrap();
            assert!(certs.len() >= 3);
            assert!(certs.iter().all(|x| x.verdict == Verdict::ReportOnly));
            assert!(certs.iter().all(|x| x.witness.get("observed").is_some()));
        }
    }

    #[test]
    fn repeated_parameters_are_rejected() {
        let c = named::boundary_simplex(3);
        let mu = pseudomanifold_check::<Mersenne61>(&c).fundamental_class.unwrap();
        assert!(matches!(moment_curve_probe(&c, &mu, &[1, 2, 2, 4], 5), Err(Error::Domain(_))));
        assert!(moment_curve_probe(&c, &mu, &[1, 2, 3], 5).is_err());
    }
}
