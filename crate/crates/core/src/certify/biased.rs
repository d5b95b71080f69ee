use serde::Serialize;
use serde_json::json;

use super::{fingerprint_of, left_kernel_vector, rank_bound, vector_json, Certificate, Timer, Verdict};
use crate::arith::{ErrorBound, Matrix, Scalar};
use crate::ring::{embed, AlgebraElement, GorensteinAlgebra, IdealBasis};
use crate::simplicial::SimplicialComplex;
use crate::{Error, Result};

/// The three equivalent formulations of the biased pairing property.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BiasedPairingCriteria {
    /// The pairing `K^k × K^{d-k} → K^d` is nondegenerate on the left.
    pub restricted_pairing: bool,
    /// No nonzero element of `K^k` is orthogonal to all of `K^{d-k}`.
    pub dual_intersection: bool,
    /// `K^{d-k}` together with the annihilator of `K^k` spans `B^{d-k}`.
    pub surjectivity: bool,
}

impl BiasedPairingCriteria {
    pub fn agree(&self) -> bool {
        self.restricted_pairing == self.dual_intersection && self.dual_intersection == self.surjectivity
    }
}

fn pairing<S: Scalar>(
    g: &GorensteinAlgebra<S>,
    left: &[AlgebraElement<S>],
    right: &[AlgebraElement<S>],
    twist: Option<&AlgebraElement<S>>,
) -> Result<Matrix<S>> {
    let mut out = Matrix::zeros(left.len(), right.len());
    for (i, a) in left.iter().enumerate() {
        let a = match twist {
            Some(t) => g.multiply(a, t)?,
            None => a.clone(),
        };
        for (j, b) in right.iter().enumerate() {
            out.set(i, j, g.pair(&a, b)?);
        }
    }
    Ok(out)
}

fn span_dim<S: Scalar>(parts: &[&Matrix<S>], cols: usize) -> Result<usize> {
    let mut acc = Matrix::zeros(0, cols);
    for p in parts {
        if p.rows() > 0 {
            acc = acc.vstack(p)?;
        }
    }
    Ok(if acc.rows() == 0 { 0 } else { acc.rank() })
}

fn rows_of<S: Scalar>(vs: Vec<Vec<S>>, cols: usize) -> Result<Matrix<S>> {
    if vs.is_empty() {
        Ok(Matrix::zeros(0, cols))
    } else {
        Matrix::from_rows(vs)
    }
}

/// Biased pairing in degree `k` for the ideal of monomials not supported
/// in `gamma`, with the two corollary formulations computed independently.
pub fn certify_biased_pairing<S: Scalar>(g: &GorensteinAlgebra<S>, gamma: &SimplicialComplex, k: usize) -> Result<Certificate> {
    let timer = Timer::start("biased-pairing");
    let d = g.d();
    if 2 * k > d {
        return Err(Error::Domain(format!("k = {k} exceeds d/2 for d = {d}")));
    }
    let ambient = g.artinian().complex();
    let gamma = embed(ambient, gamma)?;
    if ambient.facets().iter().all(|&f| gamma.contains_face(f)) {
        return Err(Error::Domain("subcomplex is not proper".into()));
    }
    let ideal = IdealBasis::nonface_ideal(g, &gamma)?;
    let (kk, kd) = (ideal.matrix(k), ideal.matrix(d - k));
    let (bk, bd) = (g.dim(k), g.dim(d - k));

    // restricted block
    let block = pairing(g, &ideal.basis(k), &ideal.basis(d - k), None)?;
    let block_rank = if block.rows() == 0 || block.cols() == 0 { 0 } else { block.rank() };
    let restricted_pairing = block_rank == kk.rows();

    // N = {b ∈ B^k : b · K^{d-k} = 0}; the criterion is K^k ∩ N = 0
    let b_k: Vec<_> = (0..bk).map(|i| g.basis_element(k, i)).collect();
    let against_k = pairing(g, &b_k, &ideal.basis(d - k), None)?;
    let n_basis = rows_of(if against_k.cols() == 0 { identity_rows(bk) } else { against_k.transpose().kernel() }, bk)?;
    let intersection = kk.rows() + n_basis.rows() - span_dim(&[kk, &n_basis], bk)?;
    let dual_intersection = intersection == 0;

    // N' = {b ∈ B^{d-k} : K^k · b = 0}; the criterion is K^{d-k} + N' = B^{d-k}
    let b_d: Vec<_> = (0..bd).map(|i| g.basis_element(d - k, i)).collect();
    let k_against = pairing(g, &ideal.basis(k), &b_d, None)?;
    let n_prime = rows_of(if k_against.rows() == 0 { identity_rows(bd) } else { k_against.kernel() }, bd)?;
    let sum_dim = span_dim(&[kd, &n_prime], bd)?;
    let surjectivity = sum_dim == bd;

    let criteria = BiasedPairingCriteria { restricted_pairing, dual_intersection, surjectivity };
    let verdict = Verdict::from_bool(restricted_pairing && criteria.agree());
    let bound = rank_bound(g.artinian(), block_rank.max(bk), 0).0;
    let witness = json!({
        "k": k,
        "subcomplex_facets": gamma.facets().iter().map(|&f| gamma.face_labels(f).join(",")).collect::<Vec<_>>(),
        "ideal_dims": ideal.dims(),
        "block_shape": [block.rows(), block.cols()],
        "block_rank": block_rank,
        "orthogonal_dim": n_basis.rows(),
        "intersection_dim": intersection,
        "annihilator_dim": n_prime.rows(),
        "sum_dim": sum_dim,
        "criteria": criteria,
        "criteria_agree": criteria.agree(),
        "kernel_vector": if restricted_pairing { None } else { left_kernel_vector(&block).map(|v| vector_json(&v)) },
    });
    let fp = fingerprint_of(g);
    let seed = fp.seed;
    Ok(timer.finish(fp, verdict, witness, bound, seed))
}

fn identity_rows<S: Scalar>(n: usize) -> Vec<Vec<S>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { S::one() } else { S::zero() }).collect()).collect()
}

/// Nondegeneracy of `(a, b) ↦ deg(a b ℓ^{d-2k})` on the degree-`k` part of
/// an ideal.
pub fn certify_hall_laman<S: Scalar>(g: &GorensteinAlgebra<S>, ideal: &IdealBasis<S>, k: usize, ell: &AlgebraElement<S>) -> Result<Certificate> {
    let timer = Timer::start("hall-laman");
    let d = g.d();
    if 2 * k > d {
        return Err(Error::Domain(format!("k = {k} exceeds d/2 for d = {d}")));
    }
    if ell.degree != 1 {
        return Err(Error::Domain("Lefschetz element must have degree one".into()));
    }
    let basis = ideal.basis(k);
    let twist = g.power(ell, d - 2 * k)?;
    let gram = pairing(g, &basis, &basis, Some(&twist))?;
    let rank = if gram.rows() == 0 { 0 } else { gram.rank() };
    let ok = rank == basis.len();
    let bound = rank_bound(g.artinian(), rank, d - 2 * k).0;
    let witness = json!({
        "k": k,
        "power": d - 2 * k,
        "ideal_dim": basis.len(),
        "gram_rank": rank,
        "vacuous": basis.is_empty(),
        "coincides_with_biased_pairing": 2 * k == d,
        "kernel_vector": if ok { None } else { left_kernel_vector(&gram).map(|v| vector_json(&v)) },
    });
    let fp = fingerprint_of(g);
    let seed = fp.seed;
    Ok(timer.finish(fp, Verdict::from_bool(ok), witness, if basis.is_empty() { ErrorBound::ZERO } else { bound }, seed))
}
