use std::any::Any;
use std::collections::BTreeMap;

use serde_json::json;

use super::{fingerprint_of, left_kernel_vector, rank_bound, vector_json, Certificate, Timer, Verdict};
use crate::arith::{fraction_free_echelon, ErrorBound, Matrix, Monomial, MultiPoly, RatFunc, Scalar, F2};
use crate::ring::GorensteinAlgebra;
use crate::{Error, Result};

/// Row `i` holds the `B^{2k}` coordinates of the square of the `i`-th basis
/// element of `B^k`.
pub fn squaring_matrix<S: Scalar>(g: &GorensteinAlgebra<S>, k: usize) -> Result<Matrix<S>> {
    let rows = (0..g.dim(k))
        .map(|i| {
            let e = g.basis_element(k, i);
            g.multiply(&e, &e).map(|p| p.coords)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(if rows.is_empty() { Matrix::zeros(0, g.dim(2 * k)) } else { Matrix::from_rows(rows)? })
}

/// Anisotropy in degree `k` for characteristic two: no nonzero `u ∈ B^k`
/// has `u² = 0`.
///
/// Below the middle degree the squaring map is semilinear, so full rank of
/// the squaring matrix suffices (and is necessary over a perfect field).
/// In the middle degree the question is linear independence of the values
/// `deg(m_i²)` over the subfield of squares, which is only meaningful over a
/// non-perfect field such as `GF(2)(V)`.
pub fn certify_char2_anisotropy<S: Scalar>(g: &GorensteinAlgebra<S>, k: usize) -> Result<Certificate> {
    let timer = Timer::start("char2-anisotropy");
    let d = g.d();
    if S::characteristic() != 2 {
        return Err(Error::Domain(format!("characteristic {} is not two", S::characteristic())));
    }
    if 2 * k > d {
        return Err(Error::Domain(format!("k = {k} exceeds d/2 for d = {d}")));
    }
    let fp = fingerprint_of(g);
    let seed = fp.seed;
    if 2 * k < d {
        let sq = squaring_matrix(g, k)?;
        let rank = if sq.rows() == 0 { 0 } else { sq.rank() };
        let full = rank == sq.rows();
        let perfect = S::order().is_some();
        let verdict = match (full, perfect) {
            (true, _) => Verdict::Pass,
            // over a perfect field a kernel vector has a square root
            (false, true) => Verdict::Fail,
            (false, false) => Verdict::ReportOnly,
        };
        let witness = json!({
            "k": k,
            "method": "squaring-matrix",
            "shape": [sq.cols(), sq.rows()],
            "rank": rank,
            "kernel_vector": if full { None } else { left_kernel_vector(&sq).map(|v| vector_json(&v)) },
        });
        return Ok(timer.finish(fp, verdict, witness, rank_bound(g.artinian(), rank, 0).0, seed));
    }
    if S::order().is_some() {
        return Err(Error::Mode(
            "anisotropy at the middle degree is not decidable over a perfect field; use symbolic coordinates over GF(2)(V)".into(),
        ));
    }
    let values: Vec<S> = (0..g.dim(k))
        .map(|i| {
            let e = g.basis_element(k, i);
            g.degree(&g.multiply(&e, &e)?)
        })
        .collect::<Result<_>>()?;
    let values: Vec<RatFunc<F2>> = values
        .iter()
        .map(|v| (v as &dyn Any).downcast_ref::<RatFunc<F2>>().cloned())
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Mode("middle-degree anisotropy needs rational functions over GF(2)".into()))?;
    let (rank, masks) = square_subfield_rank(&values)?;
    let ok = rank == values.len();
    let witness = json!({
        "k": k,
        "method": "square-subfield-expansion",
        "values": values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "parity_classes": masks,
        "rank_over_squares": rank,
    });
    Ok(timer.finish(fp, Verdict::from_bool(ok), witness, ErrorBound::ZERO, seed))
}

/// Rank over `GF(2)(V²)` of a family of elements of `GF(2)(V)`, together with
/// the number of parity classes used.
///
/// With `L` a common denominator, `f_i L²` is a polynomial and splits as
/// `Σ_mask V^mask q_{i,mask}²`; a relation `Σ c_i² f_i = 0` is the same as
/// `Σ c_i q_{i,mask} = 0` for every mask.
pub fn square_subfield_rank(values: &[RatFunc<F2>]) -> Result<(usize, usize)> {
    if values.is_empty() {
        return Ok((0, 0));
    }
    let mut common = MultiPoly::<F2>::one();
    for v in values {
        let den = v.denominator();
        if common.div_exact(den).is_none() {
            common = common * den.clone();
        }
    }
    let splits: Vec<BTreeMap<Monomial, MultiPoly<F2>>> = values
        .iter()
        .map(|v| {
            let cofactor = common.div_exact(v.denominator()).ok_or_else(|| Error::FatalInconsistency("denominator does not divide".into()))?;
            Ok((v.numerator().clone() * cofactor * common.clone()).split_by_parity())
        })
        .collect::<Result<_>>()?;
    let mut masks: Vec<Monomial> = splits.iter().flat_map(|s| s.keys().cloned()).collect();
    masks.sort();
    masks.dedup();
    if masks.is_empty() {
        return Ok((0, 0));
    }
    let m = Matrix::from_fn(values.len(), masks.len(), |i, j| splits[i].get(&masks[j]).map_or_else(RatFunc::zero, |q| RatFunc::from_poly(q.clone())));
    Ok((fraction_free_echelon(&m).rank(), masks.len()))
}
