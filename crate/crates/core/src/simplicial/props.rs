use serde::{Deserialize, Serialize};

use super::chain::reduced_betti;
use super::complex::SimplicialComplex;
use super::face::Face;
use crate::arith::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FhgVectors {
    /// `f[i]` counts faces with `i + 1` vertices.
    pub f: Vec<u64>,
    pub h: Vec<i64>,
    /// `g_k = h_k - h_{k-1}` for `k = 0..=d/2`.
    pub g: Vec<i64>,
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

pub fn fhg_vectors(c: &SimplicialComplex) -> FhgVectors {
    let d = c.top_size();
    let fm: Vec<i64> = (0..=d).map(|k| c.faces_of_size(k).len() as i64).collect();
    let h: Vec<i64> = (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * binomial((d - i) as u64, (k - i) as u64) as i64 * fm[i]
                })
                .sum()
        })
        .collect();
    let g = (0..=d / 2).map(|k| if k == 0 { h[0] } else { h[k] - h[k - 1] }).collect();
    FhgVectors { f: fm[1..].iter().map(|&x| x as u64).collect(), h, g }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmReport {
    pub is_cm: bool,
    pub is_s_cm: bool,
}

/// Reisner's criterion: every link has vanishing reduced homology below its
/// dimension.
pub fn is_cohen_macaulay<S: Scalar>(c: &SimplicialComplex) -> bool {
    if c.is_void() {
        return true;
    }
    if !c.is_pure() {
        return false;
    }
    let d = c.top_size();
    c.faces().all(|f| {
        let lk = c.link(f).expect("face of the complex");
        let top = d - f.len();
        // index j of reduced_betti is homological degree j - 1
        reduced_betti::<S>(&lk).iter().take(top).all(|&b| b == 0)
    })
}

/// Cohen-Macaulay after deleting any set of at most `s - 1` vertices, with
/// the dimension preserved.
pub fn cm_check<S: Scalar>(c: &SimplicialComplex, s: usize) -> CmReport {
    assert!(s >= 1, "s-CM needs s >= 1");
    let is_cm = is_cohen_macaulay::<S>(c);
    if !is_cm {
        return CmReport { is_cm, is_s_cm: false };
    }
    let vs = c.vertex_set();
    let is_s_cm = (1..s).all(|k| {
        vs.subsets_of_size(k).into_iter().all(|w: Face| {
            let del = c.deletion(w);
            del.top_size() == c.top_size() && is_cohen_macaulay::<S>(&del)
        })
    });
    CmReport { is_cm, is_s_cm }
}

/// Upper bound `a^<i>` from Macaulay's theorem on the next entry of an
/// M-vector whose `i`-th entry is `a`.
pub fn macaulay_bound(a: u64, i: u64) -> u64 {
    if a == 0 || i == 0 {
        return if i == 0 { u64::MAX } else { 0 };
    }
    // i-binomial representation a = C(n_i, i) + C(n_{i-1}, i-1) + ...
    let mut rest = a;
    let mut out = 0;
    let mut j = i;
    while rest > 0 && j > 0 {
        let mut n = j;
        while binomial(n + 1, j) <= rest {
            n += 1;
        }
        rest -= binomial(n, j);
        out += binomial(n + 1, j + 1);
        j -= 1;
    }
    out
}

/// Macaulay's characterization of Hilbert functions of standard graded
/// algebras.
pub fn is_m_vector(g: &[i64]) -> bool {
    if g.first() != Some(&1) || g.iter().any(|&x| x < 0) {
        return false;
    }
    g.windows(2).enumerate().skip(1).all(|(i, w)| w[1] as u64 <= macaulay_bound(w[0] as u64, i as u64))
}
