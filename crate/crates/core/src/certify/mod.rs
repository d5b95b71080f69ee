//! Instance certificates for Lefschetz-type properties.
//!
//! Every check returns a [`Certificate`] recording its verdict, the data
//! that justifies it and an upper bound on the probability that a random
//! specialization produced a non-generic answer.

mod anisotropy;
mod biased;
mod duality;
mod identities;
mod kronecker;
mod moment;
mod suspension;

use std::time::Instant;

use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub use anisotropy::{certify_char2_anisotropy, squaring_matrix};
pub use biased::{certify_biased_pairing, certify_hall_laman, BiasedPairingCriteria};
pub use duality::{certify_hard_lefschetz, certify_top_heavy, check_poincare_duality, check_poincare_duality_from};
pub use identities::{
    basis_derivative, normalized_derivative, square_term_sign, verify_compatible_formula, verify_locality, verify_pp_identity,
    verify_square_derivative_lemma, verify_square_derivative_lemma_at_points, FaceRingElement,
};
pub use kronecker::{kronecker_transversality, transversal_prime_check};
pub use moment::moment_curve_probe;
pub use suspension::{suspension_equivalence, suspension_setup, SuspensionSetup};

use crate::arith::{seeded_rng, ErrorBound, FiniteField, Matrix, Scalar};
use crate::ring::{AlgebraElement, ArtinianAlgebra, CoordMatrix, CoordMode, GorensteinAlgebra};
use crate::simplicial::SimplicialComplex;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    ReportOnly,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::ReportOnly => "report-only",
        })
    }
}

/// What a certificate was computed from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InputFingerprint {
    pub complex: String,
    pub field: String,
    pub coordinates: CoordMode,
    pub seed: Option<u64>,
    pub vertex_order: Vec<String>,
}

impl InputFingerprint {
    pub fn of<S: Scalar>(c: &SimplicialComplex, coords: &CoordMatrix<S>) -> Self {
        let seed = match coords.mode() {
            CoordMode::Generic { seed, .. } => Some(*seed),
            _ => None,
        };
        InputFingerprint {
            complex: c.fingerprint(),
            field: S::field_label(),
            coordinates: coords.mode().clone(),
            seed,
            vertex_order: c.labels().to_vec(),
        }
    }

    pub fn of_algebra<S: Scalar>(alg: &ArtinianAlgebra<S>) -> Self {
        Self::of(alg.complex(), alg.coords())
    }

    /// Inputs that are plain matrices rather than complexes.
    pub fn of_matrices<S: Scalar>(ms: &[&Matrix<S>]) -> Self {
        let mut h = 0xcbf2_9ce4_8422_2325u64;
        for m in ms {
            for x in m.entries() {
                for b in x.to_string().bytes().chain(*b";") {
                    h = (h ^ b as u64).wrapping_mul(0x0100_0000_01b3);
                }
            }
        }
        InputFingerprint {
            complex: format!("{h:016x}"),
            field: S::field_label(),
            coordinates: CoordMode::Explicit,
            seed: None,
            vertex_order: Vec::new(),
        }
    }
}

/// Outcome of one check on one input.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub check: String,
    pub input_fingerprint: InputFingerprint,
    pub verdict: Verdict,
    pub witness: Value,
    pub error_probability_bound: ErrorBound,
    pub seed: Option<u64>,
    pub runtime_ms: u64,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn summary_line(&self) -> String {
        format!("{:<28} {:<12} bound={} ({} ms)", self.check, self.verdict.to_string(), self.error_probability_bound, self.runtime_ms)
    }
}

pub(crate) struct Timer {
    check: &'static str,
    start: Instant,
}

impl Timer {
    pub(crate) fn start(check: &'static str) -> Self {
        Timer { check, start: Instant::now() }
    }

    pub(crate) fn finish(self, fingerprint: InputFingerprint, verdict: Verdict, witness: Value, bound: ErrorBound, seed: Option<u64>) -> Certificate {
        Certificate {
            check: self.check.to_string(),
            input_fingerprint: fingerprint,
            verdict,
            witness,
            error_probability_bound: bound,
            seed,
            runtime_ms: self.start.elapsed().as_millis() as u64,
        }
    }
}

/// Per-task seed derived from a master seed.
pub fn task_seed(master: u64, task: u64) -> u64 {
    seeded_rng(master, task as usize).gen()
}

/// How the Lefschetz element is chosen.
#[derive(Clone, Debug, PartialEq)]
pub enum ElementMode<S> {
    Generic { seed: u64 },
    Explicit(Vec<S>),
    SumOfVariables,
    SingleVariable(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct LefschetzQuery<S> {
    /// `None` checks every `k ≤ d/2`.
    pub k: Option<usize>,
    pub ell: ElementMode<S>,
}

impl<S: FiniteField> ElementMode<S> {
    /// Coefficients of `ℓ = Σ c_v x_v`, one per vertex.
    pub fn coefficients(&self, n: usize) -> Result<Vec<S>> {
        Ok(match self {
            ElementMode::Generic { seed } => {
                let mut rng = seeded_rng(*seed, 1 << 20);
                (0..n).map(|_| S::random(&mut rng)).collect()
            }
            ElementMode::Explicit(c) => {
                if c.len() != n {
                    return Err(Error::Dimension(format!("{} coefficients for {n} vertices", c.len())));
                }
                c.clone()
            }
            ElementMode::SumOfVariables => vec![S::one(); n],
            ElementMode::SingleVariable(v) => {
                if *v >= n {
                    return Err(Error::Domain(format!("vertex {v} out of range")));
                }
                (0..n).map(|i| if i == *v { S::one() } else { S::zero() }).collect()
            }
        })
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            ElementMode::Generic { seed } => Some(*seed),
            _ => None,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            ElementMode::Generic { seed } => format!("generic(seed {seed})"),
            ElementMode::Explicit(_) => "explicit".into(),
            ElementMode::SumOfVariables => "sum-of-variables".into(),
            ElementMode::SingleVariable(v) => format!("single-variable({v})"),
        }
    }
}

/// Schwartz-Zippel bound for a rank certified at random coordinates: an
/// `r x r` minor of a matrix built from normal forms is, after clearing
/// denominators, a polynomial of degree at most `r (d + 2 Σ_k |R_k| + extra)`
/// in the coordinates and the coefficients of `ℓ`.
pub(crate) fn rank_bound<S: Scalar>(alg: &ArtinianAlgebra<S>, rank: usize, extra: usize) -> (ErrorBound, Value) {
    if !matches!(alg.coords().mode(), CoordMode::Generic { .. }) && extra == 0 {
        return (ErrorBound::ZERO, Value::Null);
    }
    let d = alg.d();
    let monomials: usize = (0..=d).map(|k| alg.piece(k).monomials().len()).sum();
    let degree = rank * (d + 2 * monomials + extra);
    let bound = ErrorBound::schwartz_zippel(degree as u128, S::order());
    (
        bound,
        serde_json::json!({ "rank": rank, "entry_degree": d + 2 * monomials + extra, "degree": degree, "field_order": S::order().map(|q| q.to_string()) }),
    )
}

pub(crate) fn element_json<S: Scalar>(e: &AlgebraElement<S>) -> Value {
    Value::Array(e.coords.iter().map(|c| Value::String(c.to_string())).collect())
}

pub(crate) fn vector_json<S: Scalar>(v: &[S]) -> Value {
    Value::Array(v.iter().map(|c| Value::String(c.to_string())).collect())
}

/// Nonzero vector `a` with `a · m = 0`, if any.
pub(crate) fn left_kernel_vector<S: Scalar>(m: &Matrix<S>) -> Option<Vec<S>> {
    m.transpose().kernel().into_iter().next()
}

pub(crate) fn fingerprint_of<S: Scalar>(g: &GorensteinAlgebra<S>) -> InputFingerprint {
    InputFingerprint::of_algebra(g.artinian())
}
