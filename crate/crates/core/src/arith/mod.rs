//! Exact coefficient arithmetic.
//!
//! Everything downstream is generic over [`Scalar`]: prime fields [`Fp`],
//! binary extension fields [`Gf2x`], rational functions [`RatFunc`] over
//! either, and truncated jets [`Jet`] used to evaluate directional
//! derivatives at a point.

mod binary;
mod deriv;
mod jet;
mod matrix;
mod poly;
mod prime;
mod ratfunc;
mod specialize;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use serde::{Deserialize, Serialize};

pub use binary::{Gf2_63, Gf2_8, Gf2x};
pub use deriv::{directional_derivative, full_mask, jet_point, ColumnMove, CoordLayout};
pub use jet::Jet;
pub use matrix::{det_fraction_free, fraction_free_echelon, gaussian_echelon, gaussian_echelon_with, Echelon, Matrix};
pub use poly::{Monomial, MultiPoly, PolyOp, PolyRing};
pub use prime::{Fp, Mersenne31, Mersenne61, F101, F11, F13, F2, F3, F5, F7};
pub use ratfunc::RatFunc;
pub use specialize::{random_point, seeded_rng, specialize_poly, specialize_ratfunc, with_redraws, ErrorBound, MAX_REDRAWS};

/// Coefficient domain used by every exact computation.
///
/// Fields return `Some` from [`Scalar::try_inv`] for every nonzero element.
/// [`Jet`] is a local ring and returns `None` on non-units.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn try_inv(&self) -> Option<Self>;
    fn from_i64(n: i64) -> Self;
    fn characteristic() -> u64;

    /// Number of elements, `None` when the domain is infinite.
    fn order() -> Option<u128>;

    /// Short human-readable name of the coefficient domain.
    fn field_label() -> String {
        let p = Self::characteristic();
        match Self::order() {
            Some(q) if q == p as u128 => format!("GF({p})"),
            Some(q) => format!("GF({p}^{})", (q as f64).log(p as f64).round() as u32),
            None => format!("GF({p})(V)"),
        }
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    /// Row echelon form used for rank and kernel computations. Rational
    /// functions override this with fraction-free elimination.
    fn echelon(m: &Matrix<Self>) -> Echelon<Self> {
        gaussian_echelon(m)
    }

    /// Determinant of a square matrix.
    fn determinant(m: &Matrix<Self>) -> Self {
        m.det().expect("square matrix")
    }
}

/// Finite fields that can produce uniformly random elements.
pub trait FiniteField: Scalar + Copy + Eq + std::hash::Hash {
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self;
    /// Canonical integer representative (bit pattern for binary fields).
    fn to_u64(self) -> u64;
    fn from_u64(v: u64) -> Self;
}

/// Runtime description of a coefficient field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub characteristic: u64,
    #[serde(default = "one_u32")]
    pub extension_degree: u32,
    #[serde(default)]
    pub indeterminates: Vec<String>,
}

fn one_u32() -> u32 {
    1
}

impl FieldDescriptor {
    pub fn prime(p: u64) -> Self {
        Self { characteristic: p, extension_degree: 1, indeterminates: Vec::new() }
    }

    pub fn binary(m: u32) -> Self {
        Self { characteristic: 2, extension_degree: m, indeterminates: Vec::new() }
    }

    pub fn validate(&self) -> crate::Result<()> {
        if self.characteristic == 0 {
            return Err(crate::Error::Domain("characteristic 0 is not supported; pick a large prime".into()));
        }
        if !is_prime(self.characteristic) {
            return Err(crate::Error::Domain(format!("characteristic {} is not prime", self.characteristic)));
        }
        if self.extension_degree == 0 {
            return Err(crate::Error::Domain("extension degree must be at least 1".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for name in &self.indeterminates {
            if !seen.insert(name) {
                return Err(crate::Error::Domain(format!("duplicate indeterminate {name}")));
            }
        }
        Ok(())
    }

    /// Number of field elements, saturating at `u128::MAX`.
    pub fn order(&self) -> u128 {
        (self.characteristic as u128).checked_pow(self.extension_degree).unwrap_or(u128::MAX)
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.extension_degree == 1 {
            write!(f, "GF({})", self.characteristic)?;
        } else {
            write!(f, "GF({}^{})", self.characteristic, self.extension_degree)?;
        }
        if !self.indeterminates.is_empty() {
            write!(f, "({} indeterminates)", self.indeterminates.len())?;
        }
        Ok(())
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    // deterministic Miller-Rabin for 64-bit inputs
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        r
    };
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
