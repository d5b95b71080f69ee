//! Truncated jets `F[e_1, ..., e_k] / (e_i^2)`.
//!
//! Evaluating a rational function on jets gives its mixed first-order
//! directional derivatives at a point exactly: the coefficient of
//! `e_1 * ... * e_k` is the k-fold derivative along the chosen directions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Scalar;

/// Coefficients indexed by subsets of the nilpotents (bit masks). Missing
/// trailing entries are zero, so constants have length one.
#[derive(Clone)]
pub struct Jet<F> {
    coeffs: Vec<F>,
}

impl<F: Scalar> Jet<F> {
    pub fn constant(c: F) -> Self {
        Jet { coeffs: vec![c] }
    }

    /// `base + dir * e_index`.
    pub fn perturbed(base: F, dir: F, index: usize) -> Self {
        let mut coeffs = vec![F::zero(); 1 << (index + 1)];
        coeffs[0] = base;
        coeffs[1 << index] = dir;
        Jet { coeffs }
    }

    pub fn coeff(&self, mask: usize) -> F {
        self.coeffs.get(mask).cloned().unwrap_or_else(F::zero)
    }

    pub fn value(&self) -> F {
        self.coeff(0)
    }

    fn len(&self) -> usize {
        self.coeffs.len()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(F, F) -> F) -> Self {
        let n = self.len().max(other.len());
        Jet { coeffs: (0..n).map(|i| f(self.coeff(i), other.coeff(i))).collect() }
    }
}

impl<F: Scalar> From<F> for Jet<F> {
    fn from(c: F) -> Self {
        Jet::constant(c)
    }
}

impl<F: Scalar> PartialEq for Jet<F> {
    fn eq(&self, other: &Self) -> bool {
        let n = self.len().max(other.len());
        (0..n).all(|i| self.coeff(i) == other.coeff(i))
    }
}

impl<F: Scalar> fmt::Debug for Jet<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Jet{:?}", self.coeffs)
    }
}

impl<F: Scalar> fmt::Display for Jet<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl<F: Scalar> Add for Jet<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.zip_with(&rhs, |a, b| a + b)
    }
}

impl<F: Scalar> Sub for Jet<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.zip_with(&rhs, |a, b| a - b)
    }
}

impl<F: Scalar> Neg for Jet<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Jet { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<F: Scalar> Mul for Jet<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let n = self.len().max(rhs.len());
        let mut out = vec![F::zero(); n];
        for (s, slot) in out.iter_mut().enumerate() {
            // sum over submasks t of s
            let mut t = s;
            loop {
                let a = self.coeff(t);
                if !a.is_zero() {
                    let b = rhs.coeff(s & !t);
                    if !b.is_zero() {
                        *slot = slot.clone() + a * b;
                    }
                }
                if t == 0 {
                    break;
                }
                t = (t - 1) & s;
            }
        }
        Jet { coeffs: out }
    }
}

impl<F: Scalar> Scalar for Jet<F> {
    fn zero() -> Self {
        Jet::constant(F::zero())
    }
    fn one() -> Self {
        Jet::constant(F::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }
    fn try_inv(&self) -> Option<Self> {
        let a0_inv = self.value().try_inv()?;
        // a = a0 (1 + n) with n nilpotent
        let mut n = self.clone() * Jet::constant(a0_inv.clone());
        n.coeffs[0] = F::zero();
        let neg_n = -n;
        let mut term = Jet::one();
        let mut acc = Jet::one();
        loop {
            term = term * neg_n.clone();
            if term.is_zero() {
                break;
            }
            acc = acc + term.clone();
        }
        Some(acc * Jet::constant(a0_inv))
    }
    fn from_i64(n: i64) -> Self {
        Jet::constant(F::from_i64(n))
    }
    fn characteristic() -> u64 {
        F::characteristic()
    }
    fn order() -> Option<u128> {
        None
    }
}
