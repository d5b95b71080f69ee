//! Substituting random field elements for indeterminates.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{FiniteField, MultiPoly, RatFunc, Scalar};
use crate::{Error, Result};

/// Redraws allowed before a computation gives up on a seed.
pub const MAX_REDRAWS: usize = 16;

pub fn specialize_poly<F, S>(p: &MultiPoly<F>, point: &[S]) -> Option<S>
where
    F: Scalar + Into<S>,
    S: Scalar,
{
    p.evaluate(point)
}

/// `None` when a variable is unassigned or the denominator vanishes.
pub fn specialize_ratfunc<F, S>(r: &RatFunc<F>, point: &[S]) -> Option<S>
where
    F: Scalar + Into<S>,
    S: Scalar,
{
    let n = r.numerator().evaluate(point)?;
    let d = r.denominator().evaluate(point)?;
    Some(n * d.try_inv()?)
}

/// Deterministic RNG for a seed and redraw attempt.
pub fn seeded_rng(seed: u64, attempt: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(attempt as u64);
    rng
}

pub fn random_point<F: FiniteField>(width: usize, seed: u64, attempt: usize) -> Vec<F> {
    let mut rng = seeded_rng(seed, attempt);
    (0..width).map(|_| F::random(&mut rng)).collect()
}

/// Run `f` on successive attempts until it returns `Some`.
pub fn with_redraws<T>(seed: u64, mut f: impl FnMut(usize) -> Option<T>) -> Result<T> {
    for attempt in 0..MAX_REDRAWS {
        if let Some(t) = f(attempt) {
            return Ok(t);
        }
    }
    Err(Error::UnluckySpecialization { seed, attempts: MAX_REDRAWS })
}

/// Upper bound `numerator / denominator` on a failure probability.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "BoundRepr", try_from = "BoundRepr")]
pub struct ErrorBound {
    pub numerator: u128,
    pub denominator: u128,
}

impl ErrorBound {
    pub const ZERO: ErrorBound = ErrorBound { numerator: 0, denominator: 1 };

    /// Schwartz-Zippel: a nonzero polynomial of degree `degree` vanishes at a
    /// uniform point of `field_order^n` with probability at most this.
    pub fn schwartz_zippel(degree: u128, field_order: Option<u128>) -> Self {
        match field_order {
            Some(q) => ErrorBound { numerator: degree.min(q), denominator: q },
            None => ErrorBound::ZERO,
        }
    }

    /// Union bound over two events.
    pub fn union(self, other: ErrorBound) -> Self {
        if self.numerator == 0 {
            return other;
        }
        if other.numerator == 0 {
            return self;
        }
        if self.denominator == other.denominator {
            let n = self.numerator.saturating_add(other.numerator).min(self.denominator);
            return ErrorBound { numerator: n, denominator: self.denominator };
        }
        // fall back to the cruder common form via floating point
        let v = (self.value() + other.value()).min(1.0);
        let d = self.denominator.max(other.denominator);
        ErrorBound { numerator: ((v * d as f64).ceil() as u128).min(d), denominator: d }
    }

    pub fn value(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }

    pub fn log2(&self) -> f64 {
        self.value().log2()
    }
}

impl fmt::Display for ErrorBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

#[derive(Serialize, Deserialize)]
struct BoundRepr {
    bound: String,
    log2: f64,
}

impl From<ErrorBound> for BoundRepr {
    fn from(b: ErrorBound) -> Self {
        BoundRepr { bound: b.to_string(), log2: b.log2() }
    }
}

impl TryFrom<BoundRepr> for ErrorBound {
    type Error = String;
    fn try_from(r: BoundRepr) -> std::result::Result<Self, String> {
        let (n, d) = r.bound.split_once('/').ok_or("expected n/d")?;
        let numerator = n.trim().parse().map_err(|e| format!("{e}"))?;
        let denominator: u128 = d.trim().parse().map_err(|e| format!("{e}"))?;
        if denominator == 0 {
            return Err("zero denominator".into());
        }
        Ok(ErrorBound { numerator, denominator })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Mersenne61, F7};

    #[test]
    fn rational_specialization() {
        let x = RatFunc::<F7>::var(0);
        let y = RatFunc::<F7>::var(1);
        let r = (x.clone() + y.clone()) * (x.clone() - y.clone()).try_inv().unwrap();
        let v = specialize_ratfunc(&r, &[F7::new(3), F7::new(1)]).unwrap();
        assert_eq!(v, F7::new(2)); // 4/2
        assert!(specialize_ratfunc(&r, &[F7::new(3), F7::new(3)]).is_none());
        assert!(specialize_ratfunc(&r, &[F7::new(3)]).is_none());
    }

    #[test]
    fn seeds_are_reproducible() {
        let a: Vec<Mersenne61> = random_point(5, 42, 0);
        assert_eq!(a, random_point::<Mersenne61>(5, 42, 0));
        assert_ne!(a, random_point::<Mersenne61>(5, 42, 1));
        assert_ne!(a, random_point::<Mersenne61>(5, 43, 0));
    }

    #[test]
    fn redraws_are_bounded() {
        let err = with_redraws::<()>(7, |_| None).unwrap_err();
        assert_eq!(err, Error::UnluckySpecialization { seed: 7, attempts: MAX_REDRAWS });
        assert_eq!(with_redraws(7, |a| (a == 3).then_some(a)).unwrap(), 3);
    }

    #[test]
    fn bound_serializes_as_fraction() {
        let b = ErrorBound::schwartz_zippel(12, Some(101)).union(ErrorBound::schwartz_zippel(3, Some(101)));
        assert_eq!(b.to_string(), "15/101");
        let s = serde_json::to_string(&b).unwrap();
        let back: ErrorBound = serde_json::from_str(&s).unwrap();
        assert_eq!(back, b);
    }
}
