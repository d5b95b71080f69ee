//! Prime fields GF(p) with the modulus fixed at compile time.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use super::{FiniteField, Scalar};

/// Element of GF(P), stored as its canonical representative in `0..P`.
///
/// `P` must be prime and below 2^63.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;
pub type F11 = Fp<11>;
pub type F13 = Fp<13>;
pub type F101 = Fp<101>;
pub type Mersenne31 = Fp<{ (1 << 31) - 1 }>;
pub type Mersenne61 = Fp<{ (1 << 61) - 1 }>;

impl<const P: u64> Fp<P> {
    pub const fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub const fn value(self) -> u64 {
        self.0
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn try_inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }
    fn from_i64(n: i64) -> Self {
        let r = n.rem_euclid(P as i64);
        Fp(r as u64)
    }
    fn characteristic() -> u64 {
        P
    }
    fn order() -> Option<u128> {
        Some(P as u128)
    }
}

impl<const P: u64> FiniteField for Fp<P> {
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Fp(rng.gen_range(0..P))
    }
    fn to_u64(self) -> u64 {
        self.0
    }
    fn from_u64(v: u64) -> Self {
        Fp(v % P)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_field_tables() {
        for a in 0..7 {
            let x = F7::new(a);
            if a != 0 {
                assert_eq!(x * x.try_inv().unwrap(), F7::one());
            }
            assert_eq!(x + (-x), F7::zero());
        }
        assert_eq!(F2::from_i64(-1), F2::one());
        assert_eq!(F5::from_i64(-7), F5::new(3));
    }

    proptest! {
        #[test]
        fn mersenne61_axioms(a in 0u64..(1 << 61) - 1, b in 0u64..(1 << 61) - 1, c in 0u64..(1 << 61) - 1) {
            let (a, b, c) = (Mersenne61::new(a), Mersenne61::new(b), Mersenne61::new(c));
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!((a + b) + c, a + (b + c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!(a - b + b, a);
            if !a.is_zero() {
                prop_assert_eq!(a * a.try_inv().unwrap(), Mersenne61::one());
            }
        }
    }
}
