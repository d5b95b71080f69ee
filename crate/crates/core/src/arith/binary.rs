//! Binary extension fields GF(2^M) in polynomial basis.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use super::{FiniteField, Scalar};

/// Element of GF(2)[x] / (x^M + TAIL), with `TAIL` the low-degree part of
/// an irreducible modulus. Bit `i` holds the coefficient of `x^i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Gf2x<const M: u32, const TAIL: u64>(u64);

/// GF(2^63) modulo the trinomial x^63 + x + 1.
pub type Gf2_63 = Gf2x<63, 0b11>;
/// GF(2^8) modulo x^8 + x^4 + x^3 + x + 1.
pub type Gf2_8 = Gf2x<8, 0x1b>;

impl<const M: u32, const TAIL: u64> Gf2x<M, TAIL> {
    const MASK: u64 = if M == 64 { u64::MAX } else { (1u64 << M) - 1 };

    pub const fn new(bits: u64) -> Self {
        Gf2x(bits & Self::MASK)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    fn clmul(a: u64, b: u64) -> u128 {
        let mut acc = 0u128;
        let mut b = b;
        let mut shift = 0;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= (a as u128) << shift;
            }
            b >>= 1;
            shift += 1;
        }
        acc
    }

    fn reduce(mut v: u128) -> u64 {
        let m = M as usize;
        for i in (m..(2 * m - 1)).rev() {
            if (v >> i) & 1 == 1 {
                v ^= 1u128 << i;
                v ^= (TAIL as u128) << (i - m);
            }
        }
        v as u64
    }
}

impl<const M: u32, const TAIL: u64> fmt::Debug for Gf2x<M, TAIL> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0x{:x}", self.0)
    }
}

impl<const M: u32, const TAIL: u64> fmt::Display for Gf2x<M, TAIL> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0x{:x}", self.0)
    }
}

impl<const M: u32, const TAIL: u64> Add for Gf2x<M, TAIL> {
    type Output = Self;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Self) -> Self {
        Gf2x(self.0 ^ rhs.0)
    }
}

impl<const M: u32, const TAIL: u64> Sub for Gf2x<M, TAIL> {
    type Output = Self;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: Self) -> Self {
        Gf2x(self.0 ^ rhs.0)
    }
}

impl<const M: u32, const TAIL: u64> Neg for Gf2x<M, TAIL> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        self
    }
}

impl<const M: u32, const TAIL: u64> Mul for Gf2x<M, TAIL> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Gf2x(Self::reduce(Self::clmul(self.0, rhs.0)))
    }
}

impl<const M: u32, const TAIL: u64> Scalar for Gf2x<M, TAIL> {
    fn zero() -> Self {
        Gf2x(0)
    }
    fn one() -> Self {
        Gf2x(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn try_inv(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        // a^(2^M - 2) = a^2 * a^4 * ... * a^(2^(M-1))
        let mut acc = Self::one();
        let mut sq = self.square();
        for _ in 1..M {
            acc = acc * sq;
            sq = sq.square();
        }
        Some(acc)
    }
    fn from_i64(n: i64) -> Self {
        Gf2x((n & 1) as u64)
    }
    fn characteristic() -> u64 {
        2
    }
    fn order() -> Option<u128> {
        Some(1u128 << M)
    }
}

impl<const M: u32, const TAIL: u64> FiniteField for Gf2x<M, TAIL> {
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Gf2x(rng.gen::<u64>() & Self::MASK)
    }
    fn to_u64(self) -> u64 {
        self.0
    }
    fn from_u64(v: u64) -> Self {
        Self::new(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Polynomial arithmetic over GF(2) on bit vectors, used to check that the
    /// moduli are irreducible (Rabin's test).
    fn poly_mod(mut a: u128, m: u128) -> u128 {
        let dm = 127 - m.leading_zeros();
        while a != 0 && 127 - a.leading_zeros() >= dm {
            a ^= m << ((127 - a.leading_zeros()) - dm);
        }
        a
    }

    fn poly_mulmod(a: u128, b: u128, m: u128) -> u128 {
        let mut acc = 0u128;
        let mut a = poly_mod(a, m);
        let mut b = b;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            a = poly_mod(a << 1, m);
            b >>= 1;
        }
        acc
    }

    fn poly_gcd(mut a: u128, mut b: u128) -> u128 {
        while b != 0 {
            let r = poly_mod(a, b);
            a = b;
            b = r;
        }
        a
    }

    /// x^(2^j) mod m
    fn frob_power(j: u32, m: u128) -> u128 {
        let mut x = 2u128;
        for _ in 0..j {
            x = poly_mulmod(x, x, m);
        }
        x
    }

    fn rabin_irreducible(deg: u32, tail: u64) -> bool {
        let m = (1u128 << deg) | tail as u128;
        if frob_power(deg, m) != 2 {
            return false;
        }
        let mut primes = vec![];
        let mut n = deg;
        let mut p = 2;
        while n > 1 {
            if n.is_multiple_of(p) {
                primes.push(p);
                while n.is_multiple_of(p) {
                    n /= p;
                }
            }
            p += 1;
        }
        primes.iter().all(|&q| poly_gcd(m, frob_power(deg / q, m) ^ 2) == 1)
    }

    #[test]
    fn moduli_are_irreducible() {
        assert!(rabin_irreducible(63, 0b11));
        assert!(rabin_irreducible(8, 0x1b));
        // x^8 + 1 = (x + 1)^8 is not
        assert!(!rabin_irreducible(8, 1));
    }

    #[test]
    fn gf256_exhaustive_inverse() {
        for a in 1..256u64 {
            let x = Gf2_8::new(a);
            assert_eq!(x * x.try_inv().unwrap(), Gf2_8::one());
        }
        // AES test vector: {57} * {83} = {c1}
        assert_eq!(Gf2_8::new(0x57) * Gf2_8::new(0x83), Gf2_8::new(0xc1));
    }

    proptest! {
        #[test]
        fn gf2_63_axioms_and_frobenius(a: u64, b: u64, c: u64) {
            let (a, b, c) = (Gf2_63::new(a), Gf2_63::new(b), Gf2_63::new(c));
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!((a + b).square(), a.square() + b.square());
            if !a.is_zero() {
                prop_assert_eq!(a * a.try_inv().unwrap(), Gf2_63::one());
            }
        }
    }
}
