//! Rational functions kept as unreduced fractions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::matrix::{det_fraction_free, fraction_free_echelon, Echelon, Matrix};
use super::{MultiPoly, Scalar};

/// Above this many terms we skip the opportunistic exact-division test.
const CANCEL_TERM_LIMIT: usize = 400;

/// A fraction of sparse polynomials. No GCD is taken: only common monomial
/// content and exact polynomial quotients are cancelled. Equality is
/// decided by cross-multiplication.
#[derive(Clone)]
pub struct RatFunc<F> {
    num: MultiPoly<F>,
    den: MultiPoly<F>,
}

impl<F: Scalar> RatFunc<F> {
    pub fn new(num: MultiPoly<F>, den: MultiPoly<F>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut r = RatFunc { num, den };
        r.normalize();
        r
    }

    pub fn from_poly(p: MultiPoly<F>) -> Self {
        RatFunc { num: p, den: MultiPoly::one() }
    }

    pub fn var(i: usize) -> Self {
        Self::from_poly(MultiPoly::var(i))
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn numerator(&self) -> &MultiPoly<F> {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly<F> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.as_constant().is_some()
    }

    /// Constant value, if both parts are constant.
    pub fn as_constant(&self) -> Option<F> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n * d.try_inv()?)
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = MultiPoly::one();
            return;
        }
        let g = self.num.monomial_content().gcd(&self.den.monomial_content());
        if !g.is_one() {
            self.num = self.num.div_monomial(&g);
            self.den = self.den.div_monomial(&g);
        }
        if let Some(c) = self.den.as_constant() {
            self.num = self.num.scale(&c.try_inv().expect("nonzero constant denominator"));
            self.den = MultiPoly::one();
            return;
        }
        if self.num.len() <= CANCEL_TERM_LIMIT && self.den.len() <= self.num.len() {
            if let Some(q) = self.num.div_exact(&self.den) {
                self.num = q;
                self.den = MultiPoly::one();
                return;
            }
        }
        if self.den.len() <= CANCEL_TERM_LIMIT && self.num.len() <= self.den.len() {
            if let Some(q) = self.den.div_exact(&self.num) {
                // num/den = 1/q
                let (q, c) = q.make_monic();
                self.num = MultiPoly::constant(c.try_inv().expect("field"));
                self.den = q;
                return;
            }
        }
        let (den, c) = self.den.make_monic();
        self.den = den;
        self.num = self.num.scale(&c.try_inv().expect("field"));
    }

    /// Formal partial derivative by the quotient rule.
    pub fn partial_derivative(&self, var: usize) -> Self {
        let dn = self.num.partial_derivative(var);
        let dd = self.den.partial_derivative(var);
        if dd.is_zero() {
            return RatFunc::new(dn, self.den.clone());
        }
        let top = &(&dn * &self.den) - &(&self.num * &dd);
        RatFunc::new(top, &self.den * &self.den)
    }

    pub fn map_vars(&self, f: &dyn Fn(usize) -> usize) -> Self {
        RatFunc::new(self.num.map_vars(f), self.den.map_vars(f))
    }

    /// One more than the largest variable index used.
    pub fn width(&self) -> usize {
        self.num.width().max(self.den.width())
    }

    pub fn total_degree(&self) -> u32 {
        self.num.total_degree().max(self.den.total_degree())
    }
}

impl<F: Scalar> PartialEq for RatFunc<F> {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl<F: Scalar> fmt::Debug for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Scalar> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<F: Scalar> Add for RatFunc<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if rhs.num.is_zero() {
            return self;
        }
        if self.num.is_zero() {
            return rhs;
        }
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den);
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::new(num, &self.den * &rhs.den)
    }
}

impl<F: Scalar> Sub for RatFunc<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Scalar> Neg for RatFunc<F> {
    type Output = Self;
    fn neg(self) -> Self {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl<F: Scalar> Mul for RatFunc<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.num.is_zero() || rhs.num.is_zero() {
            return Self::zero();
        }
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<F: Scalar> Scalar for RatFunc<F> {
    fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn try_inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RatFunc::new(self.den.clone(), self.num.clone()))
        }
    }
    fn from_i64(n: i64) -> Self {
        Self::constant(F::from_i64(n))
    }
    fn characteristic() -> u64 {
        F::characteristic()
    }
    fn order() -> Option<u128> {
        None
    }
    fn echelon(m: &Matrix<Self>) -> Echelon<Self> {
        fraction_free_echelon(m)
    }
    fn determinant(m: &Matrix<Self>) -> Self {
        det_fraction_free(m).expect("square matrix")
    }
}
