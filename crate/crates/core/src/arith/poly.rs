//! Sparse multivariate polynomials over a finite coefficient field.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Scalar;
use crate::{Error, Result};

/// Exponent vector with trailing zeros trimmed, so that the derived
/// lexicographic `Ord` is the lex monomial order with `x0 > x1 > ...`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of exponent slots; every variable index used is below this.
    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() { (self, other) } else { (other, self) };
        let mut e = long.0.clone();
        for (i, x) in short.0.iter().enumerate() {
            e[i] += x;
        }
        Monomial(e)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut e = other.0.clone();
        for (i, x) in self.0.iter().enumerate() {
            e[i] -= x;
        }
        Monomial::from_exponents(e)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    fn map_vars(&self, f: &dyn Fn(usize) -> usize) -> Monomial {
        let mut e: Vec<u32> = Vec::new();
        for (i, &x) in self.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let j = f(i);
            if e.len() <= j {
                e.resize(j + 1, 0);
            }
            e[j] += x;
        }
        Monomial::from_exponents(e)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial: a map from monomial to nonzero coefficient.
#[derive(Clone, PartialEq)]
pub struct MultiPoly<F> {
    terms: BTreeMap<Monomial, F>,
}

impl<F: Scalar> MultiPoly<F> {
    pub fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn var(i: usize) -> Self {
        Self::monomial(Monomial::var(i), F::one())
    }

    pub fn monomial(m: Monomial, c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    /// The constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// One more than the largest variable index used.
    pub fn width(&self) -> usize {
        self.terms.keys().map(Monomial::width).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x.clone() * c.clone())).filter(|(_, x)| !x.is_zero()).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        MultiPoly { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    /// Formal partial derivative in variable `var`; exponents are reduced
    /// in the coefficient field, so d(x^p)/dx = 0 in characteristic p.
    pub fn partial_derivative(&self, var: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[var] -= 1;
            out.add_term(Monomial::from_exponents(exps), c.clone() * F::from_i64(e as i64));
        }
        out
    }

    /// Evaluate with `point[i]` substituted for variable `i`. Returns `None`
    /// if some variable has no assigned value.
    pub fn evaluate<S>(&self, point: &[S]) -> Option<S>
    where
        S: Scalar,
        F: Into<S>,
    {
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut t: S = c.clone().into();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t * point.get(i)?.pow(e as u64);
                }
            }
            acc = acc + t;
        }
        Some(acc)
    }

    /// Greatest common monomial divisor of all terms.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else { return Monomial::one() };
        it.fold(first.clone(), |g, m| g.gcd(m))
    }

    pub fn div_monomial(&self, m: &Monomial) -> Self {
        MultiPoly { terms: self.terms.iter().map(|(k, c)| (m.quotient_of(k), c.clone())).collect() }
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (dm, dc) = d.leading_term()?;
        let dc_inv = dc.try_inv()?;
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.try_inv()?));
        }
        let mut rem = self.clone();
        let mut q = Self::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            if !dm.divides(rm) {
                return None;
            }
            let qm = dm.quotient_of(rm);
            let qc = rc.clone() * dc_inv.clone();
            for (m, c) in &d.terms {
                rem.add_term(m.mul(&qm), -(c.clone() * qc.clone()));
            }
            q.add_term(qm, qc);
        }
        Some(q)
    }

    /// Rename variables through `f`; colliding images are multiplied.
    pub fn map_vars(&self, f: &dyn Fn(usize) -> usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.map_vars(f), c.clone());
        }
        out
    }

    /// Split into parts by the parity pattern of the exponents: returns
    /// `(mask, q)` pairs with `self = sum mask_monomial * q` and every `q` a
    /// polynomial in squares, written in the square roots of its variables
    /// (exponents halved).
    pub fn split_by_parity(&self) -> BTreeMap<Monomial, MultiPoly<F>> {
        let mut out: BTreeMap<Monomial, MultiPoly<F>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mask = Monomial::from_exponents(m.0.iter().map(|e| e % 2).collect());
            let half = Monomial::from_exponents(m.0.iter().map(|e| e / 2).collect());
            out.entry(mask).or_insert_with(Self::zero).add_term(half, c.clone());
        }
        out
    }

    /// Normalize so that the leading coefficient is one; returns the factor
    /// divided out.
    pub fn make_monic(&self) -> (Self, F) {
        match self.leading_term() {
            None => (Self::zero(), F::one()),
            Some((_, c)) => {
                let c = c.clone();
                let inv = c.try_inv().expect("field coefficient");
                (self.scale(&inv), c)
            }
        }
    }
}

impl<F: Scalar> fmt::Debug for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Scalar> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m:?}")?;
            } else {
                write!(f, "{c}*{m:?}")?;
            }
        }
        Ok(())
    }
}

impl<F: Scalar> Add for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn add(self, rhs: Self) -> MultiPoly<F> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<F: Scalar> Sub for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn sub(self, rhs: Self) -> MultiPoly<F> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<F: Scalar> Mul for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn mul(self, rhs: Self) -> MultiPoly<F> {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<F: Scalar> Neg for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> MultiPoly<F> {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<F: Scalar> $tr for MultiPoly<F> {
            type Output = MultiPoly<F>;
            fn $method(self, rhs: Self) -> MultiPoly<F> {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<F: Scalar> Neg for MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> MultiPoly<F> {
        -&self
    }
}

/// Named indeterminates; provides the checked entry points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    names: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Mul,
}

impl PolyRing {
    pub fn new(names: Vec<String>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(Error::Domain(format!("duplicate indeterminate {n}")));
            }
        }
        Ok(PolyRing { names })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.names.iter().position(|n| n == name).ok_or_else(|| Error::Domain(format!("unknown indeterminate {name}")))
    }

    pub fn var<F: Scalar>(&self, name: &str) -> Result<MultiPoly<F>> {
        Ok(MultiPoly::var(self.index(name)?))
    }

    fn check<F: Scalar>(&self, p: &MultiPoly<F>) -> Result<()> {
        if p.width() > self.names.len() {
            return Err(Error::Domain(format!("polynomial uses {} indeterminates, ring has {}", p.width(), self.names.len())));
        }
        Ok(())
    }

    pub fn arith<F: Scalar>(&self, a: &MultiPoly<F>, b: &MultiPoly<F>, op: PolyOp) -> Result<MultiPoly<F>> {
        self.check(a)?;
        self.check(b)?;
        Ok(match op {
            PolyOp::Add => a + b,
            PolyOp::Mul => a * b,
        })
    }

    pub fn partial_derivative<F: Scalar>(&self, p: &MultiPoly<F>, name: &str) -> Result<MultiPoly<F>> {
        self.check(p)?;
        Ok(p.partial_derivative(self.index(name)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{F2, F3, F5};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn xy<F: Scalar>() -> (MultiPoly<F>, MultiPoly<F>) {
        (MultiPoly::var(0), MultiPoly::var(1))
    }

    #[test]
    fn frobenius_in_char_two() {
        let (x, y) = xy::<F2>();
        let s = &x + &y;
        assert_eq!(&s * &s, &(&x * &x) + &(&y * &y));
    }

    #[test]
    fn square_over_gf3_matches_convolution() {
        // (x+1)^2 by explicit coefficient convolution of [1,1] with itself
        let coeffs = [1i64, 1];
        let mut conv = [0i64; 3];
        for i in 0..2 {
            for j in 0..2 {
                conv[i + j] += coeffs[i] * coeffs[j];
            }
        }
        let expected =
            MultiPoly::<F3>::from_terms(conv.iter().enumerate().map(|(e, &c)| (Monomial::from_exponents(vec![e as u32]), F3::from_i64(c))));
        let (x, _) = xy::<F3>();
        let p = &x + &MultiPoly::one();
        assert_eq!(&p * &p, expected);
        assert_eq!(expected.coefficient(&Monomial::var(0)), F3::from_i64(2));
    }

    #[test]
    fn additive_identity_and_ring_checks() {
        let ring = PolyRing::new(vec!["x".into(), "y".into()]).unwrap();
        let x: MultiPoly<F5> = ring.var("x").unwrap();
        assert_eq!(ring.arith(&x, &MultiPoly::zero(), PolyOp::Add).unwrap(), x);
        let z: MultiPoly<F5> = MultiPoly::var(2);
        assert!(ring.arith(&x, &z, PolyOp::Mul).is_err());
        assert!(ring.partial_derivative(&x, "w").is_err());
        assert!(PolyRing::new(vec!["a".into(), "a".into()]).is_err());
    }

    #[test]
    fn derivatives() {
        let (x, y) = xy::<F2>();
        assert!((&x * &x).partial_derivative(0).is_zero());
        let (x, y5) = (MultiPoly::<F5>::var(0), MultiPoly::<F5>::var(1));
        assert_eq!((&x * &y5).partial_derivative(0), y5);
        let _ = y;
    }

    fn random_poly<R: Rng>(rng: &mut R, nvars: usize, max_deg: u32) -> MultiPoly<F5> {
        let mut p = MultiPoly::zero();
        for _ in 0..6 {
            let mut exps = vec![0u32; nvars];
            let mut budget = rng.gen_range(0..=max_deg);
            while budget > 0 {
                exps[rng.gen_range(0..nvars)] += 1;
                budget -= 1;
            }
            p.add_term(Monomial::from_exponents(exps), F5::from_i64(rng.gen_range(1..5)));
        }
        p
    }

    #[test]
    fn leibniz_on_random_cubics() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let f = random_poly(&mut rng, 3, 3);
            let g = random_poly(&mut rng, 3, 3);
            for v in 0..3 {
                let lhs = (&f * &g).partial_derivative(v);
                let rhs = &(&f * &g.partial_derivative(v)) + &(&g * &f.partial_derivative(v));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn parity_split_reassembles() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let p = random_poly(&mut rng, 3, 5);
        let mut back = MultiPoly::<F5>::zero();
        for (mask, q) in p.split_by_parity() {
            let sq = q.map_vars(&|i| i);
            // substitute x_i -> x_i^2 by doubling exponents
            let doubled =
                MultiPoly::from_terms(sq.terms().map(|(m, c)| (Monomial::from_exponents(m.exponents().iter().map(|e| 2 * e).collect()), *c)));
            back = &back + &doubled.mul_monomial(&mask);
        }
        assert_eq!(back, p);
    }

    proptest! {
        #[test]
        fn exact_division_roundtrip(seed: u64) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let a = random_poly(&mut rng, 3, 3);
            let b = random_poly(&mut rng, 3, 2);
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.div_exact(&b), Some(a.clone()));
        }
    }
}
