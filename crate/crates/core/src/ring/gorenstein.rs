use super::artinian::{AlgebraElement, ArtinianAlgebra};
use super::degree::DegreeFunctional;
use super::monomial::FaceMonomial;
use crate::arith::{Matrix, Scalar};
use crate::simplicial::Chain;
use crate::{Error, Result};

/// Degree-`k` part of the quotient by the annihilator of the degree map.
#[derive(Clone, Debug)]
struct QuotientPiece<S> {
    /// Basis elements of `A^k` whose images form the basis of `B^k`.
    reps: Vec<usize>,
    /// `dim A^k × dim B^k`; row `i` is the image of the `i`-th basis element.
    projection: Matrix<S>,
}

/// Quotient `B = A / L` where `L` is the set of elements pairing to zero
/// with everything under one or several degree maps.
pub struct GorensteinAlgebra<S> {
    alg: ArtinianAlgebra<S>,
    functionals: Vec<DegreeFunctional<S>>,
    pieces: Vec<QuotientPiece<S>>,
}

impl<S: Scalar> GorensteinAlgebra<S> {
    /// Quotient by the annihilator of a single cycle. Fails unless the top
    /// degree of the quotient is one-dimensional.
    pub fn new(alg: ArtinianAlgebra<S>, mu: &Chain<S>) -> Result<Self> {
        let g = Self::for_subspace(alg, std::slice::from_ref(mu))?;
        if g.dim(g.d()) != 1 {
            return Err(Error::FatalInconsistency(format!("top degree of the quotient has dimension {}", g.dim(g.d()))));
        }
        Ok(g)
    }

    /// Quotient by the common annihilator of several cycles.
    pub fn for_subspace(alg: ArtinianAlgebra<S>, mus: &[Chain<S>]) -> Result<Self> {
        if mus.is_empty() {
            return Err(Error::Domain("empty cycle subspace".into()));
        }
        let functionals = mus.iter().map(|mu| DegreeFunctional::new(&alg, mu)).collect::<Result<Vec<_>>>()?;
        let pieces = (0..=alg.d()).map(|k| build_piece(&alg, &functionals, k)).collect::<Result<Vec<_>>>()?;
        Ok(GorensteinAlgebra { alg, functionals, pieces })
    }

    /// `A` itself equipped with the degree map of `μ`, with no quotient.
    pub fn without_quotient(alg: ArtinianAlgebra<S>, mu: &Chain<S>) -> Result<Self> {
        let functionals = vec![DegreeFunctional::new(&alg, mu)?];
        let pieces = (0..=alg.d())
            .map(|k| {
                let n = alg.dim(k);
                QuotientPiece { reps: (0..n).collect(), projection: Matrix::identity(n) }
            })
            .collect();
        Ok(GorensteinAlgebra { alg, functionals, pieces })
    }

    pub fn artinian(&self) -> &ArtinianAlgebra<S> {
        &self.alg
    }

    pub fn functionals(&self) -> &[DegreeFunctional<S>] {
        &self.functionals
    }

    pub fn d(&self) -> usize {
        self.alg.d()
    }

    pub fn dim(&self, k: usize) -> usize {
        self.pieces.get(k).map_or(0, |p| p.reps.len())
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..=self.d()).map(|k| self.dim(k)).collect()
    }

    /// Basis monomials of `A^k` representing the basis of `B^k`.
    pub fn basis_monomials(&self, k: usize) -> Vec<FaceMonomial> {
        let mons = self.alg.piece(k).basis_monomials();
        self.pieces[k].reps.iter().map(|&i| mons[i].clone()).collect()
    }

    pub fn project(&self, a: &AlgebraElement<S>) -> AlgebraElement<S> {
        let k = a.degree;
        let Some(p) = self.pieces.get(k) else {
            return AlgebraElement::zero(k, 0);
        };
        let n = p.reps.len();
        let mut out = vec![S::zero(); n];
        for (i, c) in a.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let x = p.projection.get(i, j);
                if !x.is_zero() {
                    *o = o.clone() + c.clone() * x.clone();
                }
            }
        }
        AlgebraElement { degree: k, coords: out }
    }

    pub fn lift(&self, b: &AlgebraElement<S>) -> AlgebraElement<S> {
        let k = b.degree;
        let mut out = AlgebraElement::zero(k, self.alg.dim(k));
        for (c, &r) in b.coords.iter().zip(&self.pieces[k].reps) {
            out.coords[r] = c.clone();
        }
        out
    }

    pub fn reduce_monomial(&self, m: &FaceMonomial) -> AlgebraElement<S> {
        self.project(&self.alg.reduce_monomial(m))
    }

    pub fn reduce(&self, k: usize, terms: &[(FaceMonomial, S)]) -> Result<AlgebraElement<S>> {
        Ok(self.project(&self.alg.reduce(k, terms)?))
    }

    pub fn one(&self) -> AlgebraElement<S> {
        self.project(&self.alg.one())
    }

    pub fn basis_element(&self, k: usize, i: usize) -> AlgebraElement<S> {
        let mut e = AlgebraElement::zero(k, self.dim(k));
        e.coords[i] = S::one();
        e
    }

    pub fn linear_form(&self, coeffs: &[S]) -> Result<AlgebraElement<S>> {
        Ok(self.project(&self.alg.linear_form(coeffs)?))
    }

    pub fn multiply(&self, a: &AlgebraElement<S>, b: &AlgebraElement<S>) -> Result<AlgebraElement<S>> {
        Ok(self.project(&self.alg.multiply(&self.lift(a), &self.lift(b))?))
    }

    pub fn power(&self, a: &AlgebraElement<S>, e: usize) -> Result<AlgebraElement<S>> {
        (0..e).try_fold(self.one(), |acc, _| self.multiply(&acc, a))
    }

    /// Degree of a top-degree element under the first degree map.
    pub fn degree(&self, top: &AlgebraElement<S>) -> Result<S> {
        if top.degree != self.d() {
            return Err(Error::Domain(format!("degree of an element of degree {}", top.degree)));
        }
        Ok(self.functionals[0].eval(&self.lift(top)))
    }

    pub fn pair(&self, a: &AlgebraElement<S>, b: &AlgebraElement<S>) -> Result<S> {
        self.degree(&self.multiply(a, b)?)
    }

    /// Pairing matrix between the bases of `B^k` and `B^{d-k}`.
    pub fn pairing_matrix(&self, k: usize) -> Result<Matrix<S>> {
        let d = self.d();
        if k > d {
            return Err(Error::Domain(format!("degree {k} above {d}")));
        }
        let (r, c) = (self.dim(k), self.dim(d - k));
        let mut out = Matrix::zeros(r, c);
        for i in 0..r {
            let a = self.basis_element(k, i);
            for j in 0..c {
                out.set(i, j, self.pair(&a, &self.basis_element(d - k, j))?);
            }
        }
        Ok(out)
    }

    /// Matrix of `x ↦ x · e` from degree `k`, one row per basis element.
    pub fn multiplication_matrix(&self, k: usize, e: &AlgebraElement<S>) -> Result<Matrix<S>> {
        let target = self.dim(k + e.degree);
        let rows = (0..self.dim(k)).map(|i| self.multiply(&self.basis_element(k, i), e).map(|p| p.coords)).collect::<Result<Vec<_>>>()?;
        Ok(if rows.is_empty() { Matrix::zeros(0, target) } else { Matrix::from_rows(rows)? })
    }
}

fn build_piece<S: Scalar>(alg: &ArtinianAlgebra<S>, functionals: &[DegreeFunctional<S>], k: usize) -> Result<QuotientPiece<S>> {
    let d = alg.d();
    let (r, c) = (alg.dim(k), alg.dim(d - k));
    let m = functionals.len();
    // stacked pairing matrices, one block of columns per degree map
    let mut pairing = Matrix::zeros(r, c * m);
    for i in 0..r {
        let a = alg.basis_element(k, i);
        for j in 0..c {
            let prod = alg.multiply(&a, &alg.basis_element(d - k, j))?;
            for (f, phi) in functionals.iter().enumerate() {
                pairing.set(i, f * c + j, phi.eval(&prod));
            }
        }
    }
    if r == 0 || c == 0 {
        return Ok(QuotientPiece { reps: Vec::new(), projection: Matrix::zeros(r, 0) });
    }
    let reps = pairing.transpose().echelon().pivots;
    if reps.is_empty() {
        return Ok(QuotientPiece { reps, projection: Matrix::zeros(r, 0) });
    }
    let top = pairing.select_rows(&reps);
    let cols = top.echelon().pivots;
    let q = top.select_columns(&cols);
    let q_inv = q.inverse().ok_or_else(|| Error::FatalInconsistency("singular pairing block".into()))?;
    let projection = pairing.select_columns(&cols).mul(&q_inv)?;
    Ok(QuotientPiece { reps, projection })
}
