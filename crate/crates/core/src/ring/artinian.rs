use std::collections::HashMap;
use std::sync::OnceLock;

use super::coords::CoordMatrix;
use super::monomial::{monomials_of_degree, FaceMonomial};
use crate::arith::{gaussian_echelon_with, Echelon, Matrix, Scalar};
use crate::exec::Strategy;
use crate::simplicial::SimplicialComplex;
use crate::{Error, Result};

/// One graded piece `A^k = R_k / (Θ · R_{k-1})`.
#[derive(Clone, Debug)]
pub struct GradedPiece<S> {
    /// Monomials of `R_k`, non-squarefree ones first.
    monomials: Vec<FaceMonomial>,
    index: HashMap<FaceMonomial, usize>,
    /// Positions in `monomials` of the monomials forming the basis of `A^k`.
    basis: Vec<usize>,
    /// Coordinates of every monomial of `R_k` in that basis.
    normal_forms: Vec<Vec<S>>,
    relation_rank: usize,
}

impl<S: Scalar> GradedPiece<S> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn monomials(&self) -> &[FaceMonomial] {
        &self.monomials
    }

    pub fn basis_monomials(&self) -> Vec<FaceMonomial> {
        self.basis.iter().map(|&i| self.monomials[i].clone()).collect()
    }

    pub fn relation_rank(&self) -> usize {
        self.relation_rank
    }

    /// Normal form of a monomial of this degree; `None` when its support is
    /// not a face.
    pub fn normal_form(&self, m: &FaceMonomial) -> Option<&[S]> {
        self.index.get(m).map(|&i| self.normal_forms[i].as_slice())
    }
}

/// Coordinates of an element of one graded piece with respect to its basis.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<S> {
    pub degree: usize,
    pub coords: Vec<S>,
}

impl<S: Scalar> AlgebraElement<S> {
    pub fn zero(degree: usize, dim: usize) -> Self {
        AlgebraElement { degree, coords: vec![S::zero(); dim] }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "adding elements of different degrees");
        AlgebraElement { degree: self.degree, coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.clone() + b.clone()).collect() }
    }

    pub fn scale(&self, c: &S) -> Self {
        AlgebraElement { degree: self.degree, coords: self.coords.iter().map(|a| a.clone() * c.clone()).collect() }
    }
}

/// Artinian reduction of the face ring of a complex by the linear forms
/// `θ_j = Σ_v V[j, v] x_v`.
pub struct ArtinianAlgebra<S> {
    complex: SimplicialComplex,
    coords: CoordMatrix<S>,
    pieces: Vec<OnceLock<GradedPiece<S>>>,
    strategy: Strategy,
}

impl<S: Scalar> ArtinianAlgebra<S> {
    /// Builds the graded pieces up to degree `top`; higher ones up to `d`
    /// are built on first use.
    pub fn new(complex: SimplicialComplex, coords: CoordMatrix<S>, top: usize) -> Result<Self> {
        Self::with_strategy(complex, coords, top, Strategy::default())
    }

    pub fn with_strategy(complex: SimplicialComplex, coords: CoordMatrix<S>, top: usize, strategy: Strategy) -> Result<Self> {
        coords.check_for(&complex)?;
        let d = complex.top_size();
        let alg = ArtinianAlgebra { complex, coords, pieces: (0..=d).map(|_| OnceLock::new()).collect(), strategy };
        for k in 0..=top.min(d) {
            alg.piece(k);
        }
        Ok(alg)
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn coords(&self) -> &CoordMatrix<S> {
        &self.coords
    }

    /// Number of parameters, which is the top degree.
    pub fn d(&self) -> usize {
        self.complex.top_size()
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn piece(&self, k: usize) -> &GradedPiece<S> {
        self.pieces[k].get_or_init(|| self.build_piece(k))
    }

    pub fn dim(&self, k: usize) -> usize {
        if k > self.d() {
            0
        } else {
            self.piece(k).dim()
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..=self.d()).map(|k| self.dim(k)).collect()
    }

    fn build_piece(&self, k: usize) -> GradedPiece<S> {
        let mut monomials = monomials_of_degree(&self.complex, k);
        // non-squarefree columns first so they are eliminated in favour of
        // squarefree ones
        monomials.sort_by_key(|m| m.is_squarefree());
        let index: HashMap<FaceMonomial, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let n = monomials.len();
        let (basis, normal_forms, relation_rank) = if k == 0 {
            ((0..n).collect(), (0..n).map(|i| unit(n, i)).collect(), 0)
        } else {
            let lower = monomials_of_degree(&self.complex, k - 1);
            let d = self.d();
            let mut rows = Vec::with_capacity(lower.len() * d);
            for m in &lower {
                for j in 0..d {
                    let mut row = vec![S::zero(); n];
                    for v in self.complex.vertex_set().vertices() {
                        let c = self.coords.get(j, v);
                        if c.is_zero() {
                            continue;
                        }
                        if let Some(&col) = index.get(&m.mul(&FaceMonomial::var(v))) {
                            row[col] = row[col].clone() + c.clone();
                        }
                    }
                    rows.push(row);
                }
            }
            let rel = Matrix::from_rows(rows).unwrap_or_else(|_| Matrix::zeros(0, n));
            let rel = if rel.rows() == 0 { Matrix::zeros(0, n) } else { rel };
            let ech = self.echelon(&rel);
            let free = ech.free_columns();
            let mut pos = vec![usize::MAX; n];
            for (p, &c) in free.iter().enumerate() {
                pos[c] = p;
            }
            let mut nf: Vec<Vec<S>> = vec![Vec::new(); n];
            for (p, &c) in free.iter().enumerate() {
                nf[c] = unit(free.len(), p);
            }
            for (r, &c) in ech.pivots.iter().enumerate() {
                nf[c] = free.iter().map(|&f| -ech.reduced.get(r, f).clone()).collect();
            }
            (free, nf, ech.rank())
        };
        GradedPiece { monomials, index, basis, normal_forms, relation_rank }
    }

    fn echelon(&self, m: &Matrix<S>) -> Echelon<S> {
        // rational function matrices use their own fraction-free routine
        if S::order().is_some() {
            gaussian_echelon_with(m, self.strategy)
        } else {
            m.echelon()
        }
    }

    /// Class of a monomial; zero when its support is not a face or its
    /// degree exceeds `d`.
    pub fn reduce_monomial(&self, m: &FaceMonomial) -> AlgebraElement<S> {
        let k = m.degree();
        if k > self.d() {
            return AlgebraElement { degree: k, coords: Vec::new() };
        }
        let piece = self.piece(k);
        match piece.normal_form(m) {
            Some(nf) => AlgebraElement { degree: k, coords: nf.to_vec() },
            None => AlgebraElement::zero(k, piece.dim()),
        }
    }

    /// Class of `Σ c_i m_i` for monomials of a common degree `k`.
    pub fn reduce(&self, k: usize, terms: &[(FaceMonomial, S)]) -> Result<AlgebraElement<S>> {
        let mut out = AlgebraElement::zero(k, self.dim(k));
        for (m, c) in terms {
            if m.degree() != k {
                return Err(Error::Domain(format!("monomial {m:?} in an element of degree {k}")));
            }
            if c.is_zero() {
                continue;
            }
            out = out.add(&self.reduce_monomial(m).scale(c));
        }
        Ok(out)
    }

    pub fn one(&self) -> AlgebraElement<S> {
        self.reduce_monomial(&FaceMonomial::one())
    }

    pub fn basis_element(&self, k: usize, i: usize) -> AlgebraElement<S> {
        AlgebraElement { degree: k, coords: unit(self.dim(k), i) }
    }

    /// Degree-one element `Σ_v c_v x_v`.
    pub fn linear_form(&self, coeffs: &[S]) -> Result<AlgebraElement<S>> {
        if coeffs.len() != self.complex.universe() {
            return Err(Error::Dimension("one coefficient per vertex required".into()));
        }
        let terms: Vec<(FaceMonomial, S)> = coeffs.iter().enumerate().map(|(v, c)| (FaceMonomial::var(v), c.clone())).collect();
        self.reduce(1, &terms)
    }

    pub fn multiply(&self, a: &AlgebraElement<S>, b: &AlgebraElement<S>) -> Result<AlgebraElement<S>> {
        let k = a.degree + b.degree;
        if k > self.d() {
            return Err(Error::Domain(format!("product of degrees {} and {} exceeds {}", a.degree, b.degree, self.d())));
        }
        let pa = self.piece(a.degree);
        let pb = self.piece(b.degree);
        let target = self.piece(k);
        let mut out = vec![S::zero(); target.dim()];
        for (i, ca) in a.coords.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            let ma = &pa.monomials[pa.basis[i]];
            for (j, cb) in b.coords.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let m = ma.mul(&pb.monomials[pb.basis[j]]);
                if let Some(nf) = target.normal_form(&m) {
                    let c = ca.clone() * cb.clone();
                    for (o, x) in out.iter_mut().zip(nf) {
                        if !x.is_zero() {
                            *o = o.clone() + c.clone() * x.clone();
                        }
                    }
                }
            }
        }
        Ok(AlgebraElement { degree: k, coords: out })
    }

    pub fn power(&self, a: &AlgebraElement<S>, e: usize) -> Result<AlgebraElement<S>> {
        (0..e).try_fold(self.one(), |acc, _| self.multiply(&acc, a))
    }

    /// Matrix of `x ↦ x · e` from degree `k`, one row per basis element.
    pub fn multiplication_matrix(&self, k: usize, e: &AlgebraElement<S>) -> Result<Matrix<S>> {
        let target = self.dim(k + e.degree);
        let rows: Vec<Vec<S>> = (0..self.dim(k)).map(|i| self.multiply(&self.basis_element(k, i), e).map(|p| p.coords)).collect::<Result<_>>()?;
        Ok(if rows.is_empty() { Matrix::zeros(0, target) } else { Matrix::from_rows(rows)? })
    }

    /// Whether the squarefree monomials of degree `k` span `A^k`.
    pub fn squarefree_spanning(&self, k: usize) -> bool {
        let p = self.piece(k);
        p.basis.iter().all(|&i| p.monomials[i].is_squarefree())
    }
}

fn unit<S: Scalar>(n: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); n];
    v[i] = S::one();
    v
}
