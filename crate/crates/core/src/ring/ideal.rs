use super::artinian::AlgebraElement;
use super::gorenstein::GorensteinAlgebra;
use super::monomial::{monomials_of_degree, FaceMonomial};
use crate::arith::{Matrix, Scalar};
use crate::simplicial::{Face, SimplicialComplex};
use crate::{Error, Result};

/// Monomial ideal of the quotient algebra, stored degree by degree as an
/// echelon basis in the coordinates of `B^k`.
#[derive(Clone, Debug)]
pub struct IdealBasis<S> {
    pieces: Vec<Matrix<S>>,
}

impl<S: Scalar> IdealBasis<S> {
    /// Span of the monomials accepted by `keep`.
    pub fn generated_by(g: &GorensteinAlgebra<S>, keep: impl Fn(&FaceMonomial) -> bool) -> Result<Self> {
        let c = g.artinian().complex();
        let pieces = (0..=g.d())
            .map(|k| {
                let rows: Vec<Vec<S>> = monomials_of_degree(c, k)
                    .into_iter()
                    .filter(|m| keep(m))
                    .map(|m| g.reduce_monomial(&m).coords)
                    .filter(|r| r.iter().any(|x| !x.is_zero()))
                    .collect();
                let n = g.dim(k);
                if rows.is_empty() {
                    return Ok(Matrix::zeros(0, n));
                }
                let ech = Matrix::from_rows(rows)?.echelon();
                let rank = ech.rank();
                Ok(ech.reduced.select_rows(&(0..rank).collect::<Vec<_>>()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IdealBasis { pieces })
    }

    /// Ideal spanned by monomials whose support is not a face of `gamma`.
    /// Faces of `gamma` are matched to the ambient complex by label.
    pub fn nonface_ideal(g: &GorensteinAlgebra<S>, gamma: &SimplicialComplex) -> Result<Self> {
        let gamma = embed(g.artinian().complex(), gamma)?;
        Self::generated_by(g, |m| !gamma.contains_face(m.support()))
    }

    /// Ideal generated by a single monomial.
    pub fn principal(g: &GorensteinAlgebra<S>, generator: &FaceMonomial) -> Result<Self> {
        Self::generated_by(g, |m| divides(generator, m))
    }

    pub fn dim(&self, k: usize) -> usize {
        self.pieces.get(k).map_or(0, Matrix::rows)
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..self.pieces.len()).map(|k| self.dim(k)).collect()
    }

    /// Basis rows in `B^k` coordinates.
    pub fn matrix(&self, k: usize) -> &Matrix<S> {
        &self.pieces[k]
    }

    pub fn basis(&self, k: usize) -> Vec<AlgebraElement<S>> {
        (0..self.dim(k)).map(|i| AlgebraElement { degree: k, coords: self.pieces[k].row(i).to_vec() }).collect()
    }
}

fn divides(a: &FaceMonomial, b: &FaceMonomial) -> bool {
    a.vertices().all(|v| a.exponent(v) <= b.exponent(v))
}

/// Re-index `gamma` on the vertex labels of `ambient`.
pub fn embed(ambient: &SimplicialComplex, gamma: &SimplicialComplex) -> Result<SimplicialComplex> {
    let mut facets = Vec::new();
    for &f in gamma.facets() {
        let labels = gamma.face_labels(f);
        let face = ambient
            .face_from_labels(&labels)
            .map_err(|_| Error::Domain(format!("subcomplex vertex set {{{}}} not in the complex", labels.join(","))))?;
        if !ambient.contains_face(face) {
            return Err(Error::Domain(format!("{{{}}} is not a face of the complex", labels.join(","))));
        }
        facets.push(face);
    }
    let out = SimplicialComplex::new(ambient.labels().to_vec(), facets)?;
    debug_assert!(out.faces().all(|f: Face| ambient.contains_face(f)));
    Ok(out)
}
