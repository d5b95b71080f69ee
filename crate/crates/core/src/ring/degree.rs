use serde::Serialize;

use super::artinian::{AlgebraElement, ArtinianAlgebra};
use super::coords::CoordMatrix;
use super::monomial::FaceMonomial;
use crate::arith::{Matrix, Scalar};
use crate::simplicial::{Chain, Face, SimplicialComplex};
use crate::{Error, Result};

/// Record of the linear system that pins down the degree map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyWitness {
    pub equations: usize,
    pub unknowns: usize,
    pub rank: usize,
}

/// Linear functional on `A^d` with `deg(x_F) = μ_F / det(V_F)` on facets.
#[derive(Clone, Debug)]
pub struct DegreeFunctional<S> {
    values: Vec<S>,
    mu: Chain<S>,
    witness: ConsistencyWitness,
}

impl<S: Scalar> DegreeFunctional<S> {
    pub fn new(alg: &ArtinianAlgebra<S>, mu: &Chain<S>) -> Result<Self> {
        let d = alg.d();
        if mu.face_size() != d {
            return Err(Error::Dimension(format!("cycle on faces of size {} for top degree {d}", mu.face_size())));
        }
        let unknowns = alg.dim(d);
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for &f in alg.complex().faces_of_size(d) {
            let det = alg.coords().minor(f)?;
            let inv = det
                .try_inv()
                .ok_or_else(|| Error::DegenerateCoordinates(format!("facet {} has a singular minor", alg.complex().face_labels(f).join(","))))?;
            rows.push(alg.reduce_monomial(&FaceMonomial::of_face(f)).coords);
            rhs.push(mu.coeff(f) * inv);
        }
        for f in mu.support() {
            if !alg.complex().contains_face(f) {
                return Err(Error::Domain("cycle supported outside the complex".into()));
            }
        }
        if rows.is_empty() || unknowns == 0 {
            if rhs.iter().any(|c| !c.is_zero()) {
                return Err(Error::CycleDegreeInconsistency("nonzero cycle on a vanishing top degree".into()));
            }
            let witness = ConsistencyWitness { equations: rows.len(), unknowns, rank: 0 };
            return Ok(DegreeFunctional { values: vec![S::zero(); unknowns], mu: mu.clone(), witness });
        }
        let m = Matrix::from_rows(rows)?;
        let rank = m.rank();
        let witness = ConsistencyWitness { equations: m.rows(), unknowns, rank };
        if rank < unknowns {
            return Err(Error::FatalInconsistency("facet monomials do not span the top degree".into()));
        }
        let values = m.solve(&rhs)?.ok_or_else(|| {
            Error::CycleDegreeInconsistency(format!("{} facet equations of rank {rank} have no common solution", witness.equations))
        })?;
        Ok(DegreeFunctional { values, mu: mu.clone(), witness })
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn cycle(&self) -> &Chain<S> {
        &self.mu
    }

    pub fn witness(&self) -> &ConsistencyWitness {
        &self.witness
    }

    pub fn eval(&self, e: &AlgebraElement<S>) -> S {
        self.values.iter().zip(&e.coords).fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn of_monomial(&self, alg: &ArtinianAlgebra<S>, m: &FaceMonomial) -> Result<S> {
        if m.degree() != alg.d() {
            return Err(Error::Domain(format!("degree of a monomial of degree {}", m.degree())));
        }
        Ok(self.eval(&alg.reduce_monomial(m)))
    }

    /// `deg(a · b)` for elements of complementary degree.
    pub fn pair(&self, alg: &ArtinianAlgebra<S>, a: &AlgebraElement<S>, b: &AlgebraElement<S>) -> Result<S> {
        if a.degree + b.degree != alg.d() {
            return Err(Error::Domain("pairing needs complementary degrees".into()));
        }
        Ok(self.eval(&alg.multiply(a, b)?))
    }

    /// Matrix `P_k(i, j) = deg(m_i m_j)` over the bases of `A^k` and `A^{d-k}`.
    pub fn pairing_matrix(&self, alg: &ArtinianAlgebra<S>, k: usize) -> Result<Matrix<S>> {
        let d = alg.d();
        if k > d {
            return Err(Error::Domain(format!("degree {k} above {d}")));
        }
        let (r, c) = (alg.dim(k), alg.dim(d - k));
        let mut out = Matrix::zeros(r, c);
        for i in 0..r {
            let a = alg.basis_element(k, i);
            for j in 0..c {
                out.set(i, j, self.pair(alg, &a, &alg.basis_element(d - k, j))?);
            }
        }
        Ok(out)
    }
}

/// Lee's closed formula for `deg(x_τ²)` when `2|τ| = d`, computed directly
/// from the coordinates and the cycle.
pub fn lee_square_degree<S: Scalar>(c: &SimplicialComplex, coords: &CoordMatrix<S>, mu: &Chain<S>, tau: Face) -> Result<S> {
    let d = c.top_size();
    if 2 * tau.len() != d {
        return Err(Error::Domain(format!("face of size {} in dimension {d}", tau.len())));
    }
    if !c.contains_face(tau) {
        return Err(Error::Domain("not a face".into()));
    }
    let mut total = S::zero();
    for &f in c.faces_of_size(d) {
        if !tau.is_subset(f) {
            continue;
        }
        let m = mu.coeff(f);
        if m.is_zero() {
            continue;
        }
        let det = coords.minor(f)?;
        let mut term = m * det.try_inv().ok_or_else(|| Error::DegenerateCoordinates("singular facet minor".into()))?;
        for i in f.vertices() {
            let vol = coords.volume_element(f, i)?;
            if tau.contains(i) {
                term = term * vol;
            } else {
                term = term * vol.try_inv().ok_or_else(|| Error::DegenerateCoordinates(format!("vanishing volume element at vertex {i}")))?;
            }
        }
        total = total + term;
    }
    Ok(total)
}

/// `deg(m)` for a monomial of degree `d`, by rewriting on facet charts with
/// Cramer's rule instead of reducing in the full algebra. Charts sharing the
/// most vertices with the first facet containing `supp(m)` are preferred, so
/// fixing that facet's columns to the identity keeps symbolic denominators
/// small.
pub fn chart_degree<S: Scalar>(c: &SimplicialComplex, coords: &CoordMatrix<S>, mu: &Chain<S>, m: &FaceMonomial) -> Result<S> {
    let d = c.top_size();
    if m.degree() != d {
        return Err(Error::Dimension(format!("monomial of degree {} in top degree {d}", m.degree())));
    }
    let supp = m.support();
    match c.faces_of_size(d).iter().copied().find(|f| supp.is_subset(*f)) {
        Some(frame) => chart_rewrite(c, coords, mu, m, frame),
        None => Ok(S::zero()),
    }
}

fn chart_rewrite<S: Scalar>(c: &SimplicialComplex, coords: &CoordMatrix<S>, mu: &Chain<S>, m: &FaceMonomial, frame: Face) -> Result<S> {
    let supp = m.support();
    if !c.contains_face(supp) {
        return Ok(S::zero());
    }
    let facet = c
        .faces_of_size(c.top_size())
        .iter()
        .copied()
        .filter(|f| supp.is_subset(*f))
        .max_by_key(|f| f.intersection(frame).len())
        .ok_or_else(|| Error::InvalidComplex("face not contained in a facet of top size".into()))?;
    let det_inv = coords
        .minor(facet)?
        .try_inv()
        .ok_or_else(|| Error::DegenerateCoordinates(format!("facet {} has a singular minor", c.face_labels(facet).join(","))))?;
    if m.is_squarefree() {
        return Ok(mu.coeff(facet) * det_inv);
    }
    let v = supp.vertices().find(|&v| m.exponent(v) >= 2).expect("non-squarefree monomial");
    let mut rest: Vec<usize> = m.vertices().collect();
    rest.remove(rest.iter().position(|&u| u == v).expect("present"));
    let rest = FaceMonomial::from_vertices(rest);
    let mut total = S::zero();
    for w in 0..coords.columns() {
        if facet.contains(w) || !c.contains_face(supp.with(w)) {
            continue;
        }
        let cols: Vec<Vec<S>> = facet.vertices().map(|u| if u == v { coords.column(w).to_vec() } else { coords.column(u).to_vec() }).collect();
        let num = S::determinant(&Matrix::from_columns(coords.dim(), &cols));
        if num.is_zero() {
            continue;
        }
        let sub = chart_rewrite(c, coords, mu, &rest.mul(&FaceMonomial::var(w)), frame)?;
        total = total - num * det_inv.clone() * sub;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{FiniteField, Gf2_63, Mersenne61, F2};
    use crate::ring::coords::{generic_coords, symbolic_coords};
    use crate::simplicial::{named, pseudomanifold_check};

    fn setup<S: Scalar>(c: &SimplicialComplex, coords: CoordMatrix<S>) -> (ArtinianAlgebra<S>, DegreeFunctional<S>) {
        let mu = pseudomanifold_check::<S>(c).fundamental_class.expect("orientable");
        let a = ArtinianAlgebra::new(c.clone(), coords, c.top_size()).unwrap();
        let deg = DegreeFunctional::new(&a, &mu).unwrap();
        (a, deg)
    }

    #[test]
    fn facets_get_their_prescribed_degree() {
        let c = named::cross_polytope_boundary(3);
        let (a, deg) = setup::<Mersenne61>(&c, generic_coords(3, 6, 11, 0));
        for &f in c.faces_of_size(3) {
            let expect = deg.cycle().coeff(f) * a.coords().minor(f).unwrap().try_inv().unwrap();
            assert_eq!(deg.of_monomial(&a, &FaceMonomial::of_face(f)).unwrap(), expect);
        }
        assert_eq!(deg.witness().rank, 1);
    }

    #[test]
    fn lee_formula_agrees_with_rewriting() {
        for c in [named::cross_polytope_boundary(4), named::polygon(5), named::boundary_simplex(4)] {
            let d = c.top_size();
            let (a, deg) = setup::<Mersenne61>(&c, generic_coords(d, c.universe(), 4, 0));
            for &tau in c.faces_of_size(d / 2) {
                let rewritten = deg.of_monomial(&a, &FaceMonomial::of_face(tau).pow(2)).unwrap();
                let lee = lee_square_degree(&c, a.coords(), deg.cycle(), tau).unwrap();
                assert_eq!(rewritten, lee);
            }
        }
    }

    #[test]
    fn chart_rewriting_matches_reduction() {
        for c in [named::boundary_simplex(4), named::cross_polytope_boundary(3), named::bipyramid(5), named::polygon(6)] {
            let d = c.top_size();
            let (a, deg) = setup::<Mersenne61>(&c, generic_coords(d, c.universe(), 9, 0));
            for m in crate::ring::monomials_of_degree(&c, d) {
                assert_eq!(chart_degree(&c, a.coords(), deg.cycle(), &m).unwrap(), deg.of_monomial(&a, &m).unwrap(), "{m:?}");
            }
        }
    }

    #[test]
    fn chart_rewriting_on_rp2_in_characteristic_two() {
        let c = named::rp2_6();
        let (a, deg) = setup::<Gf2_63>(&c, generic_coords(3, 6, 5, 0));
        for m in crate::ring::monomials_of_degree(&c, 3) {
            assert_eq!(chart_degree(&c, a.coords(), deg.cycle(), &m).unwrap(), deg.of_monomial(&a, &m).unwrap());
        }
        assert!(chart_degree(&c, a.coords(), deg.cycle(), &FaceMonomial::var(0)).is_err());
    }

    #[test]
    fn lee_formula_symbolic_four_cycle() {
        let c = named::polygon(4);
        let mu = pseudomanifold_check::<F2>(&c).fundamental_class.unwrap().convert(|x| crate::arith::RatFunc::from_i64(x.to_u64() as i64));
        let a = ArtinianAlgebra::new(c.clone(), symbolic_coords::<F2>(2, 4), 2).unwrap();
        let deg = DegreeFunctional::new(&a, &mu).unwrap();
        for v in 0..4 {
            let tau = Face::from_vertices([v]);
            let rewritten = deg.of_monomial(&a, &FaceMonomial::var(v).pow(2)).unwrap();
            assert_eq!(rewritten, lee_square_degree(&c, a.coords(), deg.cycle(), tau).unwrap());
        }
    }

    #[test]
    fn truncated_cycle_is_inconsistent() {
        let c = named::boundary_simplex(2);
        let mut mu = pseudomanifold_check::<Gf2_63>(&c).fundamental_class.unwrap();
        let f = *c.faces_of_size(2).first().unwrap();
        mu = mu.plus(&Chain::from_terms(2, [(f, -mu.coeff(f))]).unwrap());
        let a = ArtinianAlgebra::new(c, generic_coords::<Gf2_63>(2, 3, 1, 0), 2).unwrap();
        assert!(matches!(DegreeFunctional::new(&a, &mu), Err(Error::CycleDegreeInconsistency(_))));
    }

    #[test]
    fn pairing_is_perfect_on_spheres() {
        let c = named::bipyramid(5);
        let (a, deg) = setup::<Mersenne61>(&c, generic_coords(3, 7, 9, 0));
        for k in 0..=3 {
            let p = deg.pairing_matrix(&a, k).unwrap();
            assert_eq!(p.rank(), a.dim(k));
        }
    }
}
