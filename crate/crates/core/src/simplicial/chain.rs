use std::collections::BTreeMap;

use super::complex::SimplicialComplex;
use super::face::Face;
use crate::arith::{Matrix, Scalar};
use crate::{Error, Result};

/// Field coefficients on faces of one size, each face oriented by the
/// increasing vertex order. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct Chain<S> {
    face_size: usize,
    coeffs: BTreeMap<Face, S>,
}

impl<S: Scalar> Chain<S> {
    pub fn zero(face_size: usize) -> Self {
        Chain { face_size, coeffs: BTreeMap::new() }
    }

    pub fn from_terms(face_size: usize, terms: impl IntoIterator<Item = (Face, S)>) -> Result<Self> {
        let mut c = Chain::zero(face_size);
        for (f, s) in terms {
            if f.len() != face_size {
                return Err(Error::Dimension(format!("face {f:?} in a chain of {face_size}-vertex faces")));
            }
            c.add(f, s);
        }
        Ok(c)
    }

    /// Number of vertices of each face; the chain dimension is one less.
    pub fn face_size(&self) -> usize {
        self.face_size
    }

    pub fn add(&mut self, f: Face, s: S) {
        let v = match self.coeffs.remove(&f) {
            Some(old) => old + s,
            None => s,
        };
        if !v.is_zero() {
            self.coeffs.insert(f, v);
        }
    }

    pub fn coeff(&self, f: Face) -> S {
        self.coeffs.get(&f).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Face, &S)> {
        self.coeffs.iter().map(|(f, s)| (*f, s))
    }

    pub fn support(&self) -> Vec<Face> {
        self.coeffs.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Chain::zero(self.face_size);
        for (f, s) in &self.coeffs {
            out.add(*f, s.clone() * c.clone());
        }
        out
    }

    pub fn plus(&self, other: &Chain<S>) -> Self {
        let mut out = self.clone();
        for (f, s) in &other.coeffs {
            out.add(*f, s.clone());
        }
        out
    }

    /// Simplicial boundary, with removal of the `i`-th vertex weighted by
    /// `(-1)^i`. The boundary of a vertex is the empty face.
    pub fn boundary(&self) -> Chain<S> {
        let mut out = Chain::zero(self.face_size.saturating_sub(1));
        if self.face_size == 0 {
            return out;
        }
        for (f, s) in &self.coeffs {
            for (i, v) in f.vertices().enumerate() {
                let t = if i % 2 == 0 { s.clone() } else { -s.clone() };
                out.add(f.without(v), t);
            }
        }
        out
    }

    /// Relabel faces through a vertex map; the map must be order preserving
    /// on each face for orientations to carry over.
    pub fn map_faces(&self, f: impl Fn(Face) -> Face) -> Chain<S> {
        let mut out = Chain::zero(self.face_size);
        for (face, s) in &self.coeffs {
            out.add(f(*face), s.clone());
        }
        out
    }

    /// Map coefficients into another scalar domain.
    pub fn convert<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Chain<T> {
        let mut out = Chain::zero(self.face_size);
        for (face, s) in &self.coeffs {
            out.add(*face, f(s));
        }
        out
    }
}

/// Matrix of the augmented boundary from faces with `k + 1` vertices to
/// faces with `k` vertices, in sorted face order. `k = 0` gives the row of
/// ones mapping vertices to the empty face.
pub fn boundary_matrix<S: Scalar>(c: &SimplicialComplex, k: usize) -> Matrix<S> {
    let cols = c.faces_of_size(k + 1);
    let rows = c.faces_of_size(k);
    let mut m = Matrix::zeros(rows.len(), cols.len());
    for (j, f) in cols.iter().enumerate() {
        for (i, v) in f.vertices().enumerate() {
            let r = rows.binary_search(&f.without(v)).expect("boundary face present");
            m.set(r, j, if i % 2 == 0 { S::one() } else { -S::one() });
        }
    }
    m
}

/// Reduced Betti numbers `b̃_{-1}, b̃_0, ..., b̃_{dim}`, over the field `S`.
pub fn reduced_betti<S: Scalar>(c: &SimplicialComplex) -> Vec<usize> {
    let top = c.top_size();
    if c.is_void() {
        return Vec::new();
    }
    // rank of the boundary from size j to size j-1, for j = 1..=top
    let ranks: Vec<usize> = (0..=top + 1).map(|j| if j == 0 || j > top { 0 } else { boundary_matrix::<S>(c, j - 1).rank() }).collect();
    (0..=top).map(|j| c.faces_of_size(j).len() - ranks[j] - ranks[j + 1]).collect()
}

/// Basis of the top-dimensional cycles (kernel of the augmented boundary on
/// faces of the largest size).
pub fn cycle_space<S: Scalar>(c: &SimplicialComplex) -> Vec<Chain<S>> {
    if c.is_void() {
        return Vec::new();
    }
    let d = c.top_size();
    let facets = c.faces_of_size(d);
    if d == 0 {
        // {∅}: its one face is a cycle
        return vec![Chain::from_terms(0, [(Face::EMPTY, S::one())]).expect("sizes agree")];
    }
    boundary_matrix::<S>(c, d - 1)
        .kernel()
        .into_iter()
        .map(|v| Chain::from_terms(d, facets.iter().copied().zip(v).filter(|(_, s)| !s.is_zero())).expect("sizes agree"))
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct PseudomanifoldReport<S> {
    pub is_pseudomanifold: bool,
    pub orientable: bool,
    pub connected_fundamental: bool,
    pub fundamental_class: Option<Chain<S>>,
}

/// Ridge-degree test plus orientability over `S`, read as existence of a
/// top cycle supported on every facet.
pub fn pseudomanifold_check<S: Scalar>(c: &SimplicialComplex) -> PseudomanifoldReport<S> {
    let d = c.top_size();
    let pure = c.is_pure() && !c.is_void() && d >= 1;
    let ridges_ok = pure && c.faces_of_size(d - 1).iter().all(|r| c.facets().iter().filter(|f| r.is_subset(**f)).count() == 2);
    let cycles = if pure { cycle_space::<S>(c) } else { Vec::new() };
    let facets = c.faces_of_size(d);
    let class = full_support_combination(&cycles, facets);
    PseudomanifoldReport {
        is_pseudomanifold: ridges_ok,
        orientable: class.is_some(),
        connected_fundamental: cycles.len() == 1 && class.is_some(),
        fundamental_class: class,
    }
}

/// Finds a combination of `basis` with every facet in its support.
fn full_support_combination<S: Scalar>(basis: &[Chain<S>], facets: &[Face]) -> Option<Chain<S>> {
    if basis.is_empty() || facets.is_empty() {
        return None;
    }
    let full = |c: &Chain<S>| facets.iter().all(|f| !c.coeff(*f).is_zero());
    if basis.len() == 1 {
        return full(&basis[0]).then(|| normalize(&basis[0], facets[0]));
    }
    // each facet must be hit by some basis vector
    if !facets.iter().all(|f| basis.iter().any(|b| !b.coeff(*f).is_zero())) {
        return None;
    }
    // try small integer combinations: exhaustive over the prime field when
    // it is tiny, otherwise a Vandermonde family (t^0, t^1, ...) in which a
    // good t exists once the field exceeds facets * basis length
    let p = S::characteristic();
    let m = basis.len() as u32;
    if p.checked_pow(m).is_some_and(|n| n <= 1 << 16) {
        let total = p.pow(m);
        for code in 1..total {
            let mut x = code;
            let mut c = Chain::zero(basis[0].face_size());
            for b in basis {
                let a = S::from_i64((x % p) as i64);
                x /= p;
                c = c.plus(&b.scale(&a));
            }
            if full(&c) {
                return Some(normalize(&c, facets[0]));
            }
        }
        return None;
    }
    for t in 1..=(facets.len() * basis.len() + 1) as i64 {
        let mut c = Chain::zero(basis[0].face_size());
        let mut w = S::one();
        for b in basis {
            c = c.plus(&b.scale(&w));
            w = w * S::from_i64(t);
        }
        if full(&c) {
            return Some(normalize(&c, facets[0]));
        }
    }
    None
}

fn normalize<S: Scalar>(c: &Chain<S>, f: Face) -> Chain<S> {
    match c.coeff(f).try_inv() {
        Some(inv) => c.scale(&inv),
        None => c.clone(),
    }
}

/// Complex generated by the faces carrying a nonzero coefficient, over the
/// label universe of `c`.
pub fn support_of_cycle<S: Scalar>(c: &SimplicialComplex, mu: &Chain<S>) -> Result<SimplicialComplex> {
    if mu.is_zero() {
        return Err(Error::Domain("support of the zero chain".into()));
    }
    SimplicialComplex::new(c.labels().to_vec(), mu.support())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Mersenne61, F2, F3, F5};
    use crate::simplicial::named;

    #[test]
    fn edge_boundary_column() {
        let e = SimplicialComplex::from_index_facets(2, &[&[0, 1]]).unwrap();
        let m = boundary_matrix::<F5>(&e, 1);
        assert_eq!(m.column(0), vec![-F5::one(), F5::one()]);
    }

    #[test]
    fn boundary_squares_to_zero() {
        for c in named::corpus_complexes() {
            for k in 1..c.top_size() {
                let a = boundary_matrix::<F5>(&c, k - 1);
                let b = boundary_matrix::<F5>(&c, k);
                assert!(a.mul(&b).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn rp2_top_rank_depends_on_characteristic() {
        let rp2 = named::rp2_6();
        assert_eq!(boundary_matrix::<F2>(&rp2, 2).rank() + 1, boundary_matrix::<F5>(&rp2, 2).rank());
        assert_eq!(reduced_betti::<F2>(&rp2), vec![0, 0, 1, 1]);
        assert_eq!(reduced_betti::<F5>(&rp2), vec![0, 0, 0, 0]);
    }

    #[test]
    fn cycle_spaces() {
        let s = named::boundary_simplex(3);
        let z = cycle_space::<F5>(&s);
        assert_eq!(z.len(), 1);
        assert!(z[0].boundary().is_zero());
        assert_eq!(z[0].support().len(), 4);
        let two = named::disjoint_triangles();
        assert_eq!(cycle_space::<F5>(&two).len(), 2);
        let rp2 = cycle_space::<F2>(&named::rp2_6());
        assert_eq!(rp2.len(), 1);
        assert!(rp2[0].terms().all(|(_, s)| *s == F2::one()));
        assert_eq!(rp2[0].support().len(), 10);
    }

    #[test]
    fn pseudomanifolds() {
        let oct = pseudomanifold_check::<Mersenne61>(&named::cross_polytope_boundary(3));
        assert!(oct.is_pseudomanifold && oct.orientable && oct.connected_fundamental);
        let rp3 = pseudomanifold_check::<F3>(&named::rp2_6());
        assert!(rp3.is_pseudomanifold && !rp3.orientable);
        let rp2 = pseudomanifold_check::<F2>(&named::rp2_6());
        assert!(rp2.orientable);
        assert_eq!(rp2.fundamental_class.unwrap().support().len(), 10);
        let path = pseudomanifold_check::<F5>(&named::path(3));
        assert!(!path.is_pseudomanifold);
        // two disjoint circles: orientable, but the class is not unique
        let two = pseudomanifold_check::<F3>(&named::disjoint_triangles());
        assert!(two.is_pseudomanifold && two.orientable && !two.connected_fundamental);
        let cls = two.fundamental_class.unwrap();
        assert_eq!(cls.support().len(), 6);
        assert!(cls.boundary().is_zero());
    }

    #[test]
    fn supports() {
        let s = named::boundary_simplex(3);
        let z = &cycle_space::<F5>(&s)[0];
        assert_eq!(support_of_cycle(&s, z).unwrap(), s);
        let single = Chain::from_terms(3, [(Face::from_vertices([0, 1, 2]), F5::one())]).unwrap();
        assert_eq!(support_of_cycle(&s, &single).unwrap().facets(), &[Face::from_vertices([0, 1, 2])]);
        assert!(support_of_cycle(&s, &Chain::<F5>::zero(3)).is_err());
        let two = named::disjoint_triangles();
        let z = cycle_space::<F5>(&two);
        assert_eq!(support_of_cycle(&two, &z[0].plus(&z[1])).unwrap(), two);
    }
}
