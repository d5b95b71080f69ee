use serde::Serialize;

use super::artinian::ArtinianAlgebra;
use super::monomial::FaceMonomial;
use crate::arith::{Matrix, Scalar};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocleReport {
    /// `dims[k]` is the dimension of the socle in degree `k`.
    pub dims: Vec<usize>,
    /// Socle concentrated in a single degree.
    pub is_level: bool,
}

/// Elements killed by every variable, degree by degree.
pub fn socle<S: Scalar>(alg: &ArtinianAlgebra<S>) -> Result<SocleReport> {
    let d = alg.d();
    let verts: Vec<usize> = alg.complex().vertex_set().vertices().collect();
    let mut dims = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let n = alg.dim(k);
        if k == d || n == 0 {
            dims.push(n);
            continue;
        }
        let mut stacked = Matrix::zeros(n, 0);
        for &v in &verts {
            let m = alg.multiplication_matrix(k, &alg.reduce_monomial(&FaceMonomial::var(v)))?;
            stacked = stacked.hstack(&m)?;
        }
        dims.push(n - stacked.rank());
    }
    let is_level = dims.iter().filter(|&&x| x > 0).count() <= 1;
    Ok(SocleReport { dims, is_level })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Gf2_63, Mersenne61};
    use crate::ring::generic_coords;
    use crate::simplicial::{named, SimplicialComplex};

    fn report<S: crate::arith::FiniteField>(c: &SimplicialComplex) -> SocleReport {
        let a = ArtinianAlgebra::new(c.clone(), generic_coords::<S>(c.top_size(), c.universe(), 7, 0), c.top_size()).unwrap();
        socle(&a).unwrap()
    }

    #[test]
    fn spheres_have_one_dimensional_socle() {
        let r = report::<Mersenne61>(&named::cross_polytope_boundary(3));
        assert_eq!(r.dims, vec![0, 0, 0, 1]);
        assert!(r.is_level);
    }

    #[test]
    fn path_is_level() {
        // h = (1, 2, 0), so all of A^1 is socle
        let r = report::<Mersenne61>(&named::path(4));
        assert_eq!(r.dims, vec![0, 2, 0]);
        assert!(r.is_level);
    }

    #[test]
    fn homology_shows_up_in_the_socle() {
        // Buchsbaum socle: C(d, j) copies of reduced homology in degree j - 1
        let r = report::<Mersenne61>(&named::disjoint_spheres());
        assert!(!r.is_level);
        assert_eq!(r.dims, vec![0, 3, 0, 2]);
        let r2 = report::<Gf2_63>(&named::rp2_6());
        assert_eq!(r2.dims[3], 1);
    }
}
