//! Standard small complexes.

use super::complex::SimplicialComplex;
use super::face::Face;

/// Boundary of the `d`-simplex: `d + 1` vertices, facets of size `d`.
pub fn boundary_simplex(d: usize) -> SimplicialComplex {
    let all = Face::from_vertices(0..=d);
    SimplicialComplex::new(labels(d + 1), all.subsets_of_size(d)).expect("valid simplex boundary")
}

/// Boundary of the `d`-dimensional cross-polytope. Vertices `2i` and
/// `2i + 1` are antipodal.
pub fn cross_polytope_boundary(d: usize) -> SimplicialComplex {
    let facets = (0..1u64 << d).map(|choice| Face::from_vertices((0..d).map(|i| 2 * i + (choice >> i & 1) as usize))).collect();
    SimplicialComplex::new(labels(2 * d), facets).expect("valid cross-polytope")
}

/// The six-vertex real projective plane.
pub fn rp2_6() -> SimplicialComplex {
    let tris: [[usize; 3]; 10] = [[1, 2, 4], [1, 2, 6], [1, 3, 5], [1, 3, 6], [1, 4, 5], [2, 3, 4], [2, 3, 5], [2, 5, 6], [3, 4, 6], [4, 5, 6]];
    let facets = tris.iter().map(|t| Face::from_vertices(t.iter().map(|v| v - 1))).collect();
    SimplicialComplex::new((1..=6).map(|i| i.to_string()).collect(), facets).expect("valid RP2")
}

/// Cycle graph on `m` vertices.
pub fn polygon(m: usize) -> SimplicialComplex {
    let facets = (0..m).map(|i| Face::from_vertices([i, (i + 1) % m])).collect();
    SimplicialComplex::new(labels(m), facets).expect("valid polygon")
}

/// Suspension of an `m`-gon.
pub fn bipyramid(m: usize) -> SimplicialComplex {
    polygon(m).suspension().complex
}

/// Two vertex-disjoint triangle boundaries.
pub fn disjoint_triangles() -> SimplicialComplex {
    boundary_simplex(2).disjoint_union(&boundary_simplex(2)).expect("six vertices")
}

/// Two vertex-disjoint tetrahedron boundaries.
pub fn disjoint_spheres() -> SimplicialComplex {
    boundary_simplex(3).disjoint_union(&boundary_simplex(3)).expect("eight vertices")
}

pub fn cone_over_triangle() -> SimplicialComplex {
    boundary_simplex(2).cone("apex").0
}

/// Path graph with `n` vertices.
pub fn path(n: usize) -> SimplicialComplex {
    let facets = (0..n.saturating_sub(1)).map(|i| Face::from_vertices([i, i + 1])).collect();
    SimplicialComplex::new(labels(n), facets).expect("valid path")
}

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Small complexes used by property tests.
pub fn corpus_complexes() -> Vec<SimplicialComplex> {
    let mut out: Vec<SimplicialComplex> = (1..=5).map(boundary_simplex).collect();
    out.extend((2..=4).map(cross_polytope_boundary));
    out.extend([rp2_6(), bipyramid(5), disjoint_triangles(), disjoint_spheres(), cone_over_triangle(), path(4)]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::F2;
    use crate::simplicial::chain::reduced_betti;

    #[test]
    fn rp2_edges_have_degree_two() {
        let r = rp2_6();
        assert_eq!(r.faces_of_size(2).len(), 15);
        for e in r.faces_of_size(2) {
            assert_eq!(r.facets().iter().filter(|f| e.is_subset(**f)).count(), 2);
        }
    }

    #[test]
    fn suspension_shifts_homology() {
        for c in corpus_complexes() {
            if c.universe() > 12 {
                continue;
            }
            let b = reduced_betti::<F2>(&c);
            let s = reduced_betti::<F2>(&c.suspension().complex);
            assert_eq!(s[0], 0);
            assert_eq!(&s[1..], &b[..]);
        }
    }

    #[test]
    fn sizes() {
        assert_eq!(boundary_simplex(5).facets().len(), 6);
        assert_eq!(cross_polytope_boundary(4).facets().len(), 16);
        assert_eq!(bipyramid(5).facets().len(), 10);
        assert_eq!(path(3).facets().len(), 2);
    }
}
