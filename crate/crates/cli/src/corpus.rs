//! Bundled complexes.

use facering::simplicial::{named, SimplicialComplex};

pub struct CorpusEntry {
    pub name: &'static str,
    pub description: &'static str,
    /// Homology sphere over every field.
    pub sphere: bool,
    pub build: fn() -> SimplicialComplex,
}

pub fn corpus() -> Vec<CorpusEntry> {
    vec![
        CorpusEntry { name: "boundary-simplex-1", description: "two points", sphere: true, build: || named::boundary_simplex(1) },
        CorpusEntry { name: "boundary-simplex-2", description: "triangle", sphere: true, build: || named::boundary_simplex(2) },
        CorpusEntry { name: "boundary-simplex-3", description: "tetrahedron boundary", sphere: true, build: || named::boundary_simplex(3) },
        CorpusEntry { name: "boundary-simplex-4", description: "boundary of the 4-simplex", sphere: true, build: || named::boundary_simplex(4) },
        CorpusEntry { name: "boundary-simplex-5", description: "boundary of the 5-simplex", sphere: true, build: || named::boundary_simplex(5) },
        CorpusEntry { name: "cross-polytope-2", description: "square", sphere: true, build: || named::cross_polytope_boundary(2) },
        CorpusEntry { name: "cross-polytope-3", description: "octahedron", sphere: true, build: || named::cross_polytope_boundary(3) },
        CorpusEntry { name: "cross-polytope-4", description: "boundary of the 16-cell", sphere: true, build: || named::cross_polytope_boundary(4) },
        CorpusEntry { name: "bipyramid-5", description: "suspension of a pentagon", sphere: true, build: || named::bipyramid(5) },
        CorpusEntry { name: "rp2-6", description: "six-vertex real projective plane", sphere: false, build: named::rp2_6 },
        CorpusEntry { name: "disjoint-spheres", description: "two disjoint tetrahedron boundaries", sphere: false, build: named::disjoint_spheres },
        CorpusEntry { name: "disjoint-triangles", description: "two disjoint triangles", sphere: false, build: named::disjoint_triangles },
        CorpusEntry { name: "cone", description: "cone over a triangle", sphere: false, build: named::cone_over_triangle },
        CorpusEntry { name: "path-4", description: "path with four vertices", sphere: false, build: || named::path(4) },
    ]
}

pub fn lookup(name: &str) -> Option<CorpusEntry> {
    corpus().into_iter().find(|e| e.name == name)
}
