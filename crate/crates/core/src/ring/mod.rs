//! Artinian reductions of face rings, degree maps and Gorenstein quotients.

mod artinian;
mod coords;
mod degree;
mod gorenstein;
mod ideal;
mod monomial;
mod socle;

pub use artinian::{AlgebraElement, ArtinianAlgebra, GradedPiece};
pub use coords::{generic_coords, symbolic_coords, CoordMatrix, CoordMode};
pub use degree::{chart_degree, lee_square_degree, ConsistencyWitness, DegreeFunctional};
pub use gorenstein::GorensteinAlgebra;
pub use ideal::{embed, IdealBasis};
pub use monomial::{monomials_of_degree, FaceMonomial};
pub use socle::{socle, SocleReport};
