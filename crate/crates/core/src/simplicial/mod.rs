//! Simplicial complexes, chains and combinatorial invariants.

mod chain;
mod complex;
mod face;
pub mod named;
mod props;

pub use chain::{boundary_matrix, cycle_space, pseudomanifold_check, reduced_betti, support_of_cycle, Chain, PseudomanifoldReport};
pub use complex::{RelativeComplex, SimplicialComplex, Suspension};
pub use face::{Face, MAX_VERTICES};
pub use props::{binomial, cm_check, fhg_vectors, is_cohen_macaulay, is_m_vector, macaulay_bound, CmReport, FhgVectors};

/// Top cycles spanning a subspace of top homology.
#[derive(Clone, Debug, PartialEq)]
pub struct CycleSubspace<S> {
    pub generators: Vec<Chain<S>>,
}
