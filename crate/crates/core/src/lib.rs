//! Exact computations with finite-dimensional Hopf algebras and Hopf
//! group-(co)algebras over ℚ and prime fields.
//!
//! Structures are given by structure constants (see [`hopf`] for the matrix
//! layout). Every axiom check is an exact matrix identity and returns a
//! [`VerificationReport`] naming each axiom with a witness on failure.
//!
//! Prime fields matter here: a finite-dimensional Hopf algebra in characteristic
//! zero has no nonzero primitive elements, so the interesting instances of
//! primitives and indecomposables live over 𝔽p or in the super (ℤ₂-graded) setting.

pub mod error;
pub mod group;
pub mod hopf;
pub mod lie;
pub mod linalg;
pub mod primitives;
pub mod report;
pub mod schema;
pub mod turaev;
pub mod zoo;

pub use error::HopfError;
pub use group::{check_group, FiniteGroup};
pub use hopf::{
    check_algebra, check_bialgebra, check_coalgebra, check_hopf, convolution, coopposite, dual_hopf, left_integrals,
    opposite, solve_antipode, AlgebraSC, BialgebraSC, Carrier, CoalgebraSC, HopfAlgebraSC,
};
pub use lie::{
    check_lie, check_lie_coalgebra, cocommutator_lie_coalgebra, commutator_lie, dual_lie, lie_morphism_check,
    FamilyOfLieAlgebras, FamilyOfLieCoalgebras, LieAlgebraSC, LieCoalgebraSC,
};
pub use linalg::{FieldSpec, Matrix, Parity, ParityVector, QuotientSpace, Scalar, Subspace};
pub use primitives::{
    indecomposables, michaelis_verify, primitives, IndecomposableSpace, MichaelisCertificate, PrimitiveSpace,
};
pub use report::{AxiomResult, VerificationReport, Witness};
pub use turaev::{
    check_hopf_group_algebra, check_hopf_group_coalgebra, dagger, dagger_of_coalgebra, g_indecomposables, g_primitives,
    group_michaelis_verify, mich_tur1_verify, total_hopf, GIndecomposableSpace, GPrimitiveSpace,
    GroupMichaelisCertificate, HopfGroupAlgebra, HopfGroupCoalgebra, MichTur1Certificate,
};
