//! Internal algebra objects in the arrow category: structure morphisms of
//! (co)monoids, bialgebras, Frobenius structures and Hopf algebras, lifted
//! to commuting squares, with the full axiom suites checked as composite
//! square equalities.

mod arrow;
mod checks;
mod data;

pub use arrow::{
    check_arrow_bialgebra, check_arrow_comonoid, check_arrow_dagger_frobenius,
    check_arrow_frobenius, check_arrow_hopf, check_arrow_monoid, make_arrow_algebra, ArrowAlgebra,
};
pub use checks::{
    check_bialgebra_ambient, check_comonoid, check_monoid, check_unit_axioms,
    is_structure_morphism, StructureKind,
};
pub use data::{basis_copying, AlgebraData, AlgebraError, AlgebraFlags};
