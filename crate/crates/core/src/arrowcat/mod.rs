//! The arrow category Arr(C) of a concrete category: objects are morphisms
//! of C, morphisms are commuting squares, and functors, natural
//! transformations, equivalences and daggers all lift from C componentwise.

mod dagger;
mod equivalence;
mod functor;
mod morphism;
mod nat;
mod object;
mod sample;

pub use dagger::{arrow_dagger, dagger_morphism};
pub use equivalence::{check_equivalence, EquivalenceReport};
pub use functor::{
    conjugation_family, conjugation_functor, identity_functor, lift_functor, squaring_functor,
    transpose_functor, validate_functor, ArrowFunctor, FunctorData, Variance,
};
pub use morphism::{arrow_compose, arrow_id, ArrowError, ArrowMorphism};
pub(crate) use morphism::compose_chain;
pub use nat::{
    check_naturality_cube, check_naturality_cubes_sampled, identity_nat_trans, lift_nat_trans,
    scalar_nat_trans, validate_nat_trans, ArrowNatTrans, NatTransData,
};
pub use object::ArrowObject;
pub use sample::{
    random_arrow_iso, random_arrow_morphism, random_arrow_object, random_square_from,
    random_square_over, random_square_to, random_unitary_square, rank_profile_square,
};
