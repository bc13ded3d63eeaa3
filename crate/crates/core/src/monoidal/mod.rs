//! The pointwise monoidal structure on Arr(C): componentwise tensor,
//! structure isomorphisms lifted pairwise, coherence checkers, braiding and
//! symmetry, and lifted (braided) monoidal functors and monoidal natural
//! transformations.

mod coherence;
mod functor;
mod structure;

pub use coherence::{
    check_braiding_naturality, check_hexagons, check_interchange, check_pentagon, check_symmetry,
    check_triangle,
};
pub use functor::{
    check_braided_functor_cube, check_monoidal_functor_cubes, check_monoidal_nat_trans_lift,
    identity_monoidal_functor, lax_doubling_functor, lift_monoidal_functor,
    squaring_monoidal_functor, swap_monoidal_nat_trans, validate_monoidal_functor,
    validate_monoidal_nat_trans, LiftedMonoidalFunctor, MonoidalError, MonoidalFunctorData,
};
pub use structure::{tensor_arrow_morphisms, tensor_arrow_objects, MonoidalStructure};
