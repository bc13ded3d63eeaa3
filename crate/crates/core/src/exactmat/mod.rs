//! Exact rational linear algebra and the concrete matrix categories on which
//! all law suites run.

mod category;
mod group;
mod matrix;
mod rational;
mod rng;

pub use category::{CategoryTag, ConcreteCategory};
pub use group::{group_algebra, hom_matrix, GroupError, GroupPresentation};
pub use matrix::{
    commutation_matrix, compose, invert, kronecker, solve_exact, LinearSolution, MatError,
    RatMatrix,
};
pub use rational::{ParseRatError, Rat};
pub use rng::{
    random_instance, random_int_matrix, random_invertible, random_nat_matrix, random_orthogonal,
    random_permutation, GenError, GeneratorKind, Instance, Rng, SizeBounds,
};
