//! Rigid structure on the arrow category: duals exist exactly for the
//! invertible objects, with evaluation and coevaluation lifted pairwise.
//! On the core this extends to a pivotal and in fact ribbon structure.

mod data;
mod ribbon;
mod rigid;

pub use data::{DualityData, PivotTwistData};
pub use ribbon::{
    check_pivot_monoidal, check_pivot_naturality, check_twist_axioms, pivot_arrow, twist_arrow,
};
pub use rigid::{
    assemble_arrow_dual, check_snake_arrow, dual_solvability_oracle, dualize_morphism, has_dual,
    inverse_from_duality, make_arrow_dual, ArrowDual, DualError, DualSolvability,
};
