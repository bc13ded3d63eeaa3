//! Exact-arithmetic construction of arrow categories over concrete matrix
//! categories, together with checkers for every structure those categories
//! inherit: monoidal products, braidings and symmetry, duals and snake
//! identities, pivots and ribbon twists, and monoid / bialgebra / Frobenius /
//! Hopf objects.
//!
//! All morphisms are dense matrices of arbitrary-precision rationals and all
//! law checks are literal entrywise equalities; nothing in this crate ever
//! rounds.

pub mod algebra;
pub mod arrowcat;
pub mod duality;
pub mod exactmat;
pub mod monoidal;
pub mod verdict;

pub use exactmat::{Rat, RatMatrix};
pub use verdict::{LawFailure, Verdict, Witness};
