//! Ambient rigid, pivotal and ribbon data held by a concrete category.

use crate::exactmat::{Rat, RatMatrix};
use std::sync::Arc;

pub type ObjectDual = Arc<dyn Fn(usize) -> usize + Send + Sync>;
pub type CupCapSupplier = Arc<dyn Fn(usize) -> RatMatrix + Send + Sync>;

/// Dual objects with evaluation `d_A: A* (x) A -> I` and coevaluation
/// `b_A: I -> A (x) A*`.
#[derive(Clone)]
pub struct DualityData {
    dual_object: ObjectDual,
    eval: CupCapSupplier,
    coeval: CupCapSupplier,
}

impl DualityData {
    pub fn new(dual_object: ObjectDual, eval: CupCapSupplier, coeval: CupCapSupplier) -> Self {
        DualityData {
            dual_object,
            eval,
            coeval,
        }
    }

    /// The standard basis cup and cap on Mat(Q): `A* = A`,
    /// `d_A(e_i (x) e_j) = delta_ij` and `b_A = sum_i e_i (x) e_i`.
    pub fn standard_mat() -> Self {
        DualityData {
            dual_object: Arc::new(|n| n),
            eval: Arc::new(|n| {
                let mut d = RatMatrix::zeros(1, n * n);
                for i in 0..n {
                    d.set(0, i * n + i, Rat::one());
                }
                d
            }),
            coeval: Arc::new(|n| {
                let mut b = RatMatrix::zeros(n * n, 1);
                for i in 0..n {
                    b.set(i * n + i, 0, Rat::one());
                }
                b
            }),
        }
    }

    pub fn dual_object(&self, obj: usize) -> usize {
        (self.dual_object)(obj)
    }

    /// `d_A: A* (x) A -> I`.
    pub fn eval(&self, obj: usize) -> RatMatrix {
        (self.eval)(obj)
    }

    /// `b_A: I -> A (x) A*`.
    pub fn coeval(&self, obj: usize) -> RatMatrix {
        (self.coeval)(obj)
    }

    pub fn with_eval(mut self, eval: CupCapSupplier) -> Self {
        self.eval = eval;
        self
    }

    pub fn with_coeval(mut self, coeval: CupCapSupplier) -> Self {
        self.coeval = coeval;
        self
    }
}

impl std::fmt::Debug for DualityData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DualityData")
    }
}

/// Pivot `pi_A: A -> A**` and twist `theta_A: A -> A` suppliers.
#[derive(Clone)]
pub struct PivotTwistData {
    pivot: CupCapSupplier,
    twist: CupCapSupplier,
}

impl PivotTwistData {
    pub fn new(pivot: CupCapSupplier, twist: CupCapSupplier) -> Self {
        PivotTwistData { pivot, twist }
    }

    /// In Mat the double dual is the identity on the nose, so both the pivot
    /// and the twist are identity matrices.
    pub fn identity_mat() -> Self {
        PivotTwistData {
            pivot: Arc::new(RatMatrix::identity),
            twist: Arc::new(RatMatrix::identity),
        }
    }

    pub fn pivot(&self, obj: usize) -> RatMatrix {
        (self.pivot)(obj)
    }

    pub fn twist(&self, obj: usize) -> RatMatrix {
        (self.twist)(obj)
    }

    pub fn with_pivot(mut self, pivot: CupCapSupplier) -> Self {
        self.pivot = pivot;
        self
    }

    pub fn with_twist(mut self, twist: CupCapSupplier) -> Self {
        self.twist = twist;
        self
    }
}

impl std::fmt::Debug for PivotTwistData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PivotTwistData")
    }
}
