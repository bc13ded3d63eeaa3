//! Concrete category instances: which matrices are admitted and which
//! monoidal, braiding, duality, pivot and twist data they carry.
//!
//! All structure morphisms are held as suppliers. The Mat instances are
//! strict (associators and unitors are identity matrices), but checkers only
//! ever go through the suppliers, so corrupted suppliers injected here reach
//! every downstream law unchanged. That is how the negative controls work.

use super::matrix::{commutation_matrix, kronecker, RatMatrix};
use crate::duality::{DualityData, PivotTwistData};
use std::fmt;
use std::sync::Arc;

pub type ObjectPredicate = Arc<dyn Fn(usize) -> bool + Send + Sync>;
pub type MorphismPredicate = Arc<dyn Fn(&RatMatrix) -> bool + Send + Sync>;
pub type ObjectTensor = Arc<dyn Fn(usize, usize) -> usize + Send + Sync>;
pub type UnitorSupplier = Arc<dyn Fn(usize) -> RatMatrix + Send + Sync>;
pub type BraidingSupplier = Arc<dyn Fn(usize, usize) -> RatMatrix + Send + Sync>;
pub type AssociatorSupplier = Arc<dyn Fn(usize, usize, usize) -> RatMatrix + Send + Sync>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CategoryTag {
    MatN,
    MatQ,
    MatQCore,
    MatQUnitary,
    GroupAlg(String),
}

impl fmt::Display for CategoryTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CategoryTag::MatN => write!(f, "Mat(N)"),
            CategoryTag::MatQ => write!(f, "Mat(Q)"),
            CategoryTag::MatQCore => write!(f, "Mat(Q)_core"),
            CategoryTag::MatQUnitary => write!(f, "Mat(Q)_unitary"),
            CategoryTag::GroupAlg(g) => write!(f, "Mat(Q)[{g}]"),
        }
    }
}

#[derive(Clone)]
pub struct ConcreteCategory {
    tag: CategoryTag,
    object_admits: ObjectPredicate,
    morphism_admits: MorphismPredicate,
    unit_object: usize,
    tensor_obj: ObjectTensor,
    associator: AssociatorSupplier,
    left_unitor: UnitorSupplier,
    right_unitor: UnitorSupplier,
    braiding: Option<BraidingSupplier>,
    duality: Option<DualityData>,
    pivot_twist: Option<PivotTwistData>,
}

impl fmt::Debug for ConcreteCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ConcreteCategory({})", self.tag)
    }
}

fn strict_mat_base(tag: CategoryTag, morphism_admits: MorphismPredicate) -> ConcreteCategory {
    ConcreteCategory {
        tag,
        object_admits: Arc::new(|n| n >= 1),
        morphism_admits,
        unit_object: 1,
        tensor_obj: Arc::new(|a, b| a * b),
        associator: Arc::new(|a, b, c| RatMatrix::identity(a * b * c)),
        left_unitor: Arc::new(RatMatrix::identity),
        right_unitor: Arc::new(RatMatrix::identity),
        braiding: Some(Arc::new(commutation_matrix)),
        duality: None,
        pivot_twist: None,
    }
}

impl ConcreteCategory {
    /// Matrices over the naturals: entries are non-negative integers.
    pub fn mat_n() -> Self {
        strict_mat_base(CategoryTag::MatN, Arc::new(RatMatrix::has_natural_entries))
    }

    /// All rational matrices, with the standard cup/cap rigid structure.
    pub fn mat_q() -> Self {
        let mut cat = strict_mat_base(CategoryTag::MatQ, Arc::new(|_| true));
        cat.duality = Some(DualityData::standard_mat());
        cat
    }

    /// The core: all objects, only the invertible matrices.
    pub fn mat_q_core() -> Self {
        let mut cat = strict_mat_base(CategoryTag::MatQCore, Arc::new(RatMatrix::is_invertible));
        cat.duality = Some(DualityData::standard_mat());
        cat.pivot_twist = Some(PivotTwistData::identity_mat());
        cat
    }

    /// The unitary subcategory: matrices with `M^T = M^{-1}`.
    pub fn mat_q_unitary() -> Self {
        strict_mat_base(CategoryTag::MatQUnitary, Arc::new(RatMatrix::is_orthogonal))
    }

    /// Mat(Q) tagged as the ambient category of a group-algebra fixture.
    pub fn group_alg(group_name: impl Into<String>) -> Self {
        let mut cat = strict_mat_base(CategoryTag::GroupAlg(group_name.into()), Arc::new(|_| true));
        cat.duality = Some(DualityData::standard_mat());
        cat
    }

    pub fn tag(&self) -> &CategoryTag {
        &self.tag
    }

    pub fn admits_object(&self, dim: usize) -> bool {
        (self.object_admits)(dim)
    }

    pub fn admits_morphism(&self, m: &RatMatrix) -> bool {
        (self.morphism_admits)(m)
    }

    pub fn unit_object(&self) -> usize {
        self.unit_object
    }

    pub fn tensor_object(&self, a: usize, b: usize) -> usize {
        (self.tensor_obj)(a, b)
    }

    /// `alpha_{a,b,c}: (a (x) b) (x) c -> a (x) (b (x) c)`.
    pub fn associator(&self, a: usize, b: usize, c: usize) -> RatMatrix {
        (self.associator)(a, b, c)
    }

    /// `lambda_a: I (x) a -> a`.
    pub fn left_unitor(&self, a: usize) -> RatMatrix {
        (self.left_unitor)(a)
    }

    /// `rho_a: a (x) I -> a`.
    pub fn right_unitor(&self, a: usize) -> RatMatrix {
        (self.right_unitor)(a)
    }

    /// `sigma_{a,b}: a (x) b -> b (x) a`, when the instance is braided.
    pub fn braiding(&self, a: usize, b: usize) -> Option<RatMatrix> {
        self.braiding.as_ref().map(|s| s(a, b))
    }

    pub fn has_braiding(&self) -> bool {
        self.braiding.is_some()
    }

    pub fn duality(&self) -> Option<&DualityData> {
        self.duality.as_ref()
    }

    pub fn pivot_twist(&self) -> Option<&PivotTwistData> {
        self.pivot_twist.as_ref()
    }

    // Corruption hooks for negative controls. A corrupted instance is
    // deliberately broken; the suites assert that the checkers notice.

    pub fn with_associator(mut self, supplier: AssociatorSupplier) -> Self {
        self.associator = supplier;
        self
    }

    pub fn with_left_unitor(mut self, supplier: UnitorSupplier) -> Self {
        self.left_unitor = supplier;
        self
    }

    pub fn with_right_unitor(mut self, supplier: UnitorSupplier) -> Self {
        self.right_unitor = supplier;
        self
    }

    pub fn with_braiding(mut self, supplier: BraidingSupplier) -> Self {
        self.braiding = Some(supplier);
        self
    }

    pub fn with_duality(mut self, duality: DualityData) -> Self {
        self.duality = Some(duality);
        self
    }

    pub fn with_pivot_twist(mut self, data: PivotTwistData) -> Self {
        self.pivot_twist = Some(data);
        self
    }

    /// Kronecker product of admitted morphisms; the tensor on morphisms for
    /// every Mat instance.
    pub fn tensor_morphism(&self, m: &RatMatrix, n: &RatMatrix) -> RatMatrix {
        kronecker(m, n)
    }
}
