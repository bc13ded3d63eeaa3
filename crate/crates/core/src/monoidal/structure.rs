//! The pointwise monoidal structure on an arrow category.
//!
//! Tensor on objects is the ambient tensor of the underlying morphisms; on
//! squares it is componentwise. Every structure morphism (associator,
//! unitors, braiding) is the pair of the ambient components and is validated
//! as a commuting square at construction, never assumed.

use crate::arrowcat::{arrow_id, ArrowError, ArrowMorphism, ArrowObject};
use crate::exactmat::{invert, ConcreteCategory, RatMatrix};
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct MonoidalStructure {
    cat: Arc<ConcreteCategory>,
}

impl MonoidalStructure {
    pub fn new(cat: ConcreteCategory) -> Self {
        MonoidalStructure { cat: Arc::new(cat) }
    }

    pub fn category(&self) -> &ConcreteCategory {
        &self.cat
    }

    /// The unit object of Arr(C): the identity on the ambient unit.
    pub fn unit_arrow(&self) -> ArrowObject {
        ArrowObject::unit(&self.cat)
    }

    /// The identity morphism on the unit arrow object.
    pub fn unit_id(&self) -> ArrowMorphism {
        arrow_id(&self.unit_arrow())
    }

    /// `f (x) g` on arrow objects: the ambient tensor of the two maps.
    pub fn tensor_objects(&self, f: &ArrowObject, g: &ArrowObject) -> ArrowObject {
        let map = self.cat.tensor_morphism(f.map(), g.map());
        ArrowObject::new(
            &self.cat,
            self.cat.tensor_object(f.src(), g.src()),
            self.cat.tensor_object(f.dst(), g.dst()),
            map,
        )
        .expect("tensor of admitted morphisms is admitted")
    }

    /// Componentwise tensor of squares. The result is re-validated; a broken
    /// square here would mean the ambient tensor is not functorial.
    pub fn tensor_morphisms(
        &self,
        phi: &ArrowMorphism,
        psi: &ArrowMorphism,
    ) -> Result<ArrowMorphism, ArrowError> {
        ArrowMorphism::new(
            self.tensor_objects(phi.source(), psi.source()),
            self.tensor_objects(phi.target(), psi.target()),
            self.cat.tensor_morphism(phi.top(), psi.top()),
            self.cat.tensor_morphism(phi.bottom(), psi.bottom()),
        )
    }

    /// `alpha_{f1,f2,f3}: (f1 (x) f2) (x) f3 -> f1 (x) (f2 (x) f3)`, the
    /// pair of ambient associators.
    pub fn associator(
        &self,
        f1: &ArrowObject,
        f2: &ArrowObject,
        f3: &ArrowObject,
    ) -> Result<ArrowMorphism, ArrowError> {
        let source = self.tensor_objects(&self.tensor_objects(f1, f2), f3);
        let target = self.tensor_objects(f1, &self.tensor_objects(f2, f3));
        ArrowMorphism::new(
            source,
            target,
            self.cat.associator(f1.src(), f2.src(), f3.src()),
            self.cat.associator(f1.dst(), f2.dst(), f3.dst()),
        )
    }

    pub fn associator_inv(
        &self,
        f1: &ArrowObject,
        f2: &ArrowObject,
        f3: &ArrowObject,
    ) -> Result<ArrowMorphism, ArrowError> {
        let source = self.tensor_objects(f1, &self.tensor_objects(f2, f3));
        let target = self.tensor_objects(&self.tensor_objects(f1, f2), f3);
        ArrowMorphism::new(
            source,
            target,
            invert_structure(self.cat.associator(f1.src(), f2.src(), f3.src()))?,
            invert_structure(self.cat.associator(f1.dst(), f2.dst(), f3.dst()))?,
        )
    }

    /// `lambda_f: id_I (x) f -> f`.
    pub fn left_unitor(&self, f: &ArrowObject) -> Result<ArrowMorphism, ArrowError> {
        let source = self.tensor_objects(&self.unit_arrow(), f);
        ArrowMorphism::new(
            source,
            f.clone(),
            self.cat.left_unitor(f.src()),
            self.cat.left_unitor(f.dst()),
        )
    }

    pub fn left_unitor_inv(&self, f: &ArrowObject) -> Result<ArrowMorphism, ArrowError> {
        let target = self.tensor_objects(&self.unit_arrow(), f);
        ArrowMorphism::new(
            f.clone(),
            target,
            invert_structure(self.cat.left_unitor(f.src()))?,
            invert_structure(self.cat.left_unitor(f.dst()))?,
        )
    }

    /// `rho_f: f (x) id_I -> f`.
    pub fn right_unitor(&self, f: &ArrowObject) -> Result<ArrowMorphism, ArrowError> {
        let source = self.tensor_objects(f, &self.unit_arrow());
        ArrowMorphism::new(
            source,
            f.clone(),
            self.cat.right_unitor(f.src()),
            self.cat.right_unitor(f.dst()),
        )
    }

    pub fn right_unitor_inv(&self, f: &ArrowObject) -> Result<ArrowMorphism, ArrowError> {
        let target = self.tensor_objects(f, &self.unit_arrow());
        ArrowMorphism::new(
            f.clone(),
            target,
            invert_structure(self.cat.right_unitor(f.src()))?,
            invert_structure(self.cat.right_unitor(f.dst()))?,
        )
    }

    pub fn has_braiding(&self) -> bool {
        self.cat.has_braiding()
    }

    /// `sigma_{f,g} = (sigma_{A,C}, sigma_{B,D}): f (x) g -> g (x) f`.
    /// The square condition is exactly naturality of the ambient braiding.
    pub fn braiding(
        &self,
        f: &ArrowObject,
        g: &ArrowObject,
    ) -> Result<ArrowMorphism, ArrowError> {
        let top = self.cat.braiding(f.src(), g.src()).ok_or_else(|| {
            ArrowError::NotAdmitted(format!("{:?} has no braiding", self.cat.tag()))
        })?;
        let bottom = self.cat.braiding(f.dst(), g.dst()).ok_or_else(|| {
            ArrowError::NotAdmitted(format!("{:?} has no braiding", self.cat.tag()))
        })?;
        ArrowMorphism::new(
            self.tensor_objects(f, g),
            self.tensor_objects(g, f),
            top,
            bottom,
        )
    }
}

fn invert_structure(m: RatMatrix) -> Result<RatMatrix, ArrowError> {
    invert(&m).map_err(|e| ArrowError::NotAdmitted(format!("structure morphism not invertible: {e}")))
}

/// Free function form of the object tensor, mirroring the operation list.
pub fn tensor_arrow_objects(
    ms: &MonoidalStructure,
    f: &ArrowObject,
    g: &ArrowObject,
) -> ArrowObject {
    ms.tensor_objects(f, g)
}

/// Free function form of the morphism tensor.
pub fn tensor_arrow_morphisms(
    ms: &MonoidalStructure,
    phi: &ArrowMorphism,
    psi: &ArrowMorphism,
) -> Result<ArrowMorphism, ArrowError> {
    ms.tensor_morphisms(phi, psi)
}
