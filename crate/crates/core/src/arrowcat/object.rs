//! Objects of Arr(C): triples of a source object, a target object and an
//! admitted morphism between them.

use super::morphism::ArrowError;
use crate::exactmat::{ConcreteCategory, RatMatrix};
use std::fmt;

/// An object `(src, dst, map)` of the arrow category: the morphism
/// `map: src -> dst` of the ambient category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowObject {
    src: usize,
    dst: usize,
    map: RatMatrix,
}

impl ArrowObject {
    /// Validates the shape convention (`map` is `dst x src`) and that the
    /// ambient category admits both objects and the morphism.
    pub fn new(
        cat: &ConcreteCategory,
        src: usize,
        dst: usize,
        map: RatMatrix,
    ) -> Result<Self, ArrowError> {
        if map.src_dim() != src || map.dst_dim() != dst {
            return Err(ArrowError::ShapeMismatch(format!(
                "map for {src} -> {dst} must be {dst}x{src}, got {}x{}",
                map.rows(),
                map.cols()
            )));
        }
        if !cat.admits_object(src) || !cat.admits_object(dst) {
            return Err(ArrowError::NotAdmitted(format!(
                "objects {src}, {dst} not both admitted by {:?}",
                cat.tag()
            )));
        }
        if !cat.admits_morphism(&map) {
            return Err(ArrowError::NotAdmitted(format!(
                "morphism {map} not admitted by {:?}",
                cat.tag()
            )));
        }
        Ok(ArrowObject { src, dst, map })
    }

    /// Infers source and target from the matrix shape.
    pub fn from_map(cat: &ConcreteCategory, map: RatMatrix) -> Result<Self, ArrowError> {
        Self::new(cat, map.src_dim(), map.dst_dim(), map)
    }

    /// The unit object of Arr(C): the identity on the ambient tensor unit.
    pub fn unit(cat: &ConcreteCategory) -> Self {
        let unit = cat.unit_object();
        ArrowObject {
            src: unit,
            dst: unit,
            map: RatMatrix::identity(unit),
        }
    }

    /// The identity morphism on `obj`, viewed as an arrow object.
    pub fn identity_on(cat: &ConcreteCategory, obj: usize) -> Result<Self, ArrowError> {
        Self::new(cat, obj, obj, RatMatrix::identity(obj))
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    pub fn map(&self) -> &RatMatrix {
        &self.map
    }
}

impl fmt::Display for ArrowObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {}", self.map, self.src, self.dst)
    }
}
