//! Morphisms of Arr(C): pairs of ambient morphisms forming a commuting
//! square. Squares are validated eagerly at construction, so everything
//! downstream may assume validity.

use super::object::ArrowObject;
use crate::exactmat::{compose, RatMatrix};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArrowError {
    ShapeMismatch(String),
    NotAdmitted(String),
    /// The defining square `target.map . top = bottom . source.map` fails.
    SquareBroken(String),
    NotComposable(String),
    NotUnitary(String),
    NotAFunctor(String),
    NotNatural(String),
}

impl fmt::Display for ArrowError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrowError::ShapeMismatch(s) => write!(f, "shape mismatch: {s}"),
            ArrowError::NotAdmitted(s) => write!(f, "not admitted: {s}"),
            ArrowError::SquareBroken(s) => write!(f, "square does not commute: {s}"),
            ArrowError::NotComposable(s) => write!(f, "not composable: {s}"),
            ArrowError::NotUnitary(s) => write!(f, "not unitary: {s}"),
            ArrowError::NotAFunctor(s) => write!(f, "not a functor: {s}"),
            ArrowError::NotNatural(s) => write!(f, "not natural: {s}"),
        }
    }
}

impl std::error::Error for ArrowError {}

/// A morphism `(top, bottom): source -> target` in Arr(C).
///
/// `top` maps the sources, `bottom` maps the targets, and construction
/// verified `target.map . top = bottom . source.map` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowMorphism {
    source: ArrowObject,
    target: ArrowObject,
    top: RatMatrix,
    bottom: RatMatrix,
}

impl ArrowMorphism {
    pub fn new(
        source: ArrowObject,
        target: ArrowObject,
        top: RatMatrix,
        bottom: RatMatrix,
    ) -> Result<Self, ArrowError> {
        if top.src_dim() != source.src() || top.dst_dim() != target.src() {
            return Err(ArrowError::ShapeMismatch(format!(
                "top must be a map {} -> {}, got {}x{}",
                source.src(),
                target.src(),
                top.rows(),
                top.cols()
            )));
        }
        if bottom.src_dim() != source.dst() || bottom.dst_dim() != target.dst() {
            return Err(ArrowError::ShapeMismatch(format!(
                "bottom must be a map {} -> {}, got {}x{}",
                source.dst(),
                target.dst(),
                bottom.rows(),
                bottom.cols()
            )));
        }
        let via_top = compose(target.map(), &top)
            .map_err(|e| ArrowError::ShapeMismatch(e.to_string()))?;
        let via_bottom = compose(&bottom, source.map())
            .map_err(|e| ArrowError::ShapeMismatch(e.to_string()))?;
        if via_top != via_bottom {
            return Err(ArrowError::SquareBroken(format!(
                "target.map . top = {via_top} but bottom . source.map = {via_bottom}"
            )));
        }
        Ok(ArrowMorphism {
            source,
            target,
            top,
            bottom,
        })
    }

    pub fn source(&self) -> &ArrowObject {
        &self.source
    }

    pub fn target(&self) -> &ArrowObject {
        &self.target
    }

    pub fn top(&self) -> &RatMatrix {
        &self.top
    }

    pub fn bottom(&self) -> &RatMatrix {
        &self.bottom
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source == self.target
    }

    pub fn components_invertible(&self) -> bool {
        self.top.is_invertible() && self.bottom.is_invertible()
    }

    /// Componentwise inverse; defined exactly when both components invert.
    pub fn inverse(&self) -> Result<ArrowMorphism, ArrowError> {
        let top = crate::exactmat::invert(&self.top)
            .map_err(|e| ArrowError::NotComposable(format!("top not invertible: {e}")))?;
        let bottom = crate::exactmat::invert(&self.bottom)
            .map_err(|e| ArrowError::NotComposable(format!("bottom not invertible: {e}")))?;
        ArrowMorphism::new(self.target.clone(), self.source.clone(), top, bottom)
    }
}

impl fmt::Display for ArrowMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}): ({}) -> ({})",
            self.top, self.bottom, self.source, self.target
        )
    }
}

/// The identity morphism on the arrow object `f`: the pair of identities.
pub fn arrow_id(f: &ArrowObject) -> ArrowMorphism {
    ArrowMorphism {
        source: f.clone(),
        target: f.clone(),
        top: RatMatrix::identity(f.src()),
        bottom: RatMatrix::identity(f.dst()),
    }
}

/// Componentwise composition `later . earlier`. The composite square is
/// re-verified; a failure there means a bug, since commuting squares compose.
pub fn arrow_compose(
    later: &ArrowMorphism,
    earlier: &ArrowMorphism,
) -> Result<ArrowMorphism, ArrowError> {
    if earlier.target != later.source {
        return Err(ArrowError::NotComposable(format!(
            "target of first ({}) differs from source of second ({})",
            earlier.target, later.source
        )));
    }
    let top = compose(&later.top, &earlier.top)
        .map_err(|e| ArrowError::ShapeMismatch(e.to_string()))?;
    let bottom = compose(&later.bottom, &earlier.bottom)
        .map_err(|e| ArrowError::ShapeMismatch(e.to_string()))?;
    ArrowMorphism::new(earlier.source.clone(), later.target.clone(), top, bottom)
}

/// Composes a chain right-to-left: `chain[0] . chain[1] . ... . chain[n-1]`
/// applied to the source of the last element.
pub(crate) fn compose_chain(chain: &[&ArrowMorphism]) -> Result<ArrowMorphism, ArrowError> {
    let (last, rest) = chain
        .split_last()
        .ok_or_else(|| ArrowError::NotComposable("empty chain".to_string()))?;
    let mut acc = (*last).clone();
    for m in rest.iter().rev() {
        acc = arrow_compose(m, &acc)?;
    }
    Ok(acc)
}
