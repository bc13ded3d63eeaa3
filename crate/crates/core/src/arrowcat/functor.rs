//! Extensionally represented functors between concrete categories and their
//! lifts to arrow categories.
//!
//! A covariant functor sends the arrow object `h: A -> B` to
//! `F(h): F(A) -> F(B)` and acts on squares componentwise. A contravariant
//! functor sends it to `F(h): F(B) -> F(A)` and swaps the roles of the two
//! square components, which is exactly what the shapes force.

use super::morphism::{ArrowError, ArrowMorphism};
use super::object::ArrowObject;
use super::sample::random_square_over;
use crate::exactmat::{compose, invert, kronecker, ConcreteCategory, RatMatrix, Rng};
use std::sync::Arc;

pub type ObjectAction = Arc<dyn Fn(usize) -> usize + Send + Sync>;
pub type MorphismAction = Arc<dyn Fn(&RatMatrix) -> RatMatrix + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variance {
    Covariant,
    Contravariant,
}

#[derive(Clone)]
pub struct FunctorData {
    name: String,
    object_action: ObjectAction,
    morphism_action: MorphismAction,
    variance: Variance,
}

impl FunctorData {
    pub fn new(
        name: impl Into<String>,
        variance: Variance,
        object_action: ObjectAction,
        morphism_action: MorphismAction,
    ) -> Self {
        FunctorData {
            name: name.into(),
            object_action,
            morphism_action,
            variance,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn apply_object(&self, obj: usize) -> usize {
        (self.object_action)(obj)
    }

    pub fn apply_morphism(&self, m: &RatMatrix) -> RatMatrix {
        (self.morphism_action)(m)
    }

    /// Functor composition `self . inner` (apply `inner` first).
    pub fn compose_with(&self, inner: &FunctorData) -> FunctorData {
        let outer_obj = self.object_action.clone();
        let inner_obj = inner.object_action.clone();
        let outer_mor = self.morphism_action.clone();
        let inner_mor = inner.morphism_action.clone();
        let variance = match (self.variance, inner.variance) {
            (Variance::Covariant, v) => v,
            (Variance::Contravariant, Variance::Covariant) => Variance::Contravariant,
            (Variance::Contravariant, Variance::Contravariant) => Variance::Covariant,
        };
        FunctorData {
            name: format!("{} . {}", self.name, inner.name),
            object_action: Arc::new(move |o| outer_obj(inner_obj(o))),
            morphism_action: Arc::new(move |m| outer_mor(&inner_mor(m))),
            variance,
        }
    }
}

impl std::fmt::Debug for FunctorData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FunctorData({}, {:?})", self.name, self.variance)
    }
}

pub fn identity_functor() -> FunctorData {
    FunctorData::new(
        "id",
        Variance::Covariant,
        Arc::new(|o| o),
        Arc::new(RatMatrix::clone),
    )
}

/// The contravariant functor fixing objects and transposing matrices.
pub fn transpose_functor() -> FunctorData {
    FunctorData::new(
        "transpose",
        Variance::Contravariant,
        Arc::new(|o| o),
        Arc::new(RatMatrix::transpose),
    )
}

/// A deterministic family of invertible change-of-basis matrices, one per
/// dimension, derived from `seed`.
pub fn conjugation_family(seed: u64) -> Arc<dyn Fn(usize) -> RatMatrix + Send + Sync> {
    Arc::new(move |dim| {
        let mut rng = Rng::new(seed ^ (dim as u64).wrapping_mul(0x9e3779b97f4a7c15));
        crate::exactmat::random_invertible(&mut rng, dim, 10)
    })
}

/// Object-preserving functor `M -> P_b . M . P_v^{-1}` for a family `P`.
pub fn conjugation_functor(
    name: impl Into<String>,
    family: Arc<dyn Fn(usize) -> RatMatrix + Send + Sync>,
) -> FunctorData {
    let fam = family.clone();
    FunctorData::new(
        name,
        Variance::Covariant,
        Arc::new(|o| o),
        Arc::new(move |m| {
            let p_dst = fam(m.dst_dim());
            let p_src_inv = invert(&fam(m.src_dim())).expect("family is invertible");
            compose(&compose(&p_dst, m).unwrap(), &p_src_inv).unwrap()
        }),
    )
}

/// The squaring functor `n -> n^2`, `M -> M (x) M`. Strong monoidal with an
/// interleaving permutation as its product comparison.
pub fn squaring_functor() -> FunctorData {
    FunctorData::new(
        "squaring",
        Variance::Covariant,
        Arc::new(|o| o * o),
        Arc::new(|m| kronecker(m, m)),
    )
}

/// Checks identity and composition preservation on seeded samples.
pub fn validate_functor(
    cat: &ConcreteCategory,
    functor: &FunctorData,
    samples: usize,
    max_dim: usize,
    rng: &mut Rng,
) -> Result<(), ArrowError> {
    for case in 0..samples {
        let dim = 1 + rng.below(max_dim);
        let id = RatMatrix::identity(dim);
        let f_id = functor.apply_morphism(&id);
        if !f_id.is_identity() {
            return Err(ArrowError::NotAFunctor(format!(
                "{} does not preserve the identity on {dim}: got {f_id}",
                functor.name
            )));
        }
        let square = random_square_over(cat, rng, max_dim)?;
        let (f, g) = (square.0, square.1);
        let gf = compose(&g, &f).map_err(|e| ArrowError::ShapeMismatch(e.to_string()))?;
        let lhs = functor.apply_morphism(&gf);
        let rhs = match functor.variance {
            Variance::Covariant => compose(&functor.apply_morphism(&g), &functor.apply_morphism(&f)),
            Variance::Contravariant => {
                compose(&functor.apply_morphism(&f), &functor.apply_morphism(&g))
            }
        }
        .map_err(|e| ArrowError::ShapeMismatch(e.to_string()))?;
        if lhs != rhs {
            return Err(ArrowError::NotAFunctor(format!(
                "{} fails composition preservation on sample {case}: {lhs} != {rhs}",
                functor.name
            )));
        }
    }
    Ok(())
}

/// A functor between arrow categories, lifted from an ambient functor.
#[derive(Debug, Clone)]
pub struct ArrowFunctor {
    data: FunctorData,
}

impl ArrowFunctor {
    pub fn data(&self) -> &FunctorData {
        &self.data
    }

    pub fn variance(&self) -> Variance {
        self.data.variance
    }

    pub fn apply_object(
        &self,
        cat: &ConcreteCategory,
        f: &ArrowObject,
    ) -> Result<ArrowObject, ArrowError> {
        let image = self.data.apply_morphism(f.map());
        let (src, dst) = match self.data.variance {
            Variance::Covariant => (self.data.apply_object(f.src()), self.data.apply_object(f.dst())),
            Variance::Contravariant => {
                (self.data.apply_object(f.dst()), self.data.apply_object(f.src()))
            }
        };
        ArrowObject::new(cat, src, dst, image)
    }

    pub fn apply_morphism(
        &self,
        cat: &ConcreteCategory,
        phi: &ArrowMorphism,
    ) -> Result<ArrowMorphism, ArrowError> {
        match self.data.variance {
            Variance::Covariant => ArrowMorphism::new(
                self.apply_object(cat, phi.source())?,
                self.apply_object(cat, phi.target())?,
                self.data.apply_morphism(phi.top()),
                self.data.apply_morphism(phi.bottom()),
            ),
            // Contravariance reverses the direction and the shapes force the
            // image of the bottom component on top.
            Variance::Contravariant => ArrowMorphism::new(
                self.apply_object(cat, phi.target())?,
                self.apply_object(cat, phi.source())?,
                self.data.apply_morphism(phi.bottom()),
                self.data.apply_morphism(phi.top()),
            ),
        }
    }
}

/// Validates the ambient functor by sampling and lifts it to Arr(C).
pub fn lift_functor(
    cat: &ConcreteCategory,
    functor: &FunctorData,
    samples: usize,
    max_dim: usize,
    rng: &mut Rng,
) -> Result<ArrowFunctor, ArrowError> {
    validate_functor(cat, functor, samples, max_dim, rng)?;
    Ok(ArrowFunctor {
        data: functor.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrowcat::morphism::arrow_compose;
    use crate::arrowcat::sample::random_arrow_morphism;
    use crate::ratmat;

    #[test]
    fn identity_functor_lift_is_identity() {
        let cat = ConcreteCategory::mat_q();
        let mut rng = Rng::new(3);
        let lifted = lift_functor(&cat, &identity_functor(), 10, 3, &mut rng).unwrap();
        let f = ArrowObject::from_map(&cat, ratmat![[1, 2], [0, 1]]).unwrap();
        assert_eq!(lifted.apply_object(&cat, &f).unwrap(), f);
    }

    #[test]
    fn transpose_lift_reverses_squares() {
        let cat = ConcreteCategory::mat_q();
        let mut rng = Rng::new(4);
        let lifted = lift_functor(&cat, &transpose_functor(), 10, 3, &mut rng).unwrap();

        let phi = random_arrow_morphism(&cat, &mut rng, 3).unwrap();
        let image = lifted.apply_morphism(&cat, &phi).unwrap();
        assert_eq!(image.source().map(), &phi.target().map().transpose());
        assert_eq!(image.target().map(), &phi.source().map().transpose());
        assert_eq!(image.top(), &phi.bottom().transpose());
        assert_eq!(image.bottom(), &phi.top().transpose());
    }

    #[test]
    fn conjugation_lift_preserves_composition() {
        let cat = ConcreteCategory::mat_q();
        let mut rng = Rng::new(5);
        let functor = conjugation_functor("conj", conjugation_family(99));
        let lifted = lift_functor(&cat, &functor, 20, 3, &mut rng).unwrap();

        for _ in 0..100 {
            let phi = random_arrow_morphism(&cat, &mut rng, 3).unwrap();
            let psi = random_arrow_morphism_from(&cat, &mut rng, phi.target().clone()).unwrap();
            let composite = arrow_compose(&psi, &phi).unwrap();
            let lhs = lifted.apply_morphism(&cat, &composite).unwrap();
            let rhs = arrow_compose(
                &lifted.apply_morphism(&cat, &psi).unwrap(),
                &lifted.apply_morphism(&cat, &phi).unwrap(),
            )
            .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn broken_action_is_rejected() {
        let cat = ConcreteCategory::mat_q();
        let mut rng = Rng::new(6);
        // Adds 1 to every entry; preserves neither identities nor products.
        let broken = FunctorData::new(
            "shift",
            Variance::Covariant,
            Arc::new(|o| o),
            Arc::new(|m| {
                RatMatrix::from_fn(m.rows(), m.cols(), |i, j| {
                    m.get(i, j) + &crate::Rat::one()
                })
            }),
        );
        assert!(matches!(
            lift_functor(&cat, &broken, 10, 3, &mut rng),
            Err(ArrowError::NotAFunctor(_))
        ));
    }

    // Builds a second random square starting at a prescribed arrow object.
    fn random_arrow_morphism_from(
        cat: &ConcreteCategory,
        rng: &mut Rng,
        source: ArrowObject,
    ) -> Result<ArrowMorphism, ArrowError> {
        crate::arrowcat::sample::random_square_from(cat, rng, source, 3)
    }
}
