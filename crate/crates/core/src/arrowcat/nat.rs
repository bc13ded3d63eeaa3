//! Natural transformations and their componentwise lift to arrow categories.
//!
//! The lift of `eta: F => G` has component `(eta_A, eta_B)` at the arrow
//! object `h: A -> B`. Its naturality against a square `(phi, psi)` is a
//! cube; [`check_naturality_cube`] verifies it as an equality of composite
//! squares.

use super::functor::{ArrowFunctor, FunctorData, Variance};
use super::morphism::{arrow_compose, ArrowError, ArrowMorphism};
use super::object::ArrowObject;
use super::sample::{random_arrow_morphism, random_arrow_object};
use crate::exactmat::{compose, ConcreteCategory, Rat, RatMatrix, Rng};
use crate::verdict::{edge, run_check, Verdict, Witness};
use std::sync::Arc;

pub type ComponentSupplier = Arc<dyn Fn(usize) -> RatMatrix + Send + Sync>;

#[derive(Clone)]
pub struct NatTransData {
    name: String,
    source: FunctorData,
    target: FunctorData,
    component: ComponentSupplier,
}

impl NatTransData {
    pub fn new(
        name: impl Into<String>,
        source: FunctorData,
        target: FunctorData,
        component: ComponentSupplier,
    ) -> Self {
        assert_eq!(
            (source.variance(), target.variance()),
            (Variance::Covariant, Variance::Covariant),
            "natural transformations are between covariant functors here"
        );
        NatTransData {
            name: name.into(),
            source,
            target,
            component,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source_functor(&self) -> &FunctorData {
        &self.source
    }

    pub fn target_functor(&self) -> &FunctorData {
        &self.target
    }

    /// `eta_A: F(A) -> G(A)`.
    pub fn component(&self, obj: usize) -> RatMatrix {
        (self.component)(obj)
    }

    pub fn with_component(mut self, component: ComponentSupplier) -> Self {
        self.component = component;
        self
    }
}

impl std::fmt::Debug for NatTransData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "NatTransData({}: {} => {})",
            self.name,
            self.source.name(),
            self.target.name()
        )
    }
}

pub fn identity_nat_trans(functor: &FunctorData) -> NatTransData {
    let f = functor.clone();
    NatTransData::new(
        "id",
        functor.clone(),
        functor.clone(),
        Arc::new(move |obj| RatMatrix::identity(f.apply_object(obj))),
    )
}

/// `c * I` between a functor and itself; natural because scalar matrices are
/// central.
pub fn scalar_nat_trans(functor: &FunctorData, c: Rat) -> NatTransData {
    let f = functor.clone();
    NatTransData::new(
        format!("{c} * id"),
        functor.clone(),
        functor.clone(),
        Arc::new(move |obj| RatMatrix::identity(f.apply_object(obj)).scale(&c)),
    )
}

/// Checks the ambient naturality square on seeded samples.
pub fn validate_nat_trans(
    cat: &ConcreteCategory,
    eta: &NatTransData,
    samples: usize,
    max_dim: usize,
    rng: &mut Rng,
) -> Result<(), ArrowError> {
    for case in 0..samples {
        let f = random_arrow_object(cat, rng, max_dim)?;
        let m = f.map();
        let lhs = compose(&eta.component(f.dst()), &eta.source.apply_morphism(m))
            .map_err(|e| ArrowError::ShapeMismatch(e.to_string()))?;
        let rhs = compose(&eta.target.apply_morphism(m), &eta.component(f.src()))
            .map_err(|e| ArrowError::ShapeMismatch(e.to_string()))?;
        if lhs != rhs {
            return Err(ArrowError::NotNatural(format!(
                "{} fails naturality on sample {case} at {m}: {lhs} != {rhs}",
                eta.name
            )));
        }
    }
    Ok(())
}

/// The lifted transformation between the lifted functors.
#[derive(Debug, Clone)]
pub struct ArrowNatTrans {
    data: NatTransData,
    source: ArrowFunctor,
    target: ArrowFunctor,
}

impl ArrowNatTrans {
    pub fn data(&self) -> &NatTransData {
        &self.data
    }

    pub fn source_functor(&self) -> &ArrowFunctor {
        &self.source
    }

    pub fn target_functor(&self) -> &ArrowFunctor {
        &self.target
    }

    /// The component `(eta_A, eta_B)` at the arrow object `f`.
    pub fn component_at(
        &self,
        cat: &ConcreteCategory,
        f: &ArrowObject,
    ) -> Result<ArrowMorphism, ArrowError> {
        ArrowMorphism::new(
            self.source.apply_object(cat, f)?,
            self.target.apply_object(cat, f)?,
            self.data.component(f.src()),
            self.data.component(f.dst()),
        )
    }
}

/// Validates ambient naturality by sampling, then lifts componentwise.
pub fn lift_nat_trans(
    cat: &ConcreteCategory,
    eta: &NatTransData,
    samples: usize,
    max_dim: usize,
    rng: &mut Rng,
) -> Result<ArrowNatTrans, ArrowError> {
    validate_nat_trans(cat, eta, samples, max_dim, rng)?;
    Ok(ArrowNatTrans {
        data: eta.clone(),
        source: super::functor::lift_functor(cat, &eta.source, samples, max_dim, rng)?,
        target: super::functor::lift_functor(cat, &eta.target, samples, max_dim, rng)?,
    })
}

impl ArrowNatTrans {
    /// Lifts without ambient validation. Exists so the cube checker can be
    /// shown to fail on non-natural data; honest callers use
    /// [`lift_nat_trans`].
    pub fn from_data_unchecked(cat: &ConcreteCategory, eta: &NatTransData) -> Self {
        let mut rng = Rng::new(0);
        ArrowNatTrans {
            data: eta.clone(),
            source: super::functor::lift_functor(cat, &eta.source, 0, 1, &mut rng)
                .expect("zero-sample lift cannot fail"),
            target: super::functor::lift_functor(cat, &eta.target, 0, 1, &mut rng)
                .expect("zero-sample lift cannot fail"),
        }
    }
}

/// The naturality cube for the lifted transformation at a sampled square
/// `phi: f -> f'`: both composites `G(phi) . eta_f` and `eta_{f'} . F(phi)`
/// must agree as squares.
pub fn check_naturality_cube(
    cat: &ConcreteCategory,
    eta: &ArrowNatTrans,
    phi: &ArrowMorphism,
) -> Verdict {
    run_check(|| {
        let law = "naturality cube";
        let component_src = edge(law, "component at source", eta.component_at(cat, phi.source()))?;
        let component_dst = edge(law, "component at target", eta.component_at(cat, phi.target()))?;
        let f_phi = edge(
            law,
            "source functor on square",
            eta.source.apply_morphism(cat, phi),
        )?;
        let g_phi = edge(
            law,
            "target functor on square",
            eta.target.apply_morphism(cat, phi),
        )?;
        let lhs = edge(law, "G(phi) . eta_f", arrow_compose(&g_phi, &component_src))?;
        let rhs = edge(law, "eta_f' . F(phi)", arrow_compose(&component_dst, &f_phi))?;
        if lhs == rhs {
            Ok(Verdict::Pass)
        } else {
            Ok(Verdict::fail_with(
                law,
                "G(phi) . eta_f vs eta_f' . F(phi)",
                Witness::Square {
                    top: lhs.top().clone(),
                    bottom: lhs.bottom().clone(),
                },
                Witness::Square {
                    top: rhs.top().clone(),
                    bottom: rhs.bottom().clone(),
                },
            ))
        }
    })
}

/// Convenience: run the cube on `samples` random squares.
pub fn check_naturality_cubes_sampled(
    cat: &ConcreteCategory,
    eta: &ArrowNatTrans,
    samples: usize,
    max_dim: usize,
    rng: &mut Rng,
) -> Verdict {
    for _ in 0..samples {
        let phi = match random_arrow_morphism(cat, rng, max_dim) {
            Ok(phi) => phi,
            Err(e) => return Verdict::fail("naturality cube", format!("sampling failed: {e}")),
        };
        let v = check_naturality_cube(cat, eta, &phi);
        if !v.is_pass() {
            return v;
        }
    }
    Verdict::Pass
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrowcat::functor::identity_functor;

    #[test]
    fn identity_lift_has_identity_components() {
        let cat = ConcreteCategory::mat_q();
        let mut rng = Rng::new(7);
        let eta = identity_nat_trans(&identity_functor());
        let lifted = lift_nat_trans(&cat, &eta, 10, 3, &mut rng).unwrap();
        let f = random_arrow_object(&cat, &mut rng, 3).unwrap();
        let comp = lifted.component_at(&cat, &f).unwrap();
        assert!(comp.top().is_identity());
        assert!(comp.bottom().is_identity());
    }

    #[test]
    fn scalar_components_commute_with_all_squares() {
        let cat = ConcreteCategory::mat_q();
        let mut rng = Rng::new(8);
        let eta = scalar_nat_trans(&identity_functor(), Rat::from_int(2));
        let lifted = lift_nat_trans(&cat, &eta, 10, 3, &mut rng).unwrap();
        assert!(check_naturality_cubes_sampled(&cat, &lifted, 25, 3, &mut rng).is_pass());
    }

    #[test]
    fn invertible_components_lift_to_invertible_components() {
        let cat = ConcreteCategory::mat_q();
        let mut rng = Rng::new(9);
        let eta = scalar_nat_trans(&identity_functor(), Rat::new(-3, 7));
        let lifted = lift_nat_trans(&cat, &eta, 10, 3, &mut rng).unwrap();
        for _ in 0..10 {
            let f = random_arrow_object(&cat, &mut rng, 3).unwrap();
            let comp = lifted.component_at(&cat, &f).unwrap();
            assert!(comp.components_invertible());
            comp.inverse().unwrap();
        }
    }

    #[test]
    fn non_natural_component_rejected() {
        let cat = ConcreteCategory::mat_q();
        let mut rng = Rng::new(10);
        // Upper-triangular shear is not central, so it is not natural for the
        // identity functor.
        let eta = identity_nat_trans(&identity_functor()).with_component(Arc::new(|obj| {
            let mut m = RatMatrix::identity(obj);
            if obj >= 2 {
                m.set(0, 1, Rat::one());
            }
            m
        }));
        assert!(matches!(
            lift_nat_trans(&cat, &eta, 20, 3, &mut rng),
            Err(ArrowError::NotNatural(_))
        ));

        // Forced past ambient validation, the cube checker itself must
        // notice on some sampled square.
        let lifted = ArrowNatTrans::from_data_unchecked(&cat, &eta);
        let verdict = check_naturality_cubes_sampled(&cat, &lifted, 30, 3, &mut rng);
        assert!(!verdict.is_pass(), "cube checker must not be vacuous");
    }
}
