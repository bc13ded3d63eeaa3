//! Monoidal functors, their lifts to arrow categories, and the associated
//! coherence cubes: associativity, unitality, braided compatibility, and
//! monoidal natural transformations.
//!
//! The product comparison `F2_{A,B}: F(A) (x) F(B) -> F(A (x) B)` is not
//! required to be invertible; everything below works for lax data as well.

use super::structure::MonoidalStructure;
use crate::arrowcat::{
    arrow_compose, arrow_id, compose_chain, lift_functor, ArrowFunctor, ArrowMorphism,
    ArrowNatTrans, ArrowObject, FunctorData, NatTransData,
};
use crate::exactmat::{commutation_matrix, compose, kronecker, ConcreteCategory, RatMatrix, Rng};
use crate::verdict::{edge, run_check, Verdict, Witness};
use std::fmt;
use std::sync::Arc;

pub type ProductComparison = Arc<dyn Fn(usize, usize) -> RatMatrix + Send + Sync>;

#[derive(Debug, Clone)]
pub enum MonoidalError {
    NotMonoidal(String),
    NotMonoidalNatTrans(String),
    NotAFunctor(String),
}

impl fmt::Display for MonoidalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidalError::NotMonoidal(s) => write!(f, "not a monoidal functor: {s}"),
            MonoidalError::NotMonoidalNatTrans(s) => {
                write!(f, "not a monoidal natural transformation: {s}")
            }
            MonoidalError::NotAFunctor(s) => write!(f, "not a functor: {s}"),
        }
    }
}

impl std::error::Error for MonoidalError {}

#[derive(Clone)]
pub struct MonoidalFunctorData {
    base: FunctorData,
    f2: ProductComparison,
    f0: RatMatrix,
}

impl MonoidalFunctorData {
    pub fn new(base: FunctorData, f2: ProductComparison, f0: RatMatrix) -> Self {
        MonoidalFunctorData { base, f2, f0 }
    }

    pub fn base(&self) -> &FunctorData {
        &self.base
    }

    /// `F2_{a,b}: F(a) (x) F(b) -> F(a (x) b)`.
    pub fn f2(&self, a: usize, b: usize) -> RatMatrix {
        (self.f2)(a, b)
    }

    /// `F0: I -> F(I)`.
    pub fn f0(&self) -> &RatMatrix {
        &self.f0
    }

    pub fn with_f0(mut self, f0: RatMatrix) -> Self {
        self.f0 = f0;
        self
    }

    pub fn with_f2(mut self, f2: ProductComparison) -> Self {
        self.f2 = f2;
        self
    }
}

impl fmt::Debug for MonoidalFunctorData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonoidalFunctorData({})", self.base.name())
    }
}

/// The identity functor with identity comparisons.
pub fn identity_monoidal_functor() -> MonoidalFunctorData {
    MonoidalFunctorData::new(
        crate::arrowcat::identity_functor(),
        Arc::new(|a, b| RatMatrix::identity(a * b)),
        RatMatrix::identity(1),
    )
}

/// The squaring functor `n -> n^2`, `M -> M (x) M`. Its comparison is the
/// interleaving permutation `id_a (x) K_{a,b} (x) id_b`, which reorders
/// `(a, a', b, b')` into `(a, b, a', b')`.
pub fn squaring_monoidal_functor() -> MonoidalFunctorData {
    MonoidalFunctorData::new(
        crate::arrowcat::squaring_functor(),
        Arc::new(|a, b| {
            kronecker(
                &kronecker(&RatMatrix::identity(a), &commutation_matrix(a, b)),
                &RatMatrix::identity(b),
            )
        }),
        RatMatrix::identity(1),
    )
}

/// The doubling functor `n -> 2n`, `M -> M (x) I_2`. There is no invertible
/// comparison (the dimensions 4ab and 2ab differ), but interleaving followed
/// by the commutative copy monoid on the doubled coordinate is a lax one.
pub fn lax_doubling_functor() -> MonoidalFunctorData {
    let base = FunctorData::new(
        "doubling",
        crate::arrowcat::Variance::Covariant,
        Arc::new(|o| 2 * o),
        Arc::new(|m| kronecker(m, &RatMatrix::identity(2))),
    );
    // mu: 2 (x) 2 -> 2 copies matching coordinates, eta: 1 -> 2 duplicates.
    let copy_mu = RatMatrix::from_int_rows(&[&[1, 0, 0, 0], &[0, 0, 0, 1]]);
    let copy_eta = RatMatrix::from_int_rows(&[&[1], &[1]]);
    let f2 = Arc::new(move |a: usize, b: usize| {
        let interleave = kronecker(
            &kronecker(&RatMatrix::identity(a), &commutation_matrix(2, b)),
            &RatMatrix::identity(2),
        );
        let fuse = kronecker(&RatMatrix::identity(a * b), &copy_mu);
        compose(&fuse, &interleave).expect("shapes agree")
    });
    MonoidalFunctorData::new(base, f2, copy_eta)
}

/// Checks naturality of `F2`, naturality of `F0`, and the ambient
/// associativity and unitality diagrams on seeded samples.
pub fn validate_monoidal_functor(
    cat: &ConcreteCategory,
    data: &MonoidalFunctorData,
    samples: usize,
    max_dim: usize,
    rng: &mut Rng,
) -> Result<(), MonoidalError> {
    let f = &data.base;
    let unit = cat.unit_object();
    let f_unit_id = f.apply_morphism(&RatMatrix::identity(unit));
    if compose(&f_unit_id, &data.f0).ok() != compose(&data.f0, &RatMatrix::identity(unit)).ok() {
        return Err(MonoidalError::NotMonoidal(
            "F0 does not commute with F(id_I)".to_string(),
        ));
    }
    for case in 0..samples {
        // F2 naturality: F(M (x) N) . F2 = F2 . (F(M) (x) F(N)).
        let dims: Vec<usize> = (0..4).map(|_| 1 + rng.below(max_dim)).collect();
        let m = crate::exactmat::random_int_matrix(rng, dims[1], dims[0], 2);
        let n = crate::exactmat::random_int_matrix(rng, dims[3], dims[2], 2);
        let lhs = compose(
            &f.apply_morphism(&kronecker(&m, &n)),
            &data.f2(dims[0], dims[2]),
        );
        let rhs = compose(
            &data.f2(dims[1], dims[3]),
            &kronecker(&f.apply_morphism(&m), &f.apply_morphism(&n)),
        );
        if lhs.as_ref().ok() != rhs.as_ref().ok() || lhs.is_err() {
            return Err(MonoidalError::NotMonoidal(format!(
                "F2 naturality fails on sample {case}"
            )));
        }

        // Associativity: F(alpha) . F2_{ab,c} . (F2_{a,b} (x) id) =
        // F2_{a,bc} . (id (x) F2_{b,c}) . alpha_{F(a),F(b),F(c)}.
        let (a, b, c) = (dims[0], dims[1], dims[2]);
        let fa = f.apply_object(a);
        let fb = f.apply_object(b);
        let fc = f.apply_object(c);
        let lhs = compose(
            &f.apply_morphism(&cat.associator(a, b, c)),
            &compose(
                &data.f2(cat.tensor_object(a, b), c),
                &kronecker(&data.f2(a, b), &RatMatrix::identity(fc)),
            )
            .map_err(|e| MonoidalError::NotMonoidal(e.to_string()))?,
        );
        let rhs = compose(
            &data.f2(a, cat.tensor_object(b, c)),
            &compose(
                &kronecker(&RatMatrix::identity(fa), &data.f2(b, c)),
                &cat.associator(fa, fb, fc),
            )
            .map_err(|e| MonoidalError::NotMonoidal(e.to_string()))?,
        );
        if lhs.as_ref().ok() != rhs.as_ref().ok() || lhs.is_err() {
            return Err(MonoidalError::NotMonoidal(format!(
                "F2 associativity fails on sample {case} at dims ({a}, {b}, {c})"
            )));
        }

        // Unitality on both sides.
        let left = compose(
            &f.apply_morphism(&cat.left_unitor(a)),
            &compose(
                &data.f2(unit, a),
                &kronecker(&data.f0, &RatMatrix::identity(fa)),
            )
            .map_err(|e| MonoidalError::NotMonoidal(e.to_string()))?,
        );
        if left.ok().as_ref() != Some(&cat.left_unitor(fa)) {
            return Err(MonoidalError::NotMonoidal(format!(
                "F0 left unitality fails on sample {case} at dim {a}"
            )));
        }
        let right = compose(
            &f.apply_morphism(&cat.right_unitor(a)),
            &compose(
                &data.f2(a, unit),
                &kronecker(&RatMatrix::identity(fa), &data.f0),
            )
            .map_err(|e| MonoidalError::NotMonoidal(e.to_string()))?,
        );
        if right.ok().as_ref() != Some(&cat.right_unitor(fa)) {
            return Err(MonoidalError::NotMonoidal(format!(
                "F0 right unitality fails on sample {case} at dim {a}"
            )));
        }
    }
    Ok(())
}

/// A monoidal functor acting on the arrow category, producing validated
/// comparison squares.
#[derive(Debug, Clone)]
pub struct LiftedMonoidalFunctor {
    data: MonoidalFunctorData,
    functor: ArrowFunctor,
}

impl LiftedMonoidalFunctor {
    /// Builds the lift without ambient validation. Used for negative
    /// controls; honest callers go through [`lift_monoidal_functor`].
    pub fn from_data_unchecked(cat: &ConcreteCategory, data: MonoidalFunctorData) -> Self {
        let mut rng = Rng::new(0);
        let functor = lift_functor(cat, data.base(), 0, 1, &mut rng)
            .expect("zero-sample lift cannot fail");
        LiftedMonoidalFunctor { data, functor }
    }

    pub fn data(&self) -> &MonoidalFunctorData {
        &self.data
    }

    pub fn functor(&self) -> &ArrowFunctor {
        &self.functor
    }

    pub fn apply_object(
        &self,
        cat: &ConcreteCategory,
        f: &ArrowObject,
    ) -> Result<ArrowMorphismObject, crate::arrowcat::ArrowError> {
        self.functor.apply_object(cat, f)
    }

    /// The comparison square `(F2_{A,C}, F2_{B,D}): F(f) (x) F(g) -> F(f (x) g)`.
    pub fn f2_at(
        &self,
        ms: &MonoidalStructure,
        f: &ArrowObject,
        g: &ArrowObject,
    ) -> Result<ArrowMorphism, crate::arrowcat::ArrowError> {
        let cat = ms.category();
        let ff = self.functor.apply_object(cat, f)?;
        let fg = self.functor.apply_object(cat, g)?;
        let source = ms.tensor_objects(&ff, &fg);
        let target = self
            .functor
            .apply_object(cat, &ms.tensor_objects(f, g))?;
        ArrowMorphism::new(
            source,
            target,
            self.data.f2(f.src(), g.src()),
            self.data.f2(f.dst(), g.dst()),
        )
    }

    /// The unit comparison square `(F0, F0): id_I -> F(id_I)`.
    pub fn f0_arrow(
        &self,
        ms: &MonoidalStructure,
    ) -> Result<ArrowMorphism, crate::arrowcat::ArrowError> {
        let cat = ms.category();
        let unit = ms.unit_arrow();
        ArrowMorphism::new(
            unit.clone(),
            self.functor.apply_object(cat, &unit)?,
            self.data.f0.clone(),
            self.data.f0.clone(),
        )
    }
}

type ArrowMorphismObject = ArrowObject;

/// Validates the ambient data on samples, then lifts.
pub fn lift_monoidal_functor(
    cat: &ConcreteCategory,
    data: &MonoidalFunctorData,
    samples: usize,
    max_dim: usize,
    rng: &mut Rng,
) -> Result<LiftedMonoidalFunctor, MonoidalError> {
    let functor = lift_functor(cat, data.base(), samples, max_dim, rng)
        .map_err(|e| MonoidalError::NotAFunctor(e.to_string()))?;
    validate_monoidal_functor(cat, data, samples, max_dim, rng)?;
    Ok(LiftedMonoidalFunctor {
        data: data.clone(),
        functor,
    })
}

fn compare(law: &str, description: &str, lhs: &ArrowMorphism, rhs: &ArrowMorphism) -> Verdict {
    if lhs == rhs {
        Verdict::Pass
    } else {
        Verdict::fail_with(
            law,
            description,
            Witness::Square {
                top: lhs.top().clone(),
                bottom: lhs.bottom().clone(),
            },
            Witness::Square {
                top: rhs.top().clone(),
                bottom: rhs.bottom().clone(),
            },
        )
    }
}

/// The associativity cube and both unitality prisms for the lifted functor,
/// on the arrow objects `f, g, h`.
pub fn check_monoidal_functor_cubes(
    ms: &MonoidalStructure,
    lifted: &LiftedMonoidalFunctor,
    f: &ArrowObject,
    g: &ArrowObject,
    h: &ArrowObject,
) -> Verdict {
    run_check(|| {
        let law = "monoidal functor cubes";
        let cat = ms.category();
        let functor = lifted.functor();
        let ff = edge(law, "F(f)", functor.apply_object(cat, f))?;
        let fg_obj = edge(law, "F(g)", functor.apply_object(cat, g))?;
        let fh = edge(law, "F(h)", functor.apply_object(cat, h))?;

        // Associativity cube.
        let alpha = edge(law, "alpha(f, g, h)", ms.associator(f, g, h))?;
        let f_alpha = edge(law, "F(alpha)", functor.apply_morphism(cat, &alpha))?;
        let f2_fg_h = edge(law, "F2(f g, h)", lifted.f2_at(ms, &ms.tensor_objects(f, g), h))?;
        let f2_f_g = edge(law, "F2(f, g)", lifted.f2_at(ms, f, g))?;
        let leg1 = edge(law, "F2(f, g) (x) id", ms.tensor_morphisms(&f2_f_g, &arrow_id(&fh)))?;
        let lhs = edge(law, "left path", compose_chain(&[&f_alpha, &f2_fg_h, &leg1]))?;

        let f2_f_gh = edge(law, "F2(f, g h)", lifted.f2_at(ms, f, &ms.tensor_objects(g, h)))?;
        let f2_g_h = edge(law, "F2(g, h)", lifted.f2_at(ms, g, h))?;
        let leg2 = edge(law, "id (x) F2(g, h)", ms.tensor_morphisms(&arrow_id(&ff), &f2_g_h))?;
        let alpha_img = edge(law, "alpha(F f, F g, F h)", ms.associator(&ff, &fg_obj, &fh))?;
        let rhs = edge(law, "right path", compose_chain(&[&f2_f_gh, &leg2, &alpha_img]))?;
        let assoc = compare(law, "associativity cube", &lhs, &rhs);
        if !assoc.is_pass() {
            return Ok(assoc);
        }

        // Unitality prisms, right then left.
        let unit = ms.unit_arrow();
        let f0 = edge(law, "F0 square", lifted.f0_arrow(ms))?;
        let rho_f = edge(law, "rho_f", ms.right_unitor(f))?;
        let f_rho = edge(law, "F(rho_f)", functor.apply_morphism(cat, &rho_f))?;
        let f2_f_unit = edge(law, "F2(f, id_I)", lifted.f2_at(ms, f, &unit))?;
        let leg3 = edge(law, "id (x) F0", ms.tensor_morphisms(&arrow_id(&ff), &f0))?;
        let lhs_u = edge(law, "right unit path", compose_chain(&[&f_rho, &f2_f_unit, &leg3]))?;
        let rhs_u = edge(law, "rho_{F f}", ms.right_unitor(&ff))?;
        let right_unit = compare(law, "right unitality prism", &lhs_u, &rhs_u);
        if !right_unit.is_pass() {
            return Ok(right_unit);
        }

        let lambda_f = edge(law, "lambda_f", ms.left_unitor(f))?;
        let f_lambda = edge(law, "F(lambda_f)", functor.apply_morphism(cat, &lambda_f))?;
        let f2_unit_f = edge(law, "F2(id_I, f)", lifted.f2_at(ms, &unit, f))?;
        let leg4 = edge(law, "F0 (x) id", ms.tensor_morphisms(&f0, &arrow_id(&ff)))?;
        let lhs_l = edge(law, "left unit path", compose_chain(&[&f_lambda, &f2_unit_f, &leg4]))?;
        let rhs_l = edge(law, "lambda_{F f}", ms.left_unitor(&ff))?;
        Ok(compare(law, "left unitality prism", &lhs_l, &rhs_l))
    })
}

/// Braided compatibility cube:
/// `F(sigma_{f,g}) . F2_{f,g} = F2_{g,f} . sigma_{F f, F g}`.
pub fn check_braided_functor_cube(
    ms: &MonoidalStructure,
    lifted: &LiftedMonoidalFunctor,
    f: &ArrowObject,
    g: &ArrowObject,
) -> Verdict {
    run_check(|| {
        let law = "braided functor cube";
        let cat = ms.category();
        let functor = lifted.functor();
        let sigma = edge(law, "sigma(f, g)", ms.braiding(f, g))?;
        let f_sigma = edge(law, "F(sigma)", functor.apply_morphism(cat, &sigma))?;
        let f2 = edge(law, "F2(f, g)", lifted.f2_at(ms, f, g))?;
        let lhs = edge(law, "F(sigma) . F2", arrow_compose(&f_sigma, &f2))?;

        let ff = edge(law, "F(f)", functor.apply_object(cat, f))?;
        let fg = edge(law, "F(g)", functor.apply_object(cat, g))?;
        let sigma_img = edge(law, "sigma(F f, F g)", ms.braiding(&ff, &fg))?;
        let f2_swapped = edge(law, "F2(g, f)", lifted.f2_at(ms, g, f))?;
        let rhs = edge(law, "F2 . sigma", arrow_compose(&f2_swapped, &sigma_img))?;
        Ok(compare(law, "braided compatibility", &lhs, &rhs))
    })
}

/// Ambient monoidal-natural-transformation axioms on samples:
/// `eta_{a (x) b} . F2 = G2 . (eta_a (x) eta_b)` and `eta_I . F0 = G0`.
pub fn validate_monoidal_nat_trans(
    cat: &ConcreteCategory,
    eta: &NatTransData,
    f_data: &MonoidalFunctorData,
    g_data: &MonoidalFunctorData,
    samples: usize,
    max_dim: usize,
    rng: &mut Rng,
) -> Result<(), MonoidalError> {
    let unit = cat.unit_object();
    let unit_lhs = compose(&eta.component(unit), &f_data.f0)
        .map_err(|e| MonoidalError::NotMonoidalNatTrans(e.to_string()))?;
    if unit_lhs != *g_data.f0() {
        return Err(MonoidalError::NotMonoidalNatTrans(
            "eta_I . F0 != G0".to_string(),
        ));
    }
    for case in 0..samples {
        let a = 1 + rng.below(max_dim);
        let b = 1 + rng.below(max_dim);
        let lhs = compose(&eta.component(cat.tensor_object(a, b)), &f_data.f2(a, b));
        let rhs = compose(
            &g_data.f2(a, b),
            &kronecker(&eta.component(a), &eta.component(b)),
        );
        if lhs.as_ref().ok() != rhs.as_ref().ok() || lhs.is_err() {
            return Err(MonoidalError::NotMonoidalNatTrans(format!(
                "product compatibility fails on sample {case} at dims ({a}, {b})"
            )));
        }
    }
    Ok(())
}

/// The lifted product-compatibility cube at `(f, g)` and the unit prism.
pub fn check_monoidal_nat_trans_lift(
    ms: &MonoidalStructure,
    eta: &ArrowNatTrans,
    f_lift: &LiftedMonoidalFunctor,
    g_lift: &LiftedMonoidalFunctor,
    f: &ArrowObject,
    g: &ArrowObject,
) -> Verdict {
    run_check(|| {
        let law = "monoidal nat trans";
        let cat = ms.category();
        let tensor = ms.tensor_objects(f, g);
        let eta_tensor = edge(law, "eta at f (x) g", eta.component_at(cat, &tensor))?;
        let f2 = edge(law, "F2(f, g)", f_lift.f2_at(ms, f, g))?;
        let lhs = edge(law, "eta . F2", arrow_compose(&eta_tensor, &f2))?;

        let eta_f = edge(law, "eta at f", eta.component_at(cat, f))?;
        let eta_g = edge(law, "eta at g", eta.component_at(cat, g))?;
        let eta_pair = edge(law, "eta_f (x) eta_g", ms.tensor_morphisms(&eta_f, &eta_g))?;
        let g2 = edge(law, "G2(f, g)", g_lift.f2_at(ms, f, g))?;
        let rhs = edge(law, "G2 . (eta (x) eta)", arrow_compose(&g2, &eta_pair))?;
        let product = compare(law, "product compatibility cube", &lhs, &rhs);
        if !product.is_pass() {
            return Ok(product);
        }

        let unit = ms.unit_arrow();
        let eta_unit = edge(law, "eta at id_I", eta.component_at(cat, &unit))?;
        let f0 = edge(law, "F0 square", f_lift.f0_arrow(ms))?;
        let g0 = edge(law, "G0 square", g_lift.f0_arrow(ms))?;
        let lhs_u = edge(law, "eta . F0", arrow_compose(&eta_unit, &f0))?;
        Ok(compare(law, "unit compatibility prism", &lhs_u, &g0))
    })
}

/// The swap transformation on the squaring functor: component `K_{a,a}`
/// exchanging the two tensor copies. A monoidal natural isomorphism.
pub fn swap_monoidal_nat_trans() -> NatTransData {
    let squaring = crate::arrowcat::squaring_functor();
    NatTransData::new(
        "swap",
        squaring.clone(),
        squaring,
        Arc::new(|a| commutation_matrix(a, a)),
    )
}
