//! Suites for the arrow category core: squares, functor and natural
//! transformation lifts, equivalence data, and the dagger.

use super::{expect_rejection, SuiteParams};
use crate::fixtures::FixtureSet;
use crate::report::CheckRecord;
use arrowcat_core::arrowcat::{
    arrow_compose, arrow_dagger, arrow_id, check_naturality_cubes_sampled, conjugation_family,
    conjugation_functor, check_equivalence, identity_functor, identity_nat_trans, lift_functor,
    lift_nat_trans, random_arrow_morphism, random_arrow_object, random_square_from,
    random_unitary_square, rank_profile_square, scalar_nat_trans, transpose_functor,
    ArrowMorphism, ArrowObject, FunctorData, Variance,
};
use arrowcat_core::exactmat::{invert, ConcreteCategory, Rat, RatMatrix, Rng};
use arrowcat_core::verdict::Verdict;
use std::sync::Arc;

fn eq_squares(law: &str, edge: &str, lhs: &ArrowMorphism, rhs: &ArrowMorphism) -> Verdict {
    if lhs == rhs {
        Verdict::Pass
    } else {
        Verdict::fail(law, format!("{edge}: {lhs} != {rhs}"))
    }
}

/// Identity and associativity laws around one square.
fn square_battery(
    cat: &ConcreteCategory,
    rng: &mut Rng,
    phi: &ArrowMorphism,
    max_dim: usize,
) -> Verdict {
    let law = "arrow category laws";
    let right = match arrow_compose(phi, &arrow_id(phi.source())) {
        Ok(m) => m,
        Err(e) => return Verdict::fail(law, format!("right identity: {e}")),
    };
    let v = eq_squares(law, "phi . id", &right, phi);
    if !v.is_pass() {
        return v;
    }
    let left = match arrow_compose(&arrow_id(phi.target()), phi) {
        Ok(m) => m,
        Err(e) => return Verdict::fail(law, format!("left identity: {e}")),
    };
    let v = eq_squares(law, "id . phi", &left, phi);
    if !v.is_pass() {
        return v;
    }
    let psi = match random_square_from(cat, rng, phi.target().clone(), max_dim) {
        Ok(m) => m,
        Err(e) => return Verdict::fail(law, format!("sampling psi: {e}")),
    };
    let chi = match random_square_from(cat, rng, psi.target().clone(), max_dim) {
        Ok(m) => m,
        Err(e) => return Verdict::fail(law, format!("sampling chi: {e}")),
    };
    let lhs = arrow_compose(&chi, &arrow_compose(&psi, phi).unwrap()).unwrap();
    let rhs = arrow_compose(&arrow_compose(&chi, &psi).unwrap(), phi).unwrap();
    eq_squares(law, "(chi . psi) . phi vs chi . (psi . phi)", &lhs, &rhs)
}

pub fn arrow_core(params: &SuiteParams, fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let cat = ConcreteCategory::mat_q();
    let mut rng = Rng::new(params.seed);
    let mut records = Vec::new();
    for case in 0..params.samples {
        let phi = if case % 4 == 0 {
            rank_profile_square(&cat, &mut rng, params.max_dim)
        } else {
            random_arrow_morphism(&cat, &mut rng, params.max_dim)
        };
        let verdict = match phi {
            Ok(phi) => square_battery(&cat, &mut rng, &phi, params.max_dim),
            Err(e) => Verdict::fail("square construction", e.to_string()),
        };
        records.push(CheckRecord::positive(format!("square-{case:03}"), verdict));
    }
    for (name, m) in &fixtures.matrices {
        let verdict = match ArrowObject::from_map(&cat, m.clone()) {
            Ok(obj) => match random_square_from(&cat, &mut rng, obj, params.max_dim) {
                Ok(phi) => square_battery(&cat, &mut rng, &phi, params.max_dim),
                Err(e) => Verdict::fail("fixture square", e.to_string()),
            },
            Err(e) => Verdict::fail("fixture object", e.to_string()),
        };
        records.push(CheckRecord::positive(format!("fixture-{name}"), verdict));
    }
    // A pair that visibly fails the commuting condition must be rejected.
    let f = ArrowObject::from_map(&cat, RatMatrix::from_int_rows(&[&[1, 1], &[0, 1]])).unwrap();
    let g = ArrowObject::from_map(&cat, RatMatrix::from_int_rows(&[&[1, 0], &[1, 1]])).unwrap();
    records.push(CheckRecord::negative(
        "zz-negative-non-commuting-pair",
        expect_rejection(
            "square validation",
            ArrowMorphism::new(f, g, RatMatrix::identity(2), RatMatrix::identity(2)),
        ),
    ));
    records
}

fn functor_battery(
    cat: &ConcreteCategory,
    functor: &FunctorData,
    params: &SuiteParams,
    rng: &mut Rng,
) -> Verdict {
    let law = "functor lift";
    let lifted = match lift_functor(cat, functor, params.samples.min(20), params.max_dim, rng) {
        Ok(l) => l,
        Err(e) => return Verdict::fail(law, format!("ambient validation: {e}")),
    };
    for case in 0..params.samples {
        let phi = match random_arrow_morphism(cat, rng, params.max_dim) {
            Ok(phi) => phi,
            Err(e) => return Verdict::fail(law, format!("sampling: {e}")),
        };
        let psi = match random_square_from(cat, rng, phi.target().clone(), params.max_dim) {
            Ok(psi) => psi,
            Err(e) => return Verdict::fail(law, format!("sampling: {e}")),
        };
        let composite = arrow_compose(&psi, &phi).unwrap();
        let image = match lifted.apply_morphism(cat, &composite) {
            Ok(m) => m,
            Err(e) => return Verdict::fail(law, format!("image of composite: {e}")),
        };
        let expected = match lifted.variance() {
            Variance::Covariant => arrow_compose(
                &lifted.apply_morphism(cat, &psi).unwrap(),
                &lifted.apply_morphism(cat, &phi).unwrap(),
            ),
            Variance::Contravariant => arrow_compose(
                &lifted.apply_morphism(cat, &phi).unwrap(),
                &lifted.apply_morphism(cat, &psi).unwrap(),
            ),
        }
        .unwrap();
        let v = eq_squares(law, &format!("composition preservation, case {case}"), &image, &expected);
        if !v.is_pass() {
            return v;
        }
        let id_image = lifted.apply_morphism(cat, &arrow_id(phi.source())).unwrap();
        if !(id_image.top().is_identity() && id_image.bottom().is_identity()) {
            return Verdict::fail(law, format!("identity preservation, case {case}"));
        }
    }
    Verdict::Pass
}

pub fn functor_lift(params: &SuiteParams, fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let cat = ConcreteCategory::mat_q();
    let mut rng = Rng::new(params.seed);
    let mut records = Vec::new();
    let builtins = [
        ("identity", identity_functor()),
        ("transpose", transpose_functor()),
        (
            "conjugation",
            conjugation_functor("conj", conjugation_family(params.seed ^ 0x5eed)),
        ),
    ];
    for (label, functor) in builtins {
        let mut stream = rng.fork(label.len() as u64);
        records.push(CheckRecord::positive(
            format!("lift-{label}"),
            functor_battery(&cat, &functor, params, &mut stream),
        ));
    }
    for (name, functor) in &fixtures.functors {
        let mut stream = rng.fork(0xf1);
        records.push(CheckRecord::positive(
            format!("lift-fixture-{name}"),
            functor_battery(&cat, functor, params, &mut stream),
        ));
    }
    // An entrywise shift is not a functor and must be rejected.
    let broken = FunctorData::new(
        "shift",
        Variance::Covariant,
        Arc::new(|o| o),
        Arc::new(|m: &RatMatrix| {
            RatMatrix::from_fn(m.rows(), m.cols(), |i, j| m.get(i, j) + &Rat::one())
        }),
    );
    let mut stream = rng.fork(0xbad);
    records.push(CheckRecord::negative(
        "zz-negative-broken-action",
        expect_rejection(
            "functor validation",
            lift_functor(&cat, &broken, params.samples.clamp(10, 20), params.max_dim, &mut stream),
        ),
    ));
    records
}

pub fn nat_trans_lift(params: &SuiteParams, _fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let cat = ConcreteCategory::mat_q();
    let mut rng = Rng::new(params.seed);
    let mut records = Vec::new();
    let fixtures = [
        ("identity", identity_nat_trans(&identity_functor())),
        ("scalar-2", scalar_nat_trans(&identity_functor(), Rat::from_int(2))),
        (
            "scalar-neg-5-3",
            scalar_nat_trans(&identity_functor(), Rat::new(-5, 3)),
        ),
    ];
    for (label, eta) in fixtures {
        let mut stream = rng.fork(label.len() as u64);
        match lift_nat_trans(&cat, &eta, params.samples.min(20), params.max_dim, &mut stream) {
            Ok(lifted) => {
                records.push(CheckRecord::positive(
                    format!("cubes-{label}"),
                    check_naturality_cubes_sampled(
                        &cat,
                        &lifted,
                        params.samples,
                        params.max_dim,
                        &mut stream,
                    ),
                ));
                // Invertible components lift to invertible squares.
                let mut verdict = Verdict::Pass;
                for case in 0..params.samples {
                    let obj = match random_arrow_object(&cat, &mut stream, params.max_dim) {
                        Ok(o) => o,
                        Err(e) => {
                            verdict = Verdict::fail("component sampling", e.to_string());
                            break;
                        }
                    };
                    match lifted.component_at(&cat, &obj) {
                        Ok(comp) if comp.components_invertible() => {}
                        Ok(_) => {
                            verdict = Verdict::fail(
                                "component invertibility",
                                format!("case {case} has a singular component"),
                            );
                            break;
                        }
                        Err(e) => {
                            verdict = Verdict::fail("component validity", e.to_string());
                            break;
                        }
                    }
                }
                records.push(CheckRecord::positive(format!("invertible-{label}"), verdict));
            }
            Err(e) => {
                records.push(CheckRecord::positive(
                    format!("cubes-{label}"),
                    Verdict::fail("ambient naturality", e.to_string()),
                ));
            }
        }
    }
    // A shear at dimension 2 is not natural for the identity functor.
    let shear = identity_nat_trans(&identity_functor()).with_component(Arc::new(|obj| {
        let mut m = RatMatrix::identity(obj);
        if obj >= 2 {
            m.set(0, 1, Rat::one());
        }
        m
    }));
    let mut stream = rng.fork(0xbad);
    records.push(CheckRecord::negative(
        "zz-negative-shear-component",
        expect_rejection(
            "naturality validation",
            lift_nat_trans(&cat, &shear, params.samples.max(10), params.max_dim, &mut stream),
        ),
    ));
    records
}

fn slug(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '-' })
        .collect()
}

pub fn equivalence(params: &SuiteParams, _fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let cat = ConcreteCategory::mat_q();
    let mut rng = Rng::new(params.seed);
    let mut records = Vec::new();

    // Identity equivalence.
    let id = identity_functor();
    let report = check_equivalence(
        &cat,
        &id,
        &id,
        &identity_nat_trans(&id),
        &identity_nat_trans(&id),
        params.samples,
        params.max_dim,
        &mut rng,
    );
    for (name, verdict) in report.checks {
        records.push(CheckRecord::positive(format!("identity-{}", slug(&name)), verdict));
    }

    // Conjugation by a family P against conjugation by P^-1; the composite
    // functors are the identity on the nose, so the isomorphisms are too.
    let family = conjugation_family(params.seed ^ 0x9a);
    let inverse_family = {
        let fam = family.clone();
        Arc::new(move |dim: usize| invert(&fam(dim)).expect("family is invertible"))
    };
    let f = conjugation_functor("conj-p", family);
    let g = conjugation_functor("conj-p-inv", inverse_family);
    let report = check_equivalence(
        &cat,
        &f,
        &g,
        &identity_nat_trans(&id),
        &identity_nat_trans(&id),
        params.samples,
        params.max_dim,
        &mut rng,
    );
    for (name, verdict) in report.checks {
        records.push(CheckRecord::positive(format!("conjugation-{}", slug(&name)), verdict));
    }

    // Corrupting one component of eps must surface as a failing cube.
    let corrupted = identity_nat_trans(&id).with_component(Arc::new(|obj| {
        let mut m = RatMatrix::identity(obj);
        if obj == 2 {
            m.set(0, 1, Rat::one());
        }
        m
    }));
    let report = check_equivalence(
        &cat,
        &id,
        &id,
        &corrupted,
        &identity_nat_trans(&id),
        params.samples.max(10),
        params.max_dim.max(2),
        &mut rng,
    );
    let verdict = if report.all_pass() {
        Verdict::Pass
    } else {
        let (name, v) = report.first_failure().unwrap();
        Verdict::fail(
            "equivalence data",
            format!("{name}: {}", v.failure().map(|f| f.to_string()).unwrap_or_default()),
        )
    };
    records.push(CheckRecord::negative("zz-negative-corrupted-eps", verdict));
    records
}

pub fn dagger(params: &SuiteParams, _fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let mut rng = Rng::new(params.seed);
    let cat = ConcreteCategory::mat_q_unitary();
    let mut records = Vec::new();
    for case in 0..params.samples {
        let verdict = (|| {
            let law = "dagger";
            let phi = match random_unitary_square(&mut rng, params.max_dim) {
                Ok(phi) => phi,
                Err(e) => return Verdict::fail(law, format!("sampling: {e}")),
            };
            let dag = match arrow_dagger(&phi) {
                Ok(d) => d,
                Err(e) => return Verdict::fail(law, format!("dagger of unitary square: {e}")),
            };
            let double = arrow_dagger(&dag).unwrap();
            let v = eq_squares(law, "involutivity", &double, &phi);
            if !v.is_pass() {
                return v;
            }
            let psi = match random_square_from(&cat, &mut rng, phi.target().clone(), params.max_dim)
            {
                Ok(psi) => psi,
                Err(e) => return Verdict::fail(law, format!("sampling: {e}")),
            };
            let lhs = arrow_dagger(&arrow_compose(&psi, &phi).unwrap()).unwrap();
            let rhs =
                arrow_compose(&arrow_dagger(&phi).unwrap(), &arrow_dagger(&psi).unwrap()).unwrap();
            let v = eq_squares(law, "contravariance", &lhs, &rhs);
            if !v.is_pass() {
                return v;
            }
            let id = arrow_id(phi.source());
            eq_squares(law, "id dagger", &arrow_dagger(&id).unwrap(), &id)
        })();
        records.push(CheckRecord::positive(format!("unitary-square-{case:03}"), verdict));
    }
    // Non-unitary components must be refused.
    let cat_q = ConcreteCategory::mat_q();
    let f = ArrowObject::identity_on(&cat_q, 2).unwrap();
    let scaled = RatMatrix::identity(2).scale(&Rat::from_int(2));
    let phi = ArrowMorphism::new(f.clone(), f, scaled.clone(), scaled).unwrap();
    records.push(CheckRecord::negative(
        "zz-negative-non-unitary",
        expect_rejection("unitarity", arrow_dagger(&phi)),
    ));
    records
}
