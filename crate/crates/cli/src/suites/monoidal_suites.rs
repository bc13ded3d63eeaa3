//! Monoidal suites: coherence of the pointwise tensor, braiding and
//! symmetry, and monoidal functor and natural transformation lifts.

use super::{expect_rejection, SuiteParams};
use crate::fixtures::FixtureSet;
use crate::report::CheckRecord;
use arrowcat_core::arrowcat::{
    lift_nat_trans, random_arrow_morphism, random_arrow_object, random_square_from, ArrowObject,
};
use arrowcat_core::exactmat::{commutation_matrix, ConcreteCategory, Rat, RatMatrix, Rng};
use arrowcat_core::monoidal::{
    check_braided_functor_cube, check_braiding_naturality, check_hexagons, check_interchange,
    check_monoidal_functor_cubes, check_monoidal_nat_trans_lift, check_pentagon, check_symmetry,
    check_triangle, identity_monoidal_functor, lax_doubling_functor, lift_monoidal_functor,
    squaring_monoidal_functor, swap_monoidal_nat_trans, validate_monoidal_nat_trans,
    LiftedMonoidalFunctor, MonoidalStructure,
};
use arrowcat_core::verdict::Verdict;
use std::sync::Arc;

fn sample_objects(
    ms: &MonoidalStructure,
    rng: &mut Rng,
    max_dim: usize,
    count: usize,
) -> Result<Vec<ArrowObject>, Verdict> {
    (0..count)
        .map(|_| {
            random_arrow_object(ms.category(), rng, max_dim)
                .map_err(|e| Verdict::fail("sampling", e.to_string()))
        })
        .collect()
}

pub fn monoidal_coherence(params: &SuiteParams, _fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let mut records = Vec::new();
    for (label, cat) in [
        ("matn", ConcreteCategory::mat_n()),
        ("matq", ConcreteCategory::mat_q()),
    ] {
        let ms = MonoidalStructure::new(cat);
        let mut rng = Rng::new(params.seed ^ label.len() as u64);
        for case in 0..params.samples {
            let verdict = match sample_objects(&ms, &mut rng, params.max_dim, 4) {
                Ok(fs) => check_pentagon(&ms, &fs[0], &fs[1], &fs[2], &fs[3]),
                Err(v) => v,
            };
            records.push(CheckRecord::positive(format!("pentagon-{label}-{case:03}"), verdict));

            let verdict = match sample_objects(&ms, &mut rng, params.max_dim, 2) {
                Ok(fs) => check_triangle(&ms, &fs[0], &fs[1]),
                Err(v) => v,
            };
            records.push(CheckRecord::positive(format!("triangle-{label}-{case:03}"), verdict));

            let verdict = (|| {
                let phi = random_arrow_morphism(ms.category(), &mut rng, params.max_dim)
                    .map_err(|e| Verdict::fail("sampling", e.to_string()))?;
                let phi2 = random_square_from(ms.category(), &mut rng, phi.target().clone(), params.max_dim)
                    .map_err(|e| Verdict::fail("sampling", e.to_string()))?;
                let psi = random_arrow_morphism(ms.category(), &mut rng, params.max_dim)
                    .map_err(|e| Verdict::fail("sampling", e.to_string()))?;
                let psi2 = random_square_from(ms.category(), &mut rng, psi.target().clone(), params.max_dim)
                    .map_err(|e| Verdict::fail("sampling", e.to_string()))?;
                Ok(check_interchange(&ms, &phi, &phi2, &psi, &psi2))
            })();
            records.push(CheckRecord::positive(
                format!("interchange-{label}-{case:03}"),
                match verdict {
                    Ok(v) | Err(v) => v,
                },
            ));
        }
    }

    // Negative controls: a commutation matrix posing as the associator of
    // dimension 4, and a doubled left unitor.
    let corrupted = ConcreteCategory::mat_q().with_associator(Arc::new(|a, b, c| {
        if a * b * c == 4 {
            commutation_matrix(2, 2)
        } else {
            RatMatrix::identity(a * b * c)
        }
    }));
    let ms = MonoidalStructure::new(corrupted);
    let mut rng = Rng::new(params.seed);
    let verdict = (0..20)
        .find_map(|_| {
            let fs = sample_objects(&ms, &mut rng, 2, 4).ok()?;
            let v = check_pentagon(&ms, &fs[0], &fs[1], &fs[2], &fs[3]);
            (!v.is_pass()).then_some(v)
        })
        .unwrap_or(Verdict::Pass);
    records.push(CheckRecord::negative("zz-negative-corrupted-associator", verdict));

    let corrupted = ConcreteCategory::mat_q()
        .with_left_unitor(Arc::new(|a| RatMatrix::identity(a).scale(&Rat::from_int(2))));
    let ms = MonoidalStructure::new(corrupted);
    let verdict = match sample_objects(&ms, &mut rng, params.max_dim, 2) {
        Ok(fs) => check_triangle(&ms, &fs[0], &fs[1]),
        Err(v) => v,
    };
    records.push(CheckRecord::negative("zz-negative-corrupted-unitor", verdict));
    records
}

pub fn braiding_symmetry(params: &SuiteParams, _fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let mut records = Vec::new();
    for (label, cat) in [
        ("matn", ConcreteCategory::mat_n()),
        ("matq", ConcreteCategory::mat_q()),
    ] {
        let ms = MonoidalStructure::new(cat);
        let mut rng = Rng::new(params.seed ^ label.len() as u64);
        for case in 0..params.samples {
            let verdict = match sample_objects(&ms, &mut rng, params.max_dim, 3) {
                Ok(fs) => check_hexagons(&ms, &fs[0], &fs[1], &fs[2]),
                Err(v) => v,
            };
            records.push(CheckRecord::positive(format!("hexagons-{label}-{case:03}"), verdict));

            let verdict = match sample_objects(&ms, &mut rng, params.max_dim, 2) {
                Ok(fs) => check_symmetry(&ms, &fs[0], &fs[1]),
                Err(v) => v,
            };
            records.push(CheckRecord::positive(format!("symmetry-{label}-{case:03}"), verdict));

            let verdict = (|| {
                let phi = random_arrow_morphism(ms.category(), &mut rng, params.max_dim)
                    .map_err(|e| Verdict::fail("sampling", e.to_string()))?;
                let psi = random_arrow_morphism(ms.category(), &mut rng, params.max_dim)
                    .map_err(|e| Verdict::fail("sampling", e.to_string()))?;
                Ok(check_braiding_naturality(&ms, &phi, &psi))
            })();
            records.push(CheckRecord::positive(
                format!("naturality-{label}-{case:03}"),
                match verdict {
                    Ok(v) | Err(v) => v,
                },
            ));
        }
    }

    // Identity posing as the braiding: the lifted braiding square itself
    // stops commuting on generic objects.
    let corrupted =
        ConcreteCategory::mat_q().with_braiding(Arc::new(|a, b| RatMatrix::identity(a * b)));
    let ms = MonoidalStructure::new(corrupted);
    let f = ArrowObject::from_map(ms.category(), RatMatrix::from_int_rows(&[&[1], &[2]])).unwrap();
    let g = ArrowObject::from_map(
        ms.category(),
        RatMatrix::from_int_rows(&[&[3], &[5], &[7]]),
    )
    .unwrap();
    records.push(CheckRecord::negative(
        "zz-negative-fake-braiding-symmetry",
        check_symmetry(&ms, &f, &g),
    ));
    records.push(CheckRecord::negative(
        "zz-negative-fake-braiding-hexagon",
        check_hexagons(&ms, &f, &g, &f),
    ));
    records
}

pub fn monoidal_functor_lift(params: &SuiteParams, _fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let ms = MonoidalStructure::new(ConcreteCategory::mat_q());
    let mut records = Vec::new();
    // Tensor cubes on the squaring functor grow as dim^6; cap the sampled
    // dimensions so exact arithmetic stays at desk scale.
    let fixtures: [(&str, _, usize); 3] = [
        ("identity", identity_monoidal_functor(), params.max_dim),
        ("squaring", squaring_monoidal_functor(), 2),
        ("doubling-lax", lax_doubling_functor(), 2),
    ];
    for (label, data, dim_cap) in fixtures {
        let mut rng = Rng::new(params.seed ^ label.len() as u64);
        let cases = params.samples.min(12);
        let verdict = (|| {
            let lifted = lift_monoidal_functor(ms.category(), &data, cases, dim_cap, &mut rng)
                .map_err(|e| Verdict::fail("ambient monoidal validation", e.to_string()))?;
            for _ in 0..cases {
                let fs = sample_objects(&ms, &mut rng, dim_cap, 3)?;
                let v = check_monoidal_functor_cubes(&ms, &lifted, &fs[0], &fs[1], &fs[2]);
                if !v.is_pass() {
                    return Err(v);
                }
                let v = check_braided_functor_cube(&ms, &lifted, &fs[0], &fs[1]);
                if !v.is_pass() {
                    return Err(v);
                }
            }
            Ok(Verdict::Pass)
        })();
        records.push(CheckRecord::positive(
            format!("cubes-{label}"),
            match verdict {
                Ok(v) | Err(v) => v,
            },
        ));
    }

    // The swap transformation on the squaring functor is monoidal and lifts.
    let verdict = (|| {
        let mut rng = Rng::new(params.seed ^ 0x577a9);
        let squaring = squaring_monoidal_functor();
        let swap = swap_monoidal_nat_trans();
        validate_monoidal_nat_trans(ms.category(), &swap, &squaring, &squaring, 10, 2, &mut rng)
            .map_err(|e| Verdict::fail("ambient monoidal nat trans", e.to_string()))?;
        let lifted_f = lift_monoidal_functor(ms.category(), &squaring, 8, 2, &mut rng)
            .map_err(|e| Verdict::fail("ambient monoidal validation", e.to_string()))?;
        let lifted_eta = lift_nat_trans(ms.category(), &swap, 10, 2, &mut rng)
            .map_err(|e| Verdict::fail("ambient naturality", e.to_string()))?;
        for _ in 0..params.samples.min(8) {
            let fs = sample_objects(&ms, &mut rng, 2, 2)?;
            let v = check_monoidal_nat_trans_lift(&ms, &lifted_eta, &lifted_f, &lifted_f, &fs[0], &fs[1]);
            if !v.is_pass() {
                return Err(v);
            }
        }
        Ok(Verdict::Pass)
    })();
    records.push(CheckRecord::positive(
        "nat-trans-swap",
        match verdict {
            Ok(v) | Err(v) => v,
        },
    ));

    // Negative controls.
    let mut rng = Rng::new(params.seed ^ 0xbad);
    let corrupted = identity_monoidal_functor()
        .with_f0(RatMatrix::identity(1).scale(&Rat::from_int(2)));
    records.push(CheckRecord::negative(
        "zz-negative-corrupted-f0-ambient",
        expect_rejection(
            "ambient monoidal validation",
            lift_monoidal_functor(ms.category(), &corrupted, 5, 2, &mut rng),
        ),
    ));
    // Forced past ambient validation, the unitality prism catches it.
    let lifted = LiftedMonoidalFunctor::from_data_unchecked(ms.category(), corrupted);
    let verdict = match sample_objects(&ms, &mut rng, 2, 3) {
        Ok(fs) => check_monoidal_functor_cubes(&ms, &lifted, &fs[0], &fs[1], &fs[2]),
        Err(v) => v,
    };
    records.push(CheckRecord::negative("zz-negative-corrupted-f0-cube", verdict));

    let corrupted = squaring_monoidal_functor()
        .with_f2(Arc::new(|a, b| RatMatrix::identity(a * a * b * b)));
    let lifted = LiftedMonoidalFunctor::from_data_unchecked(ms.category(), corrupted);
    let verdict = (0..10)
        .find_map(|_| {
            let fs = sample_objects(&ms, &mut rng, 2, 2).ok()?;
            let v = check_braided_functor_cube(&ms, &lifted, &fs[0], &fs[1]);
            (!v.is_pass()).then_some(v)
        })
        .unwrap_or(Verdict::Pass);
    records.push(CheckRecord::negative("zz-negative-corrupted-f2-braided", verdict));

    // A unit component scaled to 2 breaks the unit prism of the monoidal
    // natural transformation axioms.
    let corrupted_eta = arrowcat_core::arrowcat::identity_nat_trans(
        &arrowcat_core::arrowcat::identity_functor(),
    )
    .with_component(Arc::new(|a| {
        if a == 1 {
            RatMatrix::identity(1).scale(&Rat::from_int(2))
        } else {
            RatMatrix::identity(a)
        }
    }));
    let data = identity_monoidal_functor();
    records.push(CheckRecord::negative(
        "zz-negative-corrupted-unit-component",
        expect_rejection(
            "monoidal nat trans validation",
            validate_monoidal_nat_trans(
                ms.category(),
                &corrupted_eta,
                &data,
                &data,
                10,
                2,
                &mut rng,
            ),
        ),
    ));
    records
}
