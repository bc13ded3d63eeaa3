//! Duality suites: exhaustive and randomized dual-existence sweeps, snake
//! identities, the cup/cap inverse, and pivot/ribbon structure on the core.

use super::SuiteParams;
use crate::fixtures::FixtureSet;
use crate::report::CheckRecord;
use arrowcat_core::arrowcat::{random_arrow_iso, random_square_from, ArrowObject};
use arrowcat_core::duality::{
    assemble_arrow_dual, check_pivot_monoidal, check_pivot_naturality, check_snake_arrow,
    check_twist_axioms, dual_solvability_oracle, has_dual, inverse_from_duality, make_arrow_dual,
    pivot_arrow, twist_arrow, DualSolvability, DualityData, PivotTwistData,
};
use arrowcat_core::exactmat::{
    invert, random_int_matrix, ConcreteCategory, Rat, RatMatrix, Rng,
};
use arrowcat_core::monoidal::MonoidalStructure;
use arrowcat_core::verdict::Verdict;
use std::sync::Arc;

/// Agreement of the three dual-existence routes on one object.
fn existence_agreement(ms: &MonoidalStructure, f: &ArrowObject) -> Verdict {
    let law = "dual existence";
    let invertible = invert(f.map()).is_ok();
    if has_dual(f) != invertible {
        return Verdict::fail(law, format!("has_dual disagrees with elimination on {f}"));
    }
    match dual_solvability_oracle(ms, f) {
        Ok(DualSolvability::Feasible(x)) => {
            if !invertible {
                return Verdict::fail(law, format!("oracle feasible on singular {f}"));
            }
            let expected = invert(f.map()).unwrap().transpose();
            if x != expected {
                return Verdict::fail(
                    law,
                    format!("oracle solution {x} differs from inverse-transpose {expected}"),
                );
            }
            Verdict::Pass
        }
        Ok(DualSolvability::Infeasible) => {
            if invertible {
                Verdict::fail(law, format!("oracle infeasible on invertible {f}"))
            } else {
                Verdict::Pass
            }
        }
        Err(e) => Verdict::fail(law, e.to_string()),
    }
}

fn invertible_battery(ms: &MonoidalStructure, f: &ArrowObject) -> Verdict {
    let law = "rigidity";
    let dual = match make_arrow_dual(ms, f) {
        Ok(d) => d,
        Err(e) => return Verdict::fail(law, format!("dual construction: {e}")),
    };
    let v = check_snake_arrow(ms, &dual);
    if !v.is_pass() {
        return v;
    }
    match dual_solvability_oracle(ms, f) {
        Ok(DualSolvability::Feasible(x)) => {
            if &x != dual.dual().map() {
                return Verdict::fail(law, "oracle solution differs from constructed dual");
            }
        }
        _ => return Verdict::fail(law, "oracle must be feasible on an isomorphism"),
    }
    match inverse_from_duality(ms, f) {
        Ok(graphical) => {
            let direct = invert(f.map()).unwrap();
            if graphical != direct {
                return Verdict::fail(
                    law,
                    format!("cup/cap inverse {graphical} differs from elimination {direct}"),
                );
            }
            Verdict::Pass
        }
        Err(e) => Verdict::fail(law, format!("cup/cap inverse: {e}")),
    }
}

pub fn duality(params: &SuiteParams, fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let ms = MonoidalStructure::new(ConcreteCategory::mat_q());
    let mut records = Vec::new();

    // Exhaustive sweep of all 2x2 matrices over {0, 1}.
    for bits in 0..16u32 {
        let entries: Vec<i64> = (0..4).map(|k| ((bits >> k) & 1) as i64).collect();
        let m = RatMatrix::from_int_rows(&[&entries[0..2], &entries[2..4]]);
        let f = ArrowObject::from_map(ms.category(), m).unwrap();
        records.push(CheckRecord::positive(
            format!("sweep-{bits:02}"),
            existence_agreement(&ms, &f),
        ));
    }

    let mut rng = Rng::new(params.seed);
    for case in 0..params.samples {
        let verdict = match random_arrow_iso(ms.category(), &mut rng, params.max_dim) {
            Ok(f) => invertible_battery(&ms, &f),
            Err(e) => Verdict::fail("sampling", e.to_string()),
        };
        records.push(CheckRecord::positive(format!("invertible-{case:03}"), verdict));
    }

    let mut produced = 0;
    let mut attempts = 0;
    while produced < params.samples && attempts < params.samples * 40 {
        attempts += 1;
        let rows = 1 + rng.below(params.max_dim);
        let cols = 1 + rng.below(params.max_dim);
        let m = random_int_matrix(&mut rng, rows, cols, 2);
        if invert(&m).is_ok() {
            continue;
        }
        let f = ArrowObject::from_map(ms.category(), m).unwrap();
        let verdict = match dual_solvability_oracle(&ms, &f) {
            Ok(DualSolvability::Infeasible) if !has_dual(&f) => Verdict::Pass,
            Ok(DualSolvability::Infeasible) => {
                Verdict::fail("dual existence", "has_dual true on singular object")
            }
            Ok(DualSolvability::Feasible(_)) => {
                Verdict::fail("dual existence", format!("oracle feasible on singular {f}"))
            }
            Err(e) => Verdict::fail("dual existence", e.to_string()),
        };
        records.push(CheckRecord::positive(
            format!("singular-{produced:03}"),
            verdict,
        ));
        produced += 1;
    }

    for (name, m) in &fixtures.matrices {
        let f = match ArrowObject::from_map(ms.category(), m.clone()) {
            Ok(f) => f,
            Err(e) => {
                records.push(CheckRecord::positive(
                    format!("fixture-{name}"),
                    Verdict::fail("fixture object", e.to_string()),
                ));
                continue;
            }
        };
        records.push(CheckRecord::positive(
            format!("fixture-{name}"),
            existence_agreement(&ms, &f),
        ));
    }

    // Coevaluation scaled by 3: both lifted squares still commute, but the
    // zig-zags evaluate to 3 * id.
    let corrupted = DualityData::standard_mat().with_coeval(Arc::new(|n| {
        let mut b = RatMatrix::zeros(n * n, 1);
        for i in 0..n {
            b.set(i * n + i, 0, Rat::from_int(3));
        }
        b
    }));
    let cat = ConcreteCategory::mat_q().with_duality(corrupted);
    let ms_bad = MonoidalStructure::new(cat);
    let mut rng = Rng::new(params.seed ^ 0xbad);
    let verdict = match random_arrow_iso(ms_bad.category(), &mut rng, params.max_dim) {
        Ok(f) => match assemble_arrow_dual(&ms_bad, &f) {
            Ok(dual) => check_snake_arrow(&ms_bad, &dual),
            Err(e) => Verdict::fail("dual assembly", e.to_string()),
        },
        Err(e) => Verdict::fail("sampling", e.to_string()),
    };
    records.push(CheckRecord::negative("zz-negative-scaled-coeval", verdict));
    records
}

pub fn pivot_ribbon(params: &SuiteParams, _fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let ms = MonoidalStructure::new(ConcreteCategory::mat_q_core());
    let mut rng = Rng::new(params.seed);
    let mut records = Vec::new();
    for case in 0..params.samples {
        let verdict = (|| {
            let law = "pivot-ribbon";
            let f = random_arrow_iso(ms.category(), &mut rng, params.max_dim)
                .map_err(|e| Verdict::fail(law, format!("sampling: {e}")))?;
            let g = random_arrow_iso(ms.category(), &mut rng, params.max_dim)
                .map_err(|e| Verdict::fail(law, format!("sampling: {e}")))?;

            let pivot = pivot_arrow(&ms, &f)
                .map_err(|e| Verdict::fail(law, format!("pivot construction: {e}")))?;
            if !(pivot.top().is_identity() && pivot.bottom().is_identity()) {
                return Err(Verdict::fail(law, "pivot components must be identities here"));
            }
            let phi = random_square_from(ms.category(), &mut rng, f.clone(), params.max_dim)
                .map_err(|e| Verdict::fail(law, format!("sampling: {e}")))?;
            let v = check_pivot_naturality(&ms, &phi);
            if !v.is_pass() {
                return Err(v);
            }
            let v = check_pivot_monoidal(&ms, &f, &g);
            if !v.is_pass() {
                return Err(v);
            }

            let twist = twist_arrow(&ms, &f)
                .map_err(|e| Verdict::fail(law, format!("twist construction: {e}")))?;
            if !(twist.top().is_identity() && twist.bottom().is_identity()) {
                return Err(Verdict::fail(law, "twist components must be identities here"));
            }
            Ok(check_twist_axioms(&ms, &f, &g))
        })();
        records.push(CheckRecord::positive(
            format!("pivot-twist-{case:03}"),
            match verdict {
                Ok(v) | Err(v) => v,
            },
        ));
    }

    // A twist of 2 * id fails the tensor cube, the unit law and dual
    // compatibility alike.
    let corrupted = PivotTwistData::identity_mat()
        .with_twist(Arc::new(|n| RatMatrix::identity(n).scale(&Rat::from_int(2))));
    let cat = ConcreteCategory::mat_q_core().with_pivot_twist(corrupted);
    let ms_bad = MonoidalStructure::new(cat);
    let mut rng = Rng::new(params.seed ^ 0xbad);
    let verdict = (|| {
        let f = random_arrow_iso(ms_bad.category(), &mut rng, params.max_dim)
            .map_err(|e| Verdict::fail("sampling", e.to_string()))?;
        let g = random_arrow_iso(ms_bad.category(), &mut rng, params.max_dim)
            .map_err(|e| Verdict::fail("sampling", e.to_string()))?;
        Ok(check_twist_axioms(&ms_bad, &f, &g))
    })();
    records.push(CheckRecord::negative(
        "zz-negative-scaled-twist",
        match verdict {
            Ok(v) | Err(v) => v,
        },
    ));

    // A pivot of 2 * id stays natural but is not monoidal.
    let corrupted = PivotTwistData::identity_mat()
        .with_pivot(Arc::new(|n| RatMatrix::identity(n).scale(&Rat::from_int(2))));
    let cat = ConcreteCategory::mat_q_core().with_pivot_twist(corrupted);
    let ms_bad = MonoidalStructure::new(cat);
    let verdict = (|| {
        let f = random_arrow_iso(ms_bad.category(), &mut rng, params.max_dim)
            .map_err(|e| Verdict::fail("sampling", e.to_string()))?;
        let g = random_arrow_iso(ms_bad.category(), &mut rng, params.max_dim)
            .map_err(|e| Verdict::fail("sampling", e.to_string()))?;
        Ok(check_pivot_monoidal(&ms_bad, &f, &g))
    })();
    records.push(CheckRecord::negative(
        "zz-negative-scaled-pivot",
        match verdict {
            Ok(v) | Err(v) => v,
        },
    ));
    records
}
