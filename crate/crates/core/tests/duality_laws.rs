//! Duality, pivot and twist batteries: existence of duals is decided three
//! independent ways and the results must agree everywhere.

use arrowcat_core::arrowcat::{random_arrow_iso, random_square_from, ArrowObject};
use arrowcat_core::duality::{
    check_pivot_monoidal, check_pivot_naturality, check_snake_arrow, check_twist_axioms,
    dual_solvability_oracle, has_dual, inverse_from_duality, make_arrow_dual, pivot_arrow,
    twist_arrow, DualSolvability,
};
use arrowcat_core::exactmat::{
    invert, random_int_matrix, ConcreteCategory, Rat, RatMatrix, Rng,
};
use arrowcat_core::monoidal::MonoidalStructure;

fn ms_q() -> MonoidalStructure {
    MonoidalStructure::new(ConcreteCategory::mat_q())
}

/// Exhaustive sweep: every 2x2 matrix with entries in {0, 1}.
#[test]
fn exhaustive_01_sweep_agrees_with_oracle() {
    let ms = ms_q();
    let mut invertible_count = 0;
    for bits in 0..16u32 {
        let entries: Vec<i64> = (0..4).map(|k| ((bits >> k) & 1) as i64).collect();
        let m = RatMatrix::from_int_rows(&[&entries[0..2], &entries[2..4]]);
        let f = ArrowObject::from_map(ms.category(), m.clone()).unwrap();
        let invertible = invert(&m).is_ok();
        assert_eq!(has_dual(&f), invertible, "has_dual disagrees on {m}");
        match dual_solvability_oracle(&ms, &f).unwrap() {
            DualSolvability::Feasible(x) => {
                assert!(invertible, "oracle feasible on singular {m}");
                assert_eq!(x, invert(&m).unwrap().transpose());
                invertible_count += 1;
            }
            DualSolvability::Infeasible => assert!(!invertible, "oracle infeasible on {m}"),
        }
    }
    // 6 of the 16 such matrices are invertible.
    assert_eq!(invertible_count, 6);
}

#[test]
fn random_sweep_agrees_with_oracle() {
    let ms = ms_q();
    let mut rng = Rng::new(10);
    for case in 0..200 {
        let rows = 1 + rng.below(3);
        let cols = 1 + rng.below(3);
        let m = random_int_matrix(&mut rng, rows, cols, 2);
        let f = ArrowObject::from_map(ms.category(), m.clone()).unwrap();
        let feasible = matches!(
            dual_solvability_oracle(&ms, &f).unwrap(),
            DualSolvability::Feasible(_)
        );
        assert_eq!(has_dual(&f), feasible, "case {case}: disagreement on {m}");
    }
}

#[test]
fn snakes_and_graphical_inverse_on_invertible_fixtures() {
    let ms = ms_q();
    let mut rng = Rng::new(11);
    for _ in 0..50 {
        let f = random_arrow_iso(ms.category(), &mut rng, 4).unwrap();
        let dual = make_arrow_dual(&ms, &f).unwrap();
        assert!(check_snake_arrow(&ms, &dual).is_pass());
        // The oracle's unique solution is the inverse-transpose.
        match dual_solvability_oracle(&ms, &f).unwrap() {
            DualSolvability::Feasible(x) => assert_eq!(&x, dual.dual().map()),
            DualSolvability::Infeasible => panic!("invertible fixture must be feasible"),
        }
        let graphical = inverse_from_duality(&ms, &f).unwrap();
        assert_eq!(graphical, invert(f.map()).unwrap());
    }
}

#[test]
fn non_invertible_fixtures_are_infeasible() {
    let ms = ms_q();
    let mut rng = Rng::new(12);
    let mut done = 0;
    while done < 50 {
        let rows = 1 + rng.below(3);
        let cols = 1 + rng.below(3);
        let m = random_int_matrix(&mut rng, rows, cols, 2);
        if invert(&m).is_ok() {
            continue;
        }
        let f = ArrowObject::from_map(ms.category(), m).unwrap();
        assert!(!has_dual(&f));
        assert_eq!(
            dual_solvability_oracle(&ms, &f).unwrap(),
            DualSolvability::Infeasible
        );
        assert!(make_arrow_dual(&ms, &f).is_err());
        done += 1;
    }
}

#[test]
fn pivot_and_twist_suites_on_the_core() {
    let ms = MonoidalStructure::new(ConcreteCategory::mat_q_core());
    let mut rng = Rng::new(13);
    for _ in 0..50 {
        let f = random_arrow_iso(ms.category(), &mut rng, 3).unwrap();
        let g = random_arrow_iso(ms.category(), &mut rng, 3).unwrap();

        let pivot = pivot_arrow(&ms, &f).unwrap();
        assert!(pivot.top().is_identity() && pivot.bottom().is_identity());
        let phi = random_square_from(ms.category(), &mut rng, f.clone(), 3).unwrap();
        assert!(check_pivot_naturality(&ms, &phi).is_pass());
        assert!(check_pivot_monoidal(&ms, &f, &g).is_pass());

        let twist = twist_arrow(&ms, &f).unwrap();
        assert!(twist.top().is_identity() && twist.bottom().is_identity());
        assert!(check_twist_axioms(&ms, &f, &g).is_pass());
    }
}

#[test]
fn corrupted_coeval_is_caught_by_the_snake_check() {
    use arrowcat_core::duality::DualityData;
    use std::sync::Arc;
    let corrupted = DualityData::standard_mat().with_coeval(Arc::new(|n| {
        let mut b = RatMatrix::zeros(n * n, 1);
        for i in 0..n {
            b.set(i * n + i, 0, Rat::from_int(3));
        }
        b
    }));
    let cat = ConcreteCategory::mat_q().with_duality(corrupted);
    let ms = MonoidalStructure::new(cat);
    let mut rng = Rng::new(14);
    let f = random_arrow_iso(ms.category(), &mut rng, 3).unwrap();
    assert!(make_arrow_dual(&ms, &f).is_err());
}
