//! Seeded law batteries for the arrow category construction and the lifts.

use arrowcat_core::arrowcat::{
    arrow_compose, arrow_dagger, arrow_id, check_naturality_cubes_sampled, conjugation_family,
    conjugation_functor, identity_functor, identity_nat_trans, lift_functor, lift_nat_trans,
    random_arrow_morphism, random_square_from, random_unitary_square, rank_profile_square,
    scalar_nat_trans, transpose_functor, ArrowMorphism, ArrowObject,
};
use arrowcat_core::exactmat::{ConcreteCategory, Rat, RatMatrix, Rng};
use arrowcat_core::monoidal::{
    check_braiding_naturality, check_hexagons, check_interchange, check_pentagon, check_symmetry,
    check_triangle, MonoidalStructure,
};

#[test]
fn two_hundred_commuting_squares_compose_exactly() {
    let cat = ConcreteCategory::mat_q();
    let mut rng = Rng::new(0);
    for case in 0..200 {
        let phi = if case % 4 == 0 {
            rank_profile_square(&cat, &mut rng, 3).unwrap()
        } else {
            random_arrow_morphism(&cat, &mut rng, 3).unwrap()
        };
        // Identity laws.
        let id_src = arrow_id(phi.source());
        let id_dst = arrow_id(phi.target());
        assert_eq!(arrow_compose(&phi, &id_src).unwrap(), phi);
        assert_eq!(arrow_compose(&id_dst, &phi).unwrap(), phi);

        // Associativity of composition.
        let psi = random_square_from(&cat, &mut rng, phi.target().clone(), 3).unwrap();
        let chi = random_square_from(&cat, &mut rng, psi.target().clone(), 3).unwrap();
        let left = arrow_compose(&chi, &arrow_compose(&psi, &phi).unwrap()).unwrap();
        let right = arrow_compose(&arrow_compose(&chi, &psi).unwrap(), &phi).unwrap();
        assert_eq!(left, right);
    }
}

#[test]
fn non_commuting_pairs_are_rejected() {
    let cat = ConcreteCategory::mat_q();
    let f = ArrowObject::from_map(&cat, RatMatrix::from_int_rows(&[&[1, 1], &[0, 1]])).unwrap();
    let g = ArrowObject::from_map(&cat, RatMatrix::from_int_rows(&[&[1, 0], &[1, 1]])).unwrap();
    let top = RatMatrix::identity(2);
    let bottom = RatMatrix::identity(2);
    assert!(ArrowMorphism::new(f, g, top, bottom).is_err());
}

#[test]
fn functor_lifts_preserve_identities_and_composition() {
    let cat = ConcreteCategory::mat_q();
    let mut rng = Rng::new(1);
    for functor in [
        identity_functor(),
        transpose_functor(),
        conjugation_functor("conj", conjugation_family(7)),
    ] {
        let lifted = lift_functor(&cat, &functor, 20, 3, &mut rng).unwrap();
        for _ in 0..100 {
            let phi = random_arrow_morphism(&cat, &mut rng, 3).unwrap();
            let psi = random_square_from(&cat, &mut rng, phi.target().clone(), 3).unwrap();
            let composite = arrow_compose(&psi, &phi).unwrap();
            let image = lifted.apply_morphism(&cat, &composite).unwrap();
            let expected = match lifted.variance() {
                arrowcat_core::arrowcat::Variance::Covariant => arrow_compose(
                    &lifted.apply_morphism(&cat, &psi).unwrap(),
                    &lifted.apply_morphism(&cat, &phi).unwrap(),
                ),
                arrowcat_core::arrowcat::Variance::Contravariant => arrow_compose(
                    &lifted.apply_morphism(&cat, &phi).unwrap(),
                    &lifted.apply_morphism(&cat, &psi).unwrap(),
                ),
            }
            .unwrap();
            assert_eq!(image, expected, "functor {}", functor.name());

            let id_image = lifted
                .apply_morphism(&cat, &arrow_id(phi.source()))
                .unwrap();
            assert!(id_image.top().is_identity() && id_image.bottom().is_identity());
        }
    }
}

#[test]
fn nat_trans_cubes_commute_on_samples() {
    let cat = ConcreteCategory::mat_q();
    let mut rng = Rng::new(2);
    for eta in [
        identity_nat_trans(&identity_functor()),
        scalar_nat_trans(&identity_functor(), Rat::from_int(2)),
        scalar_nat_trans(&identity_functor(), Rat::new(-5, 3)),
    ] {
        let lifted = lift_nat_trans(&cat, &eta, 20, 3, &mut rng).unwrap();
        let verdict = check_naturality_cubes_sampled(&cat, &lifted, 50, 3, &mut rng);
        assert!(verdict.is_pass(), "{}: {verdict}", eta.name());
    }
}

#[test]
fn dagger_involutive_and_contravariant_on_unitary_squares() {
    let cat = ConcreteCategory::mat_q_unitary();
    let mut rng = Rng::new(3);
    for _ in 0..100 {
        let phi = random_unitary_square(&mut rng, 4).unwrap();
        let dag = arrow_dagger(&phi).unwrap();
        assert_eq!(arrow_dagger(&dag).unwrap(), phi);

        let psi = random_square_from(&cat, &mut rng, phi.target().clone(), 4).unwrap();
        let lhs = arrow_dagger(&arrow_compose(&psi, &phi).unwrap()).unwrap();
        let rhs = arrow_compose(&arrow_dagger(&phi).unwrap(), &arrow_dagger(&psi).unwrap()).unwrap();
        assert_eq!(lhs, rhs);

        let id = arrow_id(phi.source());
        assert_eq!(arrow_dagger(&id).unwrap(), id);
    }
}

#[test]
fn coherence_batteries_on_mat_n_and_mat_q() {
    for cat in [ConcreteCategory::mat_n(), ConcreteCategory::mat_q()] {
        let ms = MonoidalStructure::new(cat);
        let mut rng = Rng::new(4);
        for _ in 0..10 {
            let f = arrowcat_core::arrowcat::random_arrow_object(ms.category(), &mut rng, 4).unwrap();
            let g = arrowcat_core::arrowcat::random_arrow_object(ms.category(), &mut rng, 4).unwrap();
            let h = arrowcat_core::arrowcat::random_arrow_object(ms.category(), &mut rng, 4).unwrap();
            let k = arrowcat_core::arrowcat::random_arrow_object(ms.category(), &mut rng, 4).unwrap();
            assert!(check_pentagon(&ms, &f, &g, &h, &k).is_pass());
            assert!(check_triangle(&ms, &f, &g).is_pass());
            assert!(check_hexagons(&ms, &f, &g, &h).is_pass());
            assert!(check_symmetry(&ms, &f, &g).is_pass());
        }
        for _ in 0..20 {
            let phi = random_arrow_morphism(ms.category(), &mut rng, 3).unwrap();
            let phi2 = random_square_from(ms.category(), &mut rng, phi.target().clone(), 3).unwrap();
            let psi = random_arrow_morphism(ms.category(), &mut rng, 3).unwrap();
            let psi2 = random_square_from(ms.category(), &mut rng, psi.target().clone(), 3).unwrap();
            assert!(check_interchange(&ms, &phi, &phi2, &psi, &psi2).is_pass());
            assert!(check_braiding_naturality(&ms, &phi, &psi).is_pass());
        }
    }
}
