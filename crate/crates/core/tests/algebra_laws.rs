//! Algebra batteries: group algebras are Hopf, group homomorphisms lift to
//! Hopf objects of the arrow category, basis-copying algebras are special
//! dagger Frobenius under every permutation, and each negative control
//! fails.

use arrowcat_core::algebra::{
    basis_copying, check_arrow_bialgebra, check_arrow_comonoid, check_arrow_dagger_frobenius,
    check_arrow_frobenius, check_arrow_hopf, check_arrow_monoid, check_bialgebra_ambient,
    check_comonoid, check_monoid, is_structure_morphism, make_arrow_algebra, StructureKind,
};
use arrowcat_core::arrowcat::ArrowObject;
use arrowcat_core::exactmat::{
    group_algebra, hom_matrix, ConcreteCategory, GroupPresentation, RatMatrix,
};
use arrowcat_core::monoidal::MonoidalStructure;

fn ms_q() -> MonoidalStructure {
    MonoidalStructure::new(ConcreteCategory::mat_q())
}

#[test]
fn all_small_group_algebras_pass_every_ambient_suite() {
    let cat = ConcreteCategory::mat_q();
    let ms = ms_q();
    for g in GroupPresentation::standard_library(6) {
        let a = group_algebra(&g);
        assert_eq!(a.flags().commutative, g.is_abelian(), "{}", g.name());
        assert!(check_monoid(&cat, &a).is_pass(), "{}", g.name());
        assert!(check_comonoid(&cat, &a).is_pass(), "{}", g.name());
        assert!(check_bialgebra_ambient(&cat, &a).is_pass(), "{}", g.name());

        let id = ArrowObject::identity_on(&cat, a.carrier()).unwrap();
        let aa = make_arrow_algebra(&ms, &id, &a, &a).unwrap();
        assert!(check_arrow_monoid(&ms, &aa).is_pass(), "{}", g.name());
        assert!(check_arrow_comonoid(&ms, &aa).is_pass(), "{}", g.name());
        assert!(check_arrow_bialgebra(&ms, &aa).is_pass(), "{}", g.name());
        assert!(check_arrow_hopf(&ms, &aa).is_pass(), "{}", g.name());
    }
}

#[test]
fn every_group_homomorphism_lifts_to_a_hopf_object() {
    let ms = ms_q();
    let groups = GroupPresentation::standard_library(6);
    let mut hom_count = 0;
    for src in &groups {
        for dst in &groups {
            let a_src = group_algebra(src);
            let a_dst = group_algebra(dst);
            for images in src.homomorphisms_to(dst) {
                let f = hom_matrix(&images, dst.order());
                assert!(
                    is_structure_morphism(&f, &a_src, &a_dst, StructureKind::Hopf).unwrap(),
                    "{} -> {}",
                    src.name(),
                    dst.name()
                );
                let obj = ArrowObject::from_map(ms.category(), f).unwrap();
                let aa = make_arrow_algebra(&ms, &obj, &a_src, &a_dst).unwrap();
                // Every homomorphism lift is simultaneously a monoid, a
                // comonoid and a Hopf object of the arrow category.
                assert!(check_arrow_monoid(&ms, &aa).is_pass());
                assert!(check_arrow_comonoid(&ms, &aa).is_pass());
                let verdict = check_arrow_hopf(&ms, &aa);
                assert!(verdict.is_pass(), "{} -> {}: {verdict}", src.name(), dst.name());
                hom_count += 1;
            }
        }
    }
    // The search must actually have found a substantial family.
    assert!(hom_count > 100, "only {hom_count} homomorphisms found");
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![0]];
    }
    let mut out = Vec::new();
    for smaller in permutations(n - 1) {
        for slot in 0..n {
            let mut p = smaller.clone();
            p.insert(slot, n - 1);
            out.push(p);
        }
    }
    out
}

#[test]
fn basis_copying_with_all_permutations_is_special_dagger_frobenius() {
    let ms = ms_q();
    for n in 1..=5 {
        let a = basis_copying(n);
        for perm in permutations(n) {
            let mut p = RatMatrix::zeros(n, n);
            for (col, &row) in perm.iter().enumerate() {
                p.set(row, col, arrowcat_core::Rat::one());
            }
            let obj = ArrowObject::from_map(ms.category(), p).unwrap();
            let aa = make_arrow_algebra(&ms, &obj, &a, &a).unwrap();
            assert!(aa.flags().frobenius && aa.flags().special && aa.flags().dagger);
            assert!(check_arrow_frobenius(&ms, &aa).is_pass());
            assert!(check_arrow_dagger_frobenius(&ms, &aa).unwrap().is_pass());
        }
    }
}

#[test]
fn group_like_comultiplication_is_not_frobenius() {
    let ms = ms_q();
    let a = group_algebra(&GroupPresentation::cyclic(2));
    let id = ArrowObject::identity_on(ms.category(), 2).unwrap();
    let aa = make_arrow_algebra(&ms, &id, &a, &a).unwrap();
    let verdict = check_arrow_frobenius(&ms, &aa);
    let failure = verdict.failure().expect("frobenius law must fail");
    assert!(failure.law.contains("frobenius"));
}

#[test]
fn negative_controls_name_the_broken_edge() {
    let cat = ConcreteCategory::mat_q();
    let ms = ms_q();

    // Corrupted antipode on Q[Z3].
    let a = group_algebra(&GroupPresentation::cyclic(3));
    let corrupted = a.clone().with_antipode(RatMatrix::identity(3));
    let id = ArrowObject::identity_on(&cat, 3).unwrap();
    let aa = make_arrow_algebra(&ms, &id, &corrupted, &corrupted).unwrap();
    let verdict = check_arrow_hopf(&ms, &aa);
    let failure = verdict.failure().expect("corrupted antipode must fail");
    assert!(failure.edge.contains("antipode"), "{failure}");

    // Corrupted comultiplication on a copy algebra, checked at ambient level.
    let bad = basis_copying(2).with_comult(RatMatrix::from_int_rows(&[
        &[1, 0],
        &[0, 0],
        &[0, 0],
        &[1, 1],
    ]));
    assert!(!check_comonoid(&cat, &bad).is_pass());

    // Orthogonal but non-permutation map rejected as a structure morphism.
    let a = basis_copying(2);
    let rotation = RatMatrix::from_rows(vec![
        vec![arrowcat_core::Rat::new(3, 5), arrowcat_core::Rat::new(-4, 5)],
        vec![arrowcat_core::Rat::new(4, 5), arrowcat_core::Rat::new(3, 5)],
    ]);
    assert!(rotation.is_orthogonal());
    assert!(!is_structure_morphism(&rotation, &a, &a, StructureKind::Frobenius).unwrap());
    let obj = ArrowObject::from_map(ms.category(), rotation).unwrap();
    assert!(make_arrow_algebra(&ms, &obj, &a, &a).is_err());
}
