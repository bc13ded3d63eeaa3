//! Algebra suites: group algebras and basis-copying algebras through the
//! monoid, bialgebra, Frobenius, dagger-Frobenius and Hopf checkers, at
//! ambient level and in the arrow category.

use super::{expect_rejection, SuiteParams};
use crate::fixtures::FixtureSet;
use crate::report::CheckRecord;
use arrowcat_core::algebra::{
    basis_copying, check_arrow_bialgebra, check_arrow_comonoid, check_arrow_dagger_frobenius,
    check_arrow_frobenius, check_arrow_hopf, check_arrow_monoid, check_bialgebra_ambient,
    check_comonoid, check_monoid, is_structure_morphism, make_arrow_algebra, AlgebraData,
    ArrowAlgebra, StructureKind,
};
use arrowcat_core::arrowcat::{ArrowMorphism, ArrowObject};
use arrowcat_core::exactmat::{
    group_algebra, hom_matrix, ConcreteCategory, GroupPresentation, RatMatrix,
};
use arrowcat_core::monoidal::MonoidalStructure;
use arrowcat_core::verdict::Verdict;

fn ms_for(group_name: &str) -> MonoidalStructure {
    MonoidalStructure::new(ConcreteCategory::group_alg(group_name))
}

fn identity_lift(ms: &MonoidalStructure, a: &AlgebraData) -> Result<ArrowAlgebra, Verdict> {
    let id = ArrowObject::identity_on(ms.category(), a.carrier())
        .map_err(|e| Verdict::fail("identity object", e.to_string()))?;
    make_arrow_algebra(ms, &id, a, a).map_err(|e| Verdict::fail("algebra lift", e.to_string()))
}

fn groups_under(order: usize, fixtures: &FixtureSet) -> Vec<GroupPresentation> {
    let mut groups = GroupPresentation::standard_library(order);
    for g in fixtures.groups.values() {
        if g.order() <= order && groups.iter().all(|h| h.name() != g.name()) {
            groups.push(g.clone());
        }
    }
    groups
}

pub fn monoid(params: &SuiteParams, fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let mut records = Vec::new();
    for g in groups_under(6, fixtures) {
        let a = group_algebra(&g);
        let ms = ms_for(g.name());
        let cat = ms.category();
        records.push(CheckRecord::positive(
            format!("ambient-monoid-{}", g.name()),
            check_monoid(cat, &a),
        ));
        records.push(CheckRecord::positive(
            format!("ambient-comonoid-{}", g.name()),
            check_comonoid(cat, &a),
        ));
        let verdict = match identity_lift(&ms, &a) {
            Ok(aa) => {
                let v = check_arrow_monoid(&ms, &aa);
                if v.is_pass() {
                    check_arrow_comonoid(&ms, &aa)
                } else {
                    v
                }
            }
            Err(v) => v,
        };
        records.push(CheckRecord::positive(format!("arrow-{}", g.name()), verdict));
        let flag_ok = a.flags().commutative == g.is_abelian();
        records.push(CheckRecord::positive(
            format!("commutative-flag-{}", g.name()),
            if flag_ok {
                Verdict::Pass
            } else {
                Verdict::fail("flags", "commutativity flag disagrees with the group")
            },
        ));
    }
    for n in 1..=5 {
        let a = basis_copying(n);
        let ms = MonoidalStructure::new(ConcreteCategory::mat_q());
        records.push(CheckRecord::positive(
            format!("ambient-copy-{n}"),
            check_monoid(ms.category(), &a),
        ));
        let verdict = match identity_lift(&ms, &a) {
            Ok(aa) => check_arrow_monoid(&ms, &aa),
            Err(v) => v,
        };
        records.push(CheckRecord::positive(format!("arrow-copy-{n}"), verdict));
    }
    for (name, a) in &fixtures.algebras {
        let ms = MonoidalStructure::new(ConcreteCategory::mat_q());
        if a.flags().monoid {
            records.push(CheckRecord::positive(
                format!("fixture-{name}"),
                check_monoid(ms.category(), a),
            ));
        }
    }

    // Negative controls: a unit aimed at the wrong basis vector, and a
    // corrupted lifted multiplication square.
    let z2 = GroupPresentation::cyclic(2);
    let corrupted = group_algebra(&z2).with_unit(RatMatrix::from_int_rows(&[&[0], &[1]]));
    let ms = ms_for("Z2");
    records.push(CheckRecord::negative(
        "zz-negative-corrupted-unit",
        check_monoid(ms.category(), &corrupted),
    ));

    let copy2 = basis_copying(2);
    let verdict = match identity_lift(&ms, &copy2) {
        Ok(aa) => {
            let broken_top = RatMatrix::from_int_rows(&[&[0, 0, 0, 1], &[1, 0, 0, 0]]);
            let tensor = ms.tensor_objects(aa.object(), aa.object());
            match ArrowMorphism::new(tensor, aa.object().clone(), broken_top.clone(), broken_top) {
                Ok(bad) => check_arrow_monoid(&ms, &aa.with_mult_unchecked(bad)),
                Err(e) => Verdict::fail("corruption setup", e.to_string()),
            }
        }
        Err(v) => v,
    };
    records.push(CheckRecord::negative("zz-negative-corrupted-lifted-mult", verdict));
    let _ = params;
    records
}

pub fn bialgebra(params: &SuiteParams, fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let mut records = Vec::new();
    for g in groups_under(6, fixtures) {
        let a = group_algebra(&g);
        let ms = ms_for(g.name());
        records.push(CheckRecord::positive(
            format!("ambient-{}", g.name()),
            check_bialgebra_ambient(ms.category(), &a),
        ));
        let verdict = match identity_lift(&ms, &a) {
            Ok(aa) => check_arrow_bialgebra(&ms, &aa),
            Err(v) => v,
        };
        records.push(CheckRecord::positive(format!("arrow-{}", g.name()), verdict));
    }

    // Every found group homomorphism passes the lifted bialgebra cubes.
    let groups = groups_under(4, fixtures);
    let ms = MonoidalStructure::new(ConcreteCategory::mat_q());
    for src in &groups {
        for dst in &groups {
            let (a_src, a_dst) = (group_algebra(src), group_algebra(dst));
            for (idx, images) in src.homomorphisms_to(dst).into_iter().enumerate() {
                let f = hom_matrix(&images, dst.order());
                let verdict = match ArrowObject::from_map(ms.category(), f)
                    .map_err(|e| Verdict::fail("hom object", e.to_string()))
                    .and_then(|obj| {
                        make_arrow_algebra(&ms, &obj, &a_src, &a_dst)
                            .map_err(|e| Verdict::fail("hom lift", e.to_string()))
                    }) {
                    Ok(aa) => check_arrow_bialgebra(&ms, &aa),
                    Err(v) => v,
                };
                records.push(CheckRecord::positive(
                    format!("hom-{}-to-{}-{idx:02}", src.name(), dst.name()),
                    verdict,
                ));
            }
        }
    }

    // The copy algebra is not a bialgebra: Delta . eta spreads over the
    // diagonal only.
    let ms = MonoidalStructure::new(ConcreteCategory::mat_q());
    records.push(CheckRecord::negative(
        "zz-negative-copy-algebra-unit-axiom",
        check_bialgebra_ambient(ms.category(), &basis_copying(2)),
    ));

    // A corrupted comultiplication on Q[Z2].
    let z2 = GroupPresentation::cyclic(2);
    let corrupted = group_algebra(&z2).with_comult(RatMatrix::from_int_rows(&[
        &[1, 0],
        &[0, 1],
        &[0, 1],
        &[0, 0],
    ]));
    records.push(CheckRecord::negative(
        "zz-negative-corrupted-comult",
        check_bialgebra_ambient(ms.category(), &corrupted),
    ));
    let _ = params;
    records
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

fn permutation_matrix(perm: &[usize]) -> RatMatrix {
    let n = perm.len();
    let mut m = RatMatrix::zeros(n, n);
    for (col, &row) in perm.iter().enumerate() {
        m.set(row, col, arrowcat_core::Rat::one());
    }
    m
}

pub fn frobenius(params: &SuiteParams, fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let ms = MonoidalStructure::new(ConcreteCategory::mat_q());
    let mut records = Vec::new();
    for n in 1..=5usize {
        let a = basis_copying(n);
        for (idx, perm) in permutations(n).into_iter().enumerate() {
            let verdict = match ArrowObject::from_map(ms.category(), permutation_matrix(&perm))
                .map_err(|e| Verdict::fail("permutation object", e.to_string()))
                .and_then(|obj| {
                    make_arrow_algebra(&ms, &obj, &a, &a)
                        .map_err(|e| Verdict::fail("frobenius lift", e.to_string()))
                }) {
                Ok(aa) => check_arrow_frobenius(&ms, &aa),
                Err(v) => v,
            };
            records.push(CheckRecord::positive(
                format!("copy-{n}-perm-{idx:03}"),
                verdict,
            ));
        }
    }
    for (name, a) in &fixtures.algebras {
        if a.flags().frobenius {
            let verdict = match identity_lift(&ms, a) {
                Ok(aa) => check_arrow_frobenius(&ms, &aa),
                Err(v) => v,
            };
            records.push(CheckRecord::positive(format!("fixture-{name}"), verdict));
        }
    }

    // Q[Z2] with the group-like comultiplication fails the Frobenius law.
    let z2 = GroupPresentation::cyclic(2);
    let a = group_algebra(&z2);
    let verdict = match identity_lift(&ms, &a) {
        Ok(aa) => check_arrow_frobenius(&ms, &aa),
        Err(v) => v,
    };
    records.push(CheckRecord::negative(
        "zz-negative-grouplike-not-frobenius",
        verdict,
    ));
    let _ = params;
    records
}

pub fn dagger_frobenius(params: &SuiteParams, fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let ms = MonoidalStructure::new(ConcreteCategory::mat_q());
    let mut records = Vec::new();
    for n in 1..=5usize {
        let a = basis_copying(n);
        for (idx, perm) in permutations(n).into_iter().enumerate() {
            let verdict = match ArrowObject::from_map(ms.category(), permutation_matrix(&perm))
                .map_err(|e| Verdict::fail("permutation object", e.to_string()))
                .and_then(|obj| {
                    make_arrow_algebra(&ms, &obj, &a, &a)
                        .map_err(|e| Verdict::fail("dagger frobenius lift", e.to_string()))
                }) {
                Ok(aa) => match check_arrow_dagger_frobenius(&ms, &aa) {
                    Ok(v) => v,
                    Err(e) => Verdict::fail("unitarity precondition", e.to_string()),
                },
                Err(v) => v,
            };
            records.push(CheckRecord::positive(
                format!("copy-{n}-perm-{idx:03}"),
                verdict,
            ));
        }
    }
    for (name, a) in &fixtures.algebras {
        if a.flags().dagger {
            let verdict = match identity_lift(&ms, a) {
                Ok(aa) => match check_arrow_dagger_frobenius(&ms, &aa) {
                    Ok(v) => v,
                    Err(e) => Verdict::fail("unitarity precondition", e.to_string()),
                },
                Err(v) => v,
            };
            records.push(CheckRecord::positive(format!("fixture-{name}"), verdict));
        }
    }

    // An orthogonal non-permutation map is not a morphism of the copy
    // algebra and must be rejected upstream.
    let a = basis_copying(2);
    let rotation = RatMatrix::from_rows(vec![
        vec![arrowcat_core::Rat::new(3, 5), arrowcat_core::Rat::new(-4, 5)],
        vec![arrowcat_core::Rat::new(4, 5), arrowcat_core::Rat::new(3, 5)],
    ]);
    let verdict = match ArrowObject::from_map(ms.category(), rotation) {
        Ok(obj) => expect_rejection("structure morphism", make_arrow_algebra(&ms, &obj, &a, &a)),
        Err(e) => Verdict::fail("rotation object", e.to_string()),
    };
    records.push(CheckRecord::negative(
        "zz-negative-rotation-rejected",
        verdict,
    ));
    let _ = params;
    records
}

pub fn hopf(params: &SuiteParams, fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let mut records = Vec::new();
    for g in groups_under(6, fixtures) {
        let a = group_algebra(&g);
        let ms = ms_for(g.name());
        let verdict = match identity_lift(&ms, &a) {
            Ok(aa) => check_arrow_hopf(&ms, &aa),
            Err(v) => v,
        };
        records.push(CheckRecord::positive(format!("group-{}", g.name()), verdict));
    }

    // Every exhaustively found homomorphism between the shipped groups
    // induces a Hopf object of the arrow category.
    let groups = groups_under(6, fixtures);
    let ms = MonoidalStructure::new(ConcreteCategory::mat_q());
    for src in &groups {
        for dst in &groups {
            let (a_src, a_dst) = (group_algebra(src), group_algebra(dst));
            for (idx, images) in src.homomorphisms_to(dst).into_iter().enumerate() {
                let f = hom_matrix(&images, dst.order());
                let verdict = (|| {
                    match is_structure_morphism(&f, &a_src, &a_dst, StructureKind::Hopf) {
                        Ok(true) => {}
                        Ok(false) => {
                            return Verdict::fail("hopf morphism", "hom matrix fails a square")
                        }
                        Err(e) => return Verdict::fail("hopf morphism", e.to_string()),
                    }
                    match ArrowObject::from_map(ms.category(), f.clone())
                        .map_err(|e| Verdict::fail("hom object", e.to_string()))
                        .and_then(|obj| {
                            make_arrow_algebra(&ms, &obj, &a_src, &a_dst)
                                .map_err(|e| Verdict::fail("hom lift", e.to_string()))
                        }) {
                        Ok(aa) => check_arrow_hopf(&ms, &aa),
                        Err(v) => v,
                    }
                })();
                records.push(CheckRecord::positive(
                    format!("hom-{}-to-{}-{idx:02}", src.name(), dst.name()),
                    verdict,
                ));
            }
        }
    }

    // Identity in place of the antipode on Q[Z3].
    let z3 = GroupPresentation::cyclic(3);
    let corrupted = group_algebra(&z3).with_antipode(RatMatrix::identity(3));
    let ms = ms_for("Z3");
    let verdict = match identity_lift(&ms, &corrupted) {
        Ok(aa) => check_arrow_hopf(&ms, &aa),
        Err(v) => v,
    };
    records.push(CheckRecord::negative("zz-negative-identity-antipode", verdict));
    let _ = params;
    records
}
