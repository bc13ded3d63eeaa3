//! Algebra objects in the arrow category.
//!
//! A structure morphism `f: A -> B` between two algebras becomes an algebra
//! object of Arr(C) whose structure maps are the pairs of the ambient ones;
//! the commuting-square condition of each lifted map is literally the
//! statement that `f` commutes with that piece of structure. The `check_*`
//! functions then verify the axiom suites as equalities of composite squares
//! in Arr(C), never by appeal to the componentwise laws.

use super::checks::check_unit_axioms;
use super::data::{AlgebraData, AlgebraError, AlgebraFlags};
use crate::arrowcat::{arrow_compose, arrow_id, compose_chain, dagger_morphism, ArrowMorphism, ArrowObject};
use crate::monoidal::MonoidalStructure;
use crate::verdict::{edge, run_check, Verdict, Witness};

/// A lifted algebra: the arrow object `f` together with the paired structure
/// maps, each a validated square.
#[derive(Debug, Clone)]
pub struct ArrowAlgebra {
    object: ArrowObject,
    source: AlgebraData,
    target: AlgebraData,
    mult: ArrowMorphism,
    unit: ArrowMorphism,
    comult: Option<ArrowMorphism>,
    counit: Option<ArrowMorphism>,
    antipode: Option<ArrowMorphism>,
    flags: AlgebraFlags,
}

impl ArrowAlgebra {
    pub fn object(&self) -> &ArrowObject {
        &self.object
    }

    pub fn source_algebra(&self) -> &AlgebraData {
        &self.source
    }

    pub fn target_algebra(&self) -> &AlgebraData {
        &self.target
    }

    pub fn mult(&self) -> &ArrowMorphism {
        &self.mult
    }

    pub fn unit(&self) -> &ArrowMorphism {
        &self.unit
    }

    pub fn comult(&self) -> Option<&ArrowMorphism> {
        self.comult.as_ref()
    }

    pub fn counit(&self) -> Option<&ArrowMorphism> {
        self.counit.as_ref()
    }

    pub fn antipode(&self) -> Option<&ArrowMorphism> {
        self.antipode.as_ref()
    }

    pub fn flags(&self) -> AlgebraFlags {
        self.flags
    }

    /// Corruption hook: replaces the lifted multiplication square without
    /// re-validation.
    pub fn with_mult_unchecked(mut self, mult: ArrowMorphism) -> Self {
        self.mult = mult;
        self
    }
}

/// Lifts `f` to an algebra object of Arr(C). Every structure map present on
/// both sides is paired into a square; the first square that fails to
/// commute names the violated morphism condition.
pub fn make_arrow_algebra(
    ms: &MonoidalStructure,
    f: &ArrowObject,
    src: &AlgebraData,
    dst: &AlgebraData,
) -> Result<ArrowAlgebra, AlgebraError> {
    if f.src() != src.carrier() || f.dst() != dst.carrier() {
        return Err(AlgebraError::ShapeMismatch(format!(
            "object {f} does not run between carriers {} and {}",
            src.carrier(),
            dst.carrier()
        )));
    }
    let tensor_ff = ms.tensor_objects(f, f);
    let unit_arrow = ms.unit_arrow();

    let mult = ArrowMorphism::new(
        tensor_ff.clone(),
        f.clone(),
        src.mult().clone(),
        dst.mult().clone(),
    )
    .map_err(|e| AlgebraError::NotAMorphism(format!("multiplication square: {e}")))?;
    let unit = ArrowMorphism::new(
        unit_arrow.clone(),
        f.clone(),
        src.unit().clone(),
        dst.unit().clone(),
    )
    .map_err(|e| AlgebraError::NotAMorphism(format!("unit square: {e}")))?;

    let comult = match (src.comult(), dst.comult()) {
        (Some(a), Some(b)) => Some(
            ArrowMorphism::new(f.clone(), tensor_ff.clone(), a.clone(), b.clone())
                .map_err(|e| AlgebraError::NotAMorphism(format!("comultiplication square: {e}")))?,
        ),
        _ => None,
    };
    let counit = match (src.counit(), dst.counit()) {
        (Some(a), Some(b)) => Some(
            ArrowMorphism::new(f.clone(), unit_arrow, a.clone(), b.clone())
                .map_err(|e| AlgebraError::NotAMorphism(format!("counit square: {e}")))?,
        ),
        _ => None,
    };
    let antipode = match (src.antipode(), dst.antipode()) {
        (Some(a), Some(b)) => Some(
            ArrowMorphism::new(f.clone(), f.clone(), a.clone(), b.clone())
                .map_err(|e| AlgebraError::NotAMorphism(format!("antipode square: {e}")))?,
        ),
        _ => None,
    };

    Ok(ArrowAlgebra {
        object: f.clone(),
        source: src.clone(),
        target: dst.clone(),
        mult,
        unit,
        comult,
        counit,
        antipode,
        flags: src.flags().meet(dst.flags()),
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

/// Associativity pentagon, both unitor prisms, and the commutativity cube
/// when flagged, all in Arr(C).
pub fn check_arrow_monoid(ms: &MonoidalStructure, aa: &ArrowAlgebra) -> Verdict {
    run_check(|| {
        let law = "arrow monoid";
        let f = &aa.object;
        let id_f = arrow_id(f);
        let mu = &aa.mult;

        let left_assoc = edge(law, "mu (x) id", ms.tensor_morphisms(mu, &id_f))?;
        let lhs = edge(law, "mu.(mu (x) id)", arrow_compose(mu, &left_assoc))?;
        let right_assoc = edge(law, "id (x) mu", ms.tensor_morphisms(&id_f, mu))?;
        let alpha = edge(law, "alpha(f, f, f)", ms.associator(f, f, f))?;
        let rhs = edge(law, "mu.(id (x) mu).alpha", compose_chain(&[mu, &right_assoc, &alpha]))?;
        let v = compare(law, "associativity pentagon", &lhs, &rhs);
        if !v.is_pass() {
            return Ok(v);
        }

        let eta = &aa.unit;
        let left_leg = edge(law, "eta (x) id", ms.tensor_morphisms(eta, &id_f))?;
        let left = edge(law, "mu.(eta (x) id)", arrow_compose(mu, &left_leg))?;
        let lambda = edge(law, "lambda_f", ms.left_unitor(f))?;
        let v = compare(law, "left unitor prism", &left, &lambda);
        if !v.is_pass() {
            return Ok(v);
        }
        let right_leg = edge(law, "id (x) eta", ms.tensor_morphisms(&id_f, eta))?;
        let right = edge(law, "mu.(id (x) eta)", arrow_compose(mu, &right_leg))?;
        let rho = edge(law, "rho_f", ms.right_unitor(f))?;
        let v = compare(law, "right unitor prism", &right, &rho);
        if !v.is_pass() {
            return Ok(v);
        }

        if aa.flags.commutative {
            let sigma = edge(law, "sigma(f, f)", ms.braiding(f, f))?;
            let swapped = edge(law, "mu.sigma", arrow_compose(mu, &sigma))?;
            return Ok(compare(law, "commutativity cube", &swapped, mu));
        }
        Ok(Verdict::Pass)
    })
}

/// The dual suite: coassociativity, counit prisms, cocommutativity.
pub fn check_arrow_comonoid(ms: &MonoidalStructure, aa: &ArrowAlgebra) -> Verdict {
    run_check(|| {
        let law = "arrow comonoid";
        let f = &aa.object;
        let id_f = arrow_id(f);
        let delta = edge(
            law,
            "comultiplication",
            aa.comult.clone().ok_or("comultiplication missing"),
        )?;
        let eps = edge(law, "counit", aa.counit.clone().ok_or("counit missing"))?;

        let alpha = edge(law, "alpha(f, f, f)", ms.associator(f, f, f))?;
        let left_leg = edge(law, "Delta (x) id", ms.tensor_morphisms(&delta, &id_f))?;
        let lhs = edge(law, "alpha.(Delta (x) id).Delta", compose_chain(&[&alpha, &left_leg, &delta]))?;
        let right_leg = edge(law, "id (x) Delta", ms.tensor_morphisms(&id_f, &delta))?;
        let rhs = edge(law, "(id (x) Delta).Delta", arrow_compose(&right_leg, &delta))?;
        let v = compare(law, "coassociativity pentagon", &lhs, &rhs);
        if !v.is_pass() {
            return Ok(v);
        }

        let lambda = edge(law, "lambda_f", ms.left_unitor(f))?;
        let counit_left = edge(law, "eps (x) id", ms.tensor_morphisms(&eps, &id_f))?;
        let left = edge(
            law,
            "lambda.(eps (x) id).Delta",
            compose_chain(&[&lambda, &counit_left, &delta]),
        )?;
        let v = compare(law, "left counit prism", &left, &id_f);
        if !v.is_pass() {
            return Ok(v);
        }
        let rho = edge(law, "rho_f", ms.right_unitor(f))?;
        let counit_right = edge(law, "id (x) eps", ms.tensor_morphisms(&id_f, &eps))?;
        let right = edge(
            law,
            "rho.(id (x) eps).Delta",
            compose_chain(&[&rho, &counit_right, &delta]),
        )?;
        let v = compare(law, "right counit prism", &right, &id_f);
        if !v.is_pass() {
            return Ok(v);
        }

        if aa.flags.cocommutative {
            let sigma = edge(law, "sigma(f, f)", ms.braiding(f, f))?;
            let swapped = edge(law, "sigma.Delta", arrow_compose(&sigma, &delta))?;
            return Ok(compare(law, "cocommutativity cube", &swapped, &delta));
        }
        Ok(Verdict::Pass)
    })
}

/// Both bialgebra cubes in Arr(C), plus the two ambient unit-side axioms
/// (`Delta . eta = (eta (x) eta) . lambda_I^-1` and `eps . eta = id_I`)
/// that keep the fixtures honest bialgebras.
pub fn check_arrow_bialgebra(ms: &MonoidalStructure, aa: &ArrowAlgebra) -> Verdict {
    run_check(|| {
        let law = "arrow bialgebra";
        for (side, algebra) in [("source", &aa.source), ("target", &aa.target)] {
            if let Some(failure) = check_unit_axioms(ms.category(), algebra).failure() {
                return Ok(Verdict::fail(
                    law,
                    format!("ambient unit axioms fail on {side}: {failure}"),
                ));
            }
        }

        let f = &aa.object;
        let id_f = arrow_id(f);
        let mu = &aa.mult;
        let delta = edge(
            law,
            "comultiplication",
            aa.comult.clone().ok_or("comultiplication missing"),
        )?;
        let eps = edge(law, "counit", aa.counit.clone().ok_or("counit missing"))?;
        let eta = &aa.unit;
        let sigma = edge(law, "sigma(f, f)", ms.braiding(f, f))?;

        // Delta . mu = (mu (x) mu) . (id (x) sigma (x) id) . (Delta (x) Delta).
        let lhs = edge(law, "Delta.mu", arrow_compose(&delta, mu))?;
        let dd = edge(law, "Delta (x) Delta", ms.tensor_morphisms(&delta, &delta))?;
        let inner = edge(law, "sigma (x) id", ms.tensor_morphisms(&sigma, &id_f))?;
        let middle = edge(law, "id (x) sigma (x) id", ms.tensor_morphisms(&id_f, &inner))?;
        let mm = edge(law, "mu (x) mu", ms.tensor_morphisms(mu, mu))?;
        let rhs = edge(law, "long path", compose_chain(&[&mm, &middle, &dd]))?;
        let v = compare(law, "multiplicativity cube", &lhs, &rhs);
        if !v.is_pass() {
            return Ok(v);
        }

        // eps . mu = lambda_{id_I} . (eps (x) eps).
        let lhs = edge(law, "eps.mu", arrow_compose(&eps, mu))?;
        let ee = edge(law, "eps (x) eps", ms.tensor_morphisms(&eps, &eps))?;
        let lambda_unit = edge(law, "lambda at unit", ms.left_unitor(&ms.unit_arrow()))?;
        let rhs = edge(law, "lambda.(eps (x) eps)", arrow_compose(&lambda_unit, &ee))?;
        let v = compare(law, "counit cube", &lhs, &rhs);
        if !v.is_pass() {
            return Ok(v);
        }

        // Delta . eta = (eta (x) eta) . lambda^-1 at the unit.
        let lhs = edge(law, "Delta.eta", arrow_compose(&delta, eta))?;
        let nn = edge(law, "eta (x) eta", ms.tensor_morphisms(eta, eta))?;
        let lambda_inv = edge(law, "lambda^-1 at unit", ms.left_unitor_inv(&ms.unit_arrow()))?;
        let rhs = edge(law, "(eta (x) eta).lambda^-1", arrow_compose(&nn, &lambda_inv))?;
        let v = compare(law, "unit comultiplicativity prism", &lhs, &rhs);
        if !v.is_pass() {
            return Ok(v);
        }

        // eps . eta = id at the unit.
        let lhs = edge(law, "eps.eta", arrow_compose(&eps, eta))?;
        Ok(compare(law, "unit counit prism", &lhs, &ms.unit_id()))
    })
}

/// The Frobenius law `(id (x) mu).alpha.(Delta (x) id) = Delta.mu =
/// (mu (x) id).alpha^-1.(id (x) Delta)` in Arr(C); the special prism
/// `mu.Delta = id` when flagged.
pub fn check_arrow_frobenius(ms: &MonoidalStructure, aa: &ArrowAlgebra) -> Verdict {
    run_check(|| {
        let law = "arrow frobenius";
        let f = &aa.object;
        let id_f = arrow_id(f);
        let mu = &aa.mult;
        let delta = edge(
            law,
            "comultiplication",
            aa.comult.clone().ok_or("comultiplication missing"),
        )?;

        let center = edge(law, "Delta.mu", arrow_compose(&delta, mu))?;

        let d_id = edge(law, "Delta (x) id", ms.tensor_morphisms(&delta, &id_f))?;
        let alpha = edge(law, "alpha(f, f, f)", ms.associator(f, f, f))?;
        let id_mu = edge(law, "id (x) mu", ms.tensor_morphisms(&id_f, mu))?;
        let left = edge(law, "left leg", compose_chain(&[&id_mu, &alpha, &d_id]))?;
        let v = compare(law, "frobenius law (left)", &left, &center);
        if !v.is_pass() {
            return Ok(v);
        }

        let id_d = edge(law, "id (x) Delta", ms.tensor_morphisms(&id_f, &delta))?;
        let alpha_inv = edge(law, "alpha^-1(f, f, f)", ms.associator_inv(f, f, f))?;
        let mu_id = edge(law, "mu (x) id", ms.tensor_morphisms(mu, &id_f))?;
        let right = edge(law, "right leg", compose_chain(&[&mu_id, &alpha_inv, &id_d]))?;
        let v = compare(law, "frobenius law (right)", &right, &center);
        if !v.is_pass() {
            return Ok(v);
        }

        if aa.flags.special {
            let round = edge(law, "mu.Delta", arrow_compose(mu, &delta))?;
            return Ok(compare(law, "special prism", &round, &id_f));
        }
        Ok(Verdict::Pass)
    })
}

/// Dagger-Frobenius: the daggered comultiplication square equals the
/// multiplication square and the daggered counit equals the unit. Requires
/// the underlying object map to be unitary; the lifted structure maps need
/// not be, their reversed squares commute because the object is.
pub fn check_arrow_dagger_frobenius(
    ms: &MonoidalStructure,
    aa: &ArrowAlgebra,
) -> Result<Verdict, AlgebraError> {
    if !aa.object.map().is_orthogonal() {
        return Err(AlgebraError::NotUnitary(format!(
            "object map {} must satisfy M^T = M^-1",
            aa.object.map()
        )));
    }
    let _ = ms;
    Ok(run_check(|| {
        let law = "arrow dagger frobenius";
        let delta = edge(
            law,
            "comultiplication",
            aa.comult.clone().ok_or("comultiplication missing"),
        )?;
        let eps = edge(law, "counit", aa.counit.clone().ok_or("counit missing"))?;
        let delta_dag = edge(law, "Delta^dagger", dagger_morphism(&delta))?;
        let v = compare(law, "Delta^dagger vs mu", &delta_dag, &aa.mult);
        if !v.is_pass() {
            return Ok(v);
        }
        let eps_dag = edge(law, "eps^dagger", dagger_morphism(&eps))?;
        Ok(compare(law, "eps^dagger vs eta", &eps_dag, &aa.unit))
    }))
}

/// Both antipode equations in Arr(C):
/// `mu.(id (x) S).Delta = eta.eps = mu.(S (x) id).Delta`.
pub fn check_arrow_hopf(ms: &MonoidalStructure, aa: &ArrowAlgebra) -> Verdict {
    run_check(|| {
        let law = "arrow hopf";
        let f = &aa.object;
        let id_f = arrow_id(f);
        let mu = &aa.mult;
        let delta = edge(
            law,
            "comultiplication",
            aa.comult.clone().ok_or("comultiplication missing"),
        )?;
        let eps = edge(law, "counit", aa.counit.clone().ok_or("counit missing"))?;
        let s = edge(law, "antipode", aa.antipode.clone().ok_or("antipode missing"))?;

        let convolution_unit = edge(law, "eta.eps", arrow_compose(&aa.unit, &eps))?;

        let id_s = edge(law, "id (x) S", ms.tensor_morphisms(&id_f, &s))?;
        let left = edge(law, "mu.(id (x) S).Delta", compose_chain(&[mu, &id_s, &delta]))?;
        let v = compare(law, "antipode equation (left)", &left, &convolution_unit);
        if !v.is_pass() {
            return Ok(v);
        }

        let s_id = edge(law, "S (x) id", ms.tensor_morphisms(&s, &id_f))?;
        let right = edge(law, "mu.(S (x) id).Delta", compose_chain(&[mu, &s_id, &delta]))?;
        Ok(compare(law, "antipode equation (right)", &right, &convolution_unit))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::data::basis_copying;
    use crate::exactmat::{
        group_algebra, hom_matrix, ConcreteCategory, GroupPresentation, RatMatrix,
    };

    fn ms_q() -> MonoidalStructure {
        MonoidalStructure::new(ConcreteCategory::mat_q())
    }

    fn identity_lift(ms: &MonoidalStructure, a: &AlgebraData) -> ArrowAlgebra {
        let f = ArrowObject::identity_on(ms.category(), a.carrier()).unwrap();
        make_arrow_algebra(ms, &f, a, a).unwrap()
    }

    #[test]
    fn identity_on_group_algebra_is_a_full_hopf_object() {
        let ms = ms_q();
        let a = group_algebra(&GroupPresentation::cyclic(3));
        let aa = identity_lift(&ms, &a);
        assert!(aa.flags().hopf);
        assert!(check_arrow_monoid(&ms, &aa).is_pass());
        assert!(check_arrow_comonoid(&ms, &aa).is_pass());
        assert!(check_arrow_bialgebra(&ms, &aa).is_pass());
        assert!(check_arrow_hopf(&ms, &aa).is_pass());
    }

    #[test]
    fn group_hom_lift_is_a_hopf_object() {
        let ms = ms_q();
        let z2 = GroupPresentation::cyclic(2);
        let z4 = GroupPresentation::cyclic(4);
        let (a2, a4) = (group_algebra(&z2), group_algebra(&z4));
        let embedding = z2
            .homomorphisms_to(&z4)
            .into_iter()
            .find(|images| images[1] == 2)
            .unwrap();
        let f =
            ArrowObject::from_map(ms.category(), hom_matrix(&embedding, 4)).unwrap();
        let aa = make_arrow_algebra(&ms, &f, &a2, &a4).unwrap();
        assert!(check_arrow_monoid(&ms, &aa).is_pass());
        assert!(check_arrow_bialgebra(&ms, &aa).is_pass());
        let v = check_arrow_hopf(&ms, &aa);
        assert!(v.is_pass(), "{v}");
    }

    #[test]
    fn non_morphism_is_rejected_with_the_failing_square() {
        let ms = ms_q();
        let a = group_algebra(&GroupPresentation::cyclic(2));
        // The swap permutation multiplies as x -> g*x, which is not an
        // algebra map; the first broken square is named.
        let f = ArrowObject::from_map(ms.category(), crate::ratmat![[0, 1], [1, 0]]).unwrap();
        let err = make_arrow_algebra(&ms, &f, &a, &a).unwrap_err();
        match err {
            AlgebraError::NotAMorphism(msg) => assert!(msg.contains("multiplication square")),
            other => panic!("expected NotAMorphism, got {other}"),
        }
    }

    #[test]
    fn permutations_preserve_basis_copying_frobenius() {
        let ms = ms_q();
        let a = basis_copying(3);
        let p = crate::ratmat![[0, 0, 1], [1, 0, 0], [0, 1, 0]];
        let f = ArrowObject::from_map(ms.category(), p).unwrap();
        let aa = make_arrow_algebra(&ms, &f, &a, &a).unwrap();
        assert!(aa.flags().frobenius && aa.flags().special && aa.flags().dagger);
        let v = check_arrow_frobenius(&ms, &aa);
        assert!(v.is_pass(), "{v}");
        let v = check_arrow_dagger_frobenius(&ms, &aa).unwrap();
        assert!(v.is_pass(), "{v}");
    }

    #[test]
    fn group_algebra_with_grouplike_comult_is_not_frobenius() {
        let ms = ms_q();
        let a = group_algebra(&GroupPresentation::cyclic(2));
        let aa = identity_lift(&ms, &a);
        let v = check_arrow_frobenius(&ms, &aa);
        assert!(!v.is_pass(), "group-like Delta must fail the frobenius law");
    }

    #[test]
    fn corrupted_lifted_mult_fails_with_broken_square() {
        let ms = ms_q();
        let a = basis_copying(2);
        let aa = identity_lift(&ms, &a);
        // Swap the output legs of the multiplication square's top only.
        let broken_top = crate::ratmat![[0, 0, 0, 1], [1, 0, 0, 0]];
        let tensor_ff = ms.tensor_objects(aa.object(), aa.object());
        let bad_mult = ArrowMorphism::new(
            tensor_ff,
            aa.object().clone(),
            broken_top.clone(),
            broken_top,
        )
        .unwrap();
        let corrupted = aa.with_mult_unchecked(bad_mult);
        assert!(!check_arrow_monoid(&ms, &corrupted).is_pass());
    }

    #[test]
    fn corrupted_counit_fails_arrow_comonoid() {
        let ms = ms_q();
        // A counit that drops a basis direction on both sides: the lifted
        // square still commutes (identity object), the counit prism fails.
        let a = basis_copying(3).with_counit(crate::ratmat![[1, 1, 0]]);
        let aa = identity_lift(&ms, &a);
        let verdict = check_arrow_comonoid(&ms, &aa);
        let failure = verdict.failure().expect("must fail");
        assert!(failure.edge.contains("counit"), "{failure}");
    }

    #[test]
    fn non_dagger_comultiplication_fails_dagger_frobenius() {
        let ms = ms_q();
        // Force the dagger claim onto the group algebra: its convolution
        // multiplication is not the transpose of the diagonal Delta.
        let a = group_algebra(&GroupPresentation::cyclic(2));
        let mut flags = a.flags();
        flags.dagger = true;
        let forced = a.with_flags(flags);
        let aa = identity_lift(&ms, &forced);
        let verdict = check_arrow_dagger_frobenius(&ms, &aa).unwrap();
        let failure = verdict.failure().expect("must fail");
        assert!(failure.edge.contains("Delta"), "{failure}");
    }

    #[test]
    fn corrupted_antipode_fails_hopf() {
        let ms = ms_q();
        let a = group_algebra(&GroupPresentation::cyclic(3));
        let corrupted = a.clone().with_antipode(RatMatrix::identity(3));
        let f = ArrowObject::identity_on(ms.category(), 3).unwrap();
        let aa = make_arrow_algebra(&ms, &f, &corrupted, &corrupted).unwrap();
        assert!(!check_arrow_hopf(&ms, &aa).is_pass());
    }

    #[test]
    fn dagger_frobenius_requires_unitary_object() {
        let ms = ms_q();
        let a = basis_copying(1);
        // [[2]] fails the multiplication square, so non-unitary candidates
        // are rejected upstream of the unitarity guard.
        let double = ArrowObject::from_map(ms.category(), crate::ratmat![[2]]).unwrap();
        assert!(matches!(
            make_arrow_algebra(&ms, &double, &a, &a),
            Err(AlgebraError::NotAMorphism(_))
        ));
        let aa = identity_lift(&ms, &a);
        assert!(check_arrow_dagger_frobenius(&ms, &aa).unwrap().is_pass());
    }
}
