//! Ambient algebra axiom suites and structure-morphism tests, all as exact
//! matrix equalities routed through the category's structure suppliers.

use super::data::{AlgebraData, AlgebraError};
use crate::exactmat::{compose, invert, kronecker, ConcreteCategory, RatMatrix};
use crate::verdict::{Verdict, Witness};

fn eq_or_fail(law: &str, edge: &str, lhs: RatMatrix, rhs: RatMatrix) -> Verdict {
    if lhs == rhs {
        Verdict::Pass
    } else {
        Verdict::fail_with(law, edge, Witness::Matrix(lhs), Witness::Matrix(rhs))
    }
}

fn chain(ms: &[&RatMatrix]) -> Result<RatMatrix, Verdict> {
    let (first, rest) = ms.split_first().expect("nonempty chain");
    let mut acc = (*first).clone();
    for m in rest {
        acc = compose(&acc, m)
            .map_err(|e| Verdict::fail("composition", format!("shape error in chain: {e}")))?;
    }
    Ok(acc)
}

fn run(body: impl FnOnce() -> Result<Verdict, Verdict>) -> Verdict {
    match body() {
        Ok(v) | Err(v) => v,
    }
}

/// Associativity, both unit laws, and commutativity when flagged.
pub fn check_monoid(cat: &ConcreteCategory, a: &AlgebraData) -> Verdict {
    run(|| {
        let law = "monoid";
        let n = a.carrier();
        let id = RatMatrix::identity(n);
        let mu = a.mult();
        let eta = a.unit();

        let assoc_l = chain(&[mu, &kronecker(mu, &id)])?;
        let assoc_r = chain(&[mu, &kronecker(&id, mu), &cat.associator(n, n, n)])?;
        let v = eq_or_fail(law, "associativity: mu.(mu (x) id) vs mu.(id (x) mu).alpha", assoc_l, assoc_r);
        if !v.is_pass() {
            return Ok(v);
        }

        let left = chain(&[mu, &kronecker(eta, &id)])?;
        let v = eq_or_fail(law, "left unit: mu.(eta (x) id) vs lambda", left, cat.left_unitor(n));
        if !v.is_pass() {
            return Ok(v);
        }
        let right = chain(&[mu, &kronecker(&id, eta)])?;
        let v = eq_or_fail(law, "right unit: mu.(id (x) eta) vs rho", right, cat.right_unitor(n));
        if !v.is_pass() {
            return Ok(v);
        }

        if a.flags().commutative {
            let sigma = cat.braiding(n, n).ok_or_else(|| {
                Verdict::fail(law, "commutativity needs a braiding in the ambient category")
            })?;
            let swapped = chain(&[mu, &sigma])?;
            return Ok(eq_or_fail(law, "commutativity: mu.sigma vs mu", swapped, mu.clone()));
        }
        Ok(Verdict::Pass)
    })
}

/// Coassociativity, both counit laws, and cocommutativity when flagged.
pub fn check_comonoid(cat: &ConcreteCategory, a: &AlgebraData) -> Verdict {
    run(|| {
        let law = "comonoid";
        let n = a.carrier();
        let id = RatMatrix::identity(n);
        let delta = a
            .comult()
            .ok_or_else(|| Verdict::fail(law, "comultiplication missing"))?;
        let eps = a
            .counit()
            .ok_or_else(|| Verdict::fail(law, "counit missing"))?;

        let coassoc_l = chain(&[&cat.associator(n, n, n), &kronecker(delta, &id), delta])?;
        let coassoc_r = chain(&[&kronecker(&id, delta), delta])?;
        let v = eq_or_fail(
            law,
            "coassociativity: alpha.(Delta (x) id).Delta vs (id (x) Delta).Delta",
            coassoc_l,
            coassoc_r,
        );
        if !v.is_pass() {
            return Ok(v);
        }

        let left = chain(&[&cat.left_unitor(n), &kronecker(eps, &id), delta])?;
        let v = eq_or_fail(law, "left counit: lambda.(eps (x) id).Delta vs id", left, id.clone());
        if !v.is_pass() {
            return Ok(v);
        }
        let right = chain(&[&cat.right_unitor(n), &kronecker(&id, eps), delta])?;
        let v = eq_or_fail(law, "right counit: rho.(id (x) eps).Delta vs id", right, id.clone());
        if !v.is_pass() {
            return Ok(v);
        }

        if a.flags().cocommutative {
            let sigma = cat.braiding(n, n).ok_or_else(|| {
                Verdict::fail(law, "cocommutativity needs a braiding in the ambient category")
            })?;
            let swapped = chain(&[&sigma, delta])?;
            return Ok(eq_or_fail(
                law,
                "cocommutativity: sigma.Delta vs Delta",
                swapped,
                delta.clone(),
            ));
        }
        Ok(Verdict::Pass)
    })
}

/// The two bialgebra cubes plus the unit-side axioms
/// `Delta . eta = (eta (x) eta) . lambda_I^-1` and `eps . eta = id_I`.
pub fn check_bialgebra_ambient(cat: &ConcreteCategory, a: &AlgebraData) -> Verdict {
    run(|| {
        let law = "bialgebra";
        let n = a.carrier();
        let id = RatMatrix::identity(n);
        let mu = a.mult();
        let eta = a.unit();
        let delta = a
            .comult()
            .ok_or_else(|| Verdict::fail(law, "comultiplication missing"))?;
        let eps = a
            .counit()
            .ok_or_else(|| Verdict::fail(law, "counit missing"))?;
        let sigma = cat
            .braiding(n, n)
            .ok_or_else(|| Verdict::fail(law, "braiding missing"))?;

        let lhs = chain(&[delta, mu])?;
        let middle = kronecker(&kronecker(&id, &sigma), &id);
        let rhs = chain(&[&kronecker(mu, mu), &middle, &kronecker(delta, delta)])?;
        let v = eq_or_fail(
            law,
            "Delta.mu vs (mu (x) mu).(id (x) sigma (x) id).(Delta (x) Delta)",
            lhs,
            rhs,
        );
        if !v.is_pass() {
            return Ok(v);
        }

        let unit_obj = cat.unit_object();
        let lhs = chain(&[eps, mu])?;
        let rhs = chain(&[&cat.left_unitor(unit_obj), &kronecker(eps, eps)])?;
        let v = eq_or_fail(law, "eps.mu vs lambda_I.(eps (x) eps)", lhs, rhs);
        if !v.is_pass() {
            return Ok(v);
        }

        let lambda_inv = invert(&cat.left_unitor(unit_obj))
            .map_err(|e| Verdict::fail(law, format!("lambda_I not invertible: {e}")))?;
        let lhs = chain(&[delta, eta])?;
        let rhs = chain(&[&kronecker(eta, eta), &lambda_inv])?;
        let v = eq_or_fail(law, "Delta.eta vs (eta (x) eta).lambda_I^-1", lhs, rhs);
        if !v.is_pass() {
            return Ok(v);
        }

        let lhs = chain(&[eps, eta])?;
        Ok(eq_or_fail(law, "eps.eta vs id_I", lhs, RatMatrix::identity(unit_obj)))
    })
}

/// The two unit-side bialgebra axioms only:
/// `Delta . eta = (eta (x) eta) . lambda_I^-1` and `eps . eta = id_I`.
pub fn check_unit_axioms(cat: &ConcreteCategory, a: &AlgebraData) -> Verdict {
    run(|| {
        let law = "bialgebra unit axioms";
        let eta = a.unit();
        let delta = a
            .comult()
            .ok_or_else(|| Verdict::fail(law, "comultiplication missing"))?;
        let eps = a
            .counit()
            .ok_or_else(|| Verdict::fail(law, "counit missing"))?;
        let unit_obj = cat.unit_object();
        let lambda_inv = invert(&cat.left_unitor(unit_obj))
            .map_err(|e| Verdict::fail(law, format!("lambda_I not invertible: {e}")))?;
        let lhs = chain(&[delta, eta])?;
        let rhs = chain(&[&kronecker(eta, eta), &lambda_inv])?;
        let v = eq_or_fail(law, "Delta.eta vs (eta (x) eta).lambda_I^-1", lhs, rhs);
        if !v.is_pass() {
            return Ok(v);
        }
        let lhs = chain(&[eps, eta])?;
        Ok(eq_or_fail(law, "eps.eta vs id_I", lhs, RatMatrix::identity(unit_obj)))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureKind {
    Monoid,
    Comonoid,
    Frobenius,
    Hopf,
}

/// Does `f` commute with the structure maps of the requested kind?
///
/// Monoid: `f . mu_A = mu_B . (f (x) f)` and `f . eta_A = eta_B`.
/// Comonoid: `Delta_B . f = (f (x) f) . Delta_A` and `eps_B . f = eps_A`.
/// Frobenius requires both; Hopf additionally `S_B . f = f . S_A`.
pub fn is_structure_morphism(
    f: &RatMatrix,
    src: &AlgebraData,
    dst: &AlgebraData,
    kind: StructureKind,
) -> Result<bool, AlgebraError> {
    if f.src_dim() != src.carrier() || f.dst_dim() != dst.carrier() {
        return Err(AlgebraError::ShapeMismatch(format!(
            "morphism must be {} x {}, got {} x {}",
            dst.carrier(),
            src.carrier(),
            f.rows(),
            f.cols()
        )));
    }
    let ff = kronecker(f, f);
    let cmp = |a: Result<RatMatrix, _>, b: Result<RatMatrix, _>| -> Result<bool, AlgebraError> {
        match (a, b) {
            (Ok(x), Ok(y)) => Ok(x == y),
            _ => Err(AlgebraError::ShapeMismatch(
                "structure maps have incompatible shapes".to_string(),
            )),
        }
    };
    let monoid = |src: &AlgebraData, dst: &AlgebraData| -> Result<bool, AlgebraError> {
        Ok(cmp(compose(f, src.mult()), compose(dst.mult(), &ff))?
            && cmp(compose(f, src.unit()), Ok(dst.unit().clone()))?)
    };
    let comonoid = |src: &AlgebraData, dst: &AlgebraData| -> Result<bool, AlgebraError> {
        let (d_src, d_dst) = match (src.comult(), dst.comult()) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(AlgebraError::MissingStructure(
                    "comultiplication required on both algebras".to_string(),
                ))
            }
        };
        let (e_src, e_dst) = match (src.counit(), dst.counit()) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(AlgebraError::MissingStructure(
                    "counit required on both algebras".to_string(),
                ))
            }
        };
        Ok(cmp(compose(d_dst, f), compose(&ff, d_src))?
            && cmp(compose(e_dst, f), Ok(e_src.clone()))?)
    };
    match kind {
        StructureKind::Monoid => monoid(src, dst),
        StructureKind::Comonoid => comonoid(src, dst),
        StructureKind::Frobenius => Ok(monoid(src, dst)? && comonoid(src, dst)?),
        StructureKind::Hopf => {
            let (s_src, s_dst) = match (src.antipode(), dst.antipode()) {
                (Some(a), Some(b)) => (a, b),
                _ => {
                    return Err(AlgebraError::MissingStructure(
                        "antipode required on both algebras".to_string(),
                    ))
                }
            };
            Ok(monoid(src, dst)?
                && comonoid(src, dst)?
                && cmp(compose(s_dst, f), compose(f, s_src))?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::data::basis_copying;
    use crate::exactmat::{group_algebra, hom_matrix, GroupPresentation, Rng};
    use crate::ratmat;

    fn cat() -> ConcreteCategory {
        ConcreteCategory::mat_q()
    }

    #[test]
    fn group_algebras_are_monoids_and_comonoids() {
        let cat = cat();
        for g in GroupPresentation::standard_library(6) {
            let a = group_algebra(&g);
            assert!(check_monoid(&cat, &a).is_pass(), "{}", g.name());
            assert!(check_comonoid(&cat, &a).is_pass(), "{}", g.name());
            assert!(check_bialgebra_ambient(&cat, &a).is_pass(), "{}", g.name());
        }
    }

    #[test]
    fn basis_copying_is_a_monoid_and_comonoid() {
        let cat = cat();
        for n in 1..=5 {
            let a = basis_copying(n);
            assert!(check_monoid(&cat, &a).is_pass());
            assert!(check_comonoid(&cat, &a).is_pass());
        }
    }

    #[test]
    fn corrupted_unit_fails_unit_law() {
        let cat = cat();
        let a = group_algebra(&GroupPresentation::cyclic(2));
        // Send the unit to the wrong basis vector.
        let corrupted = a.with_unit(ratmat![[0], [1]]);
        let v = check_monoid(&cat, &corrupted);
        let failure = v.failure().expect("must fail");
        assert!(failure.edge.contains("unit"));
    }

    #[test]
    fn corrupted_counit_fails_counit_law() {
        let cat = cat();
        let a = basis_copying(3).with_counit(ratmat![[1, 1, 0]]);
        let v = check_comonoid(&cat, &a);
        let failure = v.failure().expect("must fail");
        assert!(failure.edge.contains("counit"));
    }

    #[test]
    fn s3_is_not_commutative_but_is_cocommutative() {
        let cat = cat();
        let s3 = group_algebra(&GroupPresentation::symmetric_3());
        assert!(!s3.flags().commutative);
        assert!(check_monoid(&cat, &s3).is_pass());
        // Force the commutativity check: it must fail for S3.
        let mut flags = s3.flags();
        flags.commutative = true;
        assert!(!check_monoid(&cat, &s3.clone().with_flags(flags)).is_pass());
    }

    #[test]
    fn identity_is_a_structure_morphism_of_every_kind() {
        let z3 = group_algebra(&GroupPresentation::cyclic(3));
        let id = RatMatrix::identity(3);
        for kind in [
            StructureKind::Monoid,
            StructureKind::Comonoid,
            StructureKind::Frobenius,
            StructureKind::Hopf,
        ] {
            assert!(is_structure_morphism(&id, &z3, &z3, kind).unwrap());
        }
    }

    #[test]
    fn group_homs_induce_hopf_morphisms() {
        let z2 = GroupPresentation::cyclic(2);
        let z4 = GroupPresentation::cyclic(4);
        let a2 = group_algebra(&z2);
        let a4 = group_algebra(&z4);
        let embedding = z2
            .homomorphisms_to(&z4)
            .into_iter()
            .find(|images| images[1] == 2)
            .unwrap();
        let f = hom_matrix(&embedding, 4);
        assert!(is_structure_morphism(&f, &a2, &a4, StructureKind::Hopf).unwrap());
    }

    #[test]
    fn random_matrix_is_not_a_structure_morphism() {
        let z3 = group_algebra(&GroupPresentation::cyclic(3));
        let mut rng = Rng::new(80);
        let f = crate::exactmat::random_int_matrix(&mut rng, 3, 3, 2);
        assert!(!is_structure_morphism(&f, &z3, &z3, StructureKind::Monoid).unwrap());
    }

    #[test]
    fn shape_mismatch_reported() {
        let z2 = group_algebra(&GroupPresentation::cyclic(2));
        let z3 = group_algebra(&GroupPresentation::cyclic(3));
        let wrong = RatMatrix::identity(2);
        assert!(matches!(
            is_structure_morphism(&wrong, &z2, &z3, StructureKind::Monoid),
            Err(AlgebraError::ShapeMismatch(_))
        ));
    }
}
