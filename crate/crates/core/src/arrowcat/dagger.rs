//! The dagger on the arrow category of the unitary subcategory: transpose
//! both components and reverse the square.

use super::morphism::{ArrowError, ArrowMorphism};

/// Componentwise transpose with the reversed square re-verified. No
/// unitarity is demanded of the components themselves; the caller guarantees
/// whatever makes the reversed square commute.
pub fn dagger_morphism(phi: &ArrowMorphism) -> Result<ArrowMorphism, ArrowError> {
    ArrowMorphism::new(
        phi.target().clone(),
        phi.source().clone(),
        phi.top().transpose(),
        phi.bottom().transpose(),
    )
}

/// The dagger of a unitary square. Requires `M^T = M^{-1}` for both
/// components, which is what makes the reversed square commute for every
/// morphism of Arr of the unitary subcategory.
pub fn arrow_dagger(phi: &ArrowMorphism) -> Result<ArrowMorphism, ArrowError> {
    if !phi.top().is_orthogonal() {
        return Err(ArrowError::NotUnitary(format!(
            "top component {} fails M^T = M^-1",
            phi.top()
        )));
    }
    if !phi.bottom().is_orthogonal() {
        return Err(ArrowError::NotUnitary(format!(
            "bottom component {} fails M^T = M^-1",
            phi.bottom()
        )));
    }
    dagger_morphism(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrowcat::morphism::{arrow_compose, arrow_id};
    use crate::arrowcat::object::ArrowObject;
    use crate::arrowcat::sample::{random_square_from, random_unitary_square};
    use crate::exactmat::{ConcreteCategory, Rat, RatMatrix, Rng};
    use crate::ratmat;

    #[test]
    fn dagger_of_identity_is_identity() {
        let cat = ConcreteCategory::mat_q_unitary();
        let f = ArrowObject::from_map(&cat, ratmat![[0, 1], [1, 0]]).unwrap();
        let id = arrow_id(&f);
        assert_eq!(arrow_dagger(&id).unwrap(), id);
    }

    #[test]
    fn permutation_components_reverse_cleanly() {
        let mut rng = Rng::new(20);
        for _ in 0..20 {
            let phi = random_unitary_square(&mut rng, 4).unwrap();
            let dag = arrow_dagger(&phi).unwrap();
            assert_eq!(dag.source(), phi.target());
            assert_eq!(dag.target(), phi.source());
            // Involutive.
            assert_eq!(arrow_dagger(&dag).unwrap(), phi);
        }
    }

    #[test]
    fn dagger_is_contravariant() {
        let mut rng = Rng::new(21);
        let cat = ConcreteCategory::mat_q_unitary();
        for _ in 0..20 {
            let phi = random_unitary_square(&mut rng, 3).unwrap();
            let psi = random_square_from(&cat, &mut rng, phi.target().clone(), 3).unwrap();
            let composite = arrow_compose(&psi, &phi).unwrap();
            let lhs = arrow_dagger(&composite).unwrap();
            let rhs = arrow_compose(
                &arrow_dagger(&phi).unwrap(),
                &arrow_dagger(&psi).unwrap(),
            )
            .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn rotation_component_daggers_to_its_transpose() {
        let cat = ConcreteCategory::mat_q_unitary();
        let rot = RatMatrix::from_rows(vec![
            vec![Rat::new(3, 5), Rat::new(-4, 5)],
            vec![Rat::new(4, 5), Rat::new(3, 5)],
        ]);
        let f = ArrowObject::from_map(&cat, rot.clone()).unwrap();
        let g = ArrowObject::from_map(&cat, rot.clone()).unwrap();
        // rot commutes with itself, so (rot, rot) is a valid square f -> g.
        let phi = ArrowMorphism::new(f, g, rot.clone(), rot.clone()).unwrap();
        let dag = arrow_dagger(&phi).unwrap();
        assert_eq!(dag.top(), &rot.transpose());
        assert_eq!(dag.bottom(), &rot.transpose());
    }

    #[test]
    fn non_unitary_components_rejected() {
        let cat = ConcreteCategory::mat_q();
        let f = ArrowObject::from_map(&cat, ratmat![[1, 0], [0, 1]]).unwrap();
        let phi = ArrowMorphism::new(
            f.clone(),
            f.clone(),
            ratmat![[2, 0], [0, 2]],
            ratmat![[2, 0], [0, 2]],
        )
        .unwrap();
        assert!(matches!(
            arrow_dagger(&phi),
            Err(ArrowError::NotUnitary(_))
        ));
    }
}
