//! Pivots and ribbon twists on the arrow category of the core.

use super::rigid::{dualize_morphism, DualError};
use crate::arrowcat::{arrow_compose, ArrowMorphism, ArrowObject};
use crate::monoidal::MonoidalStructure;
use crate::verdict::{edge, run_check, Verdict, Witness};

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

/// The double dual of an arrow object, computed by dualizing the map twice.
fn double_dual_object(
    ms: &MonoidalStructure,
    f: &ArrowObject,
) -> Result<ArrowObject, DualError> {
    let cat = ms.category();
    let duality = cat
        .duality()
        .ok_or_else(|| DualError::MissingData(format!("{:?} carries no duality", cat.tag())))?;
    let map = dualize_morphism(&dualize_morphism(f.map())?)?;
    Ok(ArrowObject::new(
        cat,
        duality.dual_object(duality.dual_object(f.src())),
        duality.dual_object(duality.dual_object(f.dst())),
        map,
    )?)
}

/// The double dual of a square: both components dualized twice.
fn double_dual_morphism(
    ms: &MonoidalStructure,
    phi: &ArrowMorphism,
) -> Result<ArrowMorphism, DualError> {
    let source = double_dual_object(ms, phi.source())?;
    let target = double_dual_object(ms, phi.target())?;
    let top = dualize_morphism(&dualize_morphism(phi.top())?)?;
    let bottom = dualize_morphism(&dualize_morphism(phi.bottom())?)?;
    Ok(ArrowMorphism::new(source, target, top, bottom)?)
}

/// The pivot `(pi_A, pi_B): f -> f**` on the arrow category of the core.
pub fn pivot_arrow(ms: &MonoidalStructure, f: &ArrowObject) -> Result<ArrowMorphism, DualError> {
    let cat = ms.category();
    let data = cat
        .pivot_twist()
        .ok_or_else(|| DualError::MissingData(format!("{:?} carries no pivot", cat.tag())))?;
    if !f.map().is_invertible() {
        return Err(DualError::NoDual(format!("{f} is not an isomorphism")));
    }
    let target = double_dual_object(ms, f)?;
    Ok(ArrowMorphism::new(
        f.clone(),
        target,
        data.pivot(f.src()),
        data.pivot(f.dst()),
    )?)
}

/// Naturality cube of the pivot against a square of isomorphisms:
/// `pi_{f'} . phi = phi** . pi_f`.
pub fn check_pivot_naturality(ms: &MonoidalStructure, phi: &ArrowMorphism) -> Verdict {
    run_check(|| {
        let law = "pivot naturality";
        let pivot_src = edge(law, "pivot at source", pivot_arrow(ms, phi.source()))?;
        let pivot_dst = edge(law, "pivot at target", pivot_arrow(ms, phi.target()))?;
        let phi_dd = edge(law, "phi**", double_dual_morphism(ms, phi))?;
        let lhs = edge(law, "pi . phi", arrow_compose(&pivot_dst, phi))?;
        let rhs = edge(law, "phi** . pi", arrow_compose(&phi_dd, &pivot_src))?;
        Ok(compare(law, "pivot naturality cube", &lhs, &rhs))
    })
}

/// Monoidal compatibility of the pivot: `pi_{f (x) g} = pi_f (x) pi_g`.
pub fn check_pivot_monoidal(
    ms: &MonoidalStructure,
    f: &ArrowObject,
    g: &ArrowObject,
) -> Verdict {
    run_check(|| {
        let law = "pivot monoidal compatibility";
        let tensor = ms.tensor_objects(f, g);
        let lhs = edge(law, "pivot at f (x) g", pivot_arrow(ms, &tensor))?;
        let pf = edge(law, "pivot at f", pivot_arrow(ms, f))?;
        let pg = edge(law, "pivot at g", pivot_arrow(ms, g))?;
        let rhs = edge(law, "pi_f (x) pi_g", ms.tensor_morphisms(&pf, &pg))?;
        Ok(compare(law, "pivot on tensor", &lhs, &rhs))
    })
}

/// The twist `(theta_A, theta_B): f -> f`.
pub fn twist_arrow(ms: &MonoidalStructure, f: &ArrowObject) -> Result<ArrowMorphism, DualError> {
    let cat = ms.category();
    let data = cat
        .pivot_twist()
        .ok_or_else(|| DualError::MissingData(format!("{:?} carries no twist", cat.tag())))?;
    Ok(ArrowMorphism::new(
        f.clone(),
        f.clone(),
        data.twist(f.src()),
        data.twist(f.dst()),
    )?)
}

/// The three twist axioms at `(f, g)`:
/// the tensor cube `theta_{f (x) g} = (theta_f (x) theta_g) . sigma_{g,f} . sigma_{f,g}`,
/// triviality at the unit, and compatibility with duals.
pub fn check_twist_axioms(
    ms: &MonoidalStructure,
    f: &ArrowObject,
    g: &ArrowObject,
) -> Verdict {
    run_check(|| {
        let law = "twist axioms";
        // Tensor cube.
        let tensor = ms.tensor_objects(f, g);
        let lhs = edge(law, "theta at f (x) g", twist_arrow(ms, &tensor))?;
        let sigma_fg = edge(law, "sigma(f, g)", ms.braiding(f, g))?;
        let sigma_gf = edge(law, "sigma(g, f)", ms.braiding(g, f))?;
        let tf = edge(law, "theta_f", twist_arrow(ms, f))?;
        let tg = edge(law, "theta_g", twist_arrow(ms, g))?;
        let pair = edge(law, "theta_f (x) theta_g", ms.tensor_morphisms(&tf, &tg))?;
        let braided = edge(law, "sigma . sigma", arrow_compose(&sigma_gf, &sigma_fg))?;
        let rhs = edge(law, "(theta (x) theta) . sigma . sigma", arrow_compose(&pair, &braided))?;
        let cube = compare(law, "twist tensor cube", &lhs, &rhs);
        if !cube.is_pass() {
            return Ok(cube);
        }

        // theta at the unit is the identity pair.
        let unit = ms.unit_arrow();
        let theta_unit = edge(law, "theta at id_I", twist_arrow(ms, &unit))?;
        let unit_check = compare(law, "twist at unit", &theta_unit, &ms.unit_id());
        if !unit_check.is_pass() {
            return Ok(unit_check);
        }

        // Dual compatibility: theta at f* equals the dualized twist pair.
        let dual_map = edge(law, "f*", dualize_morphism(f.map()))?;
        let cat = ms.category();
        let duality = edge(
            law,
            "duality data",
            cat.duality().ok_or_else(|| DualError::MissingData("no duality".to_string())),
        )?;
        let f_star = edge(
            law,
            "f* object",
            ArrowObject::new(
                cat,
                duality.dual_object(f.src()),
                duality.dual_object(f.dst()),
                dual_map,
            ),
        )?;
        let theta_star = edge(law, "theta at f*", twist_arrow(ms, &f_star))?;
        let dual_top = edge(law, "theta_A*", dualize_morphism(tf.top()))?;
        let dual_bottom = edge(law, "theta_B*", dualize_morphism(tf.bottom()))?;
        let dualized = edge(
            law,
            "(theta_f)*",
            ArrowMorphism::new(f_star.clone(), f_star, dual_top, dual_bottom),
        )?;
        Ok(compare(law, "twist dual compatibility", &theta_star, &dualized))
    })
}
