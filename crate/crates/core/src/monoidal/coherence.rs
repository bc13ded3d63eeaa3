//! Coherence checkers on the arrow category: pentagon, triangle, both
//! hexagons, symmetry, interchange and braiding naturality. Every edge is a
//! validated square and every comparison is an exact equality of composite
//! squares, so a corrupted structure supplier fails either at edge
//! construction or at path comparison.

use super::structure::MonoidalStructure;
use crate::arrowcat::{arrow_compose, arrow_id, compose_chain, ArrowMorphism, ArrowObject};
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

/// Pentagon: the two associator paths
/// `((f1 f2) f3) f4 -> f1 (f2 (f3 f4))` agree.
pub fn check_pentagon(
    ms: &MonoidalStructure,
    f1: &ArrowObject,
    f2: &ArrowObject,
    f3: &ArrowObject,
    f4: &ArrowObject,
) -> Verdict {
    run_check(|| {
        let law = "pentagon";
        let f12 = ms.tensor_objects(f1, f2);
        let f34 = ms.tensor_objects(f3, f4);
        let f23 = ms.tensor_objects(f2, f3);

        // Short side: alpha(f1, f2, f3 (x) f4) . alpha(f1 (x) f2, f3, f4).
        let a1 = edge(law, "alpha(f1 f2, f3, f4)", ms.associator(&f12, f3, f4))?;
        let a2 = edge(law, "alpha(f1, f2, f3 f4)", ms.associator(f1, f2, &f34))?;
        let short = edge(law, "short path", arrow_compose(&a2, &a1))?;

        // Long side: (id (x) alpha) . alpha . (alpha (x) id).
        let a3 = edge(law, "alpha(f1, f2, f3)", ms.associator(f1, f2, f3))?;
        let leg1 = edge(
            law,
            "alpha(f1, f2, f3) (x) id_f4",
            ms.tensor_morphisms(&a3, &arrow_id(f4)),
        )?;
        let leg2 = edge(law, "alpha(f1, f2 f3, f4)", ms.associator(f1, &f23, f4))?;
        let a4 = edge(law, "alpha(f2, f3, f4)", ms.associator(f2, f3, f4))?;
        let leg3 = edge(
            law,
            "id_f1 (x) alpha(f2, f3, f4)",
            ms.tensor_morphisms(&arrow_id(f1), &a4),
        )?;
        let long = edge(law, "long path", compose_chain(&[&leg3, &leg2, &leg1]))?;

        Ok(compare(law, "short path vs long path", &short, &long))
    })
}

/// Triangle: `(rho_f (x) id) = (id (x) lambda_f') . alpha(f, id_I, f')`.
pub fn check_triangle(ms: &MonoidalStructure, f: &ArrowObject, f2: &ArrowObject) -> Verdict {
    run_check(|| {
        let law = "triangle";
        let unit = ms.unit_arrow();
        let rho = edge(law, "rho_f", ms.right_unitor(f))?;
        let lhs = edge(
            law,
            "rho_f (x) id",
            ms.tensor_morphisms(&rho, &arrow_id(f2)),
        )?;
        let alpha = edge(law, "alpha(f, id_I, f')", ms.associator(f, &unit, f2))?;
        let lambda = edge(law, "lambda_f'", ms.left_unitor(f2))?;
        let leg = edge(
            law,
            "id (x) lambda_f'",
            ms.tensor_morphisms(&arrow_id(f), &lambda),
        )?;
        let rhs = edge(law, "right path", arrow_compose(&leg, &alpha))?;
        Ok(compare(law, "unitor paths", &lhs, &rhs))
    })
}

/// Both hexagon identities; the second uses the inverse associator.
pub fn check_hexagons(
    ms: &MonoidalStructure,
    f: &ArrowObject,
    g: &ArrowObject,
    h: &ArrowObject,
) -> Verdict {
    run_check(|| {
        let law = "hexagon";
        let gh = ms.tensor_objects(g, h);
        let fg = ms.tensor_objects(f, g);

        // First hexagon: (f g) h -> g (h f).
        let a1 = edge(law, "alpha(f, g, h)", ms.associator(f, g, h))?;
        let s1 = edge(law, "sigma(f, g h)", ms.braiding(f, &gh))?;
        let a2 = edge(law, "alpha(g, h, f)", ms.associator(g, h, f))?;
        let lhs = edge(law, "hexagon-1 left", compose_chain(&[&a2, &s1, &a1]))?;

        let sfg = edge(law, "sigma(f, g)", ms.braiding(f, g))?;
        let leg1 = edge(law, "sigma(f, g) (x) id", ms.tensor_morphisms(&sfg, &arrow_id(h)))?;
        let a3 = edge(law, "alpha(g, f, h)", ms.associator(g, f, h))?;
        let sfh = edge(law, "sigma(f, h)", ms.braiding(f, h))?;
        let leg3 = edge(law, "id (x) sigma(f, h)", ms.tensor_morphisms(&arrow_id(g), &sfh))?;
        let rhs = edge(law, "hexagon-1 right", compose_chain(&[&leg3, &a3, &leg1]))?;

        let first = compare(law, "hexagon-1 paths", &lhs, &rhs);
        if !first.is_pass() {
            return Ok(first);
        }

        // Second hexagon: f (g h) -> (h f) g, with inverse associators.
        let ai1 = edge(law, "alpha^-1(f, g, h)", ms.associator_inv(f, g, h))?;
        let s2 = edge(law, "sigma(f g, h)", ms.braiding(&fg, h))?;
        let ai2 = edge(law, "alpha^-1(h, f, g)", ms.associator_inv(h, f, g))?;
        let lhs2 = edge(law, "hexagon-2 left", compose_chain(&[&ai2, &s2, &ai1]))?;

        let sgh = edge(law, "sigma(g, h)", ms.braiding(g, h))?;
        let leg4 = edge(law, "id (x) sigma(g, h)", ms.tensor_morphisms(&arrow_id(f), &sgh))?;
        let ai3 = edge(law, "alpha^-1(f, h, g)", ms.associator_inv(f, h, g))?;
        let leg6 = edge(law, "sigma(f, h) (x) id", ms.tensor_morphisms(&sfh, &arrow_id(g)))?;
        let rhs2 = edge(law, "hexagon-2 right", compose_chain(&[&leg6, &ai3, &leg4]))?;

        Ok(compare(law, "hexagon-2 paths", &lhs2, &rhs2))
    })
}

/// Symmetry: `sigma_{g,f} . sigma_{f,g} = id_{f (x) g}`, componentwise.
pub fn check_symmetry(ms: &MonoidalStructure, f: &ArrowObject, g: &ArrowObject) -> Verdict {
    run_check(|| {
        let law = "symmetry";
        let sfg = edge(law, "sigma(f, g)", ms.braiding(f, g))?;
        let sgf = edge(law, "sigma(g, f)", ms.braiding(g, f))?;
        let round_trip = edge(law, "sigma . sigma", arrow_compose(&sgf, &sfg))?;
        let id = arrow_id(&ms.tensor_objects(f, g));
        Ok(compare(law, "sigma(g,f) . sigma(f,g) vs id", &round_trip, &id))
    })
}

/// Interchange: `(phi' . phi) (x) (psi' . psi) = (phi' (x) psi') . (phi (x) psi)`.
pub fn check_interchange(
    ms: &MonoidalStructure,
    phi: &ArrowMorphism,
    phi2: &ArrowMorphism,
    psi: &ArrowMorphism,
    psi2: &ArrowMorphism,
) -> Verdict {
    run_check(|| {
        let law = "interchange";
        let comp_left = edge(law, "phi' . phi", arrow_compose(phi2, phi))?;
        let comp_right = edge(law, "psi' . psi", arrow_compose(psi2, psi))?;
        let lhs = edge(law, "tensor of composites", ms.tensor_morphisms(&comp_left, &comp_right))?;
        let t1 = edge(law, "phi (x) psi", ms.tensor_morphisms(phi, psi))?;
        let t2 = edge(law, "phi' (x) psi'", ms.tensor_morphisms(phi2, psi2))?;
        let rhs = edge(law, "composite of tensors", arrow_compose(&t2, &t1))?;
        Ok(compare(law, "tensor/compose order", &lhs, &rhs))
    })
}

/// Naturality of the lifted braiding against a pair of squares:
/// `sigma_{f',g'} . (phi (x) psi) = (psi (x) phi) . sigma_{f,g}`.
pub fn check_braiding_naturality(
    ms: &MonoidalStructure,
    phi: &ArrowMorphism,
    psi: &ArrowMorphism,
) -> Verdict {
    run_check(|| {
        let law = "braiding naturality";
        let sigma_src = edge(
            law,
            "sigma at sources",
            ms.braiding(phi.source(), psi.source()),
        )?;
        let sigma_dst = edge(
            law,
            "sigma at targets",
            ms.braiding(phi.target(), psi.target()),
        )?;
        let t = edge(law, "phi (x) psi", ms.tensor_morphisms(phi, psi))?;
        let t_swapped = edge(law, "psi (x) phi", ms.tensor_morphisms(psi, phi))?;
        let lhs = edge(law, "sigma . (phi (x) psi)", arrow_compose(&sigma_dst, &t))?;
        let rhs = edge(law, "(psi (x) phi) . sigma", arrow_compose(&t_swapped, &sigma_src))?;
        Ok(compare(law, "braiding naturality square", &lhs, &rhs))
    })
}
