//! The generic path-equality engine must agree with every specialized
//! checker on shared fixtures, for honest and for corrupted structure alike.

use arrowcat_cli::diagram::{check_diagram, Diagram};
use arrowcat_core::algebra::{check_arrow_hopf, make_arrow_algebra};
use arrowcat_core::arrowcat::{arrow_id, random_arrow_iso, random_arrow_object, ArrowMorphism, ArrowObject};
use arrowcat_core::duality::{assemble_arrow_dual, check_snake_arrow};
use arrowcat_core::exactmat::{
    commutation_matrix, group_algebra, ConcreteCategory, GroupPresentation, RatMatrix, Rng,
};
use arrowcat_core::monoidal::{check_hexagons, check_pentagon, MonoidalStructure};
use std::sync::Arc;

/// Builds the pentagon as a generic diagram over arrow squares.
fn pentagon_diagram(
    ms: &MonoidalStructure,
    fs: &[ArrowObject],
) -> Result<Diagram<ArrowMorphism>, String> {
    let f12 = ms.tensor_objects(&fs[0], &fs[1]);
    let f34 = ms.tensor_objects(&fs[2], &fs[3]);
    let f23 = ms.tensor_objects(&fs[1], &fs[2]);
    let mut d = Diagram::new();
    for v in ["v0", "v1", "v2", "v3", "v4"] {
        d.vertex(v);
    }
    // v0 = ((f1 f2) f3) f4, v1 = (f1 f2)(f3 f4), v2 = f1 (f2 (f3 f4)),
    // v3 = (f1 (f2 f3)) f4, v4 = f1 ((f2 f3) f4).
    let err = |e: arrowcat_core::arrowcat::ArrowError| e.to_string();
    d.edge("a1", "v0", "v1", ms.associator(&f12, &fs[2], &fs[3]).map_err(err)?)
        .map_err(|e| e.to_string())?;
    d.edge("a2", "v1", "v2", ms.associator(&fs[0], &fs[1], &f34).map_err(err)?)
        .map_err(|e| e.to_string())?;
    d.edge(
        "a3xid",
        "v0",
        "v3",
        ms.tensor_morphisms(
            &ms.associator(&fs[0], &fs[1], &fs[2]).map_err(err)?,
            &arrow_id(&fs[3]),
        )
        .map_err(err)?,
    )
    .map_err(|e| e.to_string())?;
    d.edge("a4", "v3", "v4", ms.associator(&fs[0], &f23, &fs[3]).map_err(err)?)
        .map_err(|e| e.to_string())?;
    d.edge(
        "idxa5",
        "v4",
        "v2",
        ms.tensor_morphisms(
            &arrow_id(&fs[0]),
            &ms.associator(&fs[1], &fs[2], &fs[3]).map_err(err)?,
        )
        .map_err(err)?,
    )
    .map_err(|e| e.to_string())?;
    d.compare(&[&["a1", "a2"], &["a3xid", "a4", "idxa5"]]);
    Ok(d)
}

#[test]
fn pentagon_agreement_honest_and_corrupted() {
    let mut rng = Rng::new(90);
    for corrupt in [false, true] {
        let cat = if corrupt {
            ConcreteCategory::mat_q().with_associator(Arc::new(|a, b, c| {
                if a * b * c == 4 {
                    commutation_matrix(2, 2)
                } else {
                    RatMatrix::identity(a * b * c)
                }
            }))
        } else {
            ConcreteCategory::mat_q()
        };
        let ms = MonoidalStructure::new(cat);
        let mut agreements = 0;
        for _ in 0..20 {
            let fs: Vec<_> = (0..4)
                .map(|_| random_arrow_object(ms.category(), &mut rng, 2).unwrap())
                .collect();
            let specialized = check_pentagon(&ms, &fs[0], &fs[1], &fs[2], &fs[3]);
            match pentagon_diagram(&ms, &fs) {
                Ok(d) => {
                    let generic = check_diagram(&d).unwrap();
                    assert_eq!(specialized.is_pass(), generic.is_pass());
                    agreements += 1;
                }
                Err(_) => {
                    // Edge construction failed: the specialized checker must
                    // have failed for the same reason.
                    assert!(!specialized.is_pass());
                }
            }
        }
        if !corrupt {
            assert_eq!(agreements, 20);
        }
    }
}

#[test]
fn hexagon_agreement() {
    let ms = MonoidalStructure::new(ConcreteCategory::mat_q());
    let mut rng = Rng::new(91);
    for _ in 0..10 {
        let f = random_arrow_object(ms.category(), &mut rng, 3).unwrap();
        let g = random_arrow_object(ms.category(), &mut rng, 3).unwrap();
        let h = random_arrow_object(ms.category(), &mut rng, 3).unwrap();
        let gh = ms.tensor_objects(&g, &h);

        let mut d: Diagram<ArrowMorphism> = Diagram::new();
        for v in ["v0", "v1", "v2", "v3", "v4", "v5"] {
            d.vertex(v);
        }
        d.edge("alpha", "v0", "v1", ms.associator(&f, &g, &h).unwrap()).unwrap();
        d.edge("sigma", "v1", "v2", ms.braiding(&f, &gh).unwrap()).unwrap();
        d.edge("alpha2", "v2", "v3", ms.associator(&g, &h, &f).unwrap()).unwrap();
        d.edge(
            "sigmaxid",
            "v0",
            "v4",
            ms.tensor_morphisms(&ms.braiding(&f, &g).unwrap(), &arrow_id(&h)).unwrap(),
        )
        .unwrap();
        d.edge("alpha3", "v4", "v5", ms.associator(&g, &f, &h).unwrap()).unwrap();
        d.edge(
            "idxsigma",
            "v5",
            "v3",
            ms.tensor_morphisms(&arrow_id(&g), &ms.braiding(&f, &h).unwrap()).unwrap(),
        )
        .unwrap();
        d.compare(&[&["alpha", "sigma", "alpha2"], &["sigmaxid", "alpha3", "idxsigma"]]);

        let generic = check_diagram(&d).unwrap();
        let specialized = check_hexagons(&ms, &f, &g, &h);
        assert_eq!(generic.is_pass(), specialized.is_pass());
        assert!(generic.is_pass());
    }
}

#[test]
fn snake_agreement() {
    let ms = MonoidalStructure::new(ConcreteCategory::mat_q());
    let mut rng = Rng::new(92);
    for _ in 0..10 {
        let f = random_arrow_iso(ms.category(), &mut rng, 3).unwrap();
        let dual = assemble_arrow_dual(&ms, &f).unwrap();
        let f_star = dual.dual().clone();

        let mut d: Diagram<ArrowMorphism> = Diagram::new();
        for v in ["f", "unit-f", "ffs-f", "f-fsf", "f-unit", "end"] {
            d.vertex(v);
        }
        d.edge("lambda-inv", "f", "unit-f", ms.left_unitor_inv(&f).unwrap()).unwrap();
        d.edge(
            "b-x-id",
            "unit-f",
            "ffs-f",
            ms.tensor_morphisms(dual.coeval(), &arrow_id(&f)).unwrap(),
        )
        .unwrap();
        d.edge("alpha", "ffs-f", "f-fsf", ms.associator(&f, &f_star, &f).unwrap()).unwrap();
        d.edge(
            "id-x-d",
            "f-fsf",
            "f-unit",
            ms.tensor_morphisms(&arrow_id(&f), dual.eval()).unwrap(),
        )
        .unwrap();
        d.edge("rho", "f-unit", "end", ms.right_unitor(&f).unwrap()).unwrap();
        d.edge("identity", "f", "end", arrow_id(&f)).unwrap();
        d.compare(&[
            &["lambda-inv", "b-x-id", "alpha", "id-x-d", "rho"],
            &["identity"],
        ]);

        let generic = check_diagram(&d).unwrap();
        let specialized = check_snake_arrow(&ms, &dual);
        assert_eq!(generic.is_pass(), specialized.is_pass());
        assert!(generic.is_pass());
    }
}

#[test]
fn frobenius_agreement_honest_and_corrupted() {
    use arrowcat_core::algebra::{basis_copying, check_arrow_frobenius};
    let ms = MonoidalStructure::new(ConcreteCategory::mat_q());
    // The copy algebra satisfies the Frobenius law; the group algebra with
    // its group-like comultiplication does not.
    let honest = basis_copying(3);
    let grouplike = group_algebra(&GroupPresentation::cyclic(3));
    for (algebra, expect_pass) in [(&honest, true), (&grouplike, false)] {
        let id = ArrowObject::identity_on(ms.category(), 3).unwrap();
        let aa = make_arrow_algebra(&ms, &id, algebra, algebra).unwrap();

        let f = aa.object();
        let mut d: Diagram<ArrowMorphism> = Diagram::new();
        for v in ["ff", "fff-l", "fff-r", "f", "ff-end"] {
            d.vertex(v);
        }
        let delta = aa.comult().unwrap();
        d.edge(
            "d-x-id",
            "ff",
            "fff-l",
            ms.tensor_morphisms(delta, &arrow_id(f)).unwrap(),
        )
        .unwrap();
        d.edge("alpha", "fff-l", "fff-r", ms.associator(f, f, f).unwrap()).unwrap();
        d.edge(
            "id-x-mu",
            "fff-r",
            "ff-end",
            ms.tensor_morphisms(&arrow_id(f), aa.mult()).unwrap(),
        )
        .unwrap();
        d.edge("mu", "ff", "f", aa.mult().clone()).unwrap();
        d.edge("delta", "f", "ff-end", delta.clone()).unwrap();
        d.compare(&[&["d-x-id", "alpha", "id-x-mu"], &["mu", "delta"]]);

        let generic = check_diagram(&d).unwrap();
        let specialized = check_arrow_frobenius(&ms, &aa);
        assert_eq!(generic.is_pass(), specialized.is_pass());
        assert_eq!(generic.is_pass(), expect_pass);
    }
}

#[test]
fn hopf_agreement_honest_and_corrupted() {
    let ms = MonoidalStructure::new(ConcreteCategory::mat_q());
    let z3 = GroupPresentation::cyclic(3);
    for corrupt in [false, true] {
        let mut a = group_algebra(&z3);
        if corrupt {
            a = a.with_antipode(RatMatrix::identity(3));
        }
        let id = ArrowObject::identity_on(ms.category(), 3).unwrap();
        let aa = make_arrow_algebra(&ms, &id, &a, &a).unwrap();

        let mut d: Diagram<ArrowMorphism> = Diagram::new();
        for v in ["f", "ff", "ff2", "end", "unit"] {
            d.vertex(v);
        }
        let s = aa.antipode().unwrap().clone();
        d.edge("delta", "f", "ff", aa.comult().unwrap().clone()).unwrap();
        d.edge(
            "id-x-s",
            "ff",
            "ff2",
            ms.tensor_morphisms(&arrow_id(aa.object()), &s).unwrap(),
        )
        .unwrap();
        d.edge("mu", "ff2", "end", aa.mult().clone()).unwrap();
        d.edge("eps", "f", "unit", aa.counit().unwrap().clone()).unwrap();
        d.edge("eta", "unit", "end", aa.unit().clone()).unwrap();
        d.compare(&[&["delta", "id-x-s", "mu"], &["eps", "eta"]]);

        let generic = check_diagram(&d).unwrap();
        let specialized = check_arrow_hopf(&ms, &aa);
        assert_eq!(generic.is_pass(), specialized.is_pass());
        assert_eq!(generic.is_pass(), !corrupt);
    }
}
