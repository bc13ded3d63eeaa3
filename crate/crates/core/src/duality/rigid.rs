//! Duals in the arrow category.
//!
//! An arrow object `f` has a dual exactly when its underlying map is
//! invertible; the dual object is the inverse-transpose, which is the unique
//! solution of the two lifted cup/cap squares. Three independent routes
//! cross-check each other here: direct elimination, the linear-system
//! solvability oracle, and the graphical cup/cap composite.

use crate::arrowcat::{arrow_id, compose_chain, ArrowError, ArrowMorphism, ArrowObject};
use crate::exactmat::{
    compose, invert, kronecker, solve_exact, LinearSolution, Rat, RatMatrix,
};
use crate::monoidal::MonoidalStructure;
use crate::verdict::{edge, run_check, Verdict, Witness};
use std::fmt;

#[derive(Debug, Clone)]
pub enum DualError {
    /// The object is not an isomorphism, so no dual exists.
    NoDual(String),
    /// The ambient category carries no duality (or pivot/twist) data.
    MissingData(String),
    Arrow(ArrowError),
    /// A snake identity failed for assembled dual data.
    SnakeBroken(String),
}

impl fmt::Display for DualError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualError::NoDual(s) => write!(f, "no dual: {s}"),
            DualError::MissingData(s) => write!(f, "missing ambient data: {s}"),
            DualError::Arrow(e) => write!(f, "{e}"),
            DualError::SnakeBroken(s) => write!(f, "snake identity failed: {s}"),
        }
    }
}

impl std::error::Error for DualError {}

impl From<ArrowError> for DualError {
    fn from(e: ArrowError) -> Self {
        DualError::Arrow(e)
    }
}

/// Exactly the invertible objects admit duals.
pub fn has_dual(f: &ArrowObject) -> bool {
    f.map().is_invertible()
}

/// The dual of an ambient isomorphism: its inverse-transpose.
pub fn dualize_morphism(m: &RatMatrix) -> Result<RatMatrix, DualError> {
    let inv = invert(m).map_err(|e| DualError::NoDual(e.to_string()))?;
    Ok(inv.transpose())
}

/// Dual data for one arrow object: the dual object `f*` and the lifted
/// evaluation and coevaluation squares.
#[derive(Debug, Clone)]
pub struct ArrowDual {
    base: ArrowObject,
    dual: ArrowObject,
    /// `d_f = (d_A, d_B): f* (x) f -> id_I`.
    eval: ArrowMorphism,
    /// `b_f = (b_A, b_B): id_I -> f (x) f*`.
    coeval: ArrowMorphism,
}

impl ArrowDual {
    pub fn base(&self) -> &ArrowObject {
        &self.base
    }

    pub fn dual(&self) -> &ArrowObject {
        &self.dual
    }

    pub fn eval(&self) -> &ArrowMorphism {
        &self.eval
    }

    pub fn coeval(&self) -> &ArrowMorphism {
        &self.coeval
    }
}

/// Builds the dual data and validates the two defining squares, but does not
/// run the snake identities. [`make_arrow_dual`] does both.
pub fn assemble_arrow_dual(
    ms: &MonoidalStructure,
    f: &ArrowObject,
) -> Result<ArrowDual, DualError> {
    let cat = ms.category();
    let duality = cat
        .duality()
        .ok_or_else(|| DualError::MissingData(format!("{:?} carries no duality", cat.tag())))?;
    if !has_dual(f) {
        return Err(DualError::NoDual(format!("{f} is not an isomorphism")));
    }
    let dual_map = dualize_morphism(f.map())?;
    let dual = ArrowObject::new(
        cat,
        duality.dual_object(f.src()),
        duality.dual_object(f.dst()),
        dual_map,
    )?;
    // d_f: f* (x) f -> id_I with components the ambient evaluations.
    let eval = ArrowMorphism::new(
        ms.tensor_objects(&dual, f),
        ms.unit_arrow(),
        duality.eval(f.src()),
        duality.eval(f.dst()),
    )?;
    // b_f: id_I -> f (x) f* with components the ambient coevaluations.
    let coeval = ArrowMorphism::new(
        ms.unit_arrow(),
        ms.tensor_objects(f, &dual),
        duality.coeval(f.src()),
        duality.coeval(f.dst()),
    )?;
    Ok(ArrowDual {
        base: f.clone(),
        dual,
        eval,
        coeval,
    })
}

/// Full constructor: assembles the dual and verifies both snake identities.
pub fn make_arrow_dual(ms: &MonoidalStructure, f: &ArrowObject) -> Result<ArrowDual, DualError> {
    let dual = assemble_arrow_dual(ms, f)?;
    match check_snake_arrow(ms, &dual) {
        Verdict::Pass => Ok(dual),
        Verdict::Fail(failure) => Err(DualError::SnakeBroken(failure.to_string())),
    }
}

/// Both zig-zag composites, routed through the explicit lifted unitors and
/// associators, compared against the arrow identities.
pub fn check_snake_arrow(ms: &MonoidalStructure, dual: &ArrowDual) -> Verdict {
    run_check(|| {
        let law = "snake identity";
        let f = &dual.base;
        let f_star = &dual.dual;

        // First snake: rho_f . (id (x) d_f) . alpha . (b_f (x) id) . lambda_f^-1 = id_f.
        let lambda_inv = edge(law, "lambda_f^-1", ms.left_unitor_inv(f))?;
        let leg1 = edge(
            law,
            "b_f (x) id_f",
            ms.tensor_morphisms(&dual.coeval, &arrow_id(f)),
        )?;
        let alpha = edge(law, "alpha(f, f*, f)", ms.associator(f, f_star, f))?;
        let leg2 = edge(
            law,
            "id_f (x) d_f",
            ms.tensor_morphisms(&arrow_id(f), &dual.eval),
        )?;
        let rho = edge(law, "rho_f", ms.right_unitor(f))?;
        let zigzag = edge(
            law,
            "first zig-zag",
            compose_chain(&[&rho, &leg2, &alpha, &leg1, &lambda_inv]),
        )?;
        let id_f = arrow_id(f);
        if zigzag != id_f {
            return Ok(Verdict::fail_with(
                law,
                "first zig-zag vs id_f",
                Witness::Square {
                    top: zigzag.top().clone(),
                    bottom: zigzag.bottom().clone(),
                },
                Witness::Square {
                    top: id_f.top().clone(),
                    bottom: id_f.bottom().clone(),
                },
            ));
        }

        // Second snake: lambda_f* . (d_f (x) id) . alpha^-1 . (id (x) b_f) . rho_f*^-1 = id_f*.
        let rho_inv = edge(law, "rho_f*^-1", ms.right_unitor_inv(f_star))?;
        let leg3 = edge(
            law,
            "id_f* (x) b_f",
            ms.tensor_morphisms(&arrow_id(f_star), &dual.coeval),
        )?;
        let alpha_inv = edge(law, "alpha^-1(f*, f, f*)", ms.associator_inv(f_star, f, f_star))?;
        let leg4 = edge(
            law,
            "d_f (x) id_f*",
            ms.tensor_morphisms(&dual.eval, &arrow_id(f_star)),
        )?;
        let lambda = edge(law, "lambda_f*", ms.left_unitor(f_star))?;
        let zigzag2 = edge(
            law,
            "second zig-zag",
            compose_chain(&[&lambda, &leg4, &alpha_inv, &leg3, &rho_inv]),
        )?;
        let id_star = arrow_id(f_star);
        if zigzag2 != id_star {
            return Ok(Verdict::fail_with(
                law,
                "second zig-zag vs id_f*",
                Witness::Square {
                    top: zigzag2.top().clone(),
                    bottom: zigzag2.bottom().clone(),
                },
                Witness::Square {
                    top: id_star.top().clone(),
                    bottom: id_star.bottom().clone(),
                },
            ));
        }
        Ok(Verdict::Pass)
    })
}

/// Outcome of the dual-existence linear system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualSolvability {
    /// The two lifted squares admit exactly this `f*`.
    Feasible(RatMatrix),
    Infeasible,
}

/// Assembles the two defining squares
/// `d_B . (X (x) f) = d_A` and `(f (x) X) . b_A = b_B`
/// as one exact linear system in the entries of `X` and solves it.
pub fn dual_solvability_oracle(
    ms: &MonoidalStructure,
    f: &ArrowObject,
) -> Result<DualSolvability, DualError> {
    let cat = ms.category();
    let duality = cat
        .duality()
        .ok_or_else(|| DualError::MissingData(format!("{:?} carries no duality", cat.tag())))?;
    let v = f.src();
    let b = f.dst();
    let q = duality.dual_object(v); // columns of X (dim A*)
    let p = duality.dual_object(b); // rows of X (dim B*)
    let d_a = duality.eval(v);
    let d_b = duality.eval(b);
    let b_a = duality.coeval(v);
    let b_b = duality.coeval(b);
    let fm = f.map();

    let unknowns = p * q;
    let eqs = q * v + b * p;
    let mut system = RatMatrix::zeros(eqs, unknowns);
    let mut rhs = vec![Rat::zero(); eqs];

    // d_B . (X (x) f) = d_A, one equation per (c, j).
    for c in 0..q {
        for j in 0..v {
            let row = c * v + j;
            for r in 0..p {
                let mut coeff = Rat::zero();
                for i in 0..b {
                    let w = d_b.get(0, r * b + i);
                    if !w.is_zero() {
                        coeff += w * fm.get(i, j);
                    }
                }
                system.set(row, r * q + c, coeff);
            }
            rhs[row] = d_a.get(0, c * v + j).clone();
        }
    }

    // (f (x) X) . b_A = b_B, one equation per (i, r).
    let offset = q * v;
    for i in 0..b {
        for r in 0..p {
            let row = offset + i * p + r;
            for c in 0..q {
                let mut coeff = Rat::zero();
                for j in 0..v {
                    let w = fm.get(i, j);
                    if !w.is_zero() {
                        coeff += w * b_a.get(j * q + c, 0);
                    }
                }
                system.set(row, r * q + c, coeff);
            }
            rhs[row] = b_b.get(i * p + r, 0).clone();
        }
    }

    match solve_exact(&system, &rhs) {
        LinearSolution::Inconsistent => Ok(DualSolvability::Infeasible),
        LinearSolution::Unique(x) | LinearSolution::Underdetermined(x) => {
            let mut solution = RatMatrix::zeros(p, q);
            for r in 0..p {
                for c in 0..q {
                    solution.set(r, c, x[r * q + c].clone());
                }
            }
            Ok(DualSolvability::Feasible(solution))
        }
    }
}

/// Evaluates the cup/cap composite
/// `(id_A (x) d_B) . (id_A (x) f* (x) id_B) . (b_A (x) id_B) : B -> A`,
/// with `f*` taken from the solvability oracle rather than from elimination.
/// For invertible `f` the result is exactly the inverse.
pub fn inverse_from_duality(
    ms: &MonoidalStructure,
    f: &ArrowObject,
) -> Result<RatMatrix, DualError> {
    let cat = ms.category();
    let duality = cat
        .duality()
        .ok_or_else(|| DualError::MissingData(format!("{:?} carries no duality", cat.tag())))?;
    let f_star = match dual_solvability_oracle(ms, f)? {
        DualSolvability::Feasible(x) => x,
        DualSolvability::Infeasible => {
            return Err(DualError::NoDual(format!("{f} admits no dual")));
        }
    };
    let v = f.src();
    let b = f.dst();
    let id_a = RatMatrix::identity(v);
    let id_b = RatMatrix::identity(b);
    let first = kronecker(&duality.coeval(v), &id_b);
    let middle = kronecker(&kronecker(&id_a, &f_star), &id_b);
    let last = kronecker(&id_a, &duality.eval(b));
    let chain = compose(&last, &compose(&middle, &first).map_err(arrow_from_mat)?)
        .map_err(arrow_from_mat)?;
    Ok(chain)
}

fn arrow_from_mat(e: crate::exactmat::MatError) -> DualError {
    DualError::Arrow(ArrowError::ShapeMismatch(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::DualityData;
    use crate::exactmat::{commutation_matrix, ConcreteCategory};
    use crate::ratmat;

    fn ms_q() -> MonoidalStructure {
        MonoidalStructure::new(ConcreteCategory::mat_q())
    }

    #[test]
    fn has_dual_matches_invertibility() {
        let ms = ms_q();
        let cat = ms.category();
        let singular = ArrowObject::from_map(cat, ratmat![[1, 0], [0, 0]]).unwrap();
        assert!(!has_dual(&singular));
        let id3 = ArrowObject::identity_on(cat, 3).unwrap();
        assert!(has_dual(&id3));
        let rect = ArrowObject::from_map(cat, ratmat![[1, 0], [0, 1], [0, 0]]).unwrap();
        assert!(!has_dual(&rect));
    }

    #[test]
    fn scalar_dual_is_reciprocal() {
        let ms = ms_q();
        let f = ArrowObject::from_map(ms.category(), ratmat![[2]]).unwrap();
        let dual = make_arrow_dual(&ms, &f).unwrap();
        assert_eq!(
            dual.dual().map(),
            &RatMatrix::from_rows(vec![vec![Rat::new(1, 2)]])
        );
    }

    #[test]
    fn permutation_is_self_dual() {
        let ms = ms_q();
        let p = ratmat![[0, 1, 0], [0, 0, 1], [1, 0, 0]];
        let f = ArrowObject::from_map(ms.category(), p.clone()).unwrap();
        let dual = make_arrow_dual(&ms, &f).unwrap();
        assert_eq!(dual.dual().map(), &p);
    }

    #[test]
    fn identity_dual_has_matching_cup_cap_components() {
        let ms = ms_q();
        let f = ArrowObject::identity_on(ms.category(), 3).unwrap();
        let dual = make_arrow_dual(&ms, &f).unwrap();
        assert_eq!(dual.dual().map(), &RatMatrix::identity(3));
        assert_eq!(dual.eval().top(), dual.eval().bottom());
        assert_eq!(dual.coeval().top(), dual.coeval().bottom());
    }

    #[test]
    fn oracle_agrees_with_elimination() {
        let ms = ms_q();
        let m = ratmat![[2, 1], [1, 1]];
        let f = ArrowObject::from_map(ms.category(), m.clone()).unwrap();
        match dual_solvability_oracle(&ms, &f).unwrap() {
            DualSolvability::Feasible(x) => {
                assert_eq!(x, invert(&m).unwrap().transpose());
            }
            DualSolvability::Infeasible => panic!("invertible map must be feasible"),
        }
    }

    #[test]
    fn oracle_rejects_singular_and_rectangular() {
        let ms = ms_q();
        let singular = ArrowObject::from_map(ms.category(), ratmat![[1, 0], [0, 0]]).unwrap();
        assert_eq!(
            dual_solvability_oracle(&ms, &singular).unwrap(),
            DualSolvability::Infeasible
        );
        let rect = ArrowObject::from_map(ms.category(), ratmat![[1, 0], [0, 1], [0, 0]]).unwrap();
        assert_eq!(
            dual_solvability_oracle(&ms, &rect).unwrap(),
            DualSolvability::Infeasible
        );
        let trivial = ArrowObject::from_map(ms.category(), ratmat![[1]]).unwrap();
        assert_eq!(
            dual_solvability_oracle(&ms, &trivial).unwrap(),
            DualSolvability::Feasible(RatMatrix::identity(1))
        );
    }

    #[test]
    fn graphical_inverse_matches_elimination() {
        let ms = ms_q();
        for m in [
            ratmat![[2]],
            ratmat![[2, 1], [1, 1]],
            commutation_matrix(2, 2),
            RatMatrix::identity(4),
        ] {
            let f = ArrowObject::from_map(ms.category(), m.clone()).unwrap();
            let graphical = inverse_from_duality(&ms, &f).unwrap();
            assert_eq!(graphical, invert(&m).unwrap());
            assert!(compose(&graphical, &m).unwrap().is_identity());
            assert!(compose(&m, &graphical).unwrap().is_identity());
        }
    }

    #[test]
    fn commutation_matrix_is_self_inverse_via_duality() {
        let ms = ms_q();
        let k = commutation_matrix(2, 2);
        let f = ArrowObject::from_map(ms.category(), k.clone()).unwrap();
        assert_eq!(inverse_from_duality(&ms, &f).unwrap(), k);
    }

    #[test]
    fn scaled_coeval_breaks_snakes_but_not_squares() {
        use std::sync::Arc;
        let corrupted = DualityData::standard_mat().with_coeval(Arc::new(|n| {
            let mut b = RatMatrix::zeros(n * n, 1);
            for i in 0..n {
                b.set(i * n + i, 0, Rat::from_int(2));
            }
            b
        }));
        let cat = ConcreteCategory::mat_q().with_duality(corrupted);
        let ms = MonoidalStructure::new(cat);
        let f = ArrowObject::from_map(ms.category(), ratmat![[2, 1], [1, 1]]).unwrap();
        // Squares still commute (the corruption is linear), so assembly works.
        let dual = assemble_arrow_dual(&ms, &f).unwrap();
        // But the zig-zag evaluates to 2 * id, not id.
        let verdict = check_snake_arrow(&ms, &dual);
        assert!(!verdict.is_pass());
        assert!(make_arrow_dual(&ms, &f).is_err());
    }
}
