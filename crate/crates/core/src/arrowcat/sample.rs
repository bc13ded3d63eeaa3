//! Seeded generators for arrow objects and commuting squares.
//!
//! Squares are built so that they commute by construction: with an
//! invertible map on one side the other component is solved for, and over
//! two rank-deficient maps the components are block lower/upper triangular
//! with a shared leading block. Admission predicates of the ambient category
//! decide which entry generators are used.

use super::morphism::{ArrowError, ArrowMorphism};
use super::object::ArrowObject;
use crate::exactmat::{
    compose, invert, random_int_matrix, random_invertible, random_nat_matrix, random_orthogonal,
    random_permutation, CategoryTag, ConcreteCategory, Rat, RatMatrix, Rng,
};

fn admitted_map(cat: &ConcreteCategory, rng: &mut Rng, rows: usize, cols: usize) -> RatMatrix {
    match cat.tag() {
        CategoryTag::MatN => random_nat_matrix(rng, rows, cols, 3),
        CategoryTag::MatQ | CategoryTag::GroupAlg(_) => random_int_matrix(rng, rows, cols, 3),
        CategoryTag::MatQCore => {
            debug_assert_eq!(rows, cols);
            random_invertible(rng, rows, 10)
        }
        CategoryTag::MatQUnitary => {
            debug_assert_eq!(rows, cols);
            random_orthogonal(rng, rows, 4)
        }
    }
}

/// An invertible map admitted by the category (a permutation when entries
/// must stay natural, so that the inverse is admitted too).
fn admitted_iso_map(cat: &ConcreteCategory, rng: &mut Rng, dim: usize) -> RatMatrix {
    match cat.tag() {
        CategoryTag::MatN => random_permutation(rng, dim),
        CategoryTag::MatQ | CategoryTag::MatQCore | CategoryTag::GroupAlg(_) => {
            random_invertible(rng, dim, 10)
        }
        CategoryTag::MatQUnitary => random_orthogonal(rng, dim, 4),
    }
}

pub fn random_arrow_object(
    cat: &ConcreteCategory,
    rng: &mut Rng,
    max_dim: usize,
) -> Result<ArrowObject, ArrowError> {
    let same_dims = matches!(
        cat.tag(),
        CategoryTag::MatQCore | CategoryTag::MatQUnitary
    );
    let src = 1 + rng.below(max_dim);
    let dst = if same_dims { src } else { 1 + rng.below(max_dim) };
    ArrowObject::new(cat, src, dst, admitted_map(cat, rng, dst, src))
}

/// Arrow object whose map is invertible.
pub fn random_arrow_iso(
    cat: &ConcreteCategory,
    rng: &mut Rng,
    max_dim: usize,
) -> Result<ArrowObject, ArrowError> {
    let dim = 1 + rng.below(max_dim);
    ArrowObject::new(cat, dim, dim, admitted_iso_map(cat, rng, dim))
}

/// A composable pair `(f, g)` of ambient morphisms, `f` applied first.
pub fn random_square_over(
    cat: &ConcreteCategory,
    rng: &mut Rng,
    max_dim: usize,
) -> Result<(RatMatrix, RatMatrix), ArrowError> {
    let same_dims = matches!(
        cat.tag(),
        CategoryTag::MatQCore | CategoryTag::MatQUnitary
    );
    let a = 1 + rng.below(max_dim);
    let (b, c) = if same_dims {
        (a, a)
    } else {
        (1 + rng.below(max_dim), 1 + rng.below(max_dim))
    };
    Ok((admitted_map(cat, rng, b, a), admitted_map(cat, rng, c, b)))
}

/// A commuting square out of `source`: the target map is an admitted
/// isomorphism `f'`, the bottom is free, and the top is solved as
/// `f'^{-1} . bottom . source.map`.
pub fn random_square_from(
    cat: &ConcreteCategory,
    rng: &mut Rng,
    source: ArrowObject,
    max_dim: usize,
) -> Result<ArrowMorphism, ArrowError> {
    let target_dim = match cat.tag() {
        CategoryTag::MatQCore | CategoryTag::MatQUnitary => source.dst(),
        _ => 1 + rng.below(max_dim),
    };
    let target_map = admitted_iso_map(cat, rng, target_dim);
    let target = ArrowObject::new(cat, target_dim, target_dim, target_map.clone())?;
    let bottom = match cat.tag() {
        CategoryTag::MatN => random_nat_matrix(rng, target_dim, source.dst(), 3),
        CategoryTag::MatQUnitary => random_orthogonal(rng, target_dim, 4),
        CategoryTag::MatQCore => random_invertible(rng, target_dim, 10),
        _ => random_int_matrix(rng, target_dim, source.dst(), 3),
    };
    let inv = invert(&target_map).map_err(|e| ArrowError::ShapeMismatch(e.to_string()))?;
    let top = compose(&compose(&inv, &bottom).unwrap(), source.map())
        .map_err(|e| ArrowError::ShapeMismatch(e.to_string()))?;
    ArrowMorphism::new(source, target, top, bottom)
}

/// A commuting square into `target`: the source map is an admitted
/// isomorphism `f`, the top is free, and the bottom is solved as
/// `target.map . top . f^{-1}`.
pub fn random_square_to(
    cat: &ConcreteCategory,
    rng: &mut Rng,
    target: ArrowObject,
    max_dim: usize,
) -> Result<ArrowMorphism, ArrowError> {
    let source_dim = match cat.tag() {
        CategoryTag::MatQCore | CategoryTag::MatQUnitary => target.src(),
        _ => 1 + rng.below(max_dim),
    };
    let source_map = admitted_iso_map(cat, rng, source_dim);
    let source = ArrowObject::new(cat, source_dim, source_dim, source_map.clone())?;
    let top = match cat.tag() {
        CategoryTag::MatN => random_nat_matrix(rng, target.src(), source_dim, 3),
        CategoryTag::MatQUnitary => random_orthogonal(rng, source_dim, 4),
        CategoryTag::MatQCore => random_invertible(rng, source_dim, 10),
        _ => random_int_matrix(rng, target.src(), source_dim, 3),
    };
    let inv = invert(&source_map).map_err(|e| ArrowError::ShapeMismatch(e.to_string()))?;
    let bottom = compose(&compose(target.map(), &top).unwrap(), &inv)
        .map_err(|e| ArrowError::ShapeMismatch(e.to_string()))?;
    ArrowMorphism::new(source, target, top, bottom)
}

/// A fully random commuting square, alternating between the two solved-side
/// recipes so both source-arbitrary and target-arbitrary squares appear.
pub fn random_arrow_morphism(
    cat: &ConcreteCategory,
    rng: &mut Rng,
    max_dim: usize,
) -> Result<ArrowMorphism, ArrowError> {
    if rng.below(2) == 0 {
        let source = random_arrow_object(cat, rng, max_dim)?;
        random_square_from(cat, rng, source, max_dim)
    } else {
        let target = random_arrow_object(cat, rng, max_dim)?;
        random_square_to(cat, rng, target, max_dim)
    }
}

/// A commuting square between two rank-deficient maps in rank normal form.
/// With `f = [[I_r, 0], [0, 0]]` and `f' = [[I_r', 0], [0, 0]]`, any
/// `top = [[T, 0], [U, V]]` and `bottom = [[T, W], [0, X]]` sharing the
/// leading block `T` commute.
pub fn rank_profile_square(
    cat: &ConcreteCategory,
    rng: &mut Rng,
    max_dim: usize,
) -> Result<ArrowMorphism, ArrowError> {
    let dims = |rng: &mut Rng| {
        let v = 2 + rng.below(max_dim.max(2) - 1);
        let b = 2 + rng.below(max_dim.max(2) - 1);
        let r = rng.below(v.min(b));
        (v, b, r)
    };
    let (v, b, r) = dims(rng);
    let (v2, b2, r2) = dims(rng);
    let normal_form = |rows: usize, cols: usize, rank: usize| {
        RatMatrix::from_fn(rows, cols, |i, j| {
            if i == j && i < rank {
                Rat::one()
            } else {
                Rat::zero()
            }
        })
    };
    let source = ArrowObject::new(cat, v, b, normal_form(b, v, r))?;
    let target = ArrowObject::new(cat, v2, b2, normal_form(b2, v2, r2))?;
    let entry = |rng: &mut Rng| Rat::from_int(rng.int_in(0, 3));
    let shared = RatMatrix::from_fn(r2, r, |_, _| entry(rng));
    let mut top = RatMatrix::from_fn(v2, v, |_, _| entry(rng));
    let mut bottom = RatMatrix::from_fn(b2, b, |_, _| entry(rng));
    for i in 0..r2 {
        for j in 0..r {
            top.set(i, j, shared.get(i, j).clone());
            bottom.set(i, j, shared.get(i, j).clone());
        }
    }
    // Zero the off blocks that the commuting condition forces.
    for i in 0..r2 {
        for j in r..v {
            top.set(i, j, Rat::zero());
        }
    }
    for i in r2..b2 {
        for j in 0..r {
            bottom.set(i, j, Rat::zero());
        }
    }
    ArrowMorphism::new(source, target, top, bottom)
}

/// A commuting square in the unitary subcategory: every edge orthogonal.
pub fn random_unitary_square(rng: &mut Rng, max_dim: usize) -> Result<ArrowMorphism, ArrowError> {
    let cat = ConcreteCategory::mat_q_unitary();
    let dim = 1 + rng.below(max_dim);
    // Mix plain rotations with pure permutations.
    let gen = |rng: &mut Rng| {
        if rng.below(3) == 0 {
            random_permutation(rng, dim)
        } else {
            random_orthogonal(rng, dim, 4)
        }
    };
    let f = ArrowObject::new(&cat, dim, dim, gen(rng))?;
    let f_target = gen(rng);
    let target = ArrowObject::new(&cat, dim, dim, f_target.clone())?;
    let bottom = gen(rng);
    let top = compose(
        &compose(&f_target.transpose(), &bottom).unwrap(),
        f.map(),
    )
    .unwrap();
    ArrowMorphism::new(f, target, top, bottom)
}
