//! Deterministic seeded instance generators.
//!
//! All randomness in the crate flows through [`Rng`], a small splitmix64
//! stream. The generated bit stream is pinned by the tests and by the golden
//! report files, so the algorithm must never change.

use super::group::GroupPresentation;
use super::matrix::{compose, RatMatrix};
use super::rational::Rat;
use crate::algebra::AlgebraData;
use std::fmt;

/// splitmix64; one `u64` of state, fully reproducible.
#[derive(Debug, Clone)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..n`. Modulo bias is irrelevant at fixture scale.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0);
        (self.next_u64() % n as u64) as usize
    }

    /// Uniform integer in `lo..=hi`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        lo + (self.next_u64() % span) as i64
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }

    /// Derives an independent stream; used to give each fixture its own
    /// reproducible seed.
    pub fn fork(&mut self, label: u64) -> Rng {
        Rng::new(self.next_u64() ^ label.wrapping_mul(0x9e3779b97f4a7c15))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenError {
    pub kind: &'static str,
    pub reason: String,
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "generation failed for {}: {}", self.kind, self.reason)
    }
}

impl std::error::Error for GenError {}

/// Integer-entry matrix with entries in `-bound..=bound`.
pub fn random_int_matrix(rng: &mut Rng, rows: usize, cols: usize, bound: i64) -> RatMatrix {
    RatMatrix::from_fn(rows, cols, |_, _| Rat::from_int(rng.int_in(-bound, bound)))
}

/// Natural-entry matrix with entries in `0..=bound`, admitted by Mat(N).
pub fn random_nat_matrix(rng: &mut Rng, rows: usize, cols: usize, bound: i64) -> RatMatrix {
    RatMatrix::from_fn(rows, cols, |_, _| Rat::from_int(rng.int_in(0, bound)))
}

/// Invertible matrix built as a product of unimodular row operations, so the
/// result and its inverse both have integer entries.
pub fn random_invertible(rng: &mut Rng, n: usize, steps: usize) -> RatMatrix {
    let mut m = RatMatrix::identity(n);
    if n == 1 {
        // Only the units of Z keep the inverse integral; mix signs instead.
        if rng.below(2) == 1 {
            m.set(0, 0, Rat::from_int(-1));
        }
        return m;
    }
    for _ in 0..steps {
        match rng.below(3) {
            // row_i += c * row_j
            0 => {
                let i = rng.below(n);
                let mut j = rng.below(n - 1);
                if j >= i {
                    j += 1;
                }
                let c = Rat::from_int(rng.int_in(-2, 2));
                for col in 0..n {
                    let v = m.get(i, col) + &(&c * m.get(j, col));
                    m.set(i, col, v);
                }
            }
            // swap two rows
            1 => {
                let i = rng.below(n);
                let mut j = rng.below(n - 1);
                if j >= i {
                    j += 1;
                }
                for col in 0..n {
                    let a = m.get(i, col).clone();
                    let b = m.get(j, col).clone();
                    m.set(i, col, b);
                    m.set(j, col, a);
                }
            }
            // negate a row
            _ => {
                let i = rng.below(n);
                for col in 0..n {
                    let v = -m.get(i, col);
                    m.set(i, col, v);
                }
            }
        }
    }
    m
}

/// Permutation matrix of dimension `n`.
pub fn random_permutation(rng: &mut Rng, n: usize) -> RatMatrix {
    let mut image: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut image);
    let mut m = RatMatrix::zeros(n, n);
    for (col, &row) in image.iter().enumerate() {
        m.set(row, col, Rat::one());
    }
    m
}

/// Pythagorean triples (a, b, c) with a^2 + b^2 = c^2; each one yields an
/// exactly orthogonal plane rotation with rational entries.
const PYTHAGOREAN: [(i64, i64, i64); 5] =
    [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29)];

/// Rational orthogonal matrix: a product of Pythagorean plane rotations,
/// coordinate permutations and sign flips. Satisfies `M^T M = I` exactly.
pub fn random_orthogonal(rng: &mut Rng, n: usize, steps: usize) -> RatMatrix {
    let mut m = random_permutation(rng, n);
    for i in 0..n {
        if rng.below(2) == 1 {
            for col in 0..n {
                let v = -m.get(i, col);
                m.set(i, col, v);
            }
        }
    }
    if n < 2 {
        return m;
    }
    for _ in 0..steps {
        let i = rng.below(n);
        let mut j = rng.below(n - 1);
        if j >= i {
            j += 1;
        }
        let (a, b, c) = PYTHAGOREAN[rng.below(PYTHAGOREAN.len())];
        let cos = Rat::new(a, c);
        let sin = Rat::new(b, c);
        let mut rot = RatMatrix::identity(n);
        rot.set(i, i, cos.clone());
        rot.set(j, j, cos);
        rot.set(i, j, -&sin);
        rot.set(j, i, sin);
        m = compose(&rot, &m).expect("square factors");
    }
    m
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    Integer,
    Natural,
    Invertible,
    Permutation,
    Orthogonal,
    GroupHom,
    GroupAlgebra,
}

#[derive(Debug, Clone, Copy)]
pub struct SizeBounds {
    pub max_dim: usize,
    pub entry_bound: i64,
}

impl SizeBounds {
    pub fn new(max_dim: usize, entry_bound: i64) -> Self {
        assert!(max_dim >= 1 && entry_bound >= 1);
        SizeBounds {
            max_dim,
            entry_bound,
        }
    }
}

pub enum Instance {
    Matrix(RatMatrix),
    GroupHom {
        source: GroupPresentation,
        target: GroupPresentation,
        images: Vec<usize>,
    },
    Algebra(AlgebraData),
}

/// One-stop seeded generator. The same `(kind, bounds, seed)` triple always
/// produces the same instance.
pub fn random_instance(
    kind: GeneratorKind,
    bounds: SizeBounds,
    seed: u64,
) -> Result<Instance, GenError> {
    let mut rng = Rng::new(seed);
    let dim = 1 + rng.below(bounds.max_dim);
    match kind {
        GeneratorKind::Integer => {
            let rows = 1 + rng.below(bounds.max_dim);
            Ok(Instance::Matrix(random_int_matrix(
                &mut rng,
                rows,
                dim,
                bounds.entry_bound,
            )))
        }
        GeneratorKind::Natural => {
            let rows = 1 + rng.below(bounds.max_dim);
            Ok(Instance::Matrix(random_nat_matrix(
                &mut rng,
                rows,
                dim,
                bounds.entry_bound,
            )))
        }
        GeneratorKind::Invertible => Ok(Instance::Matrix(random_invertible(&mut rng, dim, 12))),
        GeneratorKind::Permutation => Ok(Instance::Matrix(random_permutation(&mut rng, dim))),
        GeneratorKind::Orthogonal => Ok(Instance::Matrix(random_orthogonal(&mut rng, dim, 6))),
        GeneratorKind::GroupHom => {
            let groups = GroupPresentation::standard_library(bounds.max_dim.min(8));
            if groups.len() < 2 {
                return Err(GenError {
                    kind: "group-hom",
                    reason: "no groups within bounds".to_string(),
                });
            }
            let source = groups[rng.below(groups.len())].clone();
            let target = groups[rng.below(groups.len())].clone();
            let homs = source.homomorphisms_to(&target);
            // Prefer a nontrivial homomorphism when one exists.
            let nontrivial: Vec<_> = homs
                .iter()
                .filter(|images| images.iter().any(|&im| im != target.identity()))
                .cloned()
                .collect();
            let pool = if nontrivial.is_empty() { homs } else { nontrivial };
            if pool.is_empty() {
                return Err(GenError {
                    kind: "group-hom",
                    reason: format!(
                        "no homomorphism {} -> {} within bounds",
                        source.name(),
                        target.name()
                    ),
                });
            }
            let images = pool[rng.below(pool.len())].clone();
            Ok(Instance::GroupHom {
                source,
                target,
                images,
            })
        }
        GeneratorKind::GroupAlgebra => {
            let groups = GroupPresentation::standard_library(bounds.max_dim.min(8));
            if groups.is_empty() {
                return Err(GenError {
                    kind: "group-algebra",
                    reason: "no groups within bounds".to_string(),
                });
            }
            let g = &groups[rng.below(groups.len())];
            Ok(Instance::Algebra(super::group::group_algebra(g)))
        }
    }
}
