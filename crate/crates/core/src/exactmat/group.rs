//! Finite groups presented by multiplication tables, and the Hopf algebra
//! instances they generate.

use super::matrix::RatMatrix;
use super::rational::Rat;
use crate::algebra::{AlgebraData, AlgebraFlags};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    InvalidGroup(String),
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::InvalidGroup(reason) => write!(f, "invalid group: {reason}"),
        }
    }
}

impl std::error::Error for GroupError {}

/// A finite group given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    name: String,
    order: usize,
    /// `mult[a][b]` is the index of `a * b`.
    mult: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    identity: usize,
}

impl GroupPresentation {
    /// Validates the table invariants: Latin square, two-sided identity,
    /// consistent inverses and associativity.
    pub fn new(name: impl Into<String>, mult: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let order = mult.len();
        if order == 0 {
            return Err(GroupError::InvalidGroup("empty table".to_string()));
        }
        for (a, row) in mult.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::InvalidGroup(format!(
                    "row {a} has length {}, expected {order}",
                    row.len()
                )));
            }
            for &entry in row {
                if entry >= order {
                    return Err(GroupError::InvalidGroup(format!(
                        "row {a} contains out-of-range element {entry}"
                    )));
                }
            }
        }
        // Latin square: every element once per row and per column.
        for i in 0..order {
            let mut row_seen = vec![false; order];
            let mut col_seen = vec![false; order];
            for j in 0..order {
                if row_seen[mult[i][j]] {
                    return Err(GroupError::InvalidGroup(format!(
                        "row {i} repeats element {}",
                        mult[i][j]
                    )));
                }
                row_seen[mult[i][j]] = true;
                if col_seen[mult[j][i]] {
                    return Err(GroupError::InvalidGroup(format!(
                        "column {i} repeats element {}",
                        mult[j][i]
                    )));
                }
                col_seen[mult[j][i]] = true;
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| mult[e][a] == a && mult[a][e] == a))
            .ok_or_else(|| GroupError::InvalidGroup("no two-sided identity".to_string()))?;
        let mut inverse = vec![0; order];
        for a in 0..order {
            let inv = (0..order)
                .find(|&b| mult[a][b] == identity && mult[b][a] == identity)
                .ok_or_else(|| GroupError::InvalidGroup(format!("element {a} has no inverse")))?;
            inverse[a] = inv;
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
                        return Err(GroupError::InvalidGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(GroupPresentation {
            name: name.into(),
            order,
            mult,
            inverse,
            identity,
        })
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let mult = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(format!("Z{n}"), mult).expect("cyclic table is a group")
    }

    pub fn direct_product(a: &GroupPresentation, b: &GroupPresentation) -> Self {
        let n = a.order * b.order;
        let idx = |x: usize, y: usize| x * b.order + y;
        let mut mult = vec![vec![0; n]; n];
        for x1 in 0..a.order {
            for y1 in 0..b.order {
                for x2 in 0..a.order {
                    for y2 in 0..b.order {
                        mult[idx(x1, y1)][idx(x2, y2)] =
                            idx(a.mult[x1][x2], b.mult[y1][y2]);
                    }
                }
            }
        }
        Self::new(format!("{}x{}", a.name, b.name), mult).expect("product table is a group")
    }

    /// The symmetric group on three letters, the smallest nonabelian group.
    pub fn symmetric_3() -> Self {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 2, 0],
            [2, 0, 1],
            [0, 2, 1],
            [2, 1, 0],
            [1, 0, 2],
        ];
        let compose = |p: &[usize; 3], q: &[usize; 3]| [p[q[0]], p[q[1]], p[q[2]]];
        let mult = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        let pq = compose(p, q);
                        perms.iter().position(|r| *r == pq).unwrap()
                    })
                    .collect()
            })
            .collect();
        Self::new("S3", mult).expect("S3 table is a group")
    }

    /// Every shipped group of order at most `max_order`, in a fixed order.
    pub fn standard_library(max_order: usize) -> Vec<GroupPresentation> {
        let z2 = Self::cyclic(2);
        let all = vec![
            Self::cyclic(2),
            Self::cyclic(3),
            Self::cyclic(4),
            Self::direct_product(&z2, &z2),
            Self::cyclic(5),
            Self::symmetric_3(),
            Self::cyclic(6),
        ];
        all.into_iter().filter(|g| g.order <= max_order).collect()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mult[a][b] == self.mult[b][a]))
    }

    /// All homomorphisms into `target`, found by backtracking over element
    /// images with partial multiplicativity checks. Deterministic order.
    pub fn homomorphisms_to(&self, target: &GroupPresentation) -> Vec<Vec<usize>> {
        let mut found = Vec::new();
        let mut images = vec![usize::MAX; self.order];
        images[self.identity] = target.identity;
        self.search_homs(target, &mut images, 0, &mut found);
        found
    }

    fn search_homs(
        &self,
        target: &GroupPresentation,
        images: &mut Vec<usize>,
        next: usize,
        found: &mut Vec<Vec<usize>>,
    ) {
        let Some(elem) = (next..self.order).find(|&e| images[e] == usize::MAX) else {
            found.push(images.clone());
            return;
        };
        'candidates: for im in 0..target.order {
            images[elem] = im;
            // Close the partial map under products and check consistency.
            let mut forced: Vec<(usize, usize)> = Vec::new();
            for a in 0..self.order {
                if images[a] == usize::MAX {
                    continue;
                }
                for b in 0..self.order {
                    if images[b] == usize::MAX {
                        continue;
                    }
                    let ab = self.mult[a][b];
                    let im_ab = target.mult[images[a]][images[b]];
                    if images[ab] == usize::MAX {
                        images[ab] = im_ab;
                        forced.push((ab, im_ab));
                    } else if images[ab] != im_ab {
                        for (e, _) in forced.drain(..) {
                            images[e] = usize::MAX;
                        }
                        images[elem] = usize::MAX;
                        continue 'candidates;
                    }
                }
            }
            self.search_homs(target, images, elem + 1, found);
            for (e, _) in forced {
                images[e] = usize::MAX;
            }
            images[elem] = usize::MAX;
        }
    }
}

/// The 0/1 matrix of a map between group element bases: column `g` has its 1
/// in row `images[g]`.
pub fn hom_matrix(images: &[usize], target_order: usize) -> RatMatrix {
    let mut m = RatMatrix::zeros(target_order, images.len());
    for (g, &im) in images.iter().enumerate() {
        m.set(im, g, Rat::one());
    }
    m
}

/// The group algebra of `g`: multiplication is convolution on the element
/// basis, comultiplication is the diagonal, and the antipode permutes each
/// basis vector to its group inverse.
pub fn group_algebra(g: &GroupPresentation) -> AlgebraData {
    let n = g.order();
    let mut mult = RatMatrix::zeros(n, n * n);
    for a in 0..n {
        for b in 0..n {
            mult.set(g.mul(a, b), a * n + b, Rat::one());
        }
    }
    let mut unit = RatMatrix::zeros(n, 1);
    unit.set(g.identity(), 0, Rat::one());
    let mut comult = RatMatrix::zeros(n * n, n);
    for a in 0..n {
        comult.set(a * n + a, a, Rat::one());
    }
    let counit = RatMatrix::from_fn(1, n, |_, _| Rat::one());
    let mut antipode = RatMatrix::zeros(n, n);
    for a in 0..n {
        antipode.set(g.inv(a), a, Rat::one());
    }
    AlgebraData::new(
        format!("Q[{}]", g.name()),
        n,
        mult,
        unit,
        Some(comult),
        Some(counit),
        Some(antipode),
        AlgebraFlags {
            monoid: true,
            comonoid: true,
            bialgebra: true,
            hopf: true,
            commutative: g.is_abelian(),
            cocommutative: true,
            ..AlgebraFlags::default()
        },
    )
}
