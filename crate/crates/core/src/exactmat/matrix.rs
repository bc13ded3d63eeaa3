//! Dense matrices of exact rationals.
//!
//! The map convention throughout the crate: a morphism `M: v -> b` between
//! the objects (dimensions) `v` and `b` is stored as a `b x v` matrix, and
//! `compose(g, f)` is the product `g * f` with `f` applied first.

use super::rational::Rat;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatError {
    DimensionMismatch {
        op: &'static str,
        lhs: (usize, usize),
        rhs: (usize, usize),
    },
    NotSquare {
        rows: usize,
        cols: usize,
    },
    NotInvertible,
}

impl fmt::Display for MatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatError::DimensionMismatch { op, lhs, rhs } => write!(
                f,
                "{op}: incompatible shapes {}x{} and {}x{}",
                lhs.0, lhs.1, rhs.0, rhs.1
            ),
            MatError::NotSquare { rows, cols } => {
                write!(f, "expected a square matrix, got {rows}x{cols}")
            }
            MatError::NotInvertible => write!(f, "matrix is not invertible"),
        }
    }
}

impl std::error::Error for MatError {}

/// Row-major matrix of [`Rat`] entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut entry: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(entry(i, j));
            }
        }
        RatMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from equal-length rows.
    ///
    /// Panics on ragged input; use [`RatMatrix::try_from_rows`] for data that
    /// comes from outside the crate.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        Self::try_from_rows(rows).expect("ragged rows")
    }

    pub fn try_from_rows(rows: Vec<Vec<Rat>>) -> Result<Self, String> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != ncols {
                return Err(format!(
                    "row {i} has {} entries, expected {ncols}",
                    r.len()
                ));
            }
        }
        Ok(RatMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| Rat::from_int(n)).collect())
                .collect(),
        )
    }

    /// A column vector with a single 1 at `index`.
    pub fn basis_column(dim: usize, index: usize) -> Self {
        let mut m = Self::zeros(dim, 1);
        m.set(index, 0, Rat::one());
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Source dimension under the map convention (`M: v -> b` is `b x v`).
    pub fn src_dim(&self) -> usize {
        self.cols
    }

    /// Target dimension under the map convention.
    pub fn dst_dim(&self) -> usize {
        self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rat) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Exactly one 1 in every row and every column, all other entries 0.
    #[allow(clippy::needless_range_loop)]
    pub fn is_permutation(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let mut col_seen = vec![false; self.cols];
        for i in 0..self.rows {
            let mut row_ones = 0;
            for j in 0..self.cols {
                let e = self.get(i, j);
                if e.is_one() {
                    row_ones += 1;
                    if col_seen[j] {
                        return false;
                    }
                    col_seen[j] = true;
                } else if !e.is_zero() {
                    return false;
                }
            }
            if row_ones != 1 {
                return false;
            }
        }
        true
    }

    pub fn has_natural_entries(&self) -> bool {
        self.entries.iter().all(Rat::is_natural)
    }

    /// `M^T M = I`, the admission test for the unitary subcategory.
    pub fn is_orthogonal(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        match compose(&self.transpose(), self) {
            Ok(p) => p.is_identity(),
            Err(_) => false,
        }
    }

    pub fn is_invertible(&self) -> bool {
        invert(self).is_ok()
    }

    pub fn transpose(&self) -> RatMatrix {
        RatMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, factor: &Rat) -> RatMatrix {
        RatMatrix::from_fn(self.rows, self.cols, |i, j| factor * self.get(i, j))
    }

    fn row_nonzeros(&self, i: usize) -> Vec<(usize, &Rat)> {
        (0..self.cols)
            .filter_map(|j| {
                let e = self.get(i, j);
                (!e.is_zero()).then_some((j, e))
            })
            .collect()
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} {self}", self.rows, self.cols)
    }
}

/// Exact product `g * f`, the composite of `f: u -> v` followed by
/// `g: v -> b`.
///
/// Skips zero entries on both sides, so composites of the permutation-heavy
/// structure matrices stay cheap even at Kronecker dimensions.
#[allow(clippy::needless_range_loop)]
pub fn compose(g: &RatMatrix, f: &RatMatrix) -> Result<RatMatrix, MatError> {
    if g.cols != f.rows {
        return Err(MatError::DimensionMismatch {
            op: "compose",
            lhs: (g.rows, g.cols),
            rhs: (f.rows, f.cols),
        });
    }
    let f_rows: Vec<Vec<(usize, &Rat)>> = (0..f.rows).map(|k| f.row_nonzeros(k)).collect();
    let mut out = RatMatrix::zeros(g.rows, f.cols);
    for i in 0..g.rows {
        for k in 0..g.cols {
            let gik = g.get(i, k);
            if gik.is_zero() {
                continue;
            }
            for &(j, fkj) in &f_rows[k] {
                let idx = i * out.cols + j;
                let term = gik * fkj;
                out.entries[idx] += term;
            }
        }
    }
    Ok(out)
}

/// Kronecker product. As a map this is
/// `M (x) N : v1 * v2 -> b1 * b2` for `M: v1 -> b1` and `N: v2 -> b2`.
pub fn kronecker(m: &RatMatrix, n: &RatMatrix) -> RatMatrix {
    let mut out = RatMatrix::zeros(m.rows * n.rows, m.cols * n.cols);
    for i1 in 0..m.rows {
        for j1 in 0..m.cols {
            let a = m.get(i1, j1);
            if a.is_zero() {
                continue;
            }
            for i2 in 0..n.rows {
                for j2 in 0..n.cols {
                    let b = n.get(i2, j2);
                    if b.is_zero() {
                        continue;
                    }
                    out.set(i1 * n.rows + i2, j1 * n.cols + j2, a * b);
                }
            }
        }
    }
    out
}

/// The permutation matrix `K` of shape `mn x mn` with
/// `K * (x (x) y) = y (x) x` for all `x` in Q^m and `y` in Q^n.
pub fn commutation_matrix(m: usize, n: usize) -> RatMatrix {
    let mut k = RatMatrix::zeros(m * n, m * n);
    for i in 0..m {
        for j in 0..n {
            k.set(j * m + i, i * n + j, Rat::one());
        }
    }
    k
}

/// Exact inverse by Gauss-Jordan elimination over the rationals.
pub fn invert(m: &RatMatrix) -> Result<RatMatrix, MatError> {
    if m.rows != m.cols {
        return Err(MatError::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut inv = RatMatrix::identity(n);
    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !a.get(r, col).is_zero())
            .ok_or(MatError::NotInvertible)?;
        if pivot_row != col {
            swap_rows(&mut a, pivot_row, col);
            swap_rows(&mut inv, pivot_row, col);
        }
        let pivot = a.get(col, col).clone();
        let pivot_inv = pivot.recip().expect("pivot is nonzero");
        scale_row(&mut a, col, &pivot_inv);
        scale_row(&mut inv, col, &pivot_inv);
        for r in 0..n {
            if r == col {
                continue;
            }
            let factor = a.get(r, col).clone();
            if factor.is_zero() {
                continue;
            }
            sub_scaled_row(&mut a, r, col, &factor);
            sub_scaled_row(&mut inv, r, col, &factor);
        }
    }
    Ok(inv)
}

fn swap_rows(m: &mut RatMatrix, r1: usize, r2: usize) {
    for j in 0..m.cols {
        let tmp = m.get(r1, j).clone();
        let other = m.get(r2, j).clone();
        m.set(r1, j, other);
        m.set(r2, j, tmp);
    }
}

fn scale_row(m: &mut RatMatrix, r: usize, factor: &Rat) {
    for j in 0..m.cols {
        let v = m.get(r, j);
        if !v.is_zero() {
            let scaled = v * factor;
            m.set(r, j, scaled);
        }
    }
}

/// `row r -= factor * row src`.
fn sub_scaled_row(m: &mut RatMatrix, r: usize, src: usize, factor: &Rat) {
    for j in 0..m.cols {
        let s = m.get(src, j);
        if s.is_zero() {
            continue;
        }
        let v = m.get(r, j) - &(factor * s);
        m.set(r, j, v);
    }
}

/// Outcome of exactly solving `A x = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    /// The system has exactly one solution.
    Unique(Vec<Rat>),
    /// Consistent with free variables; the particular solution sets them to 0.
    Underdetermined(Vec<Rat>),
    Inconsistent,
}

/// Exact Gaussian elimination on the augmented system `[A | rhs]`.
pub fn solve_exact(a: &RatMatrix, rhs: &[Rat]) -> LinearSolution {
    assert_eq!(a.rows, rhs.len(), "rhs length must match row count");
    let mut m = RatMatrix::from_fn(a.rows, a.cols + 1, |i, j| {
        if j < a.cols {
            a.get(i, j).clone()
        } else {
            rhs[i].clone()
        }
    });
    let n_unknowns = a.cols;
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..n_unknowns {
        let Some(pr) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        if pr != row {
            swap_rows(&mut m, pr, row);
        }
        let inv = m.get(row, col).recip().expect("pivot is nonzero");
        scale_row(&mut m, row, &inv);
        for r in 0..m.rows {
            if r == row {
                continue;
            }
            let factor = m.get(r, col).clone();
            if !factor.is_zero() {
                sub_scaled_row(&mut m, r, row, &factor);
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == m.rows {
            break;
        }
    }
    for r in row..m.rows {
        if !m.get(r, n_unknowns).is_zero() {
            return LinearSolution::Inconsistent;
        }
    }
    let mut solution = vec![Rat::zero(); n_unknowns];
    for (r, &col) in pivot_cols.iter().enumerate() {
        solution[col] = m.get(r, n_unknowns).clone();
    }
    if pivot_cols.len() == n_unknowns {
        LinearSolution::Unique(solution)
    } else {
        LinearSolution::Underdetermined(solution)
    }
}

/// Convenience constructor for integer-entry matrices in tests and fixtures:
/// `ratmat![[1, 2], [3, 4]]`.
#[macro_export]
macro_rules! ratmat {
    ($([$($e:expr),* $(,)?]),* $(,)?) => {
        $crate::RatMatrix::from_int_rows(&[$(&[$($e as i64),*][..]),*])
    };
}
