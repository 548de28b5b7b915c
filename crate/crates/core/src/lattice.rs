//! Exact integer and rational linear algebra sized for intersection lattices.
//!
//! Everything here is fraction-free or exactly rational: Bareiss elimination
//! for determinants and leading principal minors, a Gauss-Jordan solver over
//! `BigRational`, and a Smith normal form with unimodular transform tracking.
//! Matrices in this crate are small (rarely above 30x30), so the quadratic
//! and cubic algorithms below are the right tool; no floating point anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Convenience constructor for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Convenience constructor for the rational `n / d`.
///
/// Panics if `d == 0`; callers pass literal denominators.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("dimension mismatch: matrix is {rows}x{cols}, vector has length {len}")]
    DimensionMismatch { rows: usize, cols: usize, len: usize },
}

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    /// Identity matrix of order `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from row slices; all rows must share one length.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows
                .iter()
                .flat_map(|row| row.iter().map(|&v| BigInt::from(v)))
                .collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// Exact determinant by Bareiss fraction-free elimination with row
    /// pivoting. The empty matrix has determinant 1.
    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.get(i, k).is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.get(i, j) * &pivot - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = pivot;
        }
        let d = m.get(n - 1, n - 1).clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// Leading principal minors `det A_k` for `k = 1..=n`, computed by
    /// Bareiss elimination without row swaps. Stops early with the partial
    /// list if a zero pivot is hit, in which case the next minor is zero and
    /// later ones are not determined by this sweep.
    pub fn leading_principal_minors(&self) -> Vec<BigInt> {
        assert!(self.is_square(), "minors of non-square matrix");
        let n = self.rows;
        let mut minors = Vec::with_capacity(n);
        if n == 0 {
            return minors;
        }
        let mut m = self.clone();
        let mut prev = BigInt::one();
        for k in 0..n {
            let pivot = m.get(k, k).clone();
            minors.push(pivot.clone());
            if pivot.is_zero() || k + 1 == n {
                break;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.get(i, j) * &pivot - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
            }
            prev = pivot;
        }
        minors
    }
}

/// Tests negative definiteness of a symmetric integer matrix by the sign
/// pattern of its leading principal minors: `(-1)^k det A_k > 0` for all k.
/// The empty matrix is vacuously negative definite.
pub fn is_negative_definite(a: &IntMatrix) -> Result<bool, LatticeError> {
    if !a.is_square() {
        return Err(LatticeError::NotSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    for i in 0..a.rows {
        for j in 0..i {
            if a.get(i, j) != a.get(j, i) {
                return Err(LatticeError::NotSymmetric { row: i, col: j });
            }
        }
    }
    let minors = a.leading_principal_minors();
    if minors.len() < a.rows {
        // A zero pivot interrupted the sweep: that leading minor vanishes.
        return Ok(false);
    }
    Ok(minors.iter().enumerate().all(|(k, m)| {
        if k % 2 == 0 {
            m.is_negative()
        } else {
            m.is_positive()
        }
    }))
}

/// Solves `A x = b` exactly over the rationals by Gauss-Jordan elimination
/// with partial pivoting. Returns `None` when `A` is singular.
pub fn solve_rational(a: &IntMatrix, b: &[Rat]) -> Result<Option<Vec<Rat>>, LatticeError> {
    if !a.is_square() {
        return Err(LatticeError::NotSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    if b.len() != a.rows {
        return Err(LatticeError::DimensionMismatch {
            rows: a.rows,
            cols: a.cols,
            len: b.len(),
        });
    }
    let n = a.rows;
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = (0..n)
                .map(|j| Rat::from_integer(a.get(i, j).clone()))
                .collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !m[r][col].is_zero()) {
            Some(r) => r,
            None => return Ok(None),
        };
        m.swap(col, pivot_row);
        let pivot = m[col][col].clone();
        for j in col..=n {
            m[col][j] = &m[col][j] / &pivot;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for j in col..=n {
                    let v = &m[r][j] - &factor * &m[col][j];
                    m[r][j] = v;
                }
            }
        }
    }
    Ok(Some(m.into_iter().map(|row| row[n].clone()).collect()))
}

/// Smith normal form `U A V = D` with `U`, `V` unimodular and `D` diagonal
/// with each diagonal entry dividing the next.
#[derive(Debug, Clone)]
pub struct SmithNormalForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithNormalForm {
    /// Diagonal entries of `D`, length `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }

    /// Nonzero diagonal entries (the invariant factors).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().filter(|v| !v.is_zero()).collect()
    }

    /// Rank of the original matrix.
    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    /// Invariant factors greater than one: the torsion of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors()
            .into_iter()
            .filter(|v| v > &BigInt::one())
            .collect()
    }
}

/// Computes the Smith normal form by elementary row and column operations,
/// picking the smallest nonzero entry as pivot at each stage.
pub fn smith_normal_form(a: &IntMatrix) -> SmithNormalForm {
    let mut d = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut v = IntMatrix::identity(a.cols());
    let t_max = a.rows().min(a.cols());

    // Row op on d mirrors onto u (left transform); col op mirrors onto v.
    fn row_sub(d: &mut IntMatrix, u: &mut IntMatrix, target: usize, source: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..d.cols() {
            let val = d.get(target, c) - q * d.get(source, c);
            d.set(target, c, val);
        }
        for c in 0..u.cols() {
            let val = u.get(target, c) - q * u.get(source, c);
            u.set(target, c, val);
        }
    }
    fn col_sub(d: &mut IntMatrix, v: &mut IntMatrix, target: usize, source: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..d.rows() {
            let val = d.get(r, target) - q * d.get(r, source);
            d.set(r, target, val);
        }
        for r in 0..v.rows() {
            let val = v.get(r, target) - q * v.get(r, source);
            v.set(r, target, val);
        }
    }

    for t in 0..t_max {
        'stage: loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..d.rows() {
                for j in t..d.cols() {
                    if !d.get(i, j).is_zero()
                        && pivot.is_none_or(|(pi, pj)| {
                            d.get(i, j).abs() < d.get(pi, pj).abs()
                        })
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                break 'stage;
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut dirty = false;
            for i in t + 1..d.rows() {
                let q = d.get(i, t).div_floor(d.get(t, t));
                row_sub(&mut d, &mut u, i, t, &q);
                if !d.get(i, t).is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..d.cols() {
                let q = d.get(t, j).div_floor(d.get(t, t));
                col_sub(&mut d, &mut v, j, t, &q);
                if !d.get(t, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'stage;
            }
            // Divisibility repair: fold any non-multiple into the pivot row.
            for i in t + 1..d.rows() {
                for j in t + 1..d.cols() {
                    if !(d.get(i, j) % d.get(t, t)).is_zero() {
                        let one = BigInt::one();
                        let neg_one = -one.clone();
                        row_sub(&mut d, &mut u, t, i, &neg_one);
                        continue 'stage;
                    }
                }
            }
            break 'stage;
        }
        if d.get(t, t).is_negative() {
            for c in 0..d.cols() {
                let val = -d.get(t, c).clone();
                d.set(t, c, val);
            }
            for c in 0..u.cols() {
                let val = -u.get(t, c).clone();
                u.set(t, c, val);
            }
        }
    }
    SmithNormalForm { d, u, v }
}
