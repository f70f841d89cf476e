//! Dense matrices of arbitrary-precision integers.
//!
//! Determinants and ranks go through fraction-free (Bareiss) elimination, so
//! every intermediate value is itself a minor of the input and no rational
//! arithmetic is ever needed.

use std::fmt;
use std::ops::{Index, IndexMut};

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Default upper bound on the number of column subsets visited by
/// [`maximal_minors`].
pub const DEFAULT_MINOR_CAP: u64 = 1_000_000;

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(IntMat { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from nested rows. All rows must have equal length.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row.iter().cloned().map(Into::into));
        }
        Ok(IntMat {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Convenience constructor for small literal matrices; panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let owned: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        Self::from_rows(&owned).expect("ragged matrix literal")
    }

    /// Single-row matrix.
    pub fn row_vector(entries: Vec<BigInt>) -> Self {
        IntMat {
            rows: 1,
            cols: entries.len(),
            data: entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [BigInt] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[BigInt]> {
        // chunks(0) panics, so zero-width matrices yield empty rows explicitly
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_nested(&self) -> Vec<Vec<BigInt>> {
        self.row_iter().map(<[BigInt]>::to_vec).collect()
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Rows `start..end` as a new matrix.
    pub fn row_slice(&self, start: usize, end: usize) -> IntMat {
        assert!(start <= end && end <= self.rows);
        IntMat {
            rows: end - start,
            cols: self.cols,
            data: self.data[start * self.cols..end * self.cols].to_vec(),
        }
    }

    /// Submatrix made of the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> IntMat {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                data.push(self[(i, j)].clone());
            }
        }
        IntMat {
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    /// Stacks `self` on top of `below`.
    pub fn vstack(&self, below: &IntMat) -> Result<IntMat> {
        // an empty block stacks with anything
        if self.rows == 0 {
            return Ok(below.clone());
        }
        if below.rows == 0 {
            return Ok(self.clone());
        }
        if self.cols != below.cols {
            return Err(Error::Shape(format!(
                "cannot stack {}x{} on {}x{}",
                self.rows, self.cols, below.rows, below.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&below.data);
        Ok(IntMat {
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_columns(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Largest absolute value among the entries (zero for an empty matrix).
    pub fn max_abs(&self) -> BigInt {
        self.data
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl Index<(usize, usize)> for IntMat {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMat{}x{}[", self.rows, self.cols)?;
        for (i, row) in self.row_iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{}", row.iter().join(" "))?;
        }
        write!(f, "]")
    }
}

/// Exact product `lhs · rhs`.
pub fn multiply(lhs: &IntMat, rhs: &IntMat) -> Result<IntMat> {
    if lhs.cols != rhs.rows {
        return Err(Error::DimensionMismatch {
            lhs_rows: lhs.rows,
            lhs_cols: lhs.cols,
            rhs_rows: rhs.rows,
            rhs_cols: rhs.cols,
        });
    }
    let mut out = IntMat::zeros(lhs.rows, rhs.cols);
    for i in 0..lhs.rows {
        for k in 0..lhs.cols {
            let a = &lhs[(i, k)];
            if a.is_zero() {
                continue;
            }
            for j in 0..rhs.cols {
                let b = &rhs[(k, j)];
                if !b.is_zero() {
                    out.data[i * rhs.cols + j] += a * b;
                }
            }
        }
    }
    Ok(out)
}

/// Result of fraction-free forward elimination.
struct Echelon {
    rank: usize,
    /// +1 or -1 depending on the parity of row swaps.
    sign: i8,
    /// Last pivot; for a nonsingular square input it equals ±det.
    last_pivot: BigInt,
}

/// Bareiss elimination on a scratch copy. After step `k` every entry below the
/// pivot rows is a `(k+1)`-order minor of the input, which makes the division by
/// the previous pivot exact.
fn bareiss(m: &IntMat) -> Echelon {
    let (rows, cols) = m.shape();
    let mut a = m.clone();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut sign = 1i8;

    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[(i, col)].is_zero()) else {
            continue;
        };
        if p != rank {
            a.swap_rows(p, rank);
            sign = -sign;
        }
        let pivot = a[(rank, col)].clone();
        for i in rank + 1..rows {
            let factor = a[(i, col)].clone();
            for j in col + 1..cols {
                let num = &pivot * &a[(i, j)] - &factor * &a[(rank, j)];
                let (q, r) = num.div_rem(&prev);
                assert!(r.is_zero(), "fraction-free elimination: inexact division");
                a[(i, j)] = q;
            }
            a[(i, col)] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }

    Echelon {
        rank,
        sign,
        last_pivot: prev,
    }
}

/// Exact determinant via fraction-free elimination.
pub fn determinant(m: &IntMat) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    if m.rows == 0 {
        return Ok(BigInt::one());
    }
    let e = bareiss(m);
    if e.rank < m.rows {
        return Ok(BigInt::zero());
    }
    Ok(if e.sign < 0 {
        -e.last_pivot
    } else {
        e.last_pivot
    })
}

/// Determinant by cofactor expansion along the first row.
///
/// Exponential time. Kept as an independent oracle for the elimination path;
/// fine up to n = 8 or so.
pub fn determinant_cofactor(m: &IntMat) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let cols: Vec<usize> = (0..m.cols).collect();
    Ok(laplace(m, 0, &cols))
}

fn laplace(m: &IntMat, row: usize, cols: &[usize]) -> BigInt {
    match cols.len() {
        0 => BigInt::one(),
        1 => m[(row, cols[0])].clone(),
        _ => {
            let mut acc = BigInt::zero();
            for (pos, &c) in cols.iter().enumerate() {
                let entry = &m[(row, c)];
                if entry.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = entry * laplace(m, row + 1, &rest);
                if pos % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

/// Rank over the rationals.
pub fn rank(m: &IntMat) -> usize {
    bareiss(m).rank
}

pub fn is_full_row_rank(m: &IntMat) -> bool {
    rank(m) == m.rows
}

/// `n choose k`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// All maximal minors of an r×c matrix (r ≤ c), in lexicographic order of
/// the selected column subsets, using [`DEFAULT_MINOR_CAP`].
pub fn maximal_minors(m: &IntMat) -> Result<Vec<BigInt>> {
    maximal_minors_capped(m, DEFAULT_MINOR_CAP)
}

pub fn maximal_minors_capped(m: &IntMat, cap: u64) -> Result<Vec<BigInt>> {
    let (r, c) = m.shape();
    if r > c {
        return Err(Error::Shape(format!(
            "maximal minors need rows <= cols, got {r}x{c}"
        )));
    }
    let count = binomial(c, r);
    if count > cap as u128 {
        return Err(Error::CapExceeded { count, cap });
    }
    (0..c)
        .combinations(r)
        .map(|subset| determinant(&m.select_columns(&subset)))
        .collect()
}
