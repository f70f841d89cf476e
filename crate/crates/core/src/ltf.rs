//! Reduction to Lower Triangular Form by elementary column operations.
//!
//! A full-row-rank r×c matrix is in LTF when it has the block shape `[N | O]`
//! with `N` square, lower triangular and with a strictly positive diagonal,
//! and `O` zero. The reduction is a row-by-row Euclidean algorithm on columns:
//! take the entry of smallest nonzero absolute value as pivot, reduce every
//! other active entry of the row modulo it, and repeat until a single nonzero
//! entry survives. That entry is then moved onto the diagonal and made positive.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Euclid, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{multiply, IntMat};
use crate::unimodular::{apply_col_op_mut, ElementaryColOp, TransformPair};

/// `original · transform.forward() == ltf`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LtfDecomposition {
    pub ltf: IntMat,
    pub transform: TransformPair,
}

impl LtfDecomposition {
    /// Diagonal entries `d_1 … d_r` of the triangular block.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.ltf.rows())
            .map(|i| self.ltf[(i, i)].clone())
            .collect()
    }

    pub fn diagonal_product(&self) -> BigInt {
        self.diagonal().into_iter().product()
    }
}

/// Record of a reduction: every operation applied, the number of
/// pivot/reduce rounds spent on each row, and the bit length of the largest
/// active entry of each row when its reduction started.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LtfTrace {
    pub ops: Vec<ElementaryColOp>,
    pub rounds_per_row: Vec<usize>,
    pub start_bits: Vec<u64>,
}

pub fn is_ltf(m: &IntMat) -> bool {
    let (r, c) = m.shape();
    if r > c {
        return false;
    }
    (0..r).all(|i| m[(i, i)].is_positive() && (i + 1..c).all(|j| m[(i, j)].is_zero()))
}

pub fn ltf_reduce(m: &IntMat) -> Result<LtfDecomposition> {
    reduce(m, None)
}

pub fn ltf_reduce_traced(m: &IntMat) -> Result<(LtfDecomposition, LtfTrace)> {
    let mut trace = LtfTrace::default();
    let dec = reduce(m, Some(&mut trace))?;
    Ok((dec, trace))
}

struct Reducer<'t> {
    work: IntMat,
    pair: TransformPair,
    trace: Option<&'t mut LtfTrace>,
}

impl Reducer<'_> {
    fn apply(&mut self, op: ElementaryColOp) {
        apply_col_op_mut(&mut self.work, &op).expect("reduction emitted an invalid op");
        self.pair
            .accumulate_mut(&op)
            .expect("reduction emitted an invalid op");
        if let Some(t) = self.trace.as_deref_mut() {
            t.ops.push(op);
        }
    }

    /// Column of the smallest nonzero |entry| of `row` among `from..`,
    /// lowest index on ties.
    fn pivot(&self, row: usize, from: usize) -> Option<usize> {
        let mut best: Option<(usize, BigInt)> = None;
        for j in from..self.work.cols() {
            let v = &self.work[(row, j)];
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            if best.as_ref().is_none_or(|(_, b)| a < *b) {
                best = Some((j, a));
            }
        }
        best.map(|(j, _)| j)
    }

    fn reduce_row(&mut self, row: usize) -> Result<usize> {
        let cols = self.work.cols();
        let mut rounds = 0;
        let pivot_col = loop {
            let Some(p) = self.pivot(row, row) else {
                return Err(Error::RankDeficient { row });
            };
            let others: Vec<usize> = (row..cols)
                .filter(|&j| j != p && !self.work[(row, j)].is_zero())
                .collect();
            if others.is_empty() {
                break p;
            }
            rounds += 1;
            let divisor = self.work[(row, p)].clone();
            for j in others {
                // m = q·p + r with 0 <= r < |p|
                let q = self.work[(row, j)].div_euclid(&divisor);
                if !q.is_zero() {
                    self.apply(ElementaryColOp::AddMultiple {
                        dest: j,
                        src: p,
                        factor: -q,
                    });
                }
            }
        };
        if pivot_col != row {
            self.apply(ElementaryColOp::Swap(row, pivot_col));
        }
        if self.work[(row, row)].is_negative() {
            self.apply(ElementaryColOp::Negate(row));
        }
        Ok(rounds)
    }
}

fn reduce(m: &IntMat, mut trace: Option<&mut LtfTrace>) -> Result<LtfDecomposition> {
    let (r, c) = m.shape();
    if r > c {
        return Err(Error::Shape(format!(
            "LTF reduction needs rows <= cols, got {r}x{c}"
        )));
    }
    let mut rounds = Vec::with_capacity(r);
    let mut bits = Vec::with_capacity(r);
    let mut red = Reducer {
        work: m.clone(),
        pair: TransformPair::identity(c),
        trace: trace.as_deref_mut(),
    };
    for row in 0..r {
        bits.push(row_bit_length(&red.work, row, row));
        rounds.push(red.reduce_row(row)?);
    }
    let Reducer { work, pair, .. } = red;
    if let Some(t) = trace {
        t.rounds_per_row = rounds;
        t.start_bits = bits;
    }
    debug_assert!(is_ltf(&work));
    Ok(LtfDecomposition {
        ltf: work,
        transform: pair,
    })
}

/// Exact inverse of a unimodular matrix, with integer arithmetic only.
///
/// `M · W = L` with `L` lower triangular and unit diagonal, so
/// `M⁻¹ = W · L⁻¹`, where `L⁻¹` comes from forward substitution.
pub fn unimodular_inverse(m: &IntMat) -> Result<IntMat> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let dec = match ltf_reduce(m) {
        Ok(d) => d,
        Err(Error::RankDeficient { .. }) => return Err(Error::NotUnimodular),
        Err(e) => return Err(e),
    };
    let l = &dec.ltf;
    let n = l.rows();
    if (0..n).any(|i| !num_traits::One::is_one(&l[(i, i)])) {
        return Err(Error::NotUnimodular);
    }
    let mut linv = IntMat::identity(n);
    for j in 0..n {
        for i in j + 1..n {
            let mut acc = BigInt::zero();
            for k in j..i {
                acc -= &l[(i, k)] * &linv[(k, j)];
            }
            linv[(i, j)] = acc;
        }
    }
    multiply(dec.transform.forward(), &linv)
}

/// Bit length of the largest |entry| in row `row`, columns `from..`.
fn row_bit_length(m: &IntMat, row: usize, from: usize) -> u64 {
    (from..m.cols())
        .map(|j| m[(row, j)].bits())
        .max()
        .unwrap_or(0)
}

/// Greatest common divisor of a slice, as a nonnegative integer.
pub(crate) fn gcd_all(values: &[BigInt]) -> BigInt {
    values.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v))
}
