//! Elementary column operations and unimodular transforms.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{determinant, multiply, IntMat};

/// One elementary column operation. Column indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ElementaryColOp {
    /// `C_col ← −C_col`
    Negate(usize),
    /// `C_dest ← C_dest + factor · C_src`
    AddMultiple {
        dest: usize,
        src: usize,
        factor: BigInt,
    },
    /// `C_a ↔ C_b`
    Swap(usize, usize),
}

impl ElementaryColOp {
    pub fn add_multiple(dest: usize, src: usize, factor: impl Into<BigInt>) -> Self {
        ElementaryColOp::AddMultiple {
            dest,
            src,
            factor: factor.into(),
        }
    }

    /// Checks indices against a dimension and the `dest ≠ src` rule.
    pub fn validate(&self, n: usize) -> Result<()> {
        let check = |i: usize| {
            if i < n {
                Ok(())
            } else {
                Err(Error::IndexOutOfRange { index: i, bound: n })
            }
        };
        match self {
            ElementaryColOp::Negate(c) => check(*c),
            ElementaryColOp::AddMultiple { dest, src, .. } => {
                check(*dest)?;
                check(*src)?;
                if dest == src {
                    return Err(Error::InvalidOp(format!(
                        "add-multiple needs distinct columns, got {dest} twice"
                    )));
                }
                Ok(())
            }
            ElementaryColOp::Swap(a, b) => {
                check(*a)?;
                check(*b)
            }
        }
    }

    /// The operation undoing `self`.
    pub fn inverse(&self) -> ElementaryColOp {
        match self {
            ElementaryColOp::AddMultiple { dest, src, factor } => ElementaryColOp::AddMultiple {
                dest: *dest,
                src: *src,
                factor: -factor,
            },
            other => other.clone(),
        }
    }

    /// Determinant of the elementary matrix: −1 for negate and proper swaps, +1 otherwise.
    pub fn det_sign(&self) -> i8 {
        match self {
            ElementaryColOp::Negate(_) => -1,
            ElementaryColOp::Swap(a, b) if a != b => -1,
            _ => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ElementaryColOp::Negate(_) => "negate",
            ElementaryColOp::AddMultiple { .. } => "addmul",
            ElementaryColOp::Swap(..) => "swap",
        }
    }
}

/// Trace format: `op kind=<negate|addmul|swap> args=<comma separated>`.
impl fmt::Display for ElementaryColOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "op kind={} args=", self.kind())?;
        match self {
            ElementaryColOp::Negate(c) => write!(f, "{c}"),
            ElementaryColOp::AddMultiple { dest, src, factor } => {
                write!(f, "{dest},{src},{factor}")
            }
            ElementaryColOp::Swap(a, b) => write!(f, "{a},{b}"),
        }
    }
}

/// Applies `op` to the columns of `m` in place.
pub fn apply_col_op_mut(m: &mut IntMat, op: &ElementaryColOp) -> Result<()> {
    op.validate(m.cols())?;
    match op {
        ElementaryColOp::Negate(c) => {
            for i in 0..m.rows() {
                let v = &mut m[(i, *c)];
                *v = -std::mem::take(v);
            }
        }
        ElementaryColOp::AddMultiple { dest, src, factor } => {
            if factor.is_zero() {
                return Ok(());
            }
            for i in 0..m.rows() {
                let delta = factor * &m[(i, *src)];
                m[(i, *dest)] += delta;
            }
        }
        ElementaryColOp::Swap(a, b) => m.swap_columns(*a, *b),
    }
    Ok(())
}

/// `M · E(op)`, computed by direct column mutation.
pub fn apply_col_op(m: &IntMat, op: &ElementaryColOp) -> Result<IntMat> {
    let mut out = m.clone();
    apply_col_op_mut(&mut out, op)?;
    Ok(out)
}

/// Row mirror of [`apply_col_op_mut`]: the same operation acting on rows,
/// i.e. `M ← E(op)ᵀ · M`.
pub fn apply_row_op_mut(m: &mut IntMat, op: &ElementaryColOp) -> Result<()> {
    op.validate(m.rows())?;
    match op {
        ElementaryColOp::Negate(r) => {
            for v in m.row_mut(*r) {
                *v = -std::mem::take(v);
            }
        }
        ElementaryColOp::AddMultiple { dest, src, factor } => {
            if factor.is_zero() {
                return Ok(());
            }
            for j in 0..m.cols() {
                let delta = factor * &m[(*src, j)];
                m[(*dest, j)] += delta;
            }
        }
        ElementaryColOp::Swap(a, b) => m.swap_rows(*a, *b),
    }
    Ok(())
}

pub fn apply_row_op(m: &IntMat, op: &ElementaryColOp) -> Result<IntMat> {
    let mut out = m.clone();
    apply_row_op_mut(&mut out, op)?;
    Ok(out)
}

/// The n×n elementary matrix `E` with `M · E == apply_col_op(M, op)`.
pub fn op_matrix(op: &ElementaryColOp, n: usize) -> Result<IntMat> {
    op.validate(n)?;
    let mut e = IntMat::identity(n);
    apply_col_op_mut(&mut e, op)?;
    Ok(e)
}

/// A swap written with negate and add-multiple only:
/// `C_a += C_b; C_b −= C_a; C_a += C_b; C_b ← −C_b`.
pub fn swap_as_primitives(a: usize, b: usize) -> [ElementaryColOp; 4] {
    [
        ElementaryColOp::add_multiple(a, b, 1),
        ElementaryColOp::add_multiple(b, a, -1),
        ElementaryColOp::add_multiple(a, b, 1),
        ElementaryColOp::Negate(b),
    ]
}

pub fn is_unimodular(m: &IntMat) -> bool {
    m.is_square() && determinant(m).is_ok_and(|d| d.abs().is_one())
}

/// A unimodular matrix together with its exact inverse.
///
/// Column operations are folded in as `forward ← forward · E` and
/// `inverse ← E⁻¹ · inverse`, so `forward · inverse == I` holds after every step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformPair {
    forward: IntMat,
    inverse: IntMat,
    det_sign: i8,
}

impl TransformPair {
    pub fn identity(n: usize) -> Self {
        TransformPair {
            forward: IntMat::identity(n),
            inverse: IntMat::identity(n),
            det_sign: 1,
        }
    }

    pub fn dim(&self) -> usize {
        self.forward.rows()
    }

    pub fn forward(&self) -> &IntMat {
        &self.forward
    }

    pub fn inverse(&self) -> &IntMat {
        &self.inverse
    }

    /// `det(forward)`, tracked from the operation parities.
    pub fn det_sign(&self) -> i8 {
        self.det_sign
    }

    pub fn into_parts(self) -> (IntMat, IntMat) {
        (self.forward, self.inverse)
    }

    pub fn accumulate_mut(&mut self, op: &ElementaryColOp) -> Result<()> {
        op.validate(self.dim())?;
        apply_col_op_mut(&mut self.forward, op)?;
        // E⁻¹ as a row operation: the inverse of C_d += f·C_s is R_s -= f·R_d.
        let row_op = match op.inverse() {
            ElementaryColOp::AddMultiple { dest, src, factor } => ElementaryColOp::AddMultiple {
                dest: src,
                src: dest,
                factor,
            },
            other => other,
        };
        apply_row_op_mut(&mut self.inverse, &row_op)?;
        self.det_sign *= op.det_sign();
        Ok(())
    }

    pub fn accumulate(&self, op: &ElementaryColOp) -> Result<TransformPair> {
        let mut next = self.clone();
        next.accumulate_mut(op)?;
        Ok(next)
    }

    /// Checks both products against the identity.
    pub fn is_consistent(&self) -> bool {
        let n = self.dim();
        let id = IntMat::identity(n);
        multiply(&self.forward, &self.inverse).is_ok_and(|p| p == id)
            && multiply(&self.inverse, &self.forward).is_ok_and(|p| p == id)
    }
}
