//! Solvability and explicit solutions of `det([A; X]) = ±d`.
//!
//! `A` is a known r×c integer block (r < c) and `X` an unknown (c−r)×c block.
//! The equation has an integer solution exactly when `A` has full row rank and
//! its greatest divisor divides `d`. A witness is built from the LTF of `A`:
//! with `A·U = [N | O]` and `k = d / gd(A)`, the block `B = [O | diag(1,…,1,±k)]`
//! makes `[A·U; B]` lower triangular with determinant `gd(A)·(±k)`, and
//! `X = B·U⁻¹` carries that determinant back to `[A; X]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::divisor::greatest_divisor;
use crate::error::{Error, Result};
use crate::ltf::ltf_reduce;
use crate::matrix::{determinant, is_full_row_rank, multiply, IntMat};

/// Where the known block sits in the assembled square matrix.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// `[A; X]`
    #[default]
    KnownOnTop,
    /// `[X; A]`
    KnownOnBottom,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationInstance {
    known: IntMat,
    width: usize,
    target: BigInt,
    orientation: Orientation,
}

impl EquationInstance {
    /// Instance with a nonempty known block. Requires `rows < cols` and `d ≥ 1`.
    pub fn new(known: IntMat, target: impl Into<BigInt>, orientation: Orientation) -> Result<Self> {
        let target = target.into();
        let (r, c) = known.shape();
        if r == 0 {
            return Self::without_known(c, target);
        }
        if r >= c {
            return Err(Error::Shape(format!(
                "known block must have fewer rows than columns, got {r}x{c}"
            )));
        }
        if !target.is_positive() {
            return Err(Error::InvalidTarget(format!(
                "target must be positive when a known block is given, got {target}"
            )));
        }
        Ok(EquationInstance {
            known,
            width: c,
            target,
            orientation,
        })
    }

    /// `|X| = ±d` with no known rows; any `d ≥ 0` is allowed.
    pub fn without_known(width: usize, target: impl Into<BigInt>) -> Result<Self> {
        let target = target.into();
        if width == 0 {
            return Err(Error::Shape("equation needs at least one column".into()));
        }
        if target.is_negative() {
            return Err(Error::InvalidTarget(format!(
                "target must be nonnegative, got {target}"
            )));
        }
        Ok(EquationInstance {
            known: IntMat::zeros(0, width),
            width,
            target,
            orientation: Orientation::KnownOnTop,
        })
    }

    pub fn known(&self) -> &IntMat {
        &self.known
    }

    pub fn target(&self) -> &BigInt {
        &self.target
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Column count `c`, i.e. the size of the assembled square matrix.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn unknown_rows(&self) -> usize {
        self.width - self.known.rows()
    }

    /// Stacks the known and unknown blocks according to the orientation.
    pub fn assemble(&self, unknown: &IntMat) -> Result<IntMat> {
        if unknown.shape() != (self.unknown_rows(), self.width) {
            return Err(Error::Shape(format!(
                "unknown block must be {}x{}, got {}x{}",
                self.unknown_rows(),
                self.width,
                unknown.rows(),
                unknown.cols()
            )));
        }
        match self.orientation {
            Orientation::KnownOnTop => self.known.vstack(unknown),
            Orientation::KnownOnBottom => unknown.vstack(&self.known),
        }
    }
}

/// The unknown block `X` of a solved instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionBlock {
    pub unknown: IntMat,
}

pub fn is_solvable(inst: &EquationInstance) -> bool {
    let known = inst.known();
    if known.rows() == 0 {
        return true;
    }
    if !is_full_row_rank(known) {
        return false;
    }
    greatest_divisor(known).is_ok_and(|g| g.divides(inst.target()))
}

/// Builds `X` with `det(assembled) == +d` exactly.
pub fn solve(inst: &EquationInstance) -> Result<SolutionBlock> {
    let (r, c) = inst.known().shape();
    if r == 0 {
        let mut x = IntMat::identity(c);
        x[(c - 1, c - 1)] = inst.target().clone();
        return Ok(SolutionBlock { unknown: x });
    }

    let dec = ltf_reduce(inst.known()).map_err(|e| match e {
        Error::RankDeficient { .. } => Error::Unsolvable {
            divisor: BigInt::zero(),
            target: inst.target().clone(),
        },
        other => other,
    })?;
    let gd = dec.diagonal_product();
    let (k, rem) = inst.target().div_rem(&gd);
    if !rem.is_zero() {
        return Err(Error::Unsolvable {
            divisor: gd,
            target: inst.target().clone(),
        });
    }
    let l = if dec.transform.det_sign() > 0 { k } else { -k };

    let m = c - r;
    let mut b = IntMat::zeros(m, c);
    for i in 0..m {
        b[(i, r + i)] = BigInt::one();
    }
    b[(m - 1, c - 1)] = l;
    let mut x = multiply(&b, dec.transform.inverse())?;

    // [X; A] is [A; X] with its rows rotated: r·(c−r) adjacent transpositions.
    if inst.orientation() == Orientation::KnownOnBottom && (r * m) % 2 == 1 {
        for v in x.row_mut(0) {
            *v = -std::mem::take(v);
        }
    }
    Ok(SolutionBlock { unknown: x })
}

/// True iff `|det(assembled)| == d`.
pub fn verify_solution(inst: &EquationInstance, solution: &SolutionBlock) -> Result<bool> {
    let full = inst.assemble(&solution.unknown)?;
    Ok(determinant(&full)?.abs() == *inst.target())
}
