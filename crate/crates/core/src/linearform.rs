//! Linear forms as determinants.
//!
//! Any integer form `a₁x₁ + … + aₙxₙ` equals `det([A; x])` for a suitable
//! (n−1)×n integer matrix `A`, where `x = (x₁ … xₙ)` is the last row. By
//! Laplace expansion along that row this is the same as asking that the
//! cofactor vector of `A` equal `(a₁ … aₙ)`. The linear Diophantine equation
//! `Σ aᵢxᵢ = d` is therefore the one-unknown-row case of `det([A; X]) = d`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::ltf::{gcd_all, ltf_reduce, unimodular_inverse};
use crate::matrix::{determinant, maximal_minors, IntMat};
use crate::solver::{is_solvable, solve, EquationInstance, Orientation};

/// Coefficients `(a₁ … aₙ)` with `n ≥ 2`, not all zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    coeffs: Vec<BigInt>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::Shape(format!(
                "a linear form needs at least 2 coefficients, got {}",
                coeffs.len()
            )));
        }
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::DegenerateForm);
        }
        Ok(LinearForm { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Positive gcd of the coefficients.
    pub fn gcd(&self) -> BigInt {
        gcd_all(&self.coeffs)
    }

    pub fn evaluate(&self, x: &[BigInt]) -> BigInt {
        self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum()
    }
}

/// An (n−1)×n matrix whose cofactor vector is the source form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormCompletion {
    pub matrix: IntMat,
    /// The determinant-one matrix `[B; a/g]` the completion was derived from.
    pub companion: IntMat,
}

/// `c_j = (−1)^(n+j) · det(A without column j)`, 1-based `j`, so that
/// `det([A; x]) == Σ c_j x_j`.
pub fn cofactor_vector(a: &IntMat) -> Result<Vec<BigInt>> {
    let (r, n) = a.shape();
    if n < 2 || r + 1 != n {
        return Err(Error::Shape(format!(
            "cofactor vector needs an (n-1)xn matrix with n >= 2, got {r}x{n}"
        )));
    }
    (0..n)
        .map(|j| {
            let keep: Vec<usize> = (0..n).filter(|&k| k != j).collect();
            let minor = determinant(&a.select_columns(&keep))?;
            // (−1)^(n + j + 1) with 0-based j
            Ok(if (n + j + 1) % 2 == 0 { minor } else { -minor })
        })
        .collect()
}

pub fn complete_to_form(form: &LinearForm) -> Result<FormCompletion> {
    let n = form.len();
    let k = form.gcd();
    let primitive: Vec<BigInt> = form.coeffs.iter().map(|a| a / &k).collect();

    // det([B; a']) = 1 has a solution because gcd(a') = 1
    let inst = EquationInstance::new(IntMat::row_vector(primitive), 1, Orientation::KnownOnBottom)?;
    let b = solve(&inst)?.unknown;
    let companion = inst.assemble(&b)?;

    // (Vᵀ)⁻¹ = (V⁻¹)ᵀ; its first n−1 rows have cofactor vector a'
    let inv_t = unimodular_inverse(&companion)?.transpose();
    let mut matrix = inv_t.row_slice(0, n - 1);
    for v in matrix.row_mut(0) {
        *v *= &k;
    }
    Ok(FormCompletion { matrix, companion })
}

/// One integer solution of `Σ aᵢxᵢ = d`.
///
/// Reduces the row `(a₁ … aₙ)` to `[g 0 … 0]` by `U`; the first column of `U`
/// then evaluates to `g`, and scaling it by `d / g` hits the target.
pub fn solve_linear(form: &LinearForm, target: &BigInt) -> Result<Vec<BigInt>> {
    let row = IntMat::row_vector(form.coeffs.clone());
    let dec = ltf_reduce(&row)?;
    let g = dec.ltf[(0, 0)].clone();
    let (scale, rem) = target.div_rem(&g);
    if !rem.is_zero() {
        return Err(Error::UnsolvableLinear {
            gcd: g,
            target: target.clone(),
        });
    }
    Ok(dec
        .transform
        .forward()
        .column(0)
        .into_iter()
        .map(|u| u * &scale)
        .collect())
}

/// Checks that the determinantal criterion on the completion agrees with
/// `gcd(a) | d`, and that the maximal minors of the completion are the
/// coefficients up to sign.
pub fn condition_equivalence_check(form: &LinearForm, target: &BigInt) -> Result<bool> {
    if !target.is_positive() {
        return Err(Error::InvalidTarget(format!(
            "target must be positive, got {target}"
        )));
    }
    let completion = complete_to_form(form)?;
    let inst = EquationInstance::new(
        completion.matrix.clone(),
        target.clone(),
        Orientation::KnownOnTop,
    )?;
    let determinantal = is_solvable(&inst);
    let linear = (target % form.gcd()).is_zero();

    let mut minors: Vec<BigInt> = maximal_minors(&completion.matrix)?
        .iter()
        .map(Signed::abs)
        .collect();
    let mut coeffs: Vec<BigInt> = form.coeffs.iter().map(Signed::abs).collect();
    minors.sort();
    coeffs.sort();

    Ok(determinantal == linear && minors == coeffs)
}
