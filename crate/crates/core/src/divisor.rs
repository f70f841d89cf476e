//! Greatest divisor of a full-row-rank matrix: the gcd of its maximal minors.
//!
//! Two independent routes are provided. The minor route enumerates every r×r
//! column selection and is exponential in the width; the LTF route multiplies
//! the diagonal of the reduced form and is the default.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::ltf::{gcd_all, ltf_reduce};
use crate::matrix::{maximal_minors_capped, IntMat, DEFAULT_MINOR_CAP};

/// Strictly positive greatest divisor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GreatestDivisor(BigInt);

impl GreatestDivisor {
    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn into_inner(self) -> BigInt {
        self.0
    }

    /// Whether this divisor divides `n`.
    pub fn divides(&self, n: &BigInt) -> bool {
        (n % &self.0).is_zero()
    }
}

impl fmt::Display for GreatestDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn greatest_divisor_minors(m: &IntMat) -> Result<GreatestDivisor> {
    greatest_divisor_minors_capped(m, DEFAULT_MINOR_CAP)
}

pub fn greatest_divisor_minors_capped(m: &IntMat, cap: u64) -> Result<GreatestDivisor> {
    let minors = maximal_minors_capped(m, cap)?;
    let g = gcd_all(&minors);
    if g.is_zero() {
        // every maximal minor vanishes: the rows are dependent
        let row = crate::matrix::rank(m);
        return Err(Error::RankDeficient { row });
    }
    Ok(GreatestDivisor(g))
}

pub fn greatest_divisor_ltf(m: &IntMat) -> Result<GreatestDivisor> {
    let dec = ltf_reduce(m)?;
    let g = dec.diagonal_product();
    debug_assert!(g.is_positive());
    Ok(GreatestDivisor(g))
}

/// Default route (LTF diagonal product).
pub fn greatest_divisor(m: &IntMat) -> Result<GreatestDivisor> {
    greatest_divisor_ltf(m)
}
