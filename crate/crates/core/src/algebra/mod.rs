//! Exact arithmetic: Laurent polynomials over Z, Gaussian integers,
//! fraction-free determinants and congruence diagonalization.

mod gaussian;
mod laurent;
mod matrix;

pub use gaussian::GaussianInteger;
pub use laurent::LaurentPolynomial;
pub use matrix::{
    bareiss_det, det_int, interpolate_from_values, signature_nullity_of_symmetric, SymmetricIntMatrix,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Commutative integral domain with exact division, as needed by Bareiss elimination.
pub trait ExactRing: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / d`, or `None` when `d` does not divide `self`.
    fn div_exact(&self, d: &Self) -> Option<Self>;
}

impl ExactRing for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if Zero::is_zero(d) {
            return None;
        }
        let (q, r) = self.div_rem(d);
        Zero::is_zero(&r).then_some(q)
    }
}
