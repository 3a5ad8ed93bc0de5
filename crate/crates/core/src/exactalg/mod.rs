//! Exact coefficient fields and sparse multivariate polynomials with the
//! adjacent-swap operator and the divided-difference operators built on it.

mod cyclotomic;
mod interp;
mod linsolve;
mod multipoly;
mod qfraction;
mod rational;
mod zpoly;

pub use cyclotomic::Cyclotomic3;
pub use interp::{eval_poly, interpolate};
pub use linsolve::{determinant, is_nonsingular, nullspace, solve_any, solve_square};
pub use multipoly::{dk_apply, product_rule_check, swap_k, MultiPoly};
pub use qfraction::QFraction;
pub use rational::Rat;
pub use zpoly::ZPoly;

use std::fmt::{Debug, Display};

/// An exact field with decidable equality and canonical zero.
pub trait Coeff: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_i64(v: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Pivot-selection weight for exact elimination; smaller is cheaper.
    fn complexity(&self) -> usize {
        0
    }

    fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// A field containing the deformation parameter q (as a unit).
pub trait QCoeff: Coeff {
    /// True when q is specialised to the primitive third root of unity.
    const Q_IS_OMEGA: bool;

    fn q_pow(k: i64) -> Self;

    /// q + q^{-1}; the loop weight is tau = -(q + q^{-1}).
    fn q_plus_qinv() -> Self {
        Self::q_pow(1).add(&Self::q_pow(-1))
    }

    /// q - q^{-1}, the normalising denominator of the generator products.
    fn q_minus_qinv() -> Self {
        Self::q_pow(1).sub(&Self::q_pow(-1))
    }
}
