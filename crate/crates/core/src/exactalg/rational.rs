//! `Coeff` for arbitrary-precision rationals, via a newtype so that method
//! resolution never collides with the `num` traits on `BigRational` itself.

use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use std::fmt;

use super::Coeff;

/// An arbitrary-precision rational as an exact `Coeff` field element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn into_inner(self) -> BigRational {
        self.0
    }
}

impl From<BigRational> for Rat {
    fn from(v: BigRational) -> Self {
        Rat(v)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rat({})", self.0)
    }
}

impl Coeff for Rat {
    fn zero() -> Self {
        Rat(BigRational::zero())
    }

    fn one() -> Self {
        Rat(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        Rat(&self.0 + &other.0)
    }

    fn sub(&self, other: &Self) -> Self {
        Rat(&self.0 - &other.0)
    }

    fn mul(&self, other: &Self) -> Self {
        Rat(&self.0 * &other.0)
    }

    fn neg(&self) -> Self {
        Rat(-self.0.clone())
    }

    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rat(self.0.recip()))
        }
    }

    fn from_i64(v: i64) -> Self {
        Rat(BigRational::from_integer(v.into()))
    }

    fn complexity(&self) -> usize {
        (self.0.numer().abs().bits() + self.0.denom().bits()) as usize
    }
}
