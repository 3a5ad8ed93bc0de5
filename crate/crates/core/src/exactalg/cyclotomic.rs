//! The third cyclotomic field Q(w), w = e^(2*pi*i/3), realising q = w so that
//! q^3 = 1 and q + q^{-1} = -1. Elements are a + b*w with rational a, b and
//! w^2 + w + 1 = 0.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};
use std::fmt;

use super::{Coeff, QCoeff};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic3 {
    a: BigRational,
    b: BigRational,
}

impl Cyclotomic3 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Cyclotomic3 { a, b }
    }

    pub fn omega() -> Self {
        Cyclotomic3 {
            a: BigRational::zero(),
            b: BigRational::one(),
        }
    }

    pub fn from_bigint(v: &BigInt) -> Self {
        Cyclotomic3 {
            a: BigRational::from(v.clone()),
            b: BigRational::zero(),
        }
    }

    pub fn from_rational(v: BigRational) -> Self {
        Cyclotomic3 {
            a: v,
            b: BigRational::zero(),
        }
    }

    /// The rational part; `None` when the element is not rational.
    pub fn rational_part(&self) -> Option<&BigRational> {
        self.b.is_zero().then_some(&self.a)
    }

    pub fn coords(&self) -> (&BigRational, &BigRational) {
        (&self.a, &self.b)
    }

    pub fn zero_elem() -> Self {
        Cyclotomic3 {
            a: BigRational::zero(),
            b: BigRational::zero(),
        }
    }

    pub fn add_elem(&self, other: &Self) -> Self {
        Cyclotomic3 {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
        }
    }

    pub fn mul_elem(&self, other: &Self) -> Self {
        // (a1 + b1 w)(a2 + b2 w) with w^2 = -1 - w
        let bb = &self.b * &other.b;
        Cyclotomic3 {
            a: &self.a * &other.a - &bb,
            b: &self.a * &other.b + &self.b * &other.a - &bb,
        }
    }

    /// Field norm a^2 - ab + b^2.
    fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }
}

impl Coeff for Cyclotomic3 {
    fn zero() -> Self {
        Self::zero_elem()
    }

    fn one() -> Self {
        Cyclotomic3 {
            a: BigRational::one(),
            b: BigRational::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        self.add_elem(other)
    }

    fn sub(&self, other: &Self) -> Self {
        Cyclotomic3 {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
        }
    }

    fn mul(&self, other: &Self) -> Self {
        self.mul_elem(other)
    }

    fn neg(&self) -> Self {
        Cyclotomic3 {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }

    fn inv(&self) -> Option<Self> {
        if Coeff::is_zero(self) {
            return None;
        }
        // conjugate is a + b*w^2 = (a - b) - b*w
        let conj = Cyclotomic3 {
            a: &self.a - &self.b,
            b: -self.b.clone(),
        };
        let n = self.norm();
        Some(Cyclotomic3 {
            a: conj.a / n.clone(),
            b: conj.b / n,
        })
    }

    fn from_i64(v: i64) -> Self {
        Cyclotomic3 {
            a: BigRational::from(BigInt::from(v)),
            b: BigRational::zero(),
        }
    }
}

impl QCoeff for Cyclotomic3 {
    const Q_IS_OMEGA: bool = true;

    fn q_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Coeff::one(),
            1 => Self::omega(),
            _ => Cyclotomic3 {
                // w^2 = -1 - w
                a: -BigRational::one(),
                b: -BigRational::one(),
            },
        }
    }
}

impl fmt::Display for Cyclotomic3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*w", self.b);
        }
        write!(f, "{} + {}*w", self.a, self.b)
    }
}

impl fmt::Debug for Cyclotomic3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic3({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_relations() {
        let w = Cyclotomic3::omega();
        let w2 = w.mul(&w);
        // w^2 + w + 1 = 0
        assert!(w2.add(&w).add(&Cyclotomic3::one()).is_zero());
        // q^3 = 1
        assert!(Cyclotomic3::q_pow(3).is_one());
        assert_eq!(Cyclotomic3::q_pow(-1), w2);
        // q + q^-1 = -1
        assert_eq!(Cyclotomic3::q_plus_qinv(), Cyclotomic3::from_i64(-1));
    }

    #[test]
    fn inverse() {
        let x = Cyclotomic3::new(
            BigRational::new(BigInt::from(3), BigInt::from(2)),
            BigRational::new(BigInt::from(-5), BigInt::from(7)),
        );
        let inv = x.inv().unwrap();
        assert!(x.mul(&inv).is_one());
        assert!(Cyclotomic3::zero().inv().is_none());
    }

    #[test]
    fn q_minus_qinv_squared_is_minus_three() {
        let d = Cyclotomic3::q_minus_qinv();
        assert_eq!(d.mul(&d), Cyclotomic3::from_i64(-3));
    }
}
