//! Univariate polynomials over the integers, used as numerators and
//! denominators of the rational-function coefficient field in q.

use num::bigint::{BigInt, Sign};
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use num::Integer;
use std::fmt;

use super::Cyclotomic3;

/// Integer-coefficient polynomial in q, ascending degree order.
/// Canonical: empty for zero, otherwise no trailing zero coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        ZPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            ZPoly { coeffs: vec![c] }
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    /// q^k for k >= 0.
    pub fn q_power(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        ZPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True when the polynomial is a constant (including zero).
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("leading coefficient of zero")
    }

    /// Lowest nonzero power of q (q-adic valuation); 0 for the zero poly.
    pub fn valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            coeffs.push(a + b);
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            coeffs.push(a - b);
        }
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn mul_scalar(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Multiply by q^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ZPoly { coeffs }
    }

    /// Exact division by q^k; caller guarantees divisibility.
    pub fn shift_down(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        debug_assert!(self.coeffs.iter().take(k).all(|c| c.is_zero()));
        Self::from_coeffs(self.coeffs[k..].to_vec())
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Evaluation at the primitive third root of unity.
    pub fn eval_omega(&self) -> Cyclotomic3 {
        let mut acc = Cyclotomic3::zero_elem();
        let w = Cyclotomic3::omega();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_elem(&w).add_elem(&Cyclotomic3::from_bigint(c));
        }
        acc
    }

    /// True iff divisible by q^2 - 1, i.e. vanishes at 1 and -1.
    pub fn divisible_by_q2m1(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        self.eval_int(&BigInt::one()).is_zero()
            && self.eval_int(&BigInt::from(-1)).is_zero()
    }

    /// Exact division by q^2 - 1 (monic divisor, integer synthetic division).
    pub fn div_q2m1(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let n = self.coeffs.len();
        debug_assert!(n >= 2);
        let mut quot = vec![BigInt::zero(); n - 2];
        let mut carry_hi = BigInt::zero(); // coefficient flowing from degree d+2
        let mut carry_lo = BigInt::zero();
        // process from the top: p = (q^2 - 1) * t  =>  t_d = p_{d+2} + t_{d+2}
        for d in (0..n - 2).rev() {
            let t = &self.coeffs[d + 2] + &carry_hi;
            quot[d] = t.clone();
            std::mem::swap(&mut carry_hi, &mut carry_lo);
            carry_lo = t;
        }
        let q = Self::from_coeffs(quot);
        debug_assert_eq!(q.mul(&ZPoly::from_coeffs(vec![
            BigInt::from(-1),
            BigInt::zero(),
            BigInt::one()
        ])), *self);
        q
    }

    /// GCD of all coefficients; zero polynomial has content zero.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn divide_content(&self, g: &BigInt) -> Self {
        if g.is_one() {
            return self.clone();
        }
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| c / g).collect(),
        }
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.content();
        self.divide_content(&g)
    }

    /// Pseudo-remainder of self by other (other nonzero, deg(self) >= deg(other)).
    fn pseudo_rem(&self, other: &Self) -> Self {
        let mut r = self.clone();
        let d = other.degree();
        let lc = other.leading().clone();
        while !r.is_zero() && r.degree() >= d {
            let k = r.degree() - d;
            let rl = r.leading().clone();
            // r = lc * r - rl * q^k * other
            let mut coeffs: Vec<BigInt> = r.coeffs.iter().map(|c| c * &lc).collect();
            for (i, c) in other.coeffs.iter().enumerate() {
                coeffs[i + k] -= c * &rl;
            }
            r = Self::from_coeffs(coeffs);
        }
        r
    }

    /// GCD up to sign, primitive in the result (primitive PRS).
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        loop {
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b;
            }
            a = b;
            b = r.primitive_part();
            if b.is_constant() {
                return Self::one();
            }
        }
    }

    /// Exact division; panics when the division is not exact.
    pub fn div_exact(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        // rational long division, asserting integrality of the result
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect();
        let d = other.degree();
        let lc = BigRational::from(other.leading().clone());
        let n = self.coeffs.len();
        assert!(n > d || (n == d + 1), "degree too small for exact division");
        let mut quot = vec![BigRational::zero(); n - d];
        for top in (d..n).rev() {
            let c = rem[top].clone() / lc.clone();
            quot[top - d] = c.clone();
            if c.is_zero() {
                continue;
            }
            for (i, oc) in other.coeffs.iter().enumerate() {
                let sub = c.clone() * BigRational::from(oc.clone());
                rem[top - d + i] -= sub;
            }
        }
        assert!(rem.iter().all(|c| c.is_zero()), "inexact division");
        Self::from_coeffs(
            quot.into_iter()
                .map(|c| {
                    assert!(c.is_integer(), "non-integer quotient");
                    c.to_integer()
                })
                .collect(),
        )
    }

    pub fn leading_sign_positive(&self) -> bool {
        self.coeffs
            .last()
            .map(|c| c.sign() != Sign::Minus)
            .unwrap_or(true)
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.sign() == Sign::Minus {
                    f.write_str("-")?;
                }
                first = false;
            } else if c.sign() == Sign::Minus {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag.is_one() {
                        f.write_str("q")?;
                    } else {
                        write!(f, "{mag}*q")?;
                    }
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(v: &[i64]) -> ZPoly {
        ZPoly::from_coeffs(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn arithmetic_basics() {
        let a = zp(&[1, 2]); // 1 + 2q
        let b = zp(&[-1, 0, 1]); // q^2 - 1
        assert_eq!(a.mul(&b), zp(&[-1, -2, 1, 2]));
        assert_eq!(a.add(&b), zp(&[0, 2, 1]));
        assert_eq!(b.sub(&b), ZPoly::zero());
    }

    #[test]
    fn q2m1_division() {
        let b = zp(&[-1, 0, 1]);
        let p = b.mul(&zp(&[3, 0, -2, 1]));
        assert!(p.divisible_by_q2m1());
        assert_eq!(p.div_q2m1(), zp(&[3, 0, -2, 1]));
        assert!(!zp(&[1, 1]).divisible_by_q2m1());
    }

    #[test]
    fn gcd_primitive() {
        let a = zp(&[-1, 0, 1]).mul(&zp(&[1, 1])); // (q^2-1)(q+1)
        let b = zp(&[-1, 0, 1]).mul(&zp(&[2, 0, 2])); // (q^2-1)*2(q^2+1)
        let g = a.gcd(&b);
        // gcd is (q^2-1)(q+1) up to sign? common: (q^2-1)*(q+1) vs (q^2-1)(q^2+1):
        // gcd = (q^2-1) * gcd(q+1, 2(q^2+1)) = (q^2-1) * 1? q+1 divides q^2+1? no.
        assert_eq!(g, zp(&[-1, 0, 1]).mul(&zp(&[1, 1])).gcd(&zp(&[-1, 0, 1])));
        assert_eq!(zp(&[-1, 0, 1]).gcd(&zp(&[1, 1])), zp(&[1, 1]));
    }

    #[test]
    fn div_exact_round_trip() {
        let a = zp(&[1, -3, 2, 5]);
        let b = zp(&[2, 1]);
        let p = a.mul(&b);
        assert_eq!(p.div_exact(&b), a);
    }

    #[test]
    fn display_form() {
        assert_eq!(zp(&[-1, 0, 1]).to_string(), "q^2 - 1");
        assert_eq!(zp(&[0, -2]).to_string(), "-2*q");
        assert_eq!(ZPoly::zero().to_string(), "0");
    }
}
