//! The field Q(q) of rational functions in q, as gcd-normalised ratios of
//! integer-coefficient polynomials.
//!
//! Denominators arising in the wheel-polynomial pipeline only ever contain
//! the factors q and q^2 - 1; reduction strips those by exact divisibility
//! tests before falling back to a polynomial gcd, which keeps the hot paths
//! cheap without giving up the canonical form.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};
use num::Integer;
use std::fmt;

use super::{Coeff, Cyclotomic3, QCoeff, ZPoly};

/// num/den with den nonzero, gcd(num, den) = 1, contents coprime and the
/// leading coefficient of den positive. Zero is 0/1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QFraction {
    num: ZPoly,
    den: ZPoly,
}

impl QFraction {
    pub fn from_parts(num: ZPoly, den: ZPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut f = QFraction { num, den };
        f.reduce();
        f
    }

    pub fn from_zpoly(num: ZPoly) -> Self {
        QFraction {
            num,
            den: ZPoly::one(),
        }
    }

    pub fn num(&self) -> &ZPoly {
        &self.num
    }

    pub fn den(&self) -> &ZPoly {
        &self.den
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = ZPoly::one();
            return;
        }
        // common q-power
        let v = self.num.valuation().min(self.den.valuation());
        if v > 0 {
            self.num = self.num.shift_down(v);
            self.den = self.den.shift_down(v);
        }
        // common q^2 - 1 factors
        while self.num.divisible_by_q2m1() && self.den.divisible_by_q2m1() {
            self.num = self.num.div_q2m1();
            self.den = self.den.div_q2m1();
        }
        // integer content
        let g = self.num.content().gcd(&self.den.content());
        if !g.is_one() {
            self.num = self.num.divide_content(&g);
            self.den = self.den.divide_content(&g);
        }
        // full gcd only when the denominator has factors besides q and q^2-1
        if !self.den_is_class_form() {
            let g = self.num.gcd(&self.den);
            if !g.is_constant() {
                self.num = self.num.div_exact(&g);
                self.den = self.den.div_exact(&g);
            }
        }
        if !self.den.leading_sign_positive() {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
    }

    /// True when den = c * q^a * (q^2-1)^b.
    fn den_is_class_form(&self) -> bool {
        let mut d = self.den.shift_down(self.den.valuation());
        while d.divisible_by_q2m1() && !d.is_constant() {
            d = d.div_q2m1();
        }
        d.is_constant()
    }

    /// True when the denominator divides a power of q*(q^2-1); the invariant
    /// preserved by the whole divided-difference pipeline.
    pub fn den_only_q_and_q2m1(&self) -> bool {
        self.den_is_class_form() && self.den.content().is_one()
    }

    /// Evaluation q := x; `None` when the denominator vanishes there.
    pub fn eval_rational(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval_rational(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_rational(x) / d)
    }

    /// Evaluation q := omega; `None` when the denominator vanishes there.
    pub fn eval_omega(&self) -> Option<Cyclotomic3> {
        let d = self.den.eval_omega();
        if Coeff::is_zero(&d) {
            return None;
        }
        Some(self.num.eval_omega().mul(&d.inv().unwrap()))
    }
}

impl Coeff for QFraction {
    fn zero() -> Self {
        QFraction {
            num: ZPoly::zero(),
            den: ZPoly::one(),
        }
    }

    fn one() -> Self {
        QFraction {
            num: ZPoly::one(),
            den: ZPoly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        if self.num.is_zero() {
            return other.clone();
        }
        if other.num.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add(&other.num);
            return Self::from_parts(num, self.den.clone());
        }
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        Self::from_parts(num, self.den.mul(&other.den))
    }

    fn sub(&self, other: &Self) -> Self {
        if other.num.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.sub(&other.num);
            return Self::from_parts(num, self.den.clone());
        }
        let num = self
            .num
            .mul(&other.den)
            .sub(&other.num.mul(&self.den));
        Self::from_parts(num, self.den.mul(&other.den))
    }

    fn mul(&self, other: &Self) -> Self {
        if self.num.is_zero() || other.num.is_zero() {
            return Self::zero();
        }
        Self::from_parts(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    fn neg(&self) -> Self {
        QFraction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        let mut f = QFraction {
            num: self.den.clone(),
            den: self.num.clone(),
        };
        if !f.den.leading_sign_positive() {
            f.num = f.num.neg();
            f.den = f.den.neg();
        }
        Some(f)
    }

    fn from_i64(v: i64) -> Self {
        QFraction {
            num: ZPoly::constant(BigInt::from(v)),
            den: ZPoly::one(),
        }
    }

    fn complexity(&self) -> usize {
        self.num.degree() + self.den.degree()
    }
}

impl QCoeff for QFraction {
    const Q_IS_OMEGA: bool = false;

    fn q_pow(k: i64) -> Self {
        if k >= 0 {
            QFraction {
                num: ZPoly::q_power(k as usize),
                den: ZPoly::one(),
            }
        } else {
            QFraction {
                num: ZPoly::one(),
                den: ZPoly::q_power((-k) as usize),
            }
        }
    }
}

impl fmt::Display for QFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            if self.num.is_constant() || self.num.coeffs().iter().filter(|c| !c.is_zero()).count() == 1 {
                write!(f, "{}", self.num)
            } else {
                write!(f, "({})", self.num)
            }
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for QFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QFraction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> QFraction {
        QFraction::q_pow(1)
    }

    #[test]
    fn canonical_form() {
        // (2q^3 - 2q) / (4q^2) reduces to (q^2 - 1) / (2q)
        let f = QFraction::from_parts(
            ZPoly::from_coeffs(vec![0, -2, 0, 2].into_iter().map(BigInt::from).collect()),
            ZPoly::from_coeffs(vec![0, 0, 4].into_iter().map(BigInt::from).collect()),
        );
        assert_eq!(f.num().to_string(), "q^2 - 1");
        assert_eq!(f.den().to_string(), "2*q");
        // sign normalisation: leading denominator coefficient positive
        let g = QFraction::from_parts(
            ZPoly::one(),
            ZPoly::constant(BigInt::from(-3)),
        );
        assert_eq!(g.den().to_string(), "3");
        assert_eq!(g.num().to_string(), "-1");
    }

    #[test]
    fn field_axioms_spot_checks() {
        let a = QFraction::from_parts(
            ZPoly::from_coeffs(vec![1, 2].into_iter().map(BigInt::from).collect()),
            ZPoly::from_coeffs(vec![-1, 0, 1].into_iter().map(BigInt::from).collect()),
        );
        let b = q().sub(&QFraction::q_pow(-1));
        assert!(a.mul(&a.inv().unwrap()).is_one());
        assert_eq!(a.add(&b).sub(&b), a);
        assert_eq!(a.mul(&b).mul(&b.inv().unwrap()), a);
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn evaluation_homomorphism() {
        // phi(a*b) = phi(a)*phi(b), phi(a+b) = phi(a)+phi(b) at q = 5/3
        let x = BigRational::new(BigInt::from(5), BigInt::from(3));
        let a = q().add(&QFraction::q_pow(-2));
        let b = q().sub(&QFraction::from_i64(7));
        let phi = |f: &QFraction| f.eval_rational(&x).unwrap();
        assert_eq!(phi(&a.mul(&b)), phi(&a) * phi(&b));
        assert_eq!(phi(&a.add(&b)), phi(&a) + phi(&b));
        // unlucky point: denominator of 1/(q-1) vanishes at q = 1
        let g = QFraction::from_parts(
            ZPoly::one(),
            ZPoly::from_coeffs(vec![-1, 1].into_iter().map(BigInt::from).collect()),
        );
        assert!(g.eval_rational(&BigRational::one()).is_none());
    }

    #[test]
    fn omega_evaluation_matches() {
        // (q + q^-1) evaluates to -1 at omega
        let s = QFraction::q_plus_qinv();
        assert_eq!(s.eval_omega().unwrap(), Cyclotomic3::from_i64(-1));
        // q - q^-1 is invertible at omega
        let d = QFraction::q_minus_qinv();
        assert!(!Coeff::is_zero(&d.eval_omega().unwrap()));
    }

    #[test]
    fn general_gcd_path() {
        // denominators with factors other than q, q^2-1 still normalise
        let d = q().add(&QFraction::from_i64(2)); // q + 2
        let f = QFraction::one().add(&QFraction::one().mul(&d.inv().unwrap()));
        // f = (q + 3)/(q + 2)
        assert_eq!(f.num().to_string(), "q + 3");
        assert_eq!(f.den().to_string(), "q + 2");
        let g = f.mul(&d); // back to q + 3
        assert_eq!(g.den().to_string(), "1");
    }
}
