//! Sparse multivariate polynomials over an exact coefficient field.
//!
//! Exponent vectors are fixed-width `u8` per variable (total degrees stay far
//! below 255 at the sizes this crate targets). Variables are 1-indexed in the
//! public interface.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

use super::{Coeff, QCoeff};

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly<C: Coeff> {
    nvars: usize,
    terms: BTreeMap<Vec<u8>, C>,
}

impl<C: Coeff> MultiPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    /// The variable z_i, 1-indexed.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= nvars, "variable z_{i} of {nvars}");
        let mut exps = vec![0u8; nvars];
        exps[i - 1] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exps, C::one());
        MultiPoly { nvars, terms }
    }

    /// c * prod z_i^{e_i} from 1-indexed (variable, exponent) pairs.
    pub fn monomial(nvars: usize, vars: &[(usize, u8)], c: C) -> Self {
        if c.is_zero() {
            return Self::zero(nvars);
        }
        let mut exps = vec![0u8; nvars];
        for &(i, e) in vars {
            assert!(i >= 1 && i <= nvars);
            exps[i - 1] += e;
        }
        let mut terms = BTreeMap::new();
        terms.insert(exps, c);
        MultiPoly { nvars, terms }
    }

    pub fn from_terms(nvars: usize, it: impl IntoIterator<Item = (Vec<u8>, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in it {
            p.accumulate(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[u8], &C)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff_of(&self, exps: &[u8]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    fn accumulate(&mut self, exps: Vec<u8>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.accumulate(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.accumulate(e.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.mul(s)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u8> = ea
                    .iter()
                    .zip(eb)
                    .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                    .collect();
                out.accumulate(e, ca.mul(cb));
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Replaces z_i by an arbitrary polynomial.
    pub fn substitute_var(&self, i: usize, repl: &Self) -> Result<Self> {
        if i == 0 || i > self.nvars {
            return Err(Error::VarIndex {
                index: i,
                nvars: self.nvars,
            });
        }
        if repl.nvars != self.nvars {
            return Err(Error::VarIndex {
                index: repl.nvars,
                nvars: self.nvars,
            });
        }
        let xi = i - 1;
        // monomial replacement: pure exponent rewrite
        if repl.terms.len() == 1 {
            let (rexps, rc) = repl.terms.iter().next().unwrap();
            let mut out = Self::zero(self.nvars);
            let mut cpow: Vec<Option<C>> = vec![None; 256];
            for (e, c) in &self.terms {
                let k = e[xi] as usize;
                let mut ne = e.clone();
                ne[xi] = 0;
                for (j, re) in rexps.iter().enumerate() {
                    let add = (*re as usize) * k;
                    let v = ne[j] as usize + add;
                    assert!(v < 256, "exponent overflow");
                    ne[j] = v as u8;
                }
                let factor = cpow[k].get_or_insert_with(|| rc.pow(k)).clone();
                out.accumulate(ne, c.mul(&factor));
            }
            return Ok(out);
        }
        let mut out = Self::zero(self.nvars);
        let mut rpow: Vec<Option<Self>> = vec![None; 256];
        for (e, c) in &self.terms {
            let k = e[xi] as usize;
            let mut ne = e.clone();
            ne[xi] = 0;
            let rest = MultiPoly {
                nvars: self.nvars,
                terms: BTreeMap::from([(ne, c.clone())]),
            };
            let factor = rpow[k].get_or_insert_with(|| repl.pow(k)).clone();
            out = out.add(&rest.mul(&factor));
        }
        Ok(out)
    }

    /// Renames variables: old variable j (0-indexed) becomes perm[j].
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0u8; self.nvars];
            for (j, &ej) in e.iter().enumerate() {
                ne[perm[j]] = ej;
            }
            out.accumulate(ne, c.clone());
        }
        out
    }

    pub fn evaluate(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.nvars);
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (j, &ej) in e.iter().enumerate() {
                if ej > 0 {
                    t = t.mul(&point[j].pow(ej as usize));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Evaluation at z = (1, ..., 1): the sum of the coefficients.
    pub fn eval_ones(&self) -> C {
        let mut acc = C::zero();
        for c in self.terms.values() {
            acc = acc.add(c);
        }
        acc
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
    }

    /// `Some(d)` when nonzero and every monomial has total degree d.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|e| e.iter().map(|&x| x as usize).sum());
        let d: usize = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    /// Canonical dump: monomials in ascending lexicographic exponent order.
    pub fn dump(&self) -> String {
        self.to_string()
    }
}

impl<C: QCoeff> MultiPoly<C> {
    /// Evaluation at z_i = q^{eps_i}.
    pub fn eval_q_powers(&self, eps: &[i8]) -> C {
        assert_eq!(eps.len(), self.nvars);
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let s: i64 = e
                .iter()
                .zip(eps)
                .map(|(&ej, &sj)| ej as i64 * sj as i64)
                .sum();
            acc = acc.add(&C::q_pow(s).mul(c));
        }
        acc
    }
}

impl<C: Coeff> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (j, &ej) in e.iter().enumerate() {
                if ej == 1 {
                    write!(f, "*z{}", j + 1)?;
                } else if ej > 1 {
                    write!(f, "*z{}^{}", j + 1, ej)?;
                }
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{} vars]({})", self.nvars, self)
    }
}

/// The swap of z_k and z_{k+1}; k = nvars swaps z_nvars and z_1.
pub fn swap_k<C: Coeff>(k: usize, f: &MultiPoly<C>) -> MultiPoly<C> {
    let n = f.nvars();
    assert!(k >= 1 && k <= n, "swap index {k} of {n}");
    let x = k - 1;
    let y = k % n;
    let mut out = MultiPoly::zero(n);
    for (e, c) in f.iter() {
        let mut ne = e.to_vec();
        ne.swap(x, y);
        out.accumulate(ne, c.clone());
    }
    out
}

/// The divided-difference operator
/// D_k(f) = (q z_k - q^{-1} z_{k+1}) / (z_{k+1} - z_k) * (S_k(f) - f),
/// computed monomial-wise from the geometric-sum closed form, so the result
/// is an exact polynomial. k = nvars acts on the cyclic pair (z_nvars, z_1).
pub fn dk_apply<C: QCoeff>(k: usize, f: &MultiPoly<C>) -> MultiPoly<C> {
    let n = f.nvars();
    assert!(k >= 1 && k <= n, "operator index {k} of {n}");
    let x = k - 1;
    let y = k % n;
    let cq = C::q_pow(1);
    let cqinv_neg = C::q_pow(-1).neg();
    let cmid = C::q_minus_qinv();
    let mut out = MultiPoly::zero(n);
    for (e, c) in f.iter() {
        let a = e[x];
        let b = e[y];
        if a == b {
            continue;
        }
        let m = a.min(b);
        let d = a.abs_diff(b);
        let base = if a > b { c.clone() } else { c.neg() };
        for t in 0..=d {
            let w = if t == 0 {
                base.mul(&cq)
            } else if t == d {
                base.mul(&cqinv_neg)
            } else {
                base.mul(&cmid)
            };
            let mut ne = e.to_vec();
            ne[x] = m + d - t;
            ne[y] = m + t;
            out.accumulate(ne, w);
        }
    }
    out
}

/// Checks the product rule D_k(fg) = D_k(f) S_k(g) + f D_k(g).
pub fn product_rule_check<C: QCoeff>(k: usize, f: &MultiPoly<C>, g: &MultiPoly<C>) -> bool {
    let lhs = dk_apply(k, &f.mul(g));
    let rhs = dk_apply(k, f).mul(&swap_k(k, g)).add(&f.mul(&dk_apply(k, g)));
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::QFraction;

    type P = MultiPoly<QFraction>;

    fn q(k: i64) -> QFraction {
        QFraction::q_pow(k)
    }

    #[test]
    fn arithmetic_examples() {
        let z1 = P::var(2, 1);
        let z2 = P::var(2, 2);
        let s = z1.add(&z2);
        assert_eq!(
            s.evaluate(&[QFraction::one(), QFraction::one()]),
            QFraction::from_i64(2)
        );
        let p = z1.mul(&z2).mul(&s);
        // z1^2 z2 + z1 z2^2
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coeff_of(&[2, 1]), QFraction::one());
        assert_eq!(p.coeff_of(&[1, 2]), QFraction::one());
    }

    #[test]
    fn forced_cancellation_by_substitution() {
        // q^4 z1 - q^2 z2 vanishes under z2 <- q^2 z1
        let p = P::var(2, 1).scale(&q(4)).sub(&P::var(2, 2).scale(&q(2)));
        let repl = P::var(2, 1).scale(&q(2));
        assert!(p.substitute_var(2, &repl).unwrap().is_zero());
        assert!(matches!(
            p.substitute_var(7, &repl),
            Err(crate::error::Error::VarIndex { .. })
        ));
    }

    #[test]
    fn swap_examples() {
        let z1 = P::var(4, 1);
        assert_eq!(swap_k(1, &z1), P::var(4, 2));
        let sym = P::var(4, 1).mul(&P::var(4, 2));
        assert_eq!(swap_k(1, &sym), sym);
        assert_eq!(swap_k(4, &P::var(4, 4)), P::var(4, 1));
    }

    #[test]
    fn dk_examples() {
        // D_1(z1) = q z1 - q^-1 z2
        let d = dk_apply(1, &P::var(4, 1));
        let expect = P::var(4, 1).scale(&q(1)).sub(&P::var(4, 2).scale(&q(-1)));
        assert_eq!(d, expect);
        // symmetric input annihilated
        assert!(dk_apply(1, &P::var(4, 1).mul(&P::var(4, 2))).is_zero());
        // constants annihilated
        assert!(dk_apply(1, &P::constant(4, q(5))).is_zero());
    }

    #[test]
    fn dk_agrees_with_multiply_back() {
        // (z_{k+1} - z_k) * D_k(f) = (q z_k - q^-1 z_{k+1}) (S_k f - f)
        let f = P::var(4, 1)
            .mul(&P::var(4, 2))
            .mul(&P::var(4, 2))
            .add(&P::var(4, 3).scale(&q(2)))
            .mul(&P::var(4, 1));
        for k in 1..=4usize {
            let x = k;
            let y = k % 4 + 1;
            let lhs = P::var(4, y).sub(&P::var(4, x)).mul(&dk_apply(k, &f));
            let pre = P::var(4, x).scale(&q(1)).sub(&P::var(4, y).scale(&q(-1)));
            let rhs = pre.mul(&swap_k(k, &f).sub(&f));
            assert_eq!(lhs, rhs, "k={k}");
        }
    }

    #[test]
    fn product_rule_examples() {
        let f = P::var(2, 1);
        let g = P::var(2, 2);
        assert!(product_rule_check(1, &f, &g));
        assert!(product_rule_check(1, &P::constant(2, q(3)), &g));
    }

    #[test]
    fn homogeneity_preserved() {
        let f = P::var(4, 1).mul(&P::var(4, 2)).add(&P::var(4, 3).mul(&P::var(4, 3)));
        assert_eq!(f.homogeneous_degree(), Some(2));
        for k in 1..=4 {
            let d = dk_apply(k, &f);
            if !d.is_zero() {
                assert_eq!(d.homogeneous_degree(), Some(2), "k={k}");
            }
        }
    }

    #[test]
    fn display_is_sorted_and_stable() {
        let p = P::var(2, 2).add(&P::var(2, 1).scale(&q(1)));
        assert_eq!(p.to_string(), "(q)*z1 + (1)*z2");
    }
}
