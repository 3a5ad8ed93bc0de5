//! Exact polynomial interpolation (Newton's divided differences) over any
//! coefficient field.

use super::Coeff;

/// The unique polynomial of degree < samples.len() through the given
/// (node, value) pairs, returned in ascending coefficient order.
/// Nodes must be pairwise distinct.
pub fn interpolate<C: Coeff>(samples: &[(C, C)]) -> Vec<C> {
    let n = samples.len();
    assert!(n > 0, "no samples");
    // divided-difference table
    let mut dd: Vec<C> = samples.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let dx = samples[i].0.sub(&samples[i - level].0);
            let inv = dx.inv().expect("distinct interpolation nodes");
            dd[i] = dd[i].sub(&dd[i - 1]).mul(&inv);
        }
    }
    // expand Newton form into monomial coefficients
    let mut coeffs = vec![C::zero(); n];
    let mut basis = vec![C::one()]; // product (x - x_0)...(x - x_{k-1})
    for (k, c) in dd.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            coeffs[j] = coeffs[j].add(&c.mul(b));
        }
        if k + 1 < n {
            // basis *= (x - x_k)
            let xk = samples[k].0.clone();
            let mut next = vec![C::zero(); basis.len() + 1];
            for (j, b) in basis.iter().enumerate() {
                next[j + 1] = next[j + 1].add(b);
                next[j] = next[j].sub(&b.mul(&xk));
            }
            basis = next;
        }
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    coeffs
}

/// Evaluates an ascending-coefficient polynomial.
pub fn eval_poly<C: Coeff>(coeffs: &[C], x: &C) -> C {
    let mut acc = C::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::Rat;

    fn r(v: i64) -> Rat {
        Coeff::from_i64(v)
    }

    #[test]
    fn fits_quadratic() {
        // y = x^2 - 3x + 2 through x = 0, 1, 2
        let pts = vec![(r(0), r(2)), (r(1), r(0)), (r(2), r(0))];
        let c = interpolate(&pts);
        assert_eq!(c, vec![r(2), r(-3), r(1)]);
        assert_eq!(eval_poly(&c, &r(5)), r(12));
    }

    #[test]
    fn constant_collapses() {
        let pts = vec![(r(0), r(7)), (r(1), r(7)), (r(4), r(7))];
        assert_eq!(interpolate(&pts), vec![r(7)]);
    }
}
