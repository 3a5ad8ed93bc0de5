//! Dense exact linear algebra over any `Coeff` field. Sizes here are tiny
//! (Catalan-number dimensions for n <= 5), so Gaussian elimination with a
//! cheapest-entry pivot heuristic is enough.

use super::Coeff;
use crate::error::{Error, Result};

fn pick_pivot<C: Coeff>(a: &[Vec<C>], rows_done: usize, col: usize) -> Option<usize> {
    let mut best: Option<(usize, usize)> = None;
    for (r, row) in a.iter().enumerate().skip(rows_done) {
        if !row[col].is_zero() {
            let w = row[col].complexity();
            if best.map_or(true, |(_, bw)| w < bw) {
                best = Some((r, w));
            }
        }
    }
    best.map(|(r, _)| r)
}

/// Solves a square nonsingular system.
pub fn solve_square<C: Coeff>(mut a: Vec<Vec<C>>, mut b: Vec<C>) -> Result<Vec<C>> {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n));
    assert_eq!(b.len(), n);
    for col in 0..n {
        let piv = pick_pivot(&a, col, col)
            .ok_or_else(|| Error::Singular(format!("no pivot in column {col}")))?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].inv().expect("nonzero pivot");
        for j in col..n {
            a[col][j] = a[col][j].mul(&inv);
        }
        b[col] = b[col].mul(&inv);
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in col..n {
                    a[r][j] = a[r][j].sub(&f.mul(&a[col][j]));
                }
                b[r] = b[r].sub(&f.mul(&b[col]));
            }
        }
    }
    Ok(b)
}

/// Row-reduces in place; returns the pivot columns.
fn reduce<C: Coeff>(a: &mut Vec<Vec<C>>, b: Option<&mut Vec<C>>) -> Vec<usize> {
    let rows = a.len();
    if rows == 0 {
        return vec![];
    }
    let cols = a[0].len();
    let mut bopt = b;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = pick_pivot(a, r, c) else {
            continue;
        };
        a.swap(r, pr);
        if let Some(b) = bopt.as_deref_mut() {
            b.swap(r, pr);
        }
        let inv = a[r][c].inv().expect("nonzero pivot");
        for j in 0..cols {
            a[r][j] = a[r][j].mul(&inv);
        }
        if let Some(b) = bopt.as_deref_mut() {
            b[r] = b[r].mul(&inv);
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    a[i][j] = a[i][j].sub(&f.mul(&a[r][j]));
                }
                if let Some(b) = bopt.as_deref_mut() {
                    b[i] = b[i].sub(&f.mul(&b[r]));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// A basis of the right kernel of `a`.
pub fn nullspace<C: Coeff>(mut a: Vec<Vec<C>>) -> Vec<Vec<C>> {
    if a.is_empty() {
        return vec![];
    }
    let cols = a[0].len();
    let pivots = reduce(&mut a, None);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut v = vec![C::zero(); cols];
        v[fc] = C::one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = a[ri][fc].neg();
        }
        basis.push(v);
    }
    basis
}

/// Any exact solution of a (possibly non-square) consistent system, with free
/// variables set to zero; `None` when inconsistent.
pub fn solve_any<C: Coeff>(a: &[Vec<C>], b: &[C]) -> Option<Vec<C>> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    if a.is_empty() {
        return b.iter().all(|x| x.is_zero()).then_some(vec![]);
    }
    let cols = a[0].len();
    let pivots = reduce(&mut a, Some(&mut b));
    // consistency: zero rows must have zero rhs
    for (i, row) in a.iter().enumerate() {
        if row.iter().all(|x| x.is_zero()) && !b[i].is_zero() {
            return None;
        }
    }
    let mut x = vec![C::zero(); cols];
    for (ri, &pc) in pivots.iter().enumerate() {
        x[pc] = b[ri].clone();
    }
    Some(x)
}

/// Exact determinant by fraction-full elimination.
pub fn determinant<C: Coeff>(mut a: Vec<Vec<C>>) -> C {
    let n = a.len();
    let mut det = C::one();
    for col in 0..n {
        let Some(piv) = pick_pivot(&a, col, col) else {
            return C::zero();
        };
        if piv != col {
            a.swap(col, piv);
            det = det.neg();
        }
        det = det.mul(&a[col][col]);
        let inv = a[col][col].inv().unwrap();
        for r in col + 1..n {
            if !a[r][col].is_zero() {
                let f = a[r][col].mul(&inv);
                for j in col..n {
                    a[r][j] = a[r][j].sub(&f.mul(&a[col][j]));
                }
            }
        }
    }
    det
}

pub fn is_nonsingular<C: Coeff>(a: Vec<Vec<C>>) -> bool {
    !determinant(a).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::Rat;

    fn r(v: i64) -> Rat {
        Coeff::from_i64(v)
    }

    #[test]
    fn square_solve() {
        let a = vec![vec![r(2), r(1)], vec![r(1), r(3)]];
        let b = vec![r(5), r(10)];
        let x = solve_square(a, b).unwrap();
        assert_eq!(x, vec![r(1), r(3)]);
    }

    #[test]
    fn singular_detected() {
        let a = vec![vec![r(1), r(2)], vec![r(2), r(4)]];
        assert!(solve_square(a.clone(), vec![r(1), r(1)]).is_err());
        assert!(!is_nonsingular(a));
    }

    #[test]
    fn kernel_of_rank_deficient() {
        let a = vec![vec![r(1), r(2), r(3)], vec![r(2), r(4), r(6)]];
        let ker = nullspace(a.clone());
        assert_eq!(ker.len(), 2);
        for v in ker {
            for row in &a {
                let dot = row
                    .iter()
                    .zip(&v)
                    .fold(r(0), |acc, (x, y)| acc.add(&x.mul(y)));
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn consistent_and_inconsistent() {
        let a = vec![vec![r(1), r(1)], vec![r(2), r(2)]];
        assert!(solve_any(&a, &[r(3), r(6)]).is_some());
        assert!(solve_any(&a, &[r(3), r(7)]).is_none());
    }
}
