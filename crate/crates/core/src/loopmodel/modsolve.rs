//! Exact one-dimensional kernels of sparse integer matrices: per-prime sparse
//! elimination with a Markowitz-style pivot heuristic, Chinese remaindering
//! across word-size primes, rational reconstruction, and an exact residual
//! check over the integers.

use num::bigint::{BigInt, Sign};
use num::rational::BigRational;
use num::traits::{One, Zero};
use num::Integer;
use rayon::prelude::*;
use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Sparse integer matrix; each row holds (column, value) sorted by column.
#[derive(Clone, Debug)]
pub struct IntSparseMat {
    pub dim: usize,
    pub rows: Vec<Vec<(u32, i64)>>,
}

impl IntSparseMat {
    /// Sparse matrix-vector product over the integers.
    pub fn apply_big(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.rows
            .iter()
            .map(|row| {
                let mut acc = BigInt::zero();
                for &(c, a) in row {
                    acc += BigInt::from(a) * &v[c as usize];
                }
                acc
            })
            .collect()
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'w: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'w;
            }
        }
        return false;
    }
    true
}

/// The first `count` primes at or above 2^62.
pub fn solver_primes(count: usize) -> Vec<u64> {
    let mut primes = Vec::with_capacity(count);
    let mut cand = (1u64 << 62) + 1;
    while primes.len() < count {
        if is_prime_u64(cand) {
            primes.push(cand);
        }
        cand += 2;
    }
    primes
}

struct ModKernel {
    nullity: usize,
    /// Kernel vector normalised so that component `unit` equals 1; `None`
    /// when the nullity is not 1 or the unit component vanishes mod p.
    vec: Option<Vec<u64>>,
}

/// Sparse Gaussian elimination of `mat` mod p. Pivots are chosen in the
/// column with fewest active entries, then the row with fewest entries.
fn kernel_mod_p(mat: &IntSparseMat, p: u64, unit: usize) -> ModKernel {
    let dim = mat.dim;
    let mut rows: Vec<Vec<(u32, u64)>> = mat
        .rows
        .iter()
        .map(|r| {
            r.iter()
                .filter_map(|&(c, a)| {
                    let v = a.rem_euclid(p as i64) as u64;
                    (v != 0).then_some((c, v))
                })
                .collect()
        })
        .collect();
    let mut active: Vec<bool> = rows.iter().map(|r| !r.is_empty()).collect();
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); dim];
    let mut col_count: Vec<u32> = vec![0; dim];
    for (i, row) in rows.iter().enumerate() {
        if active[i] {
            for &(c, _) in row {
                col_rows[c as usize].push(i as u32);
                col_count[c as usize] += 1;
            }
        }
    }
    let mut queue: BTreeSet<(u32, u32)> = (0..dim as u32)
        .filter(|&c| col_count[c as usize] > 0)
        .map(|c| (col_count[c as usize], c))
        .collect();
    let mut pivot_seq: Vec<(u32, usize)> = Vec::new(); // (col, row id)
    let mut pivoted_col = vec![false; dim];

    while let Some(&(_, c)) = queue.iter().next() {
        let c_us = c as usize;
        queue.remove(&(col_count[c_us], c));
        // rows truly containing column c
        col_rows[c_us].retain(|&r| {
            active[r as usize] && rows[r as usize].binary_search_by_key(&c, |e| e.0).is_ok()
        });
        col_rows[c_us].dedup();
        if col_rows[c_us].is_empty() {
            col_count[c_us] = 0;
            continue;
        }
        let &prow = col_rows[c_us]
            .iter()
            .min_by_key(|&&r| rows[r as usize].len())
            .unwrap();
        let prow_us = prow as usize;
        // normalise the pivot row
        let pval = rows[prow_us]
            .iter()
            .find(|e| e.0 == c)
            .map(|e| e.1)
            .unwrap();
        let pinv = inv_mod(pval, p);
        for e in rows[prow_us].iter_mut() {
            e.1 = mul_mod(e.1, pinv, p);
        }
        // eliminate c from every other active row containing it
        let targets: Vec<u32> = col_rows[c_us].iter().copied().filter(|&r| r != prow).collect();
        let pivot_row = std::mem::take(&mut rows[prow_us]);
        for r in targets {
            let r_us = r as usize;
            let f = rows[r_us]
                .iter()
                .find(|e| e.0 == c)
                .map(|e| e.1)
                .unwrap();
            let mut merged: Vec<(u32, u64)> =
                Vec::with_capacity(rows[r_us].len() + pivot_row.len());
            let (mut i, mut j) = (0, 0);
            let old = std::mem::take(&mut rows[r_us]);
            while i < old.len() || j < pivot_row.len() {
                let take_old = j >= pivot_row.len()
                    || (i < old.len() && old[i].0 < pivot_row[j].0);
                let take_both =
                    i < old.len() && j < pivot_row.len() && old[i].0 == pivot_row[j].0;
                if take_both {
                    let v = (old[i].1 + p - mul_mod(f, pivot_row[j].1, p)) % p;
                    if v != 0 {
                        merged.push((old[i].0, v));
                    } else {
                        // entry vanished
                        let cc = old[i].0 as usize;
                        if !pivoted_col[cc] && cc != c_us {
                            queue.remove(&(col_count[cc], old[i].0));
                            col_count[cc] -= 1;
                            if col_count[cc] > 0 {
                                queue.insert((col_count[cc], old[i].0));
                            }
                        }
                    }
                    i += 1;
                    j += 1;
                } else if take_old {
                    merged.push(old[i]);
                    i += 1;
                } else {
                    let v = (p - mul_mod(f, pivot_row[j].1, p)) % p;
                    if v != 0 {
                        merged.push((pivot_row[j].0, v));
                        // fill-in
                        let cc = pivot_row[j].0 as usize;
                        if !pivoted_col[cc] && cc != c_us {
                            queue.remove(&(col_count[cc], pivot_row[j].0));
                            col_count[cc] += 1;
                            queue.insert((col_count[cc], pivot_row[j].0));
                            col_rows[cc].push(r);
                        }
                    }
                    j += 1;
                }
            }
            rows[r_us] = merged;
            if rows[r_us].is_empty() {
                active[r_us] = false;
            }
        }
        rows[prow_us] = pivot_row;
        // retire the pivot row: decrement counts of its other columns
        for &(cc, _) in &rows[prow_us] {
            let cc_us = cc as usize;
            if cc_us != c_us && !pivoted_col[cc_us] {
                queue.remove(&(col_count[cc_us], cc));
                col_count[cc_us] = col_count[cc_us].saturating_sub(1);
                if col_count[cc_us] > 0 {
                    queue.insert((col_count[cc_us], cc));
                }
            }
        }
        active[prow_us] = false;
        pivoted_col[c_us] = true;
        col_count[c_us] = 0;
        col_rows[c_us].clear();
        pivot_seq.push((c, prow_us));
    }

    let nullity = dim - pivot_seq.len();
    if nullity != 1 {
        return ModKernel { nullity, vec: None };
    }
    let free = (0..dim).find(|&c| !pivoted_col[c]).unwrap();
    let mut x = vec![0u64; dim];
    x[free] = 1;
    for &(c, row) in pivot_seq.iter().rev() {
        let mut acc = 0u64;
        for &(cc, v) in &rows[row] {
            if cc != c {
                acc = (acc + mul_mod(v, x[cc as usize], p)) % p;
            }
        }
        x[c as usize] = (p - acc) % p;
    }
    if x[unit] == 0 {
        return ModKernel { nullity, vec: None };
    }
    let s = inv_mod(x[unit], p);
    for v in x.iter_mut() {
        *v = mul_mod(*v, s, p);
    }
    ModKernel {
        nullity,
        vec: Some(x),
    }
}

fn rational_reconstruct(r: &BigInt, m: &BigInt) -> Option<BigRational> {
    // half-extended Euclid: find num/den = r mod m with |num|, den <= sqrt(m/2)
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), r.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() {
        return None;
    }
    if t1.sign() == Sign::Minus {
        r1 = -r1;
        t1 = -t1;
    }
    if t1 > bound || r1.gcd(&t1) != BigInt::one() {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

/// The exact kernel vector of `mat` (expected nullity 1), normalised so that
/// component `unit` equals 1, verified by an exact integer residual.
pub fn solve_kernel(mat: &IntSparseMat, unit: usize) -> Result<Vec<BigRational>> {
    const MAX_PRIMES: usize = 12;
    let primes = solver_primes(MAX_PRIMES);
    let mut used: Vec<u64> = Vec::new();
    let mut residues: Vec<Vec<u64>> = Vec::new();
    let mut batch = crate::config::DEFAULT_PRIME_COUNT.max(1);
    let mut next = 0;
    loop {
        if next >= primes.len() {
            return Err(Error::Reconstruction(format!(
                "no convergence after {MAX_PRIMES} primes"
            )));
        }
        let take: Vec<u64> = primes[next..(next + batch).min(primes.len())].to_vec();
        next += take.len();
        batch = 2;
        let kernels: Vec<(u64, ModKernel)> = take
            .par_iter()
            .map(|&p| (p, kernel_mod_p(mat, p, unit)))
            .collect();
        for (p, k) in kernels {
            match k.vec {
                Some(v) => {
                    used.push(p);
                    residues.push(v);
                }
                None if k.nullity != 1 => {
                    // A wrong nullity mod p can only be an unlucky prime if
                    // the true nullity is smaller; nullity 1 is expected, so
                    // surface anything else after a couple of confirmations.
                    if k.nullity == 0 || used.len() + 2 < next {
                        return Err(Error::KernelDimension {
                            expected: 1,
                            found: k.nullity,
                        });
                    }
                }
                None => {} // unit component vanished mod p; skip the prime
            }
        }
        if used.is_empty() {
            continue;
        }
        // CRT across the used primes
        let dim = mat.dim;
        let mut modulus = BigInt::one();
        for &p in &used {
            modulus *= BigInt::from(p);
        }
        let mut combined = vec![BigInt::zero(); dim];
        for i in 0..dim {
            let mut x = BigInt::zero();
            let mut m_acc = BigInt::one();
            for (k, &p) in used.iter().enumerate() {
                let pb = BigInt::from(p);
                let r = BigInt::from(residues[k][i]);
                if k == 0 {
                    x = r.mod_floor(&pb);
                    m_acc = pb;
                } else {
                    // x' = x + m_acc * ((r - x) / m_acc mod p)
                    let minv = {
                        let m_mod = m_acc.mod_floor(&pb).to_u64_digits().1;
                        let m0 = if m_mod.is_empty() { 0 } else { m_mod[0] };
                        BigInt::from(inv_mod(m0, p))
                    };
                    let diff = (&r - &x).mod_floor(&pb);
                    let t = (diff * minv).mod_floor(&pb);
                    x += &m_acc * t;
                    m_acc *= pb;
                }
            }
            combined[i] = x;
        }
        // rational reconstruction, then exact verification
        let mut vec_rat = Vec::with_capacity(dim);
        let mut ok = true;
        for c in &combined {
            match rational_reconstruct(c, &modulus) {
                Some(r) => vec_rat.push(r),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let mut denlcm = BigInt::one();
        for r in &vec_rat {
            denlcm = denlcm.lcm(r.denom());
        }
        let ints: Vec<BigInt> = vec_rat
            .iter()
            .map(|r| r.numer() * (&denlcm / r.denom()))
            .collect();
        if mat.apply_big(&ints).iter().all(|x| x.is_zero()) {
            return Ok(vec_rat);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_are_prime() {
        let ps = solver_primes(3);
        assert_eq!(ps.len(), 3);
        for p in ps {
            assert!(p > (1 << 62));
            assert!(is_prime_u64(p));
        }
        assert!(is_prime_u64(2));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(3215031751));
    }

    #[test]
    fn reconstructs_small_fractions() {
        let m = BigInt::from(1000003u64) * BigInt::from(1000033u64);
        // r = 22/7 mod m
        let gcd = BigInt::extended_gcd(&BigInt::from(7), &m);
        assert!(gcd.gcd.is_one());
        let inv7 = gcd.x.mod_floor(&m);
        let r = (BigInt::from(22) * inv7).mod_floor(&m);
        let rec = rational_reconstruct(&r, &m).unwrap();
        assert_eq!(rec, BigRational::new(BigInt::from(22), BigInt::from(7)));
    }

    #[test]
    fn kernel_of_small_singular_matrix() {
        // rows of [[1,-1,0],[0,1,-1],[1,0,-1]]: kernel spanned by (1,1,1)
        let mat = IntSparseMat {
            dim: 3,
            rows: vec![
                vec![(0, 1), (1, -1)],
                vec![(1, 1), (2, -1)],
                vec![(0, 1), (2, -1)],
            ],
        };
        let v = solve_kernel(&mat, 0).unwrap();
        assert!(v.iter().all(|x| *x == BigRational::one()));
    }
}
