//! Exact O(1) loop-model computations: the Temperley-Lieb Hamiltonian
//! fixed-point vector (the scalable oracle for the refined counts) and the
//! explicit plaquette transition matrix for small sizes.

pub mod modsolve;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::fpl::{self, Source};
use crate::matchings::{all_matchings, NoncrossingMatching};
use modsolve::IntSparseMat;
use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::OnceLock;

/// The two candidate matrix conventions for the Hamiltonian eigenproblem.
/// A set map is not invertible, so "the operators act as permutations" leaves
/// the orientation of the matrix open; it is resolved by calibration against
/// the brute-force counts, never assumed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// entry (pi, sigma) = #{ j : e_j(pi) = sigma }
    Precompose,
    /// entry (pi, sigma) = #{ j : e_j(sigma) = pi }
    Transpose,
}

/// A sparse matrix over the rationals indexed by the canonical matching order.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseOperator {
    pub n: usize,
    pub dim: usize,
    pub entries: BTreeMap<(usize, usize), BigRational>,
}

impl SparseOperator {
    pub fn apply(&self, v: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.dim];
        for (&(r, c), a) in &self.entries {
            out[r] += a * &v[c];
        }
        out
    }

    pub fn column_sums(&self) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.dim];
        for (&(_, c), a) in &self.entries {
            out[c] += a;
        }
        out
    }

    pub fn row_sums(&self) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.dim];
        for (&(r, _), a) in &self.entries {
            out[r] += a;
        }
        out
    }
}

/// Integer entry rows of the Hamiltonian sum of all 2n Temperley-Lieb maps.
fn hamiltonian_rows(n: usize, orientation: Orientation) -> Vec<BTreeMap<u32, i64>> {
    let ms = all_matchings(n);
    let index: BTreeMap<&NoncrossingMatching, usize> =
        ms.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows: Vec<BTreeMap<u32, i64>> = vec![BTreeMap::new(); ms.len()];
    for (i, m) in ms.iter().enumerate() {
        for j in 1..=2 * n {
            let k = index[&m.tl_apply(j)];
            let (r, c) = match orientation {
                Orientation::Precompose => (i, k),
                Orientation::Transpose => (k, i),
            };
            *rows[r].entry(c as u32).or_insert(0) += 1;
        }
    }
    rows
}

/// The Hamiltonian as a rational sparse operator.
pub fn hamiltonian(n: usize, orientation: Orientation, caps: &Caps) -> Result<SparseOperator> {
    if n == 0 || n > caps.hamiltonian_n_max.max(12) {
        return Err(Error::Capacity {
            what: "hamiltonian",
            requested: n,
            cap: caps.hamiltonian_n_max,
        });
    }
    let rows = hamiltonian_rows(n, orientation);
    let dim = rows.len();
    let mut entries = BTreeMap::new();
    for (r, row) in rows.into_iter().enumerate() {
        for (c, v) in row {
            entries.insert((r, c as usize), BigRational::from_integer(v.into()));
        }
    }
    Ok(SparseOperator { n, dim, entries })
}

fn eigen_matrix(n: usize, orientation: Orientation) -> IntSparseMat {
    let mut rows = hamiltonian_rows(n, orientation);
    for (i, row) in rows.iter_mut().enumerate() {
        *row.entry(i as u32).or_insert(0) -= 2 * n as i64;
    }
    IntSparseMat {
        dim: rows.len(),
        rows: rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .filter(|&(_, v)| v != 0)
                    .collect::<Vec<(u32, i64)>>()
            })
            .collect(),
    }
}

/// A stationary vector of one of the loop-model operators.
#[derive(Clone, Debug, PartialEq)]
pub struct StationaryVector {
    pub n: usize,
    pub source: Source,
    pub orientation: Option<Orientation>,
    /// Matching -> value, canonical order.
    pub values: BTreeMap<NoncrossingMatching, BigRational>,
}

impl StationaryVector {
    pub fn sum(&self) -> BigRational {
        let mut s = BigRational::zero();
        for v in self.values.values() {
            s += v;
        }
        s
    }

    /// The values as nonnegative integers (valid for the unit-nested
    /// normalisation of the Hamiltonian vector).
    pub fn integer_values(&self) -> Result<BTreeMap<NoncrossingMatching, BigUint>> {
        let mut out = BTreeMap::new();
        for (k, v) in &self.values {
            if !v.is_integer() || v.is_negative() {
                return Err(Error::Falsified {
                    context: "integer stationary vector".into(),
                    detail: format!("component {k} = {v} is not a nonnegative integer"),
                });
            }
            out.insert(k.clone(), v.to_integer().to_biguint().unwrap());
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct StationaryDto {
    n: usize,
    source: Source,
    #[serde(skip_serializing_if = "Option::is_none")]
    orientation: Option<Orientation>,
    values: Vec<StationaryEntryDto>,
}

#[derive(Serialize, Deserialize)]
struct StationaryEntryDto {
    pattern: String,
    value: String,
}

fn rational_to_string(v: &BigRational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

pub(crate) fn rational_from_string(s: &str) -> Result<BigRational> {
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim().parse().map_err(|_| Error::Parse {
            pos: 1,
            msg: format!("bad integer '{t}'"),
        })
    };
    match s.split_once('/') {
        Some((a, b)) => {
            let den = parse_int(b)?;
            if den.is_zero() {
                return Err(Error::Parse {
                    pos: 1,
                    msg: "zero denominator".into(),
                });
            }
            Ok(BigRational::new(parse_int(a)?, den))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

impl Serialize for StationaryVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let dto = StationaryDto {
            n: self.n,
            source: self.source,
            orientation: self.orientation,
            values: self
                .values
                .iter()
                .map(|(p, v)| StationaryEntryDto {
                    pattern: p.word(),
                    value: rational_to_string(v),
                })
                .collect(),
        };
        dto.serialize(s)
    }
}

impl<'de> Deserialize<'de> for StationaryVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let dto = StationaryDto::deserialize(d)?;
        let mut values = BTreeMap::new();
        for e in dto.values {
            let p = NoncrossingMatching::parse(&e.pattern).map_err(D::Error::custom)?;
            values.insert(p, rational_from_string(&e.value).map_err(D::Error::custom)?);
        }
        Ok(StationaryVector {
            n: dto.n,
            source: dto.source,
            orientation: dto.orientation,
            values,
        })
    }
}

/// Decides the matrix orientation by matching the n = 3 eigenvector against
/// the brute-force counts. Exactly one candidate must match.
pub fn calibrate_orientation_uncached() -> Result<Orientation> {
    let caps = Caps::default();
    let counts = fpl::count_by_pattern(3, &caps)?;
    let ms = all_matchings(3);
    let mut matching_orientations = Vec::new();
    for orientation in [Orientation::Precompose, Orientation::Transpose] {
        let vec = match eigenvector_for(3, orientation) {
            Ok(v) => v,
            Err(_) => continue,
        };
        let matches = ms.iter().enumerate().all(|(i, m)| {
            let a = BigRational::from_integer(BigInt::from(
                counts.counts.get(m).cloned().unwrap_or_default(),
            ));
            vec[i] == a
        });
        if matches {
            matching_orientations.push(orientation);
        }
    }
    match matching_orientations.as_slice() {
        [o] => Ok(*o),
        [] => Err(Error::UnresolvedConvention(
            "neither Hamiltonian orientation reproduces the n = 3 counts".into(),
        )),
        _ => Err(Error::UnresolvedConvention(
            "both Hamiltonian orientations reproduce the n = 3 counts".into(),
        )),
    }
}

/// Calibrated orientation, computed once per process.
pub fn calibrate_orientation() -> Result<Orientation> {
    static CAL: OnceLock<Orientation> = OnceLock::new();
    if let Some(&o) = CAL.get() {
        return Ok(o);
    }
    let o = calibrate_orientation_uncached()?;
    Ok(*CAL.get_or_init(|| o))
}

/// Kernel of (H - 2n Id) normalised so the nested component is 1.
fn eigenvector_for(n: usize, orientation: Orientation) -> Result<Vec<BigRational>> {
    let ms = all_matchings(n);
    let nested_idx = ms
        .iter()
        .position(|m| *m == NoncrossingMatching::nested(n))
        .expect("nested matching present");
    let mat = eigen_matrix(n, orientation);
    let v = modsolve::solve_kernel(&mat, nested_idx)?;
    // exact residual: H v = 2n v, i.e. (H - 2n Id) v = 0, over the rationals
    let mut denlcm = BigInt::one();
    for r in &v {
        denlcm = num::Integer::lcm(&denlcm, r.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|r| r.numer() * (&denlcm / r.denom())).collect();
    if !mat.apply_big(&ints).iter().all(|x| x.is_zero()) {
        return Err(Error::Falsified {
            context: "hamiltonian eigenvector".into(),
            detail: "exact residual nonzero".into(),
        });
    }
    Ok(v)
}

/// The stationary vector of the Hamiltonian in the calibrated orientation,
/// normalised to the integer refined counts (nested component 1).
pub fn stationary_hamiltonian(n: usize, caps: &Caps) -> Result<StationaryVector> {
    if n == 0 || n > caps.hamiltonian_n_max {
        return Err(Error::Capacity {
            what: "hamiltonian stationary vector",
            requested: n,
            cap: caps.hamiltonian_n_max,
        });
    }
    let orientation = calibrate_orientation()?;
    let v = eigenvector_for(n, orientation)?;
    let ms = all_matchings(n);
    let values: BTreeMap<NoncrossingMatching, BigRational> =
        ms.into_iter().zip(v).collect();
    let sv = StationaryVector {
        n,
        source: Source::Hamiltonian,
        orientation: Some(orientation),
        values,
    };
    sv.integer_values()?; // all components must be nonnegative integers
    Ok(sv)
}

/// One row of plaquettes on the cylinder: given the tile choice per column
/// (bit i set = first tile type in column i+1), rewires the matching.
fn plaquette_row(m: &NoncrossingMatching, tiles: u32) -> NoncrossingMatching {
    let n2 = m.points();
    // union-find over: top points 0..n2, bottom points n2..2*n2,
    // vertical edges 2*n2..3*n2 (edge i sits between columns i and i+1)
    let total = 3 * n2;
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
        let ra = find(parent, a);
        let rb = find(parent, b);
        if ra != rb {
            parent[ra] = rb;
        }
    };
    for i in 0..n2 {
        let top = i;
        let bottom = n2 + i;
        let left = 2 * n2 + (i + n2 - 1) % n2;
        let right = 2 * n2 + i;
        if tiles >> i & 1 == 1 {
            // first tile: arcs (top, right) and (bottom, left)
            union(&mut parent, top, right);
            union(&mut parent, bottom, left);
        } else {
            // second tile: arcs (top, left) and (bottom, right)
            union(&mut parent, top, left);
            union(&mut parent, bottom, right);
        }
    }
    for (a, b) in m.pairs() {
        union(&mut parent, a - 1, b - 1);
    }
    // bottom points pair up within components
    let mut partner = vec![0usize; n2];
    let mut rep: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 0..n2 {
        let r = find(&mut parent, n2 + i);
        match rep.remove(&r) {
            None => {
                rep.insert(r, i);
            }
            Some(j) => {
                partner[i] = j + 1;
                partner[j] = i + 1;
            }
        }
    }
    debug_assert!(rep.is_empty(), "odd component in plaquette row");
    NoncrossingMatching::from_partner(&partner).expect("plaquette row yields a valid matching")
}

/// The homogeneous plaquette transition matrix: entry (pi, sigma) is the
/// probability that one cylinder row maps sigma to pi; columns sum to 1.
pub fn transition_matrix(n: usize, p: &BigRational, caps: &Caps) -> Result<SparseOperator> {
    if n == 0 || n > caps.markov_n_max {
        return Err(Error::Capacity {
            what: "transition matrix",
            requested: n,
            cap: caps.markov_n_max,
        });
    }
    if p <= &BigRational::zero() || p >= &BigRational::one() {
        return Err(Error::Parse {
            pos: 1,
            msg: format!("probability {p} outside (0,1)"),
        });
    }
    let ms = all_matchings(n);
    let index: BTreeMap<&NoncrossingMatching, usize> =
        ms.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let dim = ms.len();
    let n2 = 2 * n;
    let q1 = BigRational::one() - p;
    // powers of p and (1-p)
    let mut pw = vec![BigRational::one()];
    let mut qw = vec![BigRational::one()];
    for k in 1..=n2 {
        pw.push(&pw[k - 1] * p);
        qw.push(&qw[k - 1] * &q1);
    }
    let mut entries: BTreeMap<(usize, usize), BigRational> = BTreeMap::new();
    for (col, m) in ms.iter().enumerate() {
        for tiles in 0u32..(1 << n2) {
            let target = plaquette_row(m, tiles);
            let ones = tiles.count_ones() as usize;
            let w = &pw[ones] * &qw[n2 - ones];
            let row = index[&target];
            *entries
                .entry((row, col))
                .or_insert_with(BigRational::zero) += w;
        }
    }
    Ok(SparseOperator { n, dim, entries })
}

/// Exact stationary distribution of the plaquette Markov chain, normalised to
/// total mass 1. Independent of p.
pub fn stationary_markov(n: usize, p: &BigRational, caps: &Caps) -> Result<StationaryVector> {
    use crate::exactalg::{nullspace, Rat};
    let t = transition_matrix(n, p, caps)?;
    let dim = t.dim;
    // rows of (T - Id)
    let mut a = vec![vec![Rat(BigRational::zero()); dim]; dim];
    for (&(r, c), v) in &t.entries {
        a[r][c] = Rat(v.clone());
    }
    for i in 0..dim {
        a[i][i] = Rat(&a[i][i].0 - BigRational::one());
    }
    let kernel = nullspace(a);
    if kernel.len() != 1 {
        return Err(Error::KernelDimension {
            expected: 1,
            found: kernel.len(),
        });
    }
    let raw: Vec<BigRational> = kernel.into_iter().next().unwrap().into_iter().map(|x| x.0).collect();
    let mut total = BigRational::zero();
    for v in &raw {
        total += v;
    }
    if total.is_zero() {
        return Err(Error::Singular("kernel vector sums to zero".into()));
    }
    let scaled: Vec<BigRational> = raw.iter().map(|v| v / &total).collect();
    // exact residual T v = v and positivity
    let back = t.apply(&scaled);
    if back != scaled {
        return Err(Error::Falsified {
            context: "markov stationary vector".into(),
            detail: "exact residual nonzero".into(),
        });
    }
    if scaled.iter().any(|v| !v.is_positive()) {
        return Err(Error::Falsified {
            context: "markov stationary vector".into(),
            detail: "nonpositive component".into(),
        });
    }
    let ms = all_matchings(n);
    Ok(StationaryVector {
        n,
        source: Source::Markov,
        orientation: None,
        values: ms.into_iter().zip(scaled).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn hamiltonian_n1_is_two() {
        // both operators fix the single matching: matrix [2]
        let h = hamiltonian(1, Orientation::Precompose, &caps()).unwrap();
        assert_eq!(h.dim, 1);
        assert_eq!(h.entries[&(0, 0)], rat(2, 1));
    }

    #[test]
    fn hamiltonian_row_and_column_sums() {
        let h = hamiltonian(2, Orientation::Precompose, &caps()).unwrap();
        assert!(h.row_sums().iter().all(|s| *s == rat(4, 1)));
        let ht = hamiltonian(2, Orientation::Transpose, &caps()).unwrap();
        assert!(ht.column_sums().iter().all(|s| *s == rat(4, 1)));
        // transpose relation
        for (&(r, c), v) in &h.entries {
            assert_eq!(ht.entries[&(c, r)], *v);
        }
    }

    #[test]
    fn calibration_selects_unique_orientation() {
        let o = calibrate_orientation_uncached().unwrap();
        assert_eq!(o, Orientation::Transpose);
        assert_eq!(calibrate_orientation().unwrap(), o);
        assert_eq!(calibrate_orientation().unwrap(), o); // idempotent
    }

    #[test]
    fn stationary_small_matches_fpl() {
        for n in 1..=4 {
            let sv = stationary_hamiltonian(n, &caps()).unwrap();
            let counts = fpl::count_by_pattern(n, &caps()).unwrap();
            let ints = sv.integer_values().unwrap();
            assert_eq!(ints.len(), counts.counts.len());
            for (m, c) in &counts.counts {
                assert_eq!(&ints[m], c, "n={n} pi={m}");
            }
        }
    }

    #[test]
    fn stationary_capacity() {
        let mut c = caps();
        c.hamiltonian_n_max = 3;
        assert!(matches!(
            stationary_hamiltonian(4, &c),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn tl_matrices_satisfy_relations_at_tau_one() {
        // representation with loop weight tau = -(q + q^{-1}) = 1 at q = omega:
        // the 0/1 matrices E_j (precompose orientation) obey the relations
        let n = 3;
        let ms = all_matchings(n);
        let index: BTreeMap<&NoncrossingMatching, usize> =
            ms.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let dim = ms.len();
        let build = |j: usize| -> Vec<Vec<u8>> {
            let mut e = vec![vec![0u8; dim]; dim];
            for (i, m) in ms.iter().enumerate() {
                e[i][index[&m.tl_apply(j)]] = 1;
            }
            e
        };
        let matmul = |a: &Vec<Vec<u8>>, b: &Vec<Vec<u8>>| -> Vec<Vec<u8>> {
            let mut c = vec![vec![0u8; dim]; dim];
            for i in 0..dim {
                for k in 0..dim {
                    if a[i][k] != 0 {
                        for j in 0..dim {
                            c[i][j] += a[i][k] * b[k][j];
                        }
                    }
                }
            }
            c
        };
        for i in 1..=2 * n {
            let ei = build(i);
            assert_eq!(matmul(&ei, &ei), ei, "E_i^2 = tau E_i at tau = 1");
            let inext = i % (2 * n) + 1;
            let en = build(inext);
            assert_eq!(
                matmul(&matmul(&ei, &en), &ei),
                ei,
                "E_i E_(i+1) E_i = E_i"
            );
            for j in 1..=2 * n {
                let d = (i as i64 - j as i64).rem_euclid(2 * n as i64);
                if d >= 2 && d <= 2 * n as i64 - 2 {
                    let ej = build(j);
                    assert_eq!(matmul(&ei, &ej), matmul(&ej, &ei));
                }
            }
        }
    }

    #[test]
    fn transition_matrix_small() {
        // n = 1: single state, matrix [1]
        let t = transition_matrix(1, &rat(1, 2), &caps()).unwrap();
        assert_eq!(t.dim, 1);
        assert_eq!(t.entries[&(0, 0)], rat(1, 1));
        // n = 2, p = 1/2: columns sum to 1, denominators divide 16
        let t = transition_matrix(2, &rat(1, 2), &caps()).unwrap();
        for s in t.column_sums() {
            assert_eq!(s, rat(1, 1));
        }
        for v in t.entries.values() {
            assert!(
                (BigInt::from(16) % v.denom()).is_zero(),
                "denominator {} does not divide 16",
                v.denom()
            );
        }
        assert!(transition_matrix(6, &rat(1, 2), &caps()).is_err());
        assert!(transition_matrix(2, &rat(3, 2), &caps()).is_err());
    }

    #[test]
    fn markov_stationary_is_p_independent_and_matches_counts() {
        for n in 1..=3 {
            let svs: Vec<_> = [rat(1, 3), rat(1, 2), rat(2, 3)]
                .iter()
                .map(|p| stationary_markov(n, p, &caps()).unwrap())
                .collect();
            assert_eq!(svs[0], svs[1]);
            assert_eq!(svs[1], svs[2]);
            // equals counts / ASM(n)
            let counts = fpl::count_by_pattern(n, &caps()).unwrap();
            let asm = BigRational::from_integer(BigInt::from(fpl::asm_count(n)));
            for (m, c) in &counts.counts {
                let expect = BigRational::from_integer(BigInt::from(c.clone())) / &asm;
                assert_eq!(svs[0].values[m], expect, "n={n} pi={m}");
            }
        }
    }

    #[test]
    fn stationary_serde_round_trip() {
        let sv = stationary_hamiltonian(3, &caps()).unwrap();
        let js = serde_json::to_string(&sv).unwrap();
        let back: StationaryVector = serde_json::from_str(&js).unwrap();
        assert_eq!(back, sv);
        assert!(js.contains("\"source\":\"hamiltonian\""));
    }
}
