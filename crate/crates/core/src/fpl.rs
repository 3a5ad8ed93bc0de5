//! Brute-force enumeration of fully packed loop configurations on the n x n
//! grid and extraction of their link patterns; the ground-truth oracle for
//! the refined counts A_pi at small n.
//!
//! Boundary convention: the 4n external half-edges are walked
//! counter-clockwise (left side top to bottom, then bottom, right bottom to
//! top, top right to left); every other one is present, beginning with the
//! topmost on the left side, and the 2n present ones are numbered 1..2n in
//! that walk order.

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::matchings::NoncrossingMatching;
use num::bigint::BigUint;
use num::traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Which oracle produced a count table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Fpl,
    Hamiltonian,
    Markov,
}

/// One fully packed loop configuration: presence flags for the horizontal
/// edges (r,c)-(r,c+1) and vertical edges (r,c)-(r+1,c) of the n x n grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FplConfig {
    pub n: usize,
    h: Vec<bool>,
    v: Vec<bool>,
}

impl FplConfig {
    fn h(&self, r: usize, c: usize) -> bool {
        c + 1 < self.n && self.h[r * self.n + c]
    }

    fn v(&self, r: usize, c: usize) -> bool {
        r + 1 < self.n && self.v[r * self.n + c]
    }

    /// Degree of each vertex counting present external edges; a valid FPL has
    /// all degrees exactly 2.
    pub fn revalidate(&self) -> bool {
        let n = self.n;
        let stubs = stub_counts(n);
        for r in 0..n {
            for c in 0..n {
                let mut d = stubs[r * n + c];
                if self.h(r, c) {
                    d += 1;
                }
                if c > 0 && self.h(r, c - 1) {
                    d += 1;
                }
                if self.v(r, c) {
                    d += 1;
                }
                if r > 0 && self.v(r - 1, c) {
                    d += 1;
                }
                if d != 2 {
                    return false;
                }
            }
        }
        true
    }
}

/// The present boundary stubs in counter-clockwise numbering order, as
/// (vertex row, vertex col).
fn numbered_stubs(n: usize) -> Vec<(usize, usize)> {
    let mut walk = Vec::with_capacity(4 * n);
    for r in 0..n {
        walk.push((r, 0));
    }
    for c in 0..n {
        walk.push((n - 1, c));
    }
    for r in (0..n).rev() {
        walk.push((r, n - 1));
    }
    for c in (0..n).rev() {
        walk.push((0, c));
    }
    walk.into_iter().step_by(2).collect()
}

fn stub_counts(n: usize) -> Vec<u8> {
    let mut counts = vec![0u8; n * n];
    for (r, c) in numbered_stubs(n) {
        counts[r * n + c] += 1;
    }
    counts
}

struct Search<'a, F: FnMut(&FplConfig)> {
    n: usize,
    stubs: &'a [u8],
    h: Vec<bool>,
    v: Vec<bool>,
    visit: F,
}

impl<F: FnMut(&FplConfig)> Search<'_, F> {
    fn deg_known(&self, r: usize, c: usize) -> u8 {
        let n = self.n;
        let mut d = self.stubs[r * n + c];
        if c > 0 && self.h[r * n + c - 1] {
            d += 1;
        }
        if r > 0 && self.v[(r - 1) * n + c] {
            d += 1;
        }
        d
    }

    /// Row-major scan; at each vertex choose its right and down edges so the
    /// final degree is exactly 2, pruning inconsistent branches.
    fn rec(&mut self, idx: usize) {
        let n = self.n;
        if idx == n * n {
            let cfg = FplConfig {
                n,
                h: self.h.clone(),
                v: self.v.clone(),
            };
            (self.visit)(&cfg);
            return;
        }
        let (r, c) = (idx / n, idx % n);
        let base = self.deg_known(r, c);
        let right_free = c + 1 < n;
        let down_free = r + 1 < n;
        for right in 0..=u8::from(right_free) {
            for down in 0..=u8::from(down_free) {
                if base + right + down == 2 {
                    self.h[idx] = right == 1;
                    self.v[idx] = down == 1;
                    self.rec(idx + 1);
                    self.h[idx] = false;
                    self.v[idx] = false;
                }
            }
        }
    }
}

/// Calls `visit` once for every FPL of size n, sequentially.
pub fn for_each_fpl<F: FnMut(&FplConfig)>(n: usize, visit: F) {
    assert!(n >= 1);
    let stubs = stub_counts(n);
    let mut s = Search {
        n,
        stubs: &stubs,
        h: vec![false; n * n],
        v: vec![false; n * n],
        visit,
    };
    s.rec(0);
}

/// All FPLs of size n, each exactly once.
pub fn enumerate_fpl(n: usize, caps: &Caps) -> Result<Vec<FplConfig>> {
    check_cap(n, caps)?;
    let mut out = Vec::new();
    for_each_fpl(n, |cfg| out.push(cfg.clone()));
    Ok(out)
}

fn check_cap(n: usize, caps: &Caps) -> Result<()> {
    if n == 0 || n > caps.fpl_n_max {
        return Err(Error::Capacity {
            what: "fpl enumeration",
            requested: n,
            cap: caps.fpl_n_max,
        });
    }
    Ok(())
}

/// The link pattern of a valid FPL: i and j are matched iff a path of the
/// configuration connects external edges i and j.
pub fn link_pattern(cfg: &FplConfig) -> Result<NoncrossingMatching> {
    let n = cfg.n;
    let numbered = numbered_stubs(n);
    let mut stubs_at: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, &vc) in numbered.iter().enumerate() {
        stubs_at.entry(vc).or_default().push(i + 1);
    }
    let neighbors = |r: usize, c: usize| {
        let mut nb = Vec::with_capacity(4);
        if cfg.h(r, c) {
            nb.push((r, c + 1));
        }
        if c > 0 && cfg.h(r, c - 1) {
            nb.push((r, c - 1));
        }
        if cfg.v(r, c) {
            nb.push((r + 1, c));
        }
        if r > 0 && cfg.v(r - 1, c) {
            nb.push((r - 1, c));
        }
        nb
    };
    let mut partner = vec![0usize; 2 * n];
    for (start_idx, &(sr, sc)) in numbered.iter().enumerate() {
        let start = start_idx + 1;
        if partner[start - 1] != 0 {
            continue;
        }
        // walk the degree-2 path from this stub to its far end
        let mut cur = (sr, sc);
        let mut prev: Option<(usize, usize)> = None;
        let mut arrived_by_stub = Some(start);
        let end = loop {
            let stubs_here = stubs_at.get(&cur).map(Vec::as_slice).unwrap_or(&[]);
            let nb = neighbors(cur.0, cur.1);
            if nb.len() + stubs_here.len() != 2 {
                return Err(Error::Falsified {
                    context: "fpl path tracing".into(),
                    detail: format!("vertex {cur:?} has degree {}", nb.len() + stubs_here.len()),
                });
            }
            if let Some(&out) = stubs_here
                .iter()
                .find(|&&s| arrived_by_stub != Some(s))
            {
                break out;
            }
            let next = nb
                .into_iter()
                .find(|&p| Some(p) != prev)
                .ok_or_else(|| Error::Falsified {
                    context: "fpl path tracing".into(),
                    detail: "path ends internally".into(),
                })?;
            prev = Some(cur);
            cur = next;
            arrived_by_stub = None;
        };
        partner[start - 1] = end;
        partner[end - 1] = start;
    }
    NoncrossingMatching::from_partner(&partner)
}

/// Refined FPL counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub n: usize,
    pub source: Source,
    /// Matching -> count, in canonical matching order.
    pub counts: BTreeMap<NoncrossingMatching, BigUint>,
}

impl CountTable {
    pub fn total(&self) -> BigUint {
        let mut sum = BigUint::zero();
        for v in self.counts.values() {
            sum += v;
        }
        sum
    }
}

/// JSON form: {"n":3,"source":"fpl","counts":[{"pattern":"()()()","count":"2"},...]},
/// patterns in canonical order and counts as decimal strings.
#[derive(Serialize, Deserialize)]
struct CountTableDto {
    n: usize,
    source: Source,
    counts: Vec<CountEntryDto>,
}

#[derive(Serialize, Deserialize)]
struct CountEntryDto {
    pattern: String,
    count: String,
}

impl Serialize for CountTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let dto = CountTableDto {
            n: self.n,
            source: self.source,
            counts: self
                .counts
                .iter()
                .map(|(p, c)| CountEntryDto {
                    pattern: p.word(),
                    count: c.to_string(),
                })
                .collect(),
        };
        dto.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CountTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let dto = CountTableDto::deserialize(d)?;
        let mut counts = BTreeMap::new();
        for e in dto.counts {
            let p = NoncrossingMatching::parse(&e.pattern).map_err(D::Error::custom)?;
            let c: BigUint = e.count.parse().map_err(D::Error::custom)?;
            counts.insert(p, c);
        }
        Ok(CountTable {
            n: dto.n,
            source: dto.source,
            counts,
        })
    }
}

/// Exhaustive tally of FPLs by link pattern, parallelised over the branches
/// taken in the first grid row.
pub fn count_by_pattern(n: usize, caps: &Caps) -> Result<CountTable> {
    check_cap(n, caps)?;
    let stubs = stub_counts(n);
    // collect search states after the first row of vertices
    let mut prefixes: Vec<(Vec<bool>, Vec<bool>)> = Vec::new();
    {
        fn collect<F: FnMut(&FplConfig)>(
            s: &mut Search<'_, F>,
            idx: usize,
            upto: usize,
            out: &mut Vec<(Vec<bool>, Vec<bool>)>,
        ) {
            let n = s.n;
            if idx == upto {
                out.push((s.h.clone(), s.v.clone()));
                return;
            }
            let (r, c) = (idx / n, idx % n);
            let base = s.deg_known(r, c);
            let right_free = c + 1 < n;
            let down_free = r + 1 < n;
            for right in 0..=u8::from(right_free) {
                for down in 0..=u8::from(down_free) {
                    if base + right + down == 2 {
                        s.h[idx] = right == 1;
                        s.v[idx] = down == 1;
                        collect(s, idx + 1, upto, out);
                        s.h[idx] = false;
                        s.v[idx] = false;
                    }
                }
            }
        }
        let mut s = Search {
            n,
            stubs: &stubs,
            h: vec![false; n * n],
            v: vec![false; n * n],
            visit: |_: &FplConfig| {},
        };
        collect(&mut s, 0, n.min(n * n), &mut prefixes);
    }
    let counts = prefixes
        .into_par_iter()
        .map(|(h, v)| {
            let mut local: BTreeMap<NoncrossingMatching, BigUint> = BTreeMap::new();
            let mut s = Search {
                n,
                stubs: &stubs,
                h,
                v,
                visit: |cfg: &FplConfig| {
                    debug_assert!(cfg.revalidate());
                    let pat = link_pattern(cfg).expect("enumerator produced a valid FPL");
                    *local.entry(pat).or_default() += BigUint::one();
                },
            };
            s.rec(n.min(n * n));
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    Ok(CountTable {
        n,
        source: Source::Fpl,
        counts,
    })
}

/// The number of FPLs (equivalently alternating sign matrices) of size n,
/// from the product formula prod_{i=0}^{n-1} (3i+1)!/(n+i)!.
pub fn asm_count(n: usize) -> BigUint {
    let factorial = |k: usize| -> BigUint {
        let mut f = BigUint::one();
        for i in 2..=k {
            f *= BigUint::from(i);
        }
        f
    };
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..n {
        num *= factorial(3 * i + 1);
        den *= factorial(n + i);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matchings::all_matchings;

    fn caps() -> Caps {
        Caps::default()
    }

    fn m(w: &str) -> NoncrossingMatching {
        NoncrossingMatching::parse(w).unwrap()
    }

    #[test]
    fn asm_product_formula() {
        let expect = [1u64, 1, 2, 7, 42, 429, 7436, 218348];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(asm_count(n), BigUint::from(e));
        }
    }

    #[test]
    fn enumeration_totals() {
        assert_eq!(enumerate_fpl(1, &caps()).unwrap().len(), 1);
        assert_eq!(enumerate_fpl(3, &caps()).unwrap().len(), 7);
        assert_eq!(enumerate_fpl(5, &caps()).unwrap().len(), 429);
        assert!(matches!(
            enumerate_fpl(9, &caps()),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn single_fpl_link_pattern() {
        let cfgs = enumerate_fpl(1, &caps()).unwrap();
        assert_eq!(link_pattern(&cfgs[0]).unwrap(), m("()"));
    }

    #[test]
    fn counts_n2() {
        let t = count_by_pattern(2, &caps()).unwrap();
        assert_eq!(t.counts[&m("(())")], BigUint::one());
        assert_eq!(t.counts[&m("()()")], BigUint::one());
        assert_eq!(t.total(), BigUint::from(2u32));
    }

    #[test]
    fn counts_n3_golden() {
        // frozen after cross-checking against the Hamiltonian and wheel
        // oracles: the rotation class of the nested matching counts 1 each,
        // the other class 2 each
        let t = count_by_pattern(3, &caps()).unwrap();
        let expect = [
            ("((()))", 1u32),
            ("(()())", 2),
            ("(())()", 1),
            ("()(())", 1),
            ("()()()", 2),
        ];
        assert_eq!(t.counts.len(), 5);
        for (w, c) in expect {
            assert_eq!(t.counts[&m(w)], BigUint::from(c), "{w}");
        }
    }

    #[test]
    fn invariants_up_to_n5() {
        for n in 1..=5 {
            let t = count_by_pattern(n, &caps()).unwrap();
            assert_eq!(t.total(), asm_count(n), "sum = ASM({n})");
            assert_eq!(
                t.counts[&NoncrossingMatching::nested(n)],
                BigUint::one(),
                "nested count"
            );
            for p in all_matchings(n) {
                let c = t.counts.get(&p).cloned().unwrap_or_default();
                let cr = t.counts.get(&p.rotate()).cloned().unwrap_or_default();
                assert_eq!(c, cr, "rotation invariance at n={n}, pi={p}");
            }
        }
    }

    #[test]
    fn all_configs_revalidate() {
        for n in 1..=4 {
            for cfg in enumerate_fpl(n, &caps()).unwrap() {
                assert!(cfg.revalidate());
            }
        }
    }
}
