//! Noncrossing matchings of 2n points, their Young diagrams, the box order,
//! rotation and the Temperley-Lieb set maps `e_j`.
//!
//! Points are 1-indexed in every public interface; the internal `partner`
//! array is 0-indexed.

use crate::error::{Error, Result};
use num::bigint::BigUint;
use num::traits::One;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

/// A perfect noncrossing matching of the points 1..2n.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NoncrossingMatching {
    /// partner[i] is the 0-indexed point matched to point i.
    partner: Vec<usize>,
}

impl PartialOrd for NoncrossingMatching {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: lexicographic on the partner array (sizes compare first).
impl Ord for NoncrossingMatching {
    fn cmp(&self, other: &Self) -> Ordering {
        self.partner
            .len()
            .cmp(&other.partner.len())
            .then_with(|| self.partner.cmp(&other.partner))
    }
}

impl fmt::Display for NoncrossingMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

impl fmt::Debug for NoncrossingMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NoncrossingMatching({})", self.word())
    }
}

impl NoncrossingMatching {
    /// The empty matching (n = 0).
    pub fn empty() -> Self {
        NoncrossingMatching { partner: vec![] }
    }

    /// The fully nested matching `((...))` of size n.
    pub fn nested(n: usize) -> Self {
        let partner = (0..2 * n).map(|i| 2 * n - 1 - i).collect();
        NoncrossingMatching { partner }
    }

    /// Builds from a 1-indexed partner array, validating all invariants.
    pub fn from_partner(partner_1: &[usize]) -> Result<Self> {
        let len = partner_1.len();
        if len % 2 != 0 {
            return Err(Error::Parse {
                pos: len,
                msg: "odd number of points".into(),
            });
        }
        let mut partner = vec![usize::MAX; len];
        for (i, &p) in partner_1.iter().enumerate() {
            if p == 0 || p > len {
                return Err(Error::Parse {
                    pos: i + 1,
                    msg: format!("partner {p} out of range"),
                });
            }
            partner[i] = p - 1;
        }
        let m = NoncrossingMatching { partner };
        m.validate()?;
        Ok(m)
    }

    /// Builds from a list of 1-indexed arches.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        let len = 2 * pairs.len();
        let mut partner = vec![usize::MAX; len];
        for (k, &(a, b)) in pairs.iter().enumerate() {
            if a == 0 || b == 0 || a > len || b > len || a == b {
                return Err(Error::Parse {
                    pos: k + 1,
                    msg: format!("invalid arch {a}-{b}"),
                });
            }
            if partner[a - 1] != usize::MAX || partner[b - 1] != usize::MAX {
                return Err(Error::Parse {
                    pos: k + 1,
                    msg: format!("point reused in arch {a}-{b}"),
                });
            }
            partner[a - 1] = b - 1;
            partner[b - 1] = a - 1;
        }
        let m = NoncrossingMatching { partner };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        let len = self.partner.len();
        for i in 0..len {
            let p = self.partner[i];
            if p >= len || p == i || self.partner[p] != i {
                return Err(Error::Parse {
                    pos: i + 1,
                    msg: "not a fixed-point-free involution".into(),
                });
            }
        }
        // noncrossing: arch endpoints pair like balanced parentheses
        let mut stack = Vec::new();
        for i in 0..len {
            if self.partner[i] > i {
                stack.push(i);
            } else {
                match stack.pop() {
                    Some(top) if top == self.partner[i] => {}
                    _ => {
                        return Err(Error::Parse {
                            pos: i + 1,
                            msg: "crossing arches".into(),
                        })
                    }
                }
            }
        }
        Ok(())
    }

    /// Number of arches n.
    pub fn size(&self) -> usize {
        self.partner.len() / 2
    }

    /// Number of points 2n.
    pub fn points(&self) -> usize {
        self.partner.len()
    }

    /// The partner of point `i` (both 1-indexed).
    pub fn partner(&self, i: usize) -> usize {
        self.partner[i - 1] + 1
    }

    /// True when `i` (1-indexed) is the left endpoint of its arch.
    pub fn is_left_endpoint(&self, i: usize) -> bool {
        self.partner[i - 1] > i - 1
    }

    /// Arches as 1-indexed pairs (left, right), sorted by left endpoint.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len())
            .filter(|&i| self.partner[i] > i)
            .map(|i| (i + 1, self.partner[i] + 1))
            .collect()
    }

    /// The balanced-parenthesis word of the matching.
    pub fn word(&self) -> String {
        (0..self.partner.len())
            .map(|i| if self.partner[i] > i { '(' } else { ')' })
            .collect()
    }

    /// Arch-list form, e.g. `1-4,2-3`.
    pub fn arch_list(&self) -> String {
        self.pairs()
            .iter()
            .map(|(a, b)| format!("{a}-{b}"))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses either a balanced-parenthesis word or an arch list `1-4,2-3`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.is_empty() {
            return Ok(Self::empty());
        }
        if t.contains('-') {
            return Self::parse_arch_list(t);
        }
        let mut stack = Vec::new();
        let mut partner = vec![usize::MAX; t.len()];
        for (i, c) in t.chars().enumerate() {
            match c {
                '(' => stack.push(i),
                ')' => {
                    let j = stack.pop().ok_or(Error::Parse {
                        pos: i + 1,
                        msg: "unmatched ')'".into(),
                    })?;
                    partner[i] = j;
                    partner[j] = i;
                }
                _ => {
                    return Err(Error::Parse {
                        pos: i + 1,
                        msg: format!("unexpected character '{c}'"),
                    })
                }
            }
        }
        if let Some(j) = stack.pop() {
            return Err(Error::Parse {
                pos: j + 1,
                msg: "unmatched '('".into(),
            });
        }
        Ok(NoncrossingMatching { partner })
    }

    fn parse_arch_list(t: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        let mut pos = 1;
        for token in t.split(',') {
            let token = token.trim();
            let (a, b) = token.split_once('-').ok_or(Error::Parse {
                pos,
                msg: format!("expected 'a-b', got '{token}'"),
            })?;
            let a: usize = a.trim().parse().map_err(|_| Error::Parse {
                pos,
                msg: format!("bad number '{a}'"),
            })?;
            let b: usize = b.trim().parse().map_err(|_| Error::Parse {
                pos,
                msg: format!("bad number '{b}'"),
            })?;
            pairs.push((a.min(b), a.max(b)));
            pos += token.len() + 1;
        }
        Self::from_pairs(&pairs)
    }

    /// Rotation: i and j are connected in the result iff i-1 and j-1 are
    /// connected here (indices mod 2n).
    pub fn rotate(&self) -> Self {
        let len = self.partner.len();
        let mut partner = vec![0; len];
        for i in 0..len {
            partner[(i + 1) % len] = (self.partner[i] + 1) % len;
        }
        NoncrossingMatching { partner }
    }

    /// k-fold rotation; negative k rotates backwards.
    pub fn rotate_by(&self, k: i64) -> Self {
        let len = self.partner.len() as i64;
        if len == 0 {
            return self.clone();
        }
        let shift = k.rem_euclid(len) as usize;
        let len = len as usize;
        let mut partner = vec![0; len];
        for i in 0..len {
            partner[(i + shift) % len] = (self.partner[i] + shift) % len;
        }
        NoncrossingMatching { partner }
    }

    /// The Temperley-Lieb set map e_j for 1 <= j <= 2n, identifying 2n+1 with 1.
    ///
    /// Deletes the arches incident to j and j+1, adds the arch (j, j+1) and an
    /// arch between the former partners.
    pub fn tl_apply(&self, j: usize) -> Self {
        let len = self.partner.len();
        assert!(j >= 1 && j <= len, "e_{j} out of range for 2n = {len}");
        let a = j - 1;
        let b = j % len;
        let pa = self.partner[a];
        let pb = self.partner[b];
        if pa == b {
            return self.clone();
        }
        let mut partner = self.partner.clone();
        partner[a] = b;
        partner[b] = a;
        partner[pa] = pb;
        partner[pb] = pa;
        NoncrossingMatching { partner }
    }

    /// True if the arch (j, j+1) (cyclically) is present, i.e. e_j fixes self.
    pub fn has_arch(&self, j: usize) -> bool {
        let len = self.partner.len();
        self.partner[j - 1] == j % len
    }

    /// Concatenation: self on points 1..2n1, other shifted behind it.
    pub fn concat(&self, other: &Self) -> Self {
        let off = self.partner.len();
        let mut partner = self.partner.clone();
        partner.extend(other.partner.iter().map(|&p| p + off));
        NoncrossingMatching { partner }
    }

    /// Surrounds the matching with m nested arches.
    pub fn nest(&self, m: usize) -> Self {
        let len = self.partner.len();
        let new_len = len + 2 * m;
        let mut partner = vec![0; new_len];
        for i in 0..m {
            partner[i] = new_len - 1 - i;
            partner[new_len - 1 - i] = i;
        }
        for i in 0..len {
            partner[m + i] = self.partner[i] + m;
        }
        NoncrossingMatching { partner }
    }

    /// The Young diagram enclosed between the NN..NEE..E path and the
    /// matching's left/right path.
    pub fn to_diagram(&self) -> YoungDiagram {
        let n = self.size();
        // heights of the path just before each east step
        let mut heights = Vec::with_capacity(n);
        let mut h = 0;
        for i in 0..2 * n {
            if self.partner[i] > i {
                h += 1;
            } else {
                heights.push(h);
            }
        }
        let mut parts = Vec::new();
        for i in 1..=n {
            let row = heights.iter().filter(|&&hj| hj <= n - i).count();
            if row == 0 {
                break;
            }
            parts.push(row);
        }
        YoungDiagram { parts }
    }

    /// Containment of Young diagrams ("self <= other" in the partial order).
    pub fn leq(&self, other: &Self) -> bool {
        self.to_diagram().contained_in(&other.to_diagram())
    }
}

impl Serialize for NoncrossingMatching {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.pairs().serialize(s)
    }
}

impl<'de> Deserialize<'de> for NoncrossingMatching {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<(usize, usize)>::deserialize(d)?;
        NoncrossingMatching::from_pairs(&pairs).map_err(D::Error::custom)
    }
}

/// A partition: weakly decreasing positive row lengths.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct YoungDiagram {
    parts: Vec<usize>,
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

impl fmt::Debug for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YoungDiagram{self}")
    }
}

impl YoungDiagram {
    pub fn empty() -> Self {
        YoungDiagram { parts: vec![] }
    }

    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!(
                "rows not weakly decreasing: {parts:?}"
            )));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidShape("zero row length".into()));
        }
        Ok(YoungDiagram { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Number of boxes.
    pub fn boxes(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Row i (1-indexed); 0 beyond the last row.
    pub fn row(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        YoungDiagram { parts }
    }

    pub fn contained_in(&self, other: &Self) -> bool {
        self.parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= other.row(i + 1))
    }

    /// True iff the i-th row has at most n-i boxes for all i (the shapes in
    /// bijection with matchings of size n).
    pub fn fits(&self, n: usize) -> bool {
        self.parts
            .iter()
            .enumerate()
            .all(|(i, &p)| i + 1 <= n && p <= n - (i + 1))
    }

    /// The matching of size n whose diagram is self.
    pub fn to_matching(&self, n: usize) -> Result<NoncrossingMatching> {
        if !self.fits(n) {
            return Err(Error::InvalidShape(format!(
                "{self} does not fit the staircase for n = {n}"
            )));
        }
        let conj = self.conjugate();
        let mut word = String::with_capacity(2 * n);
        let mut prev = 0;
        for j in 1..=n {
            let h = n - conj.row(j);
            for _ in prev..h {
                word.push('(');
            }
            word.push(')');
            prev = h;
        }
        NoncrossingMatching::parse(&word)
    }

    /// Diagonal label of the box in row i, column j for matchings of size n:
    /// n + j - i. The first box (1,1) always lies on diagonal n.
    pub fn diagonal_of_box(n: usize, row: usize, col: usize) -> usize {
        n + col - row
    }

    /// The diagonal word read rows top to bottom, boxes left to right.
    pub fn diagonal_word(&self, n: usize) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.boxes());
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 1..=len {
                word.push(Self::diagonal_of_box(n, i + 1, j));
            }
        }
        word
    }

    /// Hook length product (for the standard-tableaux count).
    pub fn hook_product(&self) -> BigUint {
        let conj = self.conjugate();
        let mut prod = BigUint::one();
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 1..=len {
                let hook = (len - j) + (conj.row(j) - (i + 1)) + 1;
                prod *= BigUint::from(hook);
            }
        }
        prod
    }
}

/// The n-th Catalan number.
pub fn catalan(n: usize) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for k in 0..n {
        num *= BigUint::from(2 * n - k);
        den *= BigUint::from(k + 1);
    }
    num / den / BigUint::from(n + 1)
}

/// All noncrossing matchings of size n in canonical order (lexicographic on
/// the partner array).
pub fn all_matchings(n: usize) -> Vec<NoncrossingMatching> {
    let mut words = Vec::new();
    let mut buf = Vec::with_capacity(2 * n);
    fn rec(n: usize, opens: usize, closes: usize, buf: &mut Vec<u8>, out: &mut Vec<String>) {
        if opens + closes == 2 * n {
            out.push(String::from_utf8(buf.clone()).unwrap());
            return;
        }
        if opens < n {
            buf.push(b'(');
            rec(n, opens + 1, closes, buf, out);
            buf.pop();
        }
        if closes < opens {
            buf.push(b')');
            rec(n, opens, closes + 1, buf, out);
            buf.pop();
        }
    }
    rec(n, 0, 0, &mut buf, &mut words);
    let mut ms: Vec<NoncrossingMatching> = words
        .iter()
        .map(|w| NoncrossingMatching::parse(w).unwrap())
        .collect();
    ms.sort();
    ms
}

/// Like [`all_matchings`] but errors when the Catalan number exceeds `limit`.
pub fn all_matchings_checked(n: usize, limit: u64) -> Result<Vec<NoncrossingMatching>> {
    let c = catalan(n);
    if c > BigUint::from(limit) {
        return Err(Error::Capacity {
            what: "matchings enumeration",
            requested: n,
            cap: limit as usize,
        });
    }
    Ok(all_matchings(n))
}

/// The preimage of pi under e_j, by brute force over NC_n.
pub fn tl_preimage(j: usize, pi: &NoncrossingMatching) -> Vec<NoncrossingMatching> {
    all_matchings(pi.size())
        .into_iter()
        .filter(|s| &s.tl_apply(j) == pi)
        .collect()
}

/// Adds a box on diagonal j to the diagram of sigma, if the resulting shape is
/// valid; `None` otherwise.
pub fn add_box(sigma: &NoncrossingMatching, j: usize) -> Option<NoncrossingMatching> {
    let n = sigma.size();
    let lam = sigma.to_diagram();
    for i in 1..=lam.rows() + 1 {
        let col = lam.row(i) + 1;
        let addable = (i == 1 || lam.row(i - 1) >= col) && i <= n && col <= n - i;
        if addable && YoungDiagram::diagonal_of_box(n, i, col) == j {
            let mut parts = lam.parts().to_vec();
            if i <= parts.len() {
                parts[i - 1] += 1;
            } else {
                parts.push(1);
            }
            let new = YoungDiagram { parts };
            return Some(new.to_matching(n).expect("addable box keeps valid shape"));
        }
    }
    None
}

/// Maximum number of boxes on diagonal j over all shapes fitting size n.
pub fn diagonal_capacity(n: usize, j: usize) -> usize {
    // boxes on diagonal j are (i, c) with c - i = j - n, 1 <= c <= n - i
    let mut count = 0;
    for i in 1..n {
        let c = i as i64 + j as i64 - n as i64;
        if c >= 1 && (c as usize) <= n - i {
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(w: &str) -> NoncrossingMatching {
        NoncrossingMatching::parse(w).unwrap()
    }

    #[test]
    fn parse_and_format_round_trip() {
        let p = m("(())");
        assert_eq!(p.pairs(), vec![(1, 4), (2, 3)]);
        assert_eq!(p.word(), "(())");
        assert_eq!(p.arch_list(), "1-4,2-3");
        assert_eq!(NoncrossingMatching::parse("1-4,2-3").unwrap(), p);
        assert_eq!(NoncrossingMatching::parse("2-3, 4-1").unwrap(), p);
    }

    #[test]
    fn parse_errors_carry_position() {
        match NoncrossingMatching::parse("(()") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        match NoncrossingMatching::parse("())(") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(NoncrossingMatching::parse("1-3,2-4").is_err()); // crossing
    }

    #[test]
    fn json_pair_form() {
        let p = m("(())");
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, "[[1,4],[2,3]]");
        let back: NoncrossingMatching = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn counts_are_catalan() {
        assert_eq!(all_matchings(0).len(), 1);
        assert_eq!(all_matchings(3).len(), 5);
        // C_10 evaluated from the binomial formula
        assert_eq!(catalan(10), BigUint::from(16796u32));
        assert_eq!(all_matchings(10).len(), 16796);
    }

    #[test]
    fn matchings_capacity() {
        assert!(all_matchings_checked(10, 16796).is_ok());
        match all_matchings_checked(10, 16795) {
            Err(Error::Capacity { .. }) => {}
            other => panic!("expected capacity error, got {other:?}"),
        }
    }

    #[test]
    fn diagram_examples() {
        assert_eq!(m("(())").to_diagram(), YoungDiagram::empty());
        assert_eq!(m("()()").to_diagram(), YoungDiagram::new(vec![1]).unwrap());
        assert_eq!(
            m("()()()").to_diagram(),
            YoungDiagram::new(vec![2, 1]).unwrap()
        );
        assert_eq!(
            YoungDiagram::empty().to_matching(3).unwrap(),
            m("((()))")
        );
        assert_eq!(
            YoungDiagram::new(vec![1]).unwrap().to_matching(2).unwrap(),
            m("()()")
        );
        assert_eq!(
            YoungDiagram::new(vec![2, 1]).unwrap().to_matching(3).unwrap(),
            m("()()()")
        );
        assert!(YoungDiagram::new(vec![2]).unwrap().to_matching(2).is_err());
    }

    #[test]
    fn diagram_bijection() {
        for n in 0..=6 {
            for p in all_matchings(n) {
                assert_eq!(p.to_diagram().to_matching(n).unwrap(), p);
            }
        }
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(m("()()").rotate(), m("(())"));
        assert_eq!(m("(())").rotate(), m("()()"));
        for n in 1..=5 {
            for p in all_matchings(n) {
                let mut r = p.clone();
                for _ in 0..2 * n {
                    r = r.rotate();
                }
                assert_eq!(r, p);
                assert_eq!(p.rotate_by(-1).rotate(), p);
            }
        }
    }

    #[test]
    fn tl_apply_examples() {
        assert_eq!(m("(())").tl_apply(1), m("()()"));
        assert_eq!(m("()()").tl_apply(2), m("(())"));
        assert_eq!(m("()()").tl_apply(1), m("()()"));
    }

    #[test]
    fn tl_set_map_relations() {
        for n in 1..=5 {
            let n2 = 2 * n;
            for p in all_matchings(n) {
                for i in 1..=n2 {
                    let ei = p.tl_apply(i);
                    assert_eq!(ei.tl_apply(i), ei, "e_i idempotent");
                    for j in 1..=n2 {
                        let d = (i as i64 - j as i64).rem_euclid(n2 as i64);
                        if d != 1 && d != n2 as i64 - 1 && d != 0 {
                            assert_eq!(
                                p.tl_apply(j).tl_apply(i),
                                p.tl_apply(i).tl_apply(j),
                                "distant e_i, e_j commute"
                            );
                        }
                    }
                    for j in [i % n2 + 1, (i + n2 - 2) % n2 + 1] {
                        assert_eq!(
                            p.tl_apply(i).tl_apply(j).tl_apply(i),
                            p.tl_apply(i),
                            "e_i e_(i±1) e_i = e_i"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn preimage_examples() {
        let pre = tl_preimage(2, &m("(())"));
        assert_eq!(pre, vec![m("()()"), m("(())")]);
        assert!(tl_preimage(2, &m("()()")).is_empty());
        assert_eq!(tl_preimage(1, &m("()()")), vec![m("()()"), m("(())")]);
    }

    #[test]
    fn preimage_is_bounded_by_box_order() {
        // e_j^{-1}(pi) within {sigma : pi /^j sigma} u {sigma : sigma <= pi}
        for n in 2..=5 {
            for p in all_matchings(n) {
                for j in 2..=2 * n - 2 {
                    let up = add_box(&p, j);
                    for s in tl_preimage(j, &p) {
                        let in_up = up.as_ref() == Some(&s);
                        assert!(in_up || s.leq(&p), "n={n} j={j} pi={p} sigma={s}");
                    }
                }
            }
        }
    }

    #[test]
    fn preimage_concat_factorisation() {
        // e_{2n+i}^{-1}(alpha beta) = { alpha sigma : sigma in e_i^{-1}(beta) }
        for n in 1..=3 {
            for np in 2..=3usize {
                for alpha in all_matchings(n) {
                    for beta in all_matchings(np) {
                        for i in 2..=2 * np - 2 {
                            if add_box(&beta, i).is_none() {
                                continue; // need beta /^i gamma to exist
                            }
                            let mut lhs = tl_preimage(2 * n + i, &alpha.concat(&beta));
                            let mut rhs: Vec<_> = tl_preimage(i, &beta)
                                .into_iter()
                                .map(|s| alpha.concat(&s))
                                .collect();
                            lhs.sort();
                            rhs.sort();
                            assert_eq!(lhs, rhs, "alpha={alpha} beta={beta} i={i}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn add_box_examples() {
        assert_eq!(add_box(&m("(())"), 2), Some(m("()()")));
        assert_eq!(add_box(&m("()()"), 2), None);
        let up = add_box(&m("((()))"), 3).unwrap();
        assert_eq!(up.to_diagram(), YoungDiagram::new(vec![1]).unwrap());
    }

    #[test]
    fn concat_and_nest() {
        assert_eq!(m("()").concat(&m("()")), m("()()"));
        assert_eq!(m("()()").nest(1), m("(()())"));
        assert_eq!(m("()()").nest(0), m("()()"));
        for p in all_matchings(3) {
            for k in 0..=3 {
                assert_eq!(p.nest(k).to_diagram(), p.to_diagram());
            }
        }
    }

    #[test]
    fn diagonal_word_reads_rows_top_to_bottom() {
        // the shape (4,2,1,1) read in a frame of size n: rows give diagonals
        // n..n+3, then n-1,n, then n-2, then n-3
        let lam = YoungDiagram::new(vec![4, 2, 1, 1]).unwrap();
        let n = 5;
        assert_eq!(
            lam.diagonal_word(n),
            vec![n, n + 1, n + 2, n + 3, n - 1, n, n - 2, n - 3]
        );
    }

    #[test]
    fn diagonal_capacity_matches_brute_force() {
        for n in 2..=5 {
            for j in 2..=2 * n - 2 {
                let best = all_matchings(n)
                    .iter()
                    .map(|p| {
                        p.to_diagram()
                            .diagonal_word(n)
                            .iter()
                            .filter(|&&d| d == j)
                            .count()
                    })
                    .max()
                    .unwrap();
                assert_eq!(diagonal_capacity(n, j), best, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn hook_products() {
        assert_eq!(
            YoungDiagram::new(vec![2, 1]).unwrap().hook_product(),
            BigUint::from(3u32)
        );
        assert_eq!(
            YoungDiagram::new(vec![3, 1]).unwrap().hook_product(),
            BigUint::from(8u32)
        );
    }
}
