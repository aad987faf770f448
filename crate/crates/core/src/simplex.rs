//! The simplex category: finite ordinals `[n] = {0 < 1 < ... < n}` and
//! monotone maps between them.
//!
//! Maps are stored as explicit value lists, so composition is pointwise and
//! every map has exactly one representation. Hom-sets are enumerated in
//! lexicographic order of the value lists; everything downstream that needs a
//! canonical order inherits it from here.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The finite ordinal `[n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ordinal(pub usize);

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    Face,
    Degeneracy,
}

/// Injectivity and surjectivity of a monotone map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub surjective: bool,
    pub injective: bool,
}

/// A non-decreasing map `[src] -> [dst]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawMap")]
pub struct MonotoneMap {
    src: usize,
    dst: usize,
    values: Vec<usize>,
}

#[derive(Deserialize)]
struct RawMap {
    src: usize,
    dst: usize,
    values: Vec<usize>,
}

impl TryFrom<RawMap> for MonotoneMap {
    type Error = Error;

    fn try_from(raw: RawMap) -> Result<Self> {
        MonotoneMap::new(raw.src, raw.dst, raw.values)
    }
}

impl MonotoneMap {
    pub fn new(src: usize, dst: usize, values: Vec<usize>) -> Result<Self> {
        if values.len() != src + 1 {
            return Err(Error::InvalidMap(format!(
                "expected {} values for source [{}], got {}",
                src + 1,
                src,
                values.len()
            )));
        }
        if let Some(&v) = values.iter().find(|&&v| v > dst) {
            return Err(Error::InvalidMap(format!("value {v} exceeds target [{dst}]")));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidMap(format!("values {values:?} are not non-decreasing")));
        }
        Ok(Self { src, dst, values })
    }

    /// Builds a map whose invariants the caller already guarantees.
    pub(crate) fn from_parts(src: usize, dst: usize, values: Vec<usize>) -> Self {
        debug_assert!(Self::new(src, dst, values.clone()).is_ok());
        Self { src, dst, values }
    }

    pub fn identity(n: usize) -> Self {
        Self { src: n, dst: n, values: (0..=n).collect() }
    }

    /// The constant map `[src] -> [dst]` with value `v`.
    pub fn constant(src: usize, dst: usize, v: usize) -> Result<Self> {
        Self::new(src, dst, vec![v; src + 1])
    }

    /// The face `δ^i: [n] -> [n+1]` skipping `i`.
    pub fn face(i: usize, n: usize) -> Result<Self> {
        if i > n + 1 {
            return Err(Error::IndexOutOfRange { what: "face index", index: i, bound: n + 1 });
        }
        let values = (0..=n).map(|k| if k < i { k } else { k + 1 }).collect();
        Ok(Self { src: n, dst: n + 1, values })
    }

    /// The degeneracy `σ^i: [n+1] -> [n]` hitting `i` twice.
    pub fn degeneracy(i: usize, n: usize) -> Result<Self> {
        if i > n {
            return Err(Error::IndexOutOfRange { what: "degeneracy index", index: i, bound: n });
        }
        let values = (0..=n + 1).map(|k| if k <= i { k } else { k - 1 }).collect();
        Ok(Self { src: n + 1, dst: n, values })
    }

    pub fn generator(kind: GeneratorKind, i: usize, n: usize) -> Result<Self> {
        match kind {
            GeneratorKind::Face => Self::face(i, n),
            GeneratorKind::Degeneracy => Self::degeneracy(i, n),
        }
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, k: usize) -> usize {
        self.values[k]
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &MonotoneMap) -> Result<MonotoneMap> {
        compose(self, f)
    }

    pub fn classify(&self) -> Classification {
        let injective = self.values.windows(2).all(|w| w[0] < w[1]);
        let surjective = self.values[0] == 0
            && self.values[self.src] == self.dst
            && self.values.windows(2).all(|w| w[1] - w[0] <= 1);
        Classification { surjective, injective }
    }

    pub fn is_surjective(&self) -> bool {
        self.classify().surjective
    }

    pub fn is_injective(&self) -> bool {
        self.classify().injective
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.dst && self.values.iter().enumerate().all(|(k, &v)| k == v)
    }

    /// Factors `self = mono ∘ epi` through its image.
    pub fn epi_mono(&self) -> (MonotoneMap, MonotoneMap) {
        let mut image: Vec<usize> = self.values.clone();
        image.dedup();
        let mid = image.len() - 1;
        let mut epi_values = Vec::with_capacity(self.src + 1);
        let mut pos = 0;
        for &v in &self.values {
            while image[pos] != v {
                pos += 1;
            }
            epi_values.push(pos);
        }
        (
            MonotoneMap::from_parts(self.src, mid, epi_values),
            MonotoneMap::from_parts(mid, self.dst, image),
        )
    }

    /// All monotone maps `[a] -> [b]`, lexicographic on value lists.
    pub fn enumerate(a: usize, b: usize) -> Vec<MonotoneMap> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(a + 1);
        fill(a + 1, 0, b, &mut current, &mut |vals| {
            out.push(MonotoneMap { src: a, dst: b, values: vals.to_vec() })
        });
        out
    }
}

fn fill(len: usize, lo: usize, hi: usize, cur: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    if cur.len() == len {
        emit(cur);
        return;
    }
    for v in lo..=hi {
        cur.push(v);
        fill(len, v, hi, cur, emit);
        cur.pop();
    }
}

/// `g ∘ f`.
pub fn compose(g: &MonotoneMap, f: &MonotoneMap) -> Result<MonotoneMap> {
    if f.dst != g.src {
        return Err(Error::CompositionMismatch(format!(
            "cannot compose {g} after {f}: [{}] != [{}]",
            f.dst, g.src
        )));
    }
    let values = f.values.iter().map(|&k| g.values[k]).collect();
    Ok(MonotoneMap { src: f.src, dst: g.dst, values })
}

pub fn enumerate_delta_hom(a: Ordinal, b: Ordinal) -> Vec<MonotoneMap> {
    MonotoneMap::enumerate(a.0, b.0)
}

impl fmt::Display for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.values.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]:{}->{}", self.src, self.dst)
    }
}

impl FromStr for MonotoneMap {
    type Err = Error;

    /// Parses `values:src->dst`, e.g. `[0,2]:1->2`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.to_string() };
        let s_trim = s.trim();
        let close = s_trim.find(']').ok_or_else(|| err(0, "expected ']'"))?;
        if !s_trim.starts_with('[') {
            return Err(err(0, "expected '['"));
        }
        let values = s_trim[1..close]
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse::<usize>().map_err(|_| err(1, "expected integer")))
            .collect::<Result<Vec<_>>>()?;
        let rest = s_trim[close + 1..]
            .strip_prefix(':')
            .ok_or_else(|| err(close + 1, "expected ':'"))?;
        let (a, b) = rest.split_once("->").ok_or_else(|| err(close + 2, "expected '->'"))?;
        let src = a.trim().parse().map_err(|_| err(close + 2, "expected source ordinal"))?;
        let dst = b.trim().parse().map_err(|_| err(close + 2, "expected target ordinal"))?;
        MonotoneMap::new(src, dst, values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(src: usize, dst: usize, v: &[usize]) -> MonotoneMap {
        MonotoneMap::new(src, dst, v.to_vec()).unwrap()
    }

    // Independent oracle: every sequence in 0..=b of length a+1, kept if non-decreasing.
    fn brute_force_count(a: usize, b: usize) -> usize {
        let total = (b + 1).pow(a as u32 + 1);
        (0..total)
            .filter(|&code| {
                let mut c = code;
                let mut digits = Vec::new();
                for _ in 0..=a {
                    digits.push(c % (b + 1));
                    c /= b + 1;
                }
                digits.reverse();
                digits.windows(2).all(|w| w[0] <= w[1])
            })
            .count()
    }

    #[test]
    fn compose_examples() {
        let s0 = MonotoneMap::degeneracy(0, 0).unwrap();
        let d0 = MonotoneMap::face(0, 0).unwrap();
        assert_eq!(compose(&s0, &d0).unwrap(), MonotoneMap::identity(0));

        let d1 = MonotoneMap::face(1, 1).unwrap();
        assert_eq!(compose(&d1, &d0).unwrap(), m(0, 2, &[2]));

        for f in MonotoneMap::enumerate(2, 3) {
            assert_eq!(compose(&MonotoneMap::identity(3), &f).unwrap(), f);
        }
    }

    #[test]
    fn compose_mismatch() {
        let f = MonotoneMap::identity(1);
        let g = MonotoneMap::identity(2);
        assert!(matches!(compose(&g, &f), Err(Error::CompositionMismatch(_))));
    }

    #[test]
    fn generators() {
        assert_eq!(MonotoneMap::face(1, 1).unwrap(), m(1, 2, &[0, 2]));
        assert_eq!(MonotoneMap::degeneracy(0, 0).unwrap(), m(1, 0, &[0, 0]));
        assert!(MonotoneMap::face(3, 1).is_err());
        assert!(MonotoneMap::degeneracy(2, 1).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let maps = MonotoneMap::enumerate(1, 1);
        let vals: Vec<_> = maps.iter().map(|f| f.values().to_vec()).collect();
        assert_eq!(vals, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(MonotoneMap::enumerate(2, 1).len(), 4);
        for n in 0..5 {
            assert_eq!(MonotoneMap::enumerate(0, n).len(), n + 1);
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for a in 0..=4 {
            for b in 0..=4 {
                let maps = MonotoneMap::enumerate(a, b);
                assert_eq!(maps.len(), brute_force_count(a, b), "[{a}] -> [{b}]");
                assert!(maps.windows(2).all(|w| w[0].values < w[1].values));
            }
        }
    }

    #[test]
    fn classification() {
        let s0 = MonotoneMap::degeneracy(0, 0).unwrap();
        assert_eq!(s0.classify(), Classification { surjective: true, injective: false });
        let d0 = MonotoneMap::face(0, 0).unwrap();
        assert_eq!(d0.classify(), Classification { surjective: false, injective: true });
        let id = MonotoneMap::identity(2);
        assert_eq!(id.classify(), Classification { surjective: true, injective: true });
    }

    #[test]
    fn epi_mono_examples() {
        let f = m(1, 1, &[0, 0]);
        let (e, mono) = f.epi_mono();
        assert_eq!(e, MonotoneMap::degeneracy(0, 0).unwrap());
        assert_eq!(mono, m(0, 1, &[0]));

        let inj = MonotoneMap::face(1, 2).unwrap();
        assert_eq!(inj.epi_mono(), (MonotoneMap::identity(2), inj.clone()));
        let surj = MonotoneMap::degeneracy(1, 2).unwrap();
        assert_eq!(surj.epi_mono(), (surj.clone(), MonotoneMap::identity(2)));
    }

    #[test]
    fn epi_mono_recomposes() {
        for a in 0..=4 {
            for b in 0..=4 {
                for f in MonotoneMap::enumerate(a, b) {
                    let (e, mono) = f.epi_mono();
                    assert!(e.is_surjective() && mono.is_injective());
                    assert_eq!(compose(&mono, &e).unwrap(), f);
                }
            }
        }
    }

    #[test]
    fn category_axioms_up_to_three() {
        for a in 0..=3 {
            for b in 0..=3 {
                for f in MonotoneMap::enumerate(a, b) {
                    assert_eq!(compose(&MonotoneMap::identity(b), &f).unwrap(), f);
                    assert_eq!(compose(&f, &MonotoneMap::identity(a)).unwrap(), f);
                    for c in 0..=3 {
                        for g in MonotoneMap::enumerate(b, c) {
                            let gf = compose(&g, &f).unwrap();
                            for d in 0..=3 {
                                for h in MonotoneMap::enumerate(c, d) {
                                    assert_eq!(
                                        compose(&compose(&h, &g).unwrap(), &f).unwrap(),
                                        compose(&h, &gf).unwrap()
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn simplicial_identities() {
        for n in 0..=4 {
            // δ^j δ^i = δ^i δ^{j-1} for i < j, as maps [n] -> [n+2]
            for j in 0..=n + 2 {
                for i in 0..j {
                    let lhs = compose(&MonotoneMap::face(j, n + 1).unwrap(), &MonotoneMap::face(i, n).unwrap());
                    let rhs = compose(&MonotoneMap::face(i, n + 1).unwrap(), &MonotoneMap::face(j - 1, n).unwrap());
                    assert_eq!(lhs.unwrap(), rhs.unwrap());
                }
            }
            // σ^j σ^i = σ^i σ^{j+1} for i <= j, as maps [n+2] -> [n]
            for j in 0..=n {
                for i in 0..=j {
                    let lhs = compose(&MonotoneMap::degeneracy(j, n).unwrap(), &MonotoneMap::degeneracy(i, n + 1).unwrap());
                    let rhs = compose(&MonotoneMap::degeneracy(i, n).unwrap(), &MonotoneMap::degeneracy(j + 1, n + 1).unwrap());
                    assert_eq!(lhs.unwrap(), rhs.unwrap());
                }
            }
        }
    }

    #[test]
    fn text_and_json_forms() {
        let f: MonotoneMap = "[0,2]:1->2".parse().unwrap();
        assert_eq!(f, m(1, 2, &[0, 2]));
        assert_eq!(f.to_string(), "[0,2]:1->2");
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"src":1,"dst":2,"values":[0,2]}"#);
        assert_eq!(serde_json::from_str::<MonotoneMap>(&json).unwrap(), f);
        assert!(serde_json::from_str::<MonotoneMap>(r#"{"src":1,"dst":2,"values":[2,0]}"#).is_err());
        assert!("[0,3]:1->2".parse::<MonotoneMap>().is_err());
    }

    proptest! {
        #[test]
        fn text_form_round_trips(a in 0usize..5, b in 0usize..5, pick in 0usize..1000) {
            let maps = MonotoneMap::enumerate(a, b);
            let f = &maps[pick % maps.len()];
            prop_assert_eq!(&f.to_string().parse::<MonotoneMap>().unwrap(), f);
        }
    }
}
