//! The category Θ_n as an iterated wreath product `Δ ≀ Θ_{n-1}`.
//!
//! An object of level `n ≥ 1` is a list `[p](θ_1, …, θ_p)` of objects of level
//! `n - 1`; the unique object of level 0 is written `*`. A morphism
//! `[p](x) -> [q](y)` is a monotone map `f: [p] -> [q]` together with a
//! component `x_i -> y_j` for every target block `j` covered by a source block
//! `i`, meaning `f(i-1) < j <= f(i)`. Since `i` is determined by `j`, components
//! are stored per target block; uncovered blocks carry nothing.
//!
//! Level-0 objects are treated as having width 0, so the unique morphism
//! `* -> *` is stored as the identity of `[0]` with no components and the same
//! composition code serves every level.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::simplex::{self, MonotoneMap, Ordinal};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThetaObject {
    level: usize,
    sub: Vec<ThetaObject>,
}

impl ThetaObject {
    /// The unique object of Θ_0.
    pub fn point() -> Self {
        Self { level: 0, sub: Vec::new() }
    }

    pub fn new(level: usize, sub: Vec<ThetaObject>) -> Result<Self> {
        if level == 0 {
            if !sub.is_empty() {
                return Err(Error::LevelTooLow { what: "a non-empty block list", min: 1, level });
            }
            return Ok(Self::point());
        }
        if let Some(bad) = sub.iter().find(|s| s.level != level - 1) {
            return Err(Error::LevelMismatch { expected: level - 1, found: bad.level });
        }
        Ok(Self { level, sub })
    }

    /// The terminal object: `*` at level 0, `[0]` above.
    pub fn terminal(level: usize) -> Self {
        Self { level, sub: Vec::new() }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// The width `p` of `[p](θ_1, …, θ_p)`; 0 at level 0.
    pub fn width(&self) -> usize {
        self.sub.len()
    }

    pub fn sub(&self) -> &[ThetaObject] {
        &self.sub
    }

    /// Block `j` in 1-based numbering.
    pub fn block(&self, j: usize) -> &ThetaObject {
        &self.sub[j - 1]
    }

    pub fn is_terminal(&self) -> bool {
        self.sub.is_empty()
    }

    /// `σ(x) = [1](x)`.
    pub fn suspension(&self) -> Self {
        Self { level: self.level + 1, sub: vec![self.clone()] }
    }

    /// `i[p] = [p](t, …, t)` at level `n ≥ 1`.
    pub fn inclusion(p: Ordinal, level: usize) -> Result<Self> {
        if level == 0 {
            return Err(Error::LevelTooLow { what: "the inclusion of Δ", min: 1, level });
        }
        Ok(Self { level, sub: vec![Self::terminal(level - 1); p.0] })
    }

    /// `π([p](…)) = [p]`.
    pub fn truncation(&self) -> Result<Ordinal> {
        if self.level == 0 {
            return Err(Error::LevelTooLow { what: "truncation", min: 1, level: 0 });
        }
        Ok(Ordinal(self.width()))
    }

    /// Inserts `x` as a new block at 1-based position `j`.
    pub fn with_block_inserted(&self, j: usize, x: ThetaObject) -> Self {
        let mut sub = self.sub.clone();
        sub.insert(j - 1, x);
        Self { level: self.level, sub }
    }

    /// Dimension-indexed counts of generating cells.
    pub fn census(&self) -> CellCensus {
        let mut counts = BTreeMap::new();
        self.census_into(0, &mut counts);
        CellCensus { counts }
    }

    fn census_into(&self, shift: usize, counts: &mut BTreeMap<usize, usize>) {
        *counts.entry(shift).or_default() += self.width() + 1;
        for s in &self.sub {
            s.census_into(shift + 1, counts);
        }
    }

    pub fn total_cells(&self) -> usize {
        1 + self.width() + self.sub.iter().map(|s| s.total_cells()).sum::<usize>()
    }

    /// `{"level":n,"p":…,"sub":[…]}`; nested objects omit the level.
    pub fn to_json(&self) -> Value {
        let mut v = self.to_json_nested();
        v["level"] = json!(self.level);
        v
    }

    fn to_json_nested(&self) -> Value {
        json!({
            "p": self.width(),
            "sub": self.sub.iter().map(|s| s.to_json_nested()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let level = v
            .get("level")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Json("object without \"level\"".into()))?;
        Self::from_json_nested(v, level as usize)
    }

    fn from_json_nested(v: &Value, level: usize) -> Result<Self> {
        let p = v.get("p").and_then(Value::as_u64).ok_or_else(|| Error::Json("missing \"p\"".into()))?;
        let sub = v.get("sub").and_then(Value::as_array).ok_or_else(|| Error::Json("missing \"sub\"".into()))?;
        if sub.len() as u64 != p {
            return Err(Error::Json(format!("p = {p} but {} blocks", sub.len())));
        }
        if level == 0 && p != 0 {
            return Err(Error::Json("level-0 object with blocks".into()));
        }
        let sub = sub
            .iter()
            .map(|s| Self::from_json_nested(s, level - 1))
            .collect::<Result<Vec<_>>>()?;
        Self::new(level, sub)
    }
}

impl fmt::Display for ThetaObject {
    /// Canonical text: `*`, `[0]`, `[p]` at level 1, `[p;q_1,…]` at level 2,
    /// `[p](t_1,…)` above.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.level == 0 {
            return write!(f, "*");
        }
        if self.sub.is_empty() {
            return write!(f, "[0]");
        }
        match self.level {
            1 => write!(f, "[{}]", self.width()),
            2 => {
                write!(f, "[{};", self.width())?;
                for (k, s) in self.sub.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", s.width())?;
                }
                write!(f, "]")
            }
            _ => {
                write!(f, "[{}](", self.width())?;
                for (k, s) in self.sub.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{s}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Generating-cell counts by dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellCensus {
    pub counts: BTreeMap<usize, usize>,
}

impl CellCensus {
    pub fn to_json(&self) -> Value {
        Value::Object(self.counts.iter().map(|(d, c)| (d.to_string(), json!(c))).collect())
    }
}

pub fn cell_census(theta: &ThetaObject) -> CellCensus {
    theta.census()
}

/// A morphism of Θ_n: a monotone map on the outer ordinals and one component
/// per covered target block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThetaMorphism {
    src: ThetaObject,
    dst: ThetaObject,
    map: MonotoneMap,
    comps: Vec<Option<ThetaMorphism>>,
}

/// The source block covering target block `j`, if any.
fn covering_block(map: &MonotoneMap, j: usize) -> Option<usize> {
    (1..=map.src()).find(|&i| map.apply(i - 1) < j && j <= map.apply(i))
}

impl ThetaMorphism {
    /// Validates and builds a morphism. `comps[j-1]` must be present exactly
    /// when target block `j` is covered.
    pub fn new(
        src: ThetaObject,
        dst: ThetaObject,
        map: MonotoneMap,
        comps: Vec<Option<ThetaMorphism>>,
    ) -> Result<Self> {
        if src.level != dst.level {
            return Err(Error::LevelMismatch { expected: src.level, found: dst.level });
        }
        if map.src() != src.width() || map.dst() != dst.width() {
            return Err(Error::InvalidMorphism(format!(
                "map {map} does not go from [{}] to [{}]",
                src.width(),
                dst.width()
            )));
        }
        if comps.len() != dst.width() {
            return Err(Error::InvalidMorphism(format!(
                "{} components for {} target blocks",
                comps.len(),
                dst.width()
            )));
        }
        for (idx, c) in comps.iter().enumerate() {
            let j = idx + 1;
            match (covering_block(&map, j), c) {
                (None, None) => {}
                (Some(i), Some(c)) => {
                    if c.src != *src.block(i) || c.dst != *dst.block(j) {
                        return Err(Error::InvalidMorphism(format!(
                            "component at block {j} goes {} -> {}, expected {} -> {}",
                            c.src,
                            c.dst,
                            src.block(i),
                            dst.block(j)
                        )));
                    }
                }
                (Some(_), None) => {
                    return Err(Error::InvalidMorphism(format!("missing component at block {j}")))
                }
                (None, Some(_)) => {
                    return Err(Error::InvalidMorphism(format!("block {j} is not covered")))
                }
            }
        }
        Ok(Self { src, dst, map, comps })
    }

    /// Builds a morphism from a map and a rule `(i, j) -> component`.
    pub fn from_rule(
        src: &ThetaObject,
        dst: &ThetaObject,
        map: MonotoneMap,
        mut rule: impl FnMut(usize, usize) -> ThetaMorphism,
    ) -> Self {
        let mut comps = vec![None; dst.width()];
        for i in 1..=src.width() {
            for j in map.apply(i - 1) + 1..=map.apply(i) {
                comps[j - 1] = Some(rule(i, j));
            }
        }
        let m = Self { src: src.clone(), dst: dst.clone(), map, comps };
        debug_assert!(m.validate().is_ok(), "ill-formed morphism {m}");
        m
    }

    fn validate(&self) -> Result<()> {
        Self::new(self.src.clone(), self.dst.clone(), self.map.clone(), self.comps.clone()).map(|_| ())
    }

    pub fn identity(x: &ThetaObject) -> Self {
        Self::from_rule(x, x, MonotoneMap::identity(x.width()), |i, _| Self::identity(x.block(i)))
    }

    /// The unique map to the terminal object.
    pub fn to_terminal(x: &ThetaObject) -> Self {
        let t = ThetaObject::terminal(x.level);
        Self::from_rule(x, &t, MonotoneMap::constant(x.width(), 0, 0).expect("constant"), |_, _| {
            unreachable!("the terminal object has no blocks")
        })
    }

    /// The map `src -> dst` with constant outer map `v` (no components).
    pub fn constant(src: &ThetaObject, dst: &ThetaObject, v: usize) -> Result<Self> {
        if src.level != dst.level {
            return Err(Error::LevelMismatch { expected: src.level, found: dst.level });
        }
        let map = MonotoneMap::constant(src.width(), dst.width(), v)?;
        Ok(Self::from_rule(src, dst, map, |_, _| unreachable!("constant maps cover no block")))
    }

    /// The vertex `[0] -> x` at `v`.
    pub fn vertex(x: &ThetaObject, v: usize) -> Result<Self> {
        Self::constant(&ThetaObject::terminal(x.level), x, v)
    }

    pub fn src(&self) -> &ThetaObject {
        &self.src
    }

    pub fn dst(&self) -> &ThetaObject {
        &self.dst
    }

    pub fn level(&self) -> usize {
        self.src.level
    }

    pub fn map(&self) -> &MonotoneMap {
        &self.map
    }

    /// Component at 1-based target block `j`.
    pub fn component(&self, j: usize) -> Option<&ThetaMorphism> {
        self.comps[j - 1].as_ref()
    }

    pub fn components(&self) -> &[Option<ThetaMorphism>] {
        &self.comps
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.dst
            && self.map.is_identity()
            && self.comps.iter().all(|c| c.as_ref().is_some_and(|c| c.is_identity()))
    }

    /// Surjective outer map and every component surjective.
    pub fn is_surjective(&self) -> bool {
        self.map.is_surjective() && self.comps.iter().flatten().all(|c| c.is_surjective())
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &ThetaMorphism) -> Result<ThetaMorphism> {
        compose_theta(self, f)
    }

    /// `[id_1](f): σx -> σy`.
    pub fn suspension(&self) -> Self {
        Self {
            src: self.src.suspension(),
            dst: self.dst.suspension(),
            map: MonotoneMap::identity(1),
            comps: vec![Some(self.clone())],
        }
    }

    /// `i(u): i[a] -> i[b]`, all components terminal.
    pub fn inclusion(u: &MonotoneMap, level: usize) -> Result<Self> {
        let a = ThetaObject::inclusion(Ordinal(u.src()), level)?;
        let b = ThetaObject::inclusion(Ordinal(u.dst()), level)?;
        let t = ThetaObject::terminal(level - 1);
        Ok(Self::from_rule(&a, &b, u.clone(), |_, _| Self::identity(&t)))
    }

    /// `π(f)`, the outer monotone map.
    pub fn truncation(&self) -> Result<MonotoneMap> {
        if self.level() == 0 {
            return Err(Error::LevelTooLow { what: "truncation", min: 1, level: 0 });
        }
        Ok(self.map.clone())
    }

    /// `{"f":[…],"comp":[{"j":…,"i":…,"m":{…}},…]}`.
    pub fn to_json(&self) -> Value {
        let comp: Vec<Value> = self
            .comps
            .iter()
            .enumerate()
            .filter_map(|(idx, c)| {
                let c = c.as_ref()?;
                let j = idx + 1;
                let i = covering_block(&self.map, j).expect("covered");
                Some(json!({"j": j, "i": i, "m": c.to_json()}))
            })
            .collect();
        json!({"f": self.map.values(), "comp": comp})
    }

    pub fn from_json(v: &Value, src: &ThetaObject, dst: &ThetaObject) -> Result<Self> {
        let f: Vec<usize> = v
            .get("f")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("morphism without \"f\"".into()))?
            .iter()
            .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| Error::Json("bad map value".into())))
            .collect::<Result<_>>()?;
        let map = if src.level == 0 {
            MonotoneMap::identity(0)
        } else {
            MonotoneMap::new(src.width(), dst.width(), f)?
        };
        let mut comps = vec![None; dst.width()];
        for c in v.get("comp").and_then(Value::as_array).into_iter().flatten() {
            let j = c.get("j").and_then(Value::as_u64).ok_or_else(|| Error::Json("bad \"j\"".into()))? as usize;
            let i = c.get("i").and_then(Value::as_u64).ok_or_else(|| Error::Json("bad \"i\"".into()))? as usize;
            if j == 0 || j > dst.width() || i == 0 || i > src.width() {
                return Err(Error::Json(format!("component index ({i},{j}) out of range")));
            }
            let m = c.get("m").ok_or_else(|| Error::Json("missing \"m\"".into()))?;
            comps[j - 1] = Some(Self::from_json(m, src.block(i), dst.block(j))?);
        }
        Self::new(src.clone(), dst.clone(), map, comps)
    }
}

impl fmt::Display for ThetaMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.level() == 0 {
            return write!(f, "id");
        }
        write!(f, "{:?}", self.map.values())?;
        let covered: Vec<_> = self.comps.iter().enumerate().filter_map(|(k, c)| c.as_ref().map(|c| (k + 1, c))).collect();
        if self.level() > 1 && !covered.is_empty() {
            write!(f, "{{")?;
            for (n, (j, c)) in covered.iter().enumerate() {
                if n > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{j}:{c}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// `g ∘ f` in Θ_n.
///
/// The outer map is `g.map ∘ f.map`. For a final target block `k` covered by a
/// source block `i` of the composite, the intervals `(g(j-1), g(j)]` for
/// `j ∈ (f(i-1), f(i)]` partition `(g(f(i-1)), g(f(i))]` because `g` is
/// monotone, so exactly one intermediate block `j` satisfies
/// `f(i-1) < j <= f(i)` and `g(j-1) < k <= g(j)`. The component at `k` is then
/// `g_k ∘ f_j`, which is the composite of the corresponding functors between
/// the free n-categories.
pub fn compose_theta(g: &ThetaMorphism, f: &ThetaMorphism) -> Result<ThetaMorphism> {
    if f.dst != g.src {
        return Err(Error::CompositionMismatch(format!(
            "cannot compose a map out of {} after a map into {}",
            g.src, f.dst
        )));
    }
    let map = simplex::compose(&g.map, &f.map)?;
    let mut comps = vec![None; g.dst.width()];
    for i in 1..=f.src.width() {
        for j in f.map.apply(i - 1) + 1..=f.map.apply(i) {
            let fj = f.comps[j - 1].as_ref().expect("covered block has a component");
            for k in g.map.apply(j - 1) + 1..=g.map.apply(j) {
                let gk = g.comps[k - 1].as_ref().expect("covered block has a component");
                comps[k - 1] = Some(compose_theta(gk, fj)?);
            }
        }
    }
    Ok(ThetaMorphism { src: f.src.clone(), dst: g.dst.clone(), map, comps })
}

type HomKey = (ThetaObject, ThetaObject);
static HOM_CACHE: LazyLock<Mutex<HashMap<HomKey, Arc<Vec<ThetaMorphism>>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// All morphisms `a -> b`, ordered by outer map then by component tuples.
/// Results are memoized; every caller sees the same list.
pub fn enumerate_theta_hom(a: &ThetaObject, b: &ThetaObject) -> Result<Arc<Vec<ThetaMorphism>>> {
    if a.level != b.level {
        return Err(Error::LevelMismatch { expected: a.level, found: b.level });
    }
    let key = (a.clone(), b.clone());
    if let Some(hit) = HOM_CACHE.lock().expect("hom cache").get(&key) {
        return Ok(hit.clone());
    }
    let homs = Arc::new(enumerate_uncached(a, b)?);
    HOM_CACHE.lock().expect("hom cache").entry(key).or_insert(homs.clone());
    Ok(homs)
}

fn enumerate_uncached(a: &ThetaObject, b: &ThetaObject) -> Result<Vec<ThetaMorphism>> {
    let mut out = Vec::new();
    for map in MonotoneMap::enumerate(a.width(), b.width()) {
        let mut slots: Vec<(usize, Arc<Vec<ThetaMorphism>>)> = Vec::new();
        for j in 1..=b.width() {
            if let Some(i) = covering_block(&map, j) {
                slots.push((j, enumerate_theta_hom(a.block(i), b.block(j))?));
            }
        }
        if slots.iter().any(|(_, homs)| homs.is_empty()) {
            continue;
        }
        let mut idx = vec![0usize; slots.len()];
        'odometer: loop {
            let mut comps = vec![None; b.width()];
            for ((j, homs), &k) in slots.iter().zip(&idx) {
                comps[j - 1] = Some(homs[k].clone());
            }
            out.push(ThetaMorphism { src: a.clone(), dst: b.clone(), map: map.clone(), comps });
            // last slot varies fastest
            let mut pos = slots.len();
            loop {
                if pos == 0 {
                    break 'odometer;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < slots[pos].1.len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }
    Ok(out)
}

/// Suspension on objects.
pub fn suspension(x: &ThetaObject) -> ThetaObject {
    x.suspension()
}

/// The globe `D_k` in Θ_n.
pub fn globe(k: usize, level: usize) -> Result<ThetaObject> {
    if k > level {
        return Err(Error::IndexOutOfRange { what: "globe dimension", index: k, bound: level });
    }
    let mut g = ThetaObject::terminal(level - k);
    for _ in 0..k {
        g = g.suspension();
    }
    Ok(g)
}

/// Source, target and collapse maps of the globe `D_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobeMaps {
    pub s: ThetaMorphism,
    pub t: ThetaMorphism,
    pub tau: ThetaMorphism,
}

pub fn globe_maps(k: usize, level: usize) -> Result<GlobeMaps> {
    if k == 0 || k > level {
        return Err(Error::IndexOutOfRange { what: "globe map dimension", index: k, bound: level });
    }
    if k == 1 {
        let d1 = globe(1, level)?;
        return Ok(GlobeMaps {
            s: ThetaMorphism::vertex(&d1, 0)?,
            t: ThetaMorphism::vertex(&d1, 1)?,
            tau: ThetaMorphism::to_terminal(&d1),
        });
    }
    let lower = globe_maps(k - 1, level - 1)?;
    Ok(GlobeMaps {
        s: lower.s.suspension(),
        t: lower.t.suspension(),
        tau: lower.tau.suspension(),
    })
}

/// Transpose along `π ⊣ i`: `u: π(θ) -> [m]` becomes `θ -> i[m]`.
pub fn pi_i_transpose(theta: &ThetaObject, u: &MonotoneMap) -> Result<ThetaMorphism> {
    let target = ThetaObject::inclusion(Ordinal(u.dst()), theta.level)?;
    if u.src() != theta.width() {
        return Err(Error::CompositionMismatch(format!("{u} does not start at π({theta})")));
    }
    Ok(ThetaMorphism::from_rule(theta, &target, u.clone(), |i, _| {
        ThetaMorphism::to_terminal(theta.block(i))
    }))
}

/// Inverse of [`pi_i_transpose`].
pub fn pi_i_untranspose(f: &ThetaMorphism) -> Result<MonotoneMap> {
    f.truncation()
}

/// The unit `θ -> iπ(θ)` of `π ⊣ i`.
pub fn pi_i_unit(theta: &ThetaObject) -> Result<ThetaMorphism> {
    pi_i_transpose(theta, &MonotoneMap::identity(theta.width()))
}

/// All objects of the universe, ordered by total cell count then structurally.
pub fn enumerate_objects(level: usize, max_width: usize) -> Vec<ThetaObject> {
    let mut all = objects_up_to(level, max_width);
    all.sort_by(|a, b| a.total_cells().cmp(&b.total_cells()).then_with(|| a.cmp(b)));
    all
}

fn objects_up_to(level: usize, max_width: usize) -> Vec<ThetaObject> {
    if level == 0 {
        return vec![ThetaObject::point()];
    }
    let lower = objects_up_to(level - 1, max_width);
    let mut out = Vec::new();
    for p in 0..=max_width {
        let mut idx = vec![0usize; p];
        'odometer: loop {
            let sub = idx.iter().map(|&k| lower[k].clone()).collect();
            out.push(ThetaObject { level, sub });
            let mut pos = p;
            loop {
                if pos == 0 {
                    break 'odometer;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < lower.len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }
    out
}
