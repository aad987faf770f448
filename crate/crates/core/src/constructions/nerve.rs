//! Thin strict n-categories and their nerves.
//!
//! A [`ThinCategory`] of level `n` has finitely many objects and, for each
//! ordered pair, either no morphisms or a hom-category of level `n - 1`.
//! Composition is forced: endo-homs are terminal, and any composite of two
//! cells that both move between distinct objects lands in a terminal hom.
//! That covers the families used here (globes, ordinals, the walking
//! isomorphism `J`, its suspensions `J_k`, and the indiscrete categories
//! `E_m`) without a general composition engine.
//!
//! A cell of the nerve at `[p](θ_1, …, θ_p)` is a tuple of objects
//! `c_0, …, c_p` and, for each block `i`, a cell of the nerve of
//! `hom(c_{i-1}, c_i)` at `θ_i`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::presheaf::{Construction, Element, Kind, NatTransformation, Presheaf};
use crate::theta::{ThetaMorphism, ThetaObject};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NerveCell {
    pub objs: Vec<usize>,
    pub parts: Vec<NerveCell>,
}

impl NerveCell {
    pub fn to_json(&self) -> Value {
        json!({"objs": self.objs, "parts": self.parts.iter().map(NerveCell::to_json).collect::<Vec<_>>()})
    }
}

impl fmt::Display for NerveCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, o) in self.objs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{o}")?;
        }
        write!(f, ">")?;
        if self.parts.iter().any(|p| !p.parts.is_empty() || p.objs.iter().any(|&o| o != 0)) {
            write!(f, "{{")?;
            for (k, p) in self.parts.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThinCategory {
    level: usize,
    objects: usize,
    homs: BTreeMap<(usize, usize), Arc<ThinCategory>>,
}

impl ThinCategory {
    /// Validates the thinness conditions. Missing pairs have no morphisms.
    pub fn new(level: usize, objects: usize, homs: BTreeMap<(usize, usize), Arc<ThinCategory>>) -> Result<Self> {
        if level == 0 {
            if !homs.is_empty() {
                return Err(Error::NotThin("a level-0 category is a set and has no homs".into()));
            }
            return Ok(Self { level, objects, homs });
        }
        for (&(a, b), h) in &homs {
            if a >= objects || b >= objects {
                return Err(Error::NotThin(format!("hom ({a},{b}) names a missing object")));
            }
            if h.level + 1 != level {
                return Err(Error::NotThin(format!("hom ({a},{b}) has level {}", h.level)));
            }
            if h.objects == 0 {
                return Err(Error::NotThin(format!("hom ({a},{b}) is present but empty")));
            }
        }
        for a in 0..objects {
            match homs.get(&(a, a)) {
                Some(h) if h.is_terminal() => {}
                _ => return Err(Error::NotThin(format!("hom ({a},{a}) is not terminal"))),
            }
        }
        for (&(a, b), _) in &homs {
            for (&(b2, c), _) in homs.range((b, 0)..(b + 1, 0)) {
                debug_assert_eq!(b2, b);
                if a != b && b != c && !homs.get(&(a, c)).is_some_and(|h| h.is_terminal()) {
                    return Err(Error::NotThin(format!("composite {a} -> {b} -> {c} does not land in a terminal hom")));
                }
            }
        }
        Ok(Self { level, objects, homs })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn objects(&self) -> usize {
        self.objects
    }

    pub fn hom(&self, a: usize, b: usize) -> Option<&Arc<ThinCategory>> {
        self.homs.get(&(a, b))
    }

    pub fn is_terminal(&self) -> bool {
        self.objects == 1 && self.homs.values().all(|h| h.is_terminal())
    }

    /// The terminal category `D_0`.
    pub fn terminal(level: usize) -> Self {
        Self::indiscrete(level, 1)
    }

    /// All homs terminal on `m` objects; `E_{m-1}`, and `J` for `m = 2`.
    pub fn indiscrete(level: usize, objects: usize) -> Self {
        if level == 0 {
            return Self { level, objects, homs: BTreeMap::new() };
        }
        let t = Arc::new(Self::terminal(level - 1));
        let homs = (0..objects).flat_map(|a| (0..objects).map(move |b| (a, b))).map(|k| (k, t.clone())).collect();
        Self { level, objects, homs }
    }

    /// `σC`: objects 0 and 1 with `hom(0, 1) = C`.
    pub fn suspension(c: &ThinCategory) -> Self {
        let t = Arc::new(Self::terminal(c.level));
        let homs = BTreeMap::from([((0, 0), t.clone()), ((1, 1), t), ((0, 1), Arc::new(c.clone()))]);
        Self { level: c.level + 1, objects: 2, homs }
    }

    /// The ordinal `[m]` with only identity higher cells.
    pub fn ordinal(m: usize, level: usize) -> Result<Self> {
        if level == 0 {
            return Err(Error::LevelTooLow { what: "an ordinal", min: 1, level });
        }
        let t = Arc::new(Self::terminal(level - 1));
        let homs = (0..=m).flat_map(|a| (a..=m).map(move |b| (a, b))).map(|k| (k, t.clone())).collect();
        Ok(Self { level, objects: m + 1, homs })
    }

    pub fn globe(k: usize, level: usize) -> Result<Self> {
        if k > level {
            return Err(Error::IndexOutOfRange { what: "globe dimension", index: k, bound: level });
        }
        let mut c = Self::terminal(level - k);
        for _ in 0..k {
            c = Self::suspension(&c);
        }
        Ok(c)
    }

    /// The walking isomorphism.
    pub fn j(level: usize) -> Self {
        Self::indiscrete(level, 2)
    }

    /// `J_1 = J`, `J_k = σ(J_{k-1})`.
    pub fn j_k(k: usize, level: usize) -> Result<Self> {
        if k == 0 || k > level {
            return Err(Error::IndexOutOfRange { what: "J_k index", index: k, bound: level });
        }
        let mut c = Self::j(level + 1 - k);
        for _ in 1..k {
            c = Self::suspension(&c);
        }
        Ok(c)
    }

    /// The indiscrete category on `m + 1` objects.
    pub fn e_m(m: usize, level: usize) -> Self {
        Self::indiscrete(level, m + 1)
    }

    /// The category freely generated by a globe or by `i[m]`.
    pub fn from_theta(theta: &ThetaObject) -> Result<Self> {
        let n = theta.level();
        if n == 0 {
            return Ok(Self::terminal(0));
        }
        if theta.sub().iter().all(ThetaObject::is_terminal) {
            return Self::ordinal(theta.width(), n);
        }
        if theta.width() == 1 {
            return Ok(Self::suspension(&Self::from_theta(theta.block(1))?));
        }
        Err(Error::NotThin(format!("{theta} is neither a globe nor an ordinal")))
    }

    /// The unique cell of a terminal category at `theta`.
    pub fn unit_cell(theta: &ThetaObject) -> NerveCell {
        NerveCell { objs: vec![0; theta.width() + 1], parts: theta.sub().iter().map(Self::unit_cell).collect() }
    }

    /// All cells at `theta`.
    pub fn cells(&self, theta: &ThetaObject) -> Vec<NerveCell> {
        debug_assert_eq!(theta.level(), self.level);
        if self.level == 0 {
            return (0..self.objects).map(|c| NerveCell { objs: vec![c], parts: Vec::new() }).collect();
        }
        let mut out = Vec::new();
        let mut objs = Vec::with_capacity(theta.width() + 1);
        for c0 in 0..self.objects {
            objs.push(c0);
            self.extend(theta, &mut objs, &mut Vec::new(), &mut out);
            objs.pop();
        }
        out
    }

    fn extend(&self, theta: &ThetaObject, objs: &mut Vec<usize>, parts: &mut Vec<NerveCell>, out: &mut Vec<NerveCell>) {
        let i = objs.len();
        if i == theta.width() + 1 {
            out.push(NerveCell { objs: objs.clone(), parts: parts.clone() });
            return;
        }
        let prev = objs[i - 1];
        for c in 0..self.objects {
            let Some(h) = self.hom(prev, c) else { continue };
            objs.push(c);
            for part in h.cells(theta.block(i)) {
                parts.push(part);
                self.extend(theta, objs, parts, out);
                parts.pop();
            }
            objs.pop();
        }
    }

    /// Restriction of a cell at `f.dst()` along `f`.
    pub fn restrict(&self, f: &ThetaMorphism, x: &NerveCell) -> NerveCell {
        if self.level == 0 {
            return x.clone();
        }
        let src = f.src();
        let map = f.map();
        let objs: Vec<usize> = (0..=src.width()).map(|k| x.objs[map.apply(k)]).collect();
        let parts = (1..=src.width())
            .map(|i| {
                let (lo, hi) = (map.apply(i - 1), map.apply(i));
                let psi = src.block(i);
                let mut acc: Option<(usize, usize, NerveCell)> = None;
                for j in lo + 1..=hi {
                    let (a, b) = (x.objs[j - 1], x.objs[j]);
                    let h = self.hom(a, b).expect("cell uses existing homs");
                    let y = h.restrict(f.component(j).expect("covered block"), &x.parts[j - 1]);
                    acc = Some(match acc {
                        None => (a, b, y),
                        Some((a0, b0, prev)) => {
                            if a0 == b0 {
                                (a0, b, y)
                            } else if a == b {
                                (a0, b0, prev)
                            } else {
                                (a0, b, Self::unit_cell(psi))
                            }
                        }
                    });
                }
                match acc {
                    Some((_, _, cell)) => cell,
                    None => Self::unit_cell(psi),
                }
            })
            .collect();
        NerveCell { objs, parts }
    }
}

struct NerveC {
    cat: Arc<ThinCategory>,
}

impl Construction for NerveC {
    fn level(&self) -> usize {
        self.cat.level
    }
    fn kind(&self) -> Kind {
        Kind::Nerve
    }
    fn compute(&self, obj: &ThetaObject) -> Vec<Element> {
        self.cat.cells(obj).into_iter().map(Element::Cell).collect()
    }
    fn restrict(&self, f: &ThetaMorphism, e: &Element) -> Element {
        match e {
            Element::Cell(c) => Element::Cell(self.cat.restrict(f, c)),
            _ => panic!("{e} is not a nerve cell"),
        }
    }
}

pub fn nerve(name: impl Into<String>, cat: &ThinCategory) -> Presheaf {
    Presheaf::new(name, NerveC { cat: Arc::new(cat.clone()) })
}

/// `N_n(J)`.
pub fn nerve_j(level: usize) -> Presheaf {
    nerve("N(J)", &ThinCategory::j(level))
}

/// A functor between thin categories: an object map and hom functors. A
/// missing hom functor means the target hom is terminal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThinFunctor {
    pub objects: Vec<usize>,
    pub homs: BTreeMap<(usize, usize), ThinFunctor>,
}

impl ThinFunctor {
    /// The functor collapsing everything onto one object.
    pub fn to_terminal(src: &ThinCategory) -> Self {
        Self { objects: vec![0; src.objects], homs: BTreeMap::new() }
    }

    /// `σF`.
    pub fn suspension(f: &ThinFunctor) -> Self {
        Self { objects: vec![0, 1], homs: BTreeMap::from([((0, 1), f.clone())]) }
    }

    pub fn apply(&self, x: &NerveCell) -> NerveCell {
        let objs: Vec<usize> = x.objs.iter().map(|&c| self.objects[c]).collect();
        let parts = x
            .parts
            .iter()
            .enumerate()
            .map(|(k, p)| match self.homs.get(&(x.objs[k], x.objs[k + 1])) {
                Some(h) => h.apply(p),
                None => unit_like(p),
            })
            .collect();
        NerveCell { objs, parts }
    }
}

fn unit_like(x: &NerveCell) -> NerveCell {
    NerveCell { objs: vec![0; x.objs.len()], parts: x.parts.iter().map(unit_like).collect() }
}

/// `j_k: J_k -> D_{k-1}`: `J` collapses to a point, `j_k = σ(j_{k-1})`.
pub fn collapse_functor(k: usize, level: usize) -> Result<ThinFunctor> {
    let jk = ThinCategory::j_k(k, level)?;
    if k == 1 {
        return Ok(ThinFunctor::to_terminal(&jk));
    }
    Ok(ThinFunctor::suspension(&collapse_functor(k - 1, level - 1)?))
}

/// `N(F): N(C) -> N(D)`.
pub fn nerve_map(name: impl Into<String>, f: &ThinFunctor, src: &Presheaf, dst: &Presheaf) -> NatTransformation {
    let f = f.clone();
    NatTransformation::new(name, src, dst, move |_, e| match e {
        Element::Cell(c) => Element::Cell(f.apply(c)),
        _ => panic!("{e} is not a nerve cell"),
    })
}

/// The cell of `N(τ)` corresponding to `f: θ -> τ`, for `τ` a globe or `i[m]`.
pub fn cell_of_morphism(f: &ThetaMorphism) -> NerveCell {
    let (src, map) = (f.src(), f.map());
    if f.level() == 0 {
        return NerveCell { objs: vec![0], parts: Vec::new() };
    }
    let objs = map.values().to_vec();
    let parts = (1..=src.width())
        .map(|i| {
            let (lo, hi) = (map.apply(i - 1), map.apply(i));
            if hi == lo + 1 {
                cell_of_morphism(f.component(hi).expect("covered block"))
            } else {
                ThinCategory::unit_cell(src.block(i))
            }
        })
        .collect();
    NerveCell { objs, parts }
}

/// Inverse of [`cell_of_morphism`].
pub fn morphism_of_cell(theta: &ThetaObject, tau: &ThetaObject, c: &NerveCell) -> ThetaMorphism {
    if theta.level() == 0 {
        return ThetaMorphism::identity(theta);
    }
    let map = crate::simplex::MonotoneMap::new(theta.width(), tau.width(), c.objs.clone()).expect("monotone cell");
    ThetaMorphism::from_rule(theta, tau, map, |i, j| {
        let part = if c.objs[i] == c.objs[i - 1] + 1 {
            c.parts[i - 1].clone()
        } else {
            ThinCategory::unit_cell(theta.block(i))
        };
        morphism_of_cell(theta.block(i), tau.block(j), &part)
    })
}

/// `N(τ) -> Θ[τ]` for `τ` a globe or `i[m]`.
pub fn nerve_representable_iso(tau: &ThetaObject, src: &Presheaf, dst: &Presheaf) -> NatTransformation {
    let tau = tau.clone();
    NatTransformation::new(format!("N({tau}) ≅ Θ[{tau}]"), src, dst, move |obj, e| match e {
        Element::Cell(c) => Element::Mor(morphism_of_cell(obj, &tau, c)),
        _ => panic!("{e} is not a nerve cell"),
    })
}

/// The separating interval `Θ[I] -> N(J)`, `I = [1](*)`.
pub fn interval_inclusion(src: &Presheaf, dst: &Presheaf) -> NatTransformation {
    NatTransformation::new("ι: I -> J", src, dst, |obj, e| {
        let g = e.as_mor().expect("representable element");
        Element::Cell(NerveCell {
            objs: g.map().values().to_vec(),
            parts: obj.sub().iter().map(ThinCategory::unit_cell).collect(),
        })
    })
}

/// The constant cell of `N(C)` at object `c`.
pub fn constant_cell(theta: &ThetaObject, c: usize) -> NerveCell {
    let mut cell = ThinCategory::unit_cell(theta);
    cell.objs.iter_mut().for_each(|o| *o = c);
    cell
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presheaf::check::{check_functorial, check_iso, check_natural};
    use crate::presheaf::representable;
    use crate::term::parse_object;
    use crate::theta::{enumerate_objects, globe};

    #[test]
    fn j_counts() {
        let nj = nerve_j(2);
        for o in enumerate_objects(2, 2) {
            assert_eq!(nj.size(&o), 1 << (o.width() + 1), "at {o}");
        }
        let nj2 = nerve("N(J_2)", &ThinCategory::j_k(2, 2).unwrap());
        assert_eq!(nj2.size(&globe(2, 2).unwrap()), 6);
        let e3 = nerve("N(E_3)", &ThinCategory::e_m(3, 2));
        assert_eq!(e3.size(&ThetaObject::terminal(2)), 4);
    }

    #[test]
    fn thinness_is_enforced() {
        let t = Arc::new(ThinCategory::terminal(0));
        let two = Arc::new(ThinCategory::indiscrete(0, 2));
        let bad = BTreeMap::from([((0, 0), t.clone()), ((1, 1), t.clone()), ((0, 1), two)]);
        assert!(ThinCategory::new(1, 2, bad.clone()).is_ok(), "parallel arrows alone are fine");
        let mut chain = bad;
        chain.insert((2, 2), t.clone());
        chain.insert((1, 2), t.clone());
        assert!(ThinCategory::new(1, 3, chain).is_err(), "0 -> 2 composite has no terminal hom");
        assert!(ThinCategory::from_theta(&parse_object("[2;1,0]", 2).unwrap()).is_err());
        assert!(ThinCategory::new(1, 1, BTreeMap::new()).is_err());
    }

    #[test]
    fn globe_and_ordinal_nerves_are_representable() {
        let objs = enumerate_objects(2, 2);
        for tau in ["[0]", "[1;0]", "[1;1]", "[2;0,0]"] {
            let tau = parse_object(tau, 2).unwrap();
            let n = nerve(format!("N({tau})"), &ThinCategory::from_theta(&tau).unwrap());
            let y = representable(&tau);
            assert!(check_functorial(&n, &enumerate_objects(2, 1)).holds());
            let iso = nerve_representable_iso(&tau, &n, &y);
            let out = check_iso(&iso, &objs);
            assert!(out.holds(), "{tau}: {:?}", out.counterexample);
            for o in &objs {
                for f in y.eval(o).iter() {
                    let f = f.as_mor().unwrap();
                    assert_eq!(morphism_of_cell(o, &tau, &cell_of_morphism(f)), *f);
                }
            }
        }
    }

    #[test]
    fn collapse_is_natural() {
        let objs = enumerate_objects(2, 2);
        let nj2 = nerve("N(J_2)", &ThinCategory::j_k(2, 2).unwrap());
        let d1 = ThinCategory::globe(1, 2).unwrap();
        let nd1 = nerve("N(D_1)", &d1);
        let f = collapse_functor(2, 2).unwrap();
        let t = nerve_map("N(j_2)", &f, &nj2, &nd1);
        assert!(check_natural(&t, &objs).holds());
        assert!(check_functorial(&nj2, &enumerate_objects(2, 1)).holds());
    }

    #[test]
    fn interval_is_separating() {
        let objs = enumerate_objects(2, 2);
        let i = representable(&globe(1, 2).unwrap());
        let j = nerve_j(2);
        let iota = interval_inclusion(&i, &j);
        assert!(crate::presheaf::check::check_mono(&iota, &objs).holds());
    }
}
