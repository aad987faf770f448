//! Presheaves on Θ_n, evaluated lazily one object at a time.
//!
//! A [`Presheaf`] is a shared handle to a [`Construction`] together with a
//! memo table of its values. Every value is a finite, sorted, duplicate-free
//! list of [`Element`]s, and the canonical order on elements is the derived
//! `Ord`. Limits and colimits are computed objectwise, so each construction
//! only has to know how to list its elements at one object and how to restrict
//! an element along one morphism.

pub mod census;
pub mod check;
pub mod colimit;
pub mod restriction;
pub mod suspension;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::Serialize;
use serde_json::{json, Value};

use crate::constructions::nerve::NerveCell;
use crate::error::{Error, Result};
use crate::theta::{self, ThetaMorphism, ThetaObject};

pub use check::{Counterexample, Outcome};
pub use colimit::{coproduct, colimit, pushout, Colimit, Diagram};

/// Canonical encoding of an element of some presheaf.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    /// The element of a terminal presheaf.
    Point,
    /// A basepoint of a suspension.
    Base(u8),
    /// An element of a representable.
    Mor(ThetaMorphism),
    /// An element of a suspension sitting in block `a`.
    Slot(usize, Box<Element>),
    Pair(Box<Element>, Box<Element>),
    /// A tagged element of a diagram vertex; colimits use the least member of
    /// each class as representative.
    Tag(usize, Box<Element>),
    /// A cell of a nerve.
    Cell(NerveCell),
}

impl Element {
    pub fn pair(a: Element, b: Element) -> Self {
        Element::Pair(Box::new(a), Box::new(b))
    }

    pub fn tag(v: usize, e: Element) -> Self {
        Element::Tag(v, Box::new(e))
    }

    pub fn as_mor(&self) -> Option<&ThetaMorphism> {
        match self {
            Element::Mor(f) => Some(f),
            _ => None,
        }
    }

    pub fn as_pair(&self) -> Option<(&Element, &Element)> {
        match self {
            Element::Pair(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn as_tag(&self) -> Option<(usize, &Element)> {
        match self {
            Element::Tag(v, e) => Some((*v, e)),
            _ => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Element::Point => json!("pt"),
            Element::Base(e) => json!({"base": e}),
            Element::Mor(f) => f.to_json(),
            Element::Slot(a, e) => json!({"slot": a, "elem": e.to_json()}),
            Element::Pair(a, b) => json!([a.to_json(), b.to_json()]),
            Element::Tag(v, e) => json!({"vertex": v, "elem": e.to_json()}),
            Element::Cell(c) => c.to_json(),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Point => write!(f, "pt"),
            Element::Base(e) => write!(f, "b{e}"),
            Element::Mor(m) => write!(f, "{m}"),
            Element::Slot(a, e) => write!(f, "slot{a}({e})"),
            Element::Pair(a, b) => write!(f, "({a}, {b})"),
            Element::Tag(v, e) => write!(f, "#{v}:{e}"),
            Element::Cell(c) => write!(f, "{c}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Representable,
    Boundary,
    Terminal,
    Empty,
    Constant,
    Product,
    Pullback,
    Colimit,
    Suspension,
    Nerve,
    HomFiber,
    Restricted,
    Extended,
    Sub,
}

/// What a presheaf must provide: its level, its value at an object, and its
/// restriction maps. `restrict(f, e)` takes `f: θ' -> θ` and `e ∈ X(θ)` to
/// an element of `X(θ')`.
pub trait Construction: Send + Sync {
    fn level(&self) -> usize;
    fn kind(&self) -> Kind;
    fn compute(&self, obj: &ThetaObject) -> Vec<Element>;
    fn restrict(&self, f: &ThetaMorphism, e: &Element) -> Element;
}

struct Node {
    name: String,
    imp: Box<dyn Construction>,
    cache: Mutex<HashMap<ThetaObject, Arc<Vec<Element>>>>,
}

/// Shared handle to a memoized presheaf.
#[derive(Clone)]
pub struct Presheaf {
    node: Arc<Node>,
}

impl fmt::Debug for Presheaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Presheaf({})", self.node.name)
    }
}

impl Presheaf {
    pub fn new(name: impl Into<String>, imp: impl Construction + 'static) -> Self {
        Self {
            node: Arc::new(Node { name: name.into(), imp: Box::new(imp), cache: Mutex::new(HashMap::new()) }),
        }
    }

    pub fn name(&self) -> &str {
        &self.node.name
    }

    pub fn level(&self) -> usize {
        self.node.imp.level()
    }

    pub fn kind(&self) -> Kind {
        self.node.imp.kind()
    }

    /// Identity of the underlying construction (not isomorphism).
    pub fn same(&self, other: &Presheaf) -> bool {
        Arc::ptr_eq(&self.node, &other.node)
    }

    /// The sorted value at `obj`.
    ///
    /// Panics if `obj` lives at a different level.
    pub fn eval(&self, obj: &ThetaObject) -> Arc<Vec<Element>> {
        assert_eq!(
            obj.level(),
            self.level(),
            "evaluating {} (level {}) at {obj}",
            self.name(),
            self.level()
        );
        if let Some(hit) = self.node.cache.lock().expect("presheaf cache").get(obj) {
            return hit.clone();
        }
        let mut elems = self.node.imp.compute(obj);
        elems.sort();
        elems.dedup();
        let elems = Arc::new(elems);
        self.node.cache.lock().expect("presheaf cache").entry(obj.clone()).or_insert(elems).clone()
    }

    pub fn restrict(&self, f: &ThetaMorphism, e: &Element) -> Element {
        self.node.imp.restrict(f, e)
    }

    pub fn contains(&self, obj: &ThetaObject, e: &Element) -> bool {
        self.eval(obj).binary_search(e).is_ok()
    }

    pub fn size(&self, obj: &ThetaObject) -> usize {
        self.eval(obj).len()
    }

    /// `{"object": …, "elements": […]}`.
    pub fn dump(&self, obj: &ThetaObject) -> Value {
        json!({
            "object": obj.to_string(),
            "elements": self.eval(obj).iter().map(Element::to_json).collect::<Vec<_>>(),
        })
    }
}

pub type LevelMap = dyn Fn(&ThetaObject, &Element) -> Element + Send + Sync;

/// A levelwise family of maps `src(θ) -> dst(θ)`.
#[derive(Clone)]
pub struct NatTransformation {
    name: String,
    src: Presheaf,
    dst: Presheaf,
    map: Arc<LevelMap>,
}

impl fmt::Debug for NatTransformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {}", self.name, self.src.name(), self.dst.name())
    }
}

impl NatTransformation {
    pub fn new(
        name: impl Into<String>,
        src: &Presheaf,
        dst: &Presheaf,
        map: impl Fn(&ThetaObject, &Element) -> Element + Send + Sync + 'static,
    ) -> Self {
        Self { name: name.into(), src: src.clone(), dst: dst.clone(), map: Arc::new(map) }
    }

    /// The identity of `x`, or the inclusion of a subpresheaf sharing `x`'s
    /// encoding into `y`.
    pub fn inclusion(name: impl Into<String>, x: &Presheaf, y: &Presheaf) -> Self {
        Self::new(name, x, y, |_, e| e.clone())
    }

    pub fn identity(x: &Presheaf) -> Self {
        Self::inclusion(format!("id_{}", x.name()), x, x)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn src(&self) -> &Presheaf {
        &self.src
    }

    pub fn dst(&self) -> &Presheaf {
        &self.dst
    }

    pub fn apply(&self, obj: &ThetaObject, e: &Element) -> Element {
        (self.map)(obj, e)
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &NatTransformation) -> NatTransformation {
        let (a, b) = (self.map.clone(), next.map.clone());
        NatTransformation::new(
            format!("{} . {}", next.name, self.name),
            &self.src,
            &next.dst,
            move |obj, e| b(obj, &a(obj, e)),
        )
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// Bounds of a finite universe of test objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniverseSpec {
    pub level: usize,
    pub max_width: usize,
    pub objects: Option<Vec<ThetaObject>>,
}

impl UniverseSpec {
    pub fn new(level: usize, max_width: usize) -> Self {
        Self { level, max_width, objects: None }
    }

    pub fn explicit(level: usize, objects: Vec<ThetaObject>) -> Self {
        let max_width = objects.iter().map(ThetaObject::width).max().unwrap_or(0);
        Self { level, max_width, objects: Some(objects) }
    }

    pub fn empty(level: usize) -> Self {
        Self::explicit(level, Vec::new())
    }

    /// Same width bound at another level; an explicit list is filtered to
    /// that level.
    pub fn at_level(&self, level: usize) -> Self {
        match &self.objects {
            None => Self::new(level, self.max_width),
            Some(objs) => Self {
                level,
                max_width: self.max_width,
                objects: Some(objs.iter().filter(|o| o.level() == level).cloned().collect()),
            },
        }
    }

    pub fn objects(&self) -> Vec<ThetaObject> {
        match &self.objects {
            Some(objs) => {
                let mut objs: Vec<_> = objs.iter().filter(|o| o.level() == self.level).cloned().collect();
                objs.sort_by(|a, b| a.total_cells().cmp(&b.total_cells()).then_with(|| a.cmp(b)));
                objs.dedup();
                objs
            }
            None => theta::enumerate_objects(self.level, self.max_width),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.objects().is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "level": self.level,
            "max_width": self.max_width,
            "objects": self.objects.as_ref().map(|o| o.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
        })
    }
}

pub fn enumerate_objects(u: &UniverseSpec) -> Vec<ThetaObject> {
    u.objects()
}

fn homs(a: &ThetaObject, b: &ThetaObject) -> Arc<Vec<ThetaMorphism>> {
    theta::enumerate_theta_hom(a, b).expect("objects of one presheaf share a level")
}

struct Representable {
    obj: ThetaObject,
}

impl Construction for Representable {
    fn level(&self) -> usize {
        self.obj.level()
    }
    fn kind(&self) -> Kind {
        Kind::Representable
    }
    fn compute(&self, at: &ThetaObject) -> Vec<Element> {
        homs(at, &self.obj).iter().cloned().map(Element::Mor).collect()
    }
    fn restrict(&self, f: &ThetaMorphism, e: &Element) -> Element {
        let g = e.as_mor().expect("element of a representable");
        Element::Mor(g.after(f).expect("restriction along a composable map"))
    }
}

/// `Θ[θ]`, with `Θ[θ](θ') = Hom(θ', θ)` and restriction by precomposition.
pub fn representable(theta: &ThetaObject) -> Presheaf {
    Presheaf::new(format!("Θ[{theta}]"), Representable { obj: theta.clone() })
}

/// Postcomposition with `u: a -> b` as a map `Θ[a] -> Θ[b]`.
pub fn representable_map(u: &ThetaMorphism, src: &Presheaf, dst: &Presheaf) -> NatTransformation {
    let u = u.clone();
    NatTransformation::new(format!("Θ[{u}]"), src, dst, move |_, e| {
        Element::Mor(u.after(e.as_mor().expect("representable element")).expect("composable"))
    })
}

type Predicate = dyn Fn(&ThetaObject, &Element) -> bool + Send + Sync;

struct Sub {
    parent: Presheaf,
    kind: Kind,
    keep: Arc<Predicate>,
}

impl Construction for Sub {
    fn level(&self) -> usize {
        self.parent.level()
    }
    fn kind(&self) -> Kind {
        self.kind
    }
    fn compute(&self, at: &ThetaObject) -> Vec<Element> {
        self.parent.eval(at).iter().filter(|e| (self.keep)(at, e)).cloned().collect()
    }
    fn restrict(&self, f: &ThetaMorphism, e: &Element) -> Element {
        self.parent.restrict(f, e)
    }
}

/// The subpresheaf of elements satisfying `keep`. The predicate must be
/// closed under restriction; functoriality checks catch violations.
pub fn subpresheaf(
    name: impl Into<String>,
    parent: &Presheaf,
    keep: impl Fn(&ThetaObject, &Element) -> bool + Send + Sync + 'static,
) -> (Presheaf, NatTransformation) {
    sub_with_kind(name, parent, Kind::Sub, keep)
}

fn sub_with_kind(
    name: impl Into<String>,
    parent: &Presheaf,
    kind: Kind,
    keep: impl Fn(&ThetaObject, &Element) -> bool + Send + Sync + 'static,
) -> (Presheaf, NatTransformation) {
    let name = name.into();
    let sub = Presheaf::new(name.clone(), Sub { parent: parent.clone(), kind, keep: Arc::new(keep) });
    let incl = NatTransformation::inclusion(format!("{name} ⊂ {}", parent.name()), &sub, parent);
    (sub, incl)
}

/// `∂Θ[θ]`: the non-surjective maps into θ, with its inclusion `δ_θ`.
pub fn boundary(theta: &ThetaObject) -> (Presheaf, NatTransformation) {
    let rep = representable(theta);
    sub_with_kind(format!("∂Θ[{theta}]"), &rep, Kind::Boundary, |_, e| {
        !e.as_mor().expect("representable element").is_surjective()
    })
}

/// Like [`boundary`] but including into a given copy of `Θ[θ]`.
pub fn boundary_in(rep: &Presheaf) -> (Presheaf, NatTransformation) {
    sub_with_kind(format!("∂{}", rep.name()), rep, Kind::Boundary, |_, e| {
        !e.as_mor().expect("representable element").is_surjective()
    })
}

struct Constant {
    level: usize,
    kind: Kind,
    elems: Vec<Element>,
}

impl Construction for Constant {
    fn level(&self) -> usize {
        self.level
    }
    fn kind(&self) -> Kind {
        self.kind
    }
    fn compute(&self, _: &ThetaObject) -> Vec<Element> {
        self.elems.clone()
    }
    fn restrict(&self, _: &ThetaMorphism, e: &Element) -> Element {
        e.clone()
    }
}

pub fn terminal(level: usize) -> Presheaf {
    Presheaf::new("1", Constant { level, kind: Kind::Terminal, elems: vec![Element::Point] })
}

pub fn empty(level: usize) -> Presheaf {
    Presheaf::new("∅", Constant { level, kind: Kind::Empty, elems: Vec::new() })
}

/// The constant presheaf on a finite set.
pub fn constant(name: impl Into<String>, level: usize, elems: Vec<Element>) -> Presheaf {
    Presheaf::new(name, Constant { level, kind: Kind::Constant, elems })
}

pub fn to_terminal(x: &Presheaf) -> NatTransformation {
    let one = terminal(x.level());
    NatTransformation::new(format!("!_{}", x.name()), x, &one, |_, _| Element::Point)
}

/// `X_0` as a constant presheaf, with its inclusion `X_0 -> X` given by
/// restriction along `θ -> [0]`.
pub fn vertices(x: &Presheaf) -> (Presheaf, NatTransformation) {
    let pt = ThetaObject::terminal(x.level());
    let x0 = constant(format!("{}_0", x.name()), x.level(), x.eval(&pt).to_vec());
    let xc = x.clone();
    let incl = NatTransformation::new(format!("{}_0 -> {}", x.name(), x.name()), &x0, x, move |obj, e| {
        xc.restrict(&ThetaMorphism::to_terminal(obj), e)
    });
    (x0, incl)
}

struct ProductC {
    x: Presheaf,
    y: Presheaf,
}

impl Construction for ProductC {
    fn level(&self) -> usize {
        self.x.level()
    }
    fn kind(&self) -> Kind {
        Kind::Product
    }
    fn compute(&self, at: &ThetaObject) -> Vec<Element> {
        let ys = self.y.eval(at);
        self.x
            .eval(at)
            .iter()
            .flat_map(|a| ys.iter().map(move |b| Element::pair(a.clone(), b.clone())))
            .collect()
    }
    fn restrict(&self, f: &ThetaMorphism, e: &Element) -> Element {
        let (a, b) = e.as_pair().expect("product element");
        Element::pair(self.x.restrict(f, a), self.y.restrict(f, b))
    }
}

/// A binary product with its projections.
#[derive(Clone, Debug)]
pub struct Product {
    pub presheaf: Presheaf,
    pub p1: NatTransformation,
    pub p2: NatTransformation,
}

impl Product {
    /// `⟨f, g⟩: W -> X × Y`.
    pub fn pairing(&self, f: &NatTransformation, g: &NatTransformation) -> NatTransformation {
        let (f, g) = (f.clone(), g.clone());
        NatTransformation::new(
            format!("<{}, {}>", f.name(), g.name()),
            &f.src().clone(),
            &self.presheaf,
            move |obj, e| Element::pair(f.apply(obj, e), g.apply(obj, e)),
        )
    }
}

pub fn product(x: &Presheaf, y: &Presheaf) -> Result<Product> {
    if x.level() != y.level() {
        return Err(Error::LevelMismatch { expected: x.level(), found: y.level() });
    }
    let presheaf = Presheaf::new(format!("{} × {}", x.name(), y.name()), ProductC { x: x.clone(), y: y.clone() });
    let p1 = NatTransformation::new("p1", &presheaf, x, |_, e| e.as_pair().expect("pair").0.clone());
    let p2 = NatTransformation::new("p2", &presheaf, y, |_, e| e.as_pair().expect("pair").1.clone());
    Ok(Product { presheaf, p1, p2 })
}

/// `u × v: X × Y -> X' × Y'`.
pub fn product_map(u: &NatTransformation, v: &NatTransformation, src: &Product, dst: &Product) -> NatTransformation {
    let (u, v) = (u.clone(), v.clone());
    NatTransformation::new(
        format!("{} × {}", u.name(), v.name()),
        &src.presheaf,
        &dst.presheaf,
        move |obj, e| {
            let (a, b) = e.as_pair().expect("pair");
            Element::pair(u.apply(obj, a), v.apply(obj, b))
        },
    )
}

struct PullbackC {
    f: NatTransformation,
    g: NatTransformation,
}

impl Construction for PullbackC {
    fn level(&self) -> usize {
        self.f.src().level()
    }
    fn kind(&self) -> Kind {
        Kind::Pullback
    }
    fn compute(&self, at: &ThetaObject) -> Vec<Element> {
        let mut by_image: HashMap<Element, Vec<Element>> = HashMap::new();
        for y in self.g.src().eval(at).iter() {
            by_image.entry(self.g.apply(at, y)).or_default().push(y.clone());
        }
        let mut out = Vec::new();
        for x in self.f.src().eval(at).iter() {
            if let Some(ys) = by_image.get(&self.f.apply(at, x)) {
                out.extend(ys.iter().map(|y| Element::pair(x.clone(), y.clone())));
            }
        }
        out
    }
    fn restrict(&self, h: &ThetaMorphism, e: &Element) -> Element {
        let (a, b) = e.as_pair().expect("pullback element");
        Element::pair(self.f.src().restrict(h, a), self.g.src().restrict(h, b))
    }
}

#[derive(Clone, Debug)]
pub struct Pullback {
    pub presheaf: Presheaf,
    pub p1: NatTransformation,
    pub p2: NatTransformation,
}

/// The fiber product of `f: X -> Z` and `g: Y -> Z`, as pairs.
pub fn pullback(f: &NatTransformation, g: &NatTransformation) -> Result<Pullback> {
    if !f.dst().same(g.dst()) {
        return Err(Error::CodomainMismatch(format!("{} vs {}", f.dst().name(), g.dst().name())));
    }
    let presheaf = Presheaf::new(
        format!("{} ×_{} {}", f.src().name(), f.dst().name(), g.src().name()),
        PullbackC { f: f.clone(), g: g.clone() },
    );
    let p1 = NatTransformation::new("p1", &presheaf, f.src(), |_, e| e.as_pair().expect("pair").0.clone());
    let p2 = NatTransformation::new("p2", &presheaf, g.src(), |_, e| e.as_pair().expect("pair").1.clone());
    Ok(Pullback { presheaf, p1, p2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse_object;
    use crate::theta::globe;

    fn obj(s: &str, n: usize) -> ThetaObject {
        parse_object(s, n).unwrap()
    }

    #[test]
    fn representable_values() {
        let d1 = globe(1, 2).unwrap();
        let d2 = globe(2, 2).unwrap();
        assert_eq!(representable(&d1).size(&globe(0, 2).unwrap()), 2);
        assert_eq!(representable(&d2).size(&d2), 5);
        for x in theta::enumerate_objects(2, 2) {
            assert!(representable(&x).contains(&x, &Element::Mor(ThetaMorphism::identity(&x))));
        }
    }

    #[test]
    fn boundary_values() {
        let d0 = globe(0, 2).unwrap();
        let d1 = globe(1, 2).unwrap();
        let d2 = globe(2, 2).unwrap();
        let (b2, _) = boundary(&d2);
        assert_eq!(b2.size(&d2), 4);
        assert!(!b2.contains(&d2, &Element::Mor(ThetaMorphism::identity(&d2))));
        assert_eq!(boundary(&d1).0.size(&d0), 2);
        let (b0, _) = boundary(&d0);
        for x in theta::enumerate_objects(2, 2) {
            assert_eq!(b0.size(&x), 0);
        }
    }

    #[test]
    fn product_values() {
        let one = obj("[1]", 1);
        let d = representable(&one);
        assert_eq!(product(&d, &d).unwrap().presheaf.size(&one), 9);

        let d1 = globe(1, 2).unwrap();
        let p = product(&representable(&globe(2, 2).unwrap()), &representable(&d1)).unwrap();
        assert_eq!(p.presheaf.size(&d1), 12);

        let x = representable(&obj("[2;1,0]", 2));
        let xt = product(&x, &terminal(2)).unwrap();
        for o in theta::enumerate_objects(2, 2) {
            assert_eq!(xt.presheaf.size(&o), x.size(&o));
        }
        assert!(product(&d, &x).is_err());
    }

    #[test]
    fn pullback_values() {
        let d2 = globe(2, 2).unwrap();
        let x = representable(&d2);
        let y = representable(&obj("[2;0,1]", 2));
        let pb = pullback(&to_terminal(&x), &to_terminal(&y));
        assert!(pb.is_err(), "distinct terminal presheaves are distinct codomains");
        let one = terminal(2);
        let fx = NatTransformation::new("!", &x, &one, |_, _| Element::Point);
        let fy = NatTransformation::new("!", &y, &one, |_, _| Element::Point);
        let pb = pullback(&fx, &fy).unwrap();
        let prod = product(&x, &y).unwrap();
        for o in theta::enumerate_objects(2, 2) {
            assert_eq!(*pb.presheaf.eval(&o), *prod.presheaf.eval(&o));
        }

        // fiber of Θ[D_2](D_1) over the pair (vertex 0, vertex 1)
        let d1 = globe(1, 2).unwrap();
        let d0 = globe(0, 2).unwrap();
        let gm = theta::globe_maps(1, 2).unwrap();
        let endpoints = product(&x, &x).unwrap();
        let (s, t) = (gm.s.clone(), gm.t.clone());
        let xx = x.clone();
        let ends = NatTransformation::new("ends", &x, &endpoints.presheaf, move |_, e| {
            Element::pair(xx.restrict(&s, e), xx.restrict(&t, e))
        });
        let target = Element::pair(
            Element::Mor(ThetaMorphism::vertex(&d2, 0).unwrap()),
            Element::Mor(ThetaMorphism::vertex(&d2, 1).unwrap()),
        );
        let fiber: Vec<_> = x
            .eval(&d1)
            .iter()
            .filter(|e| ends.apply(&d1, e) == target)
            .cloned()
            .collect();
        assert_eq!(fiber.len(), 2);
        assert_eq!(x.size(&d0), 2);
    }

    #[test]
    fn vertices_constant() {
        let x = representable(&obj("[2;1,0]", 2));
        let (x0, incl) = vertices(&x);
        let o = obj("[1;1]", 2);
        assert_eq!(x0.size(&o), 3);
        for e in x0.eval(&o).iter() {
            assert!(x.contains(&o, &incl.apply(&o, e)));
        }
    }

    #[test]
    fn universe_spec() {
        let u = UniverseSpec::new(2, 2);
        assert_eq!(u.objects().len(), 13);
        assert_eq!(u.at_level(1).objects().len(), 3);
        assert!(UniverseSpec::empty(2).is_empty());
        let e = UniverseSpec::explicit(2, vec![obj("[1;1]", 2), obj("[0]", 2), obj("[1;1]", 2)]);
        assert_eq!(e.objects(), vec![obj("[0]", 2), obj("[1;1]", 2)]);
    }
}
