//! Levelwise colimits of finite diagrams.
//!
//! At each object the colimit is the disjoint union of the vertex values
//! modulo the equivalence generated by the edges, found with union-find. A
//! class is represented by its least member `Tag(v, e)`, which is also the
//! least element under the derived order since vertices are scanned in order.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::theta::{ThetaMorphism, ThetaObject};

use super::{Construction, Element, Kind, NatTransformation, Presheaf};

#[derive(Clone, Debug)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub map: NatTransformation,
}

/// A finite diagram of presheaves; edges are natural transformations between
/// listed vertices.
#[derive(Clone, Debug)]
pub struct Diagram {
    pub shape: String,
    pub labels: Vec<String>,
    pub vertices: Vec<Presheaf>,
    pub edges: Vec<Edge>,
}

impl Diagram {
    pub fn new(shape: impl Into<String>) -> Self {
        Self { shape: shape.into(), labels: Vec::new(), vertices: Vec::new(), edges: Vec::new() }
    }

    pub fn add_vertex(&mut self, label: impl Into<String>, p: &Presheaf) -> usize {
        self.labels.push(label.into());
        self.vertices.push(p.clone());
        self.vertices.len() - 1
    }

    /// Adds an edge; the map must go between the two vertices.
    pub fn add_edge(&mut self, from: usize, to: usize, map: &NatTransformation) -> Result<()> {
        let (Some(a), Some(b)) = (self.vertices.get(from), self.vertices.get(to)) else {
            return Err(Error::IndexOutOfRange { what: "diagram vertex", index: from.max(to), bound: self.vertices.len() });
        };
        if !map.src().same(a) || !map.dst().same(b) {
            return Err(Error::CodomainMismatch(format!(
                "edge {from} -> {to} carries {} -> {}",
                map.src().name(),
                map.dst().name()
            )));
        }
        self.edges.push(Edge { from, to, map: map.clone() });
        Ok(())
    }

    pub fn level(&self) -> Option<usize> {
        self.vertices.first().map(Presheaf::level)
    }

    /// Graphviz rendering of the shape.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", self.shape.replace('"', "'"));
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  v{i} [label=\"{}\"];", l.replace('"', "'"));
        }
        for e in &self.edges {
            let _ = writeln!(out, "  v{} -> v{} [label=\"{}\"];", e.from, e.to, e.map.name().replace('"', "'"));
        }
        out.push_str("}\n");
        out
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Keeps the smaller root so that roots are least members.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

struct Level {
    reps: Vec<Element>,
    /// `class[v][k]` is the representative of the k-th element of vertex v.
    class: Vec<Vec<Element>>,
}

struct Inner {
    diagram: Diagram,
    levels: Mutex<HashMap<ThetaObject, Arc<Level>>>,
}

impl Inner {
    fn level_at(&self, obj: &ThetaObject) -> Arc<Level> {
        if let Some(hit) = self.levels.lock().expect("colimit cache").get(obj) {
            return hit.clone();
        }
        let values: Vec<_> = self.diagram.vertices.iter().map(|v| v.eval(obj)).collect();
        let mut offset = Vec::with_capacity(values.len() + 1);
        offset.push(0);
        for v in &values {
            offset.push(offset.last().unwrap() + v.len());
        }
        let mut uf = UnionFind::new(*offset.last().unwrap());
        for e in &self.diagram.edges {
            for (k, x) in values[e.from].iter().enumerate() {
                let y = e.map.apply(obj, x);
                let pos = values[e.to].binary_search(&y).unwrap_or_else(|_| {
                    panic!("{} sends {x} at {obj} outside its codomain", e.map.name())
                });
                uf.union(offset[e.from] + k, offset[e.to] + pos);
            }
        }
        let tagged = |idx: usize| {
            let v = offset.partition_point(|&o| o <= idx) - 1;
            Element::tag(v, values[v][idx - offset[v]].clone())
        };
        let mut reps = Vec::new();
        let mut class = Vec::with_capacity(values.len());
        for (v, vals) in values.iter().enumerate() {
            let mut row = Vec::with_capacity(vals.len());
            for k in 0..vals.len() {
                let idx = offset[v] + k;
                let root = uf.find(idx);
                if root == idx {
                    reps.push(tagged(idx));
                }
                row.push(tagged(root));
            }
            class.push(row);
        }
        let level = Arc::new(Level { reps, class });
        self.levels.lock().expect("colimit cache").entry(obj.clone()).or_insert(level).clone()
    }

    fn canonical(&self, obj: &ThetaObject, v: usize, e: &Element) -> Element {
        let vals = self.diagram.vertices[v].eval(obj);
        let k = vals
            .binary_search(e)
            .unwrap_or_else(|_| panic!("{e} is not in vertex {v} at {obj}"));
        self.level_at(obj).class[v][k].clone()
    }
}

struct ColimitC(Arc<Inner>);

impl Construction for ColimitC {
    fn level(&self) -> usize {
        self.0.diagram.level().expect("non-empty diagram")
    }
    fn kind(&self) -> Kind {
        Kind::Colimit
    }
    fn compute(&self, obj: &ThetaObject) -> Vec<Element> {
        self.0.level_at(obj).reps.clone()
    }
    fn restrict(&self, f: &ThetaMorphism, e: &Element) -> Element {
        let (v, x) = e.as_tag().expect("colimit element");
        let y = self.0.diagram.vertices[v].restrict(f, x);
        self.0.canonical(f.src(), v, &y)
    }
}

/// A colimit together with its coprojections.
#[derive(Clone, Debug)]
pub struct Colimit {
    pub presheaf: Presheaf,
    pub coprojections: Vec<NatTransformation>,
    inner: Arc<InnerHandle>,
}

struct InnerHandle(Arc<Inner>);

impl std::fmt::Debug for InnerHandle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0.diagram.shape)
    }
}

impl Colimit {
    pub fn diagram(&self) -> &Diagram {
        &self.inner.0.diagram
    }

    /// The class of `e ∈ vertex v (obj)`.
    pub fn class_of(&self, obj: &ThetaObject, v: usize, e: &Element) -> Element {
        self.inner.0.canonical(obj, v, e)
    }

    /// The map out of the colimit induced by a cocone; `legs[v]` starts at
    /// vertex `v`. Compatibility of the legs is not checked here.
    pub fn induced(&self, name: impl Into<String>, dst: &Presheaf, legs: &[NatTransformation]) -> NatTransformation {
        assert_eq!(legs.len(), self.diagram().vertices.len(), "one leg per vertex");
        let legs = legs.to_vec();
        NatTransformation::new(name, &self.presheaf, dst, move |obj, e| {
            let (v, x) = e.as_tag().expect("colimit element");
            legs[v].apply(obj, x)
        })
    }
}

/// Colimit of a diagram with at least one vertex. A diagram with no vertices
/// has no level; use [`super::empty`] for the initial presheaf.
pub fn colimit(diagram: Diagram) -> Colimit {
    assert!(!diagram.vertices.is_empty(), "colimit of a diagram without vertices");
    let name = format!("colim {}", diagram.shape);
    let inner = Arc::new(Inner { diagram, levels: Mutex::new(HashMap::new()) });
    let presheaf = Presheaf::new(name, ColimitC(inner.clone()));
    let coprojections = inner
        .diagram
        .vertices
        .iter()
        .enumerate()
        .map(|(v, p)| {
            let inner = inner.clone();
            NatTransformation::new(format!("in_{v}"), p, &presheaf, move |obj, e| inner.canonical(obj, v, e))
        })
        .collect();
    Colimit { presheaf, coprojections, inner: Arc::new(InnerHandle(inner)) }
}

/// Pushout of `X <-f- A -g-> Y`. Vertices are `[X, Y, A]`, so every class has
/// a representative in `X` or `Y`; coprojections 0 and 1 are the two legs.
pub fn pushout(f: &NatTransformation, g: &NatTransformation) -> Result<Colimit> {
    if !f.src().same(g.src()) {
        return Err(Error::CodomainMismatch(format!(
            "pushout span has sources {} and {}",
            f.src().name(),
            g.src().name()
        )));
    }
    let mut d = Diagram::new(format!("{} ⊔_{} {}", f.dst().name(), f.src().name(), g.dst().name()));
    let x = d.add_vertex(f.dst().name(), f.dst());
    let y = d.add_vertex(g.dst().name(), g.dst());
    let a = d.add_vertex(f.src().name(), f.src());
    d.add_edge(a, x, f)?;
    d.add_edge(a, y, g)?;
    Ok(colimit(d))
}

pub fn coproduct(xs: &[Presheaf]) -> Colimit {
    let mut d = Diagram::new(xs.iter().map(|x| x.name().to_string()).collect::<Vec<_>>().join(" ⊔ "));
    for x in xs {
        d.add_vertex(x.name(), x);
    }
    colimit(d)
}

#[cfg(test)]
mod tests {
    use super::super::{boundary, representable, Element};
    use super::*;
    use crate::simplex::MonotoneMap;
    use crate::term::parse_object;
    use crate::theta::{enumerate_objects, globe, globe_maps, ThetaMorphism};

    fn obj(s: &str, n: usize) -> ThetaObject {
        parse_object(s, n).unwrap()
    }

    /// Count of classes by a separate naive closure computation.
    fn naive_count(d: &Diagram, at: &ThetaObject) -> usize {
        let mut items: Vec<(usize, Element)> = Vec::new();
        for (v, p) in d.vertices.iter().enumerate() {
            items.extend(p.eval(at).iter().map(|e| (v, e.clone())));
        }
        let mut label: Vec<usize> = (0..items.len()).collect();
        loop {
            let mut changed = false;
            for e in &d.edges {
                for (i, (v, x)) in items.clone().iter().enumerate() {
                    if *v != e.from {
                        continue;
                    }
                    let y = e.map.apply(at, x);
                    let j = items.iter().position(|(w, z)| *w == e.to && *z == y).unwrap();
                    let m = label[i].min(label[j]);
                    let (li, lj) = (label[i], label[j]);
                    for l in label.iter_mut() {
                        if *l == li || *l == lj {
                            if *l != m {
                                changed = true;
                            }
                            *l = m;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let mut l = label.clone();
        l.sort();
        l.dedup();
        l.len()
    }

    #[test]
    fn globe_pushout_matches_boundary() {
        let d0 = globe(0, 2).unwrap();
        let d1 = globe(1, 2).unwrap();
        let d2 = globe(2, 2).unwrap();
        let (a, incl) = boundary(&d1);
        let (_, other) = boundary(&d1);
        assert!(pushout(&incl, &other).is_err(), "span legs must share their source presheaf");
        let _ = a;
        let po = pushout(&incl, &incl).unwrap();
        assert_eq!(po.presheaf.size(&d1), 4);
        assert_eq!(po.presheaf.size(&d1), boundary(&d2).0.size(&d1));
        assert_eq!(po.presheaf.size(&d0), 2);
        for o in enumerate_objects(2, 2) {
            assert_eq!(po.presheaf.size(&o), naive_count(po.diagram(), &o), "at {o}");
        }
    }

    #[test]
    fn simplicial_pushout() {
        let one = obj("[1]", 1);
        let two = obj("[2]", 1);
        let a = representable(&one);
        let x = representable(&two);
        let y = representable(&two);
        let d2 = ThetaMorphism::inclusion(&MonotoneMap::face(2, 1).unwrap(), 1).unwrap();
        let d0 = ThetaMorphism::inclusion(&MonotoneMap::face(0, 1).unwrap(), 1).unwrap();
        let f = super::super::representable_map(&d2, &a, &x);
        let g = super::super::representable_map(&d0, &a, &y);
        let po = pushout(&f, &g).unwrap();
        assert_eq!(po.presheaf.size(&one), 9);
        assert_eq!(naive_count(po.diagram(), &one), 9);
    }

    #[test]
    fn single_vertex_and_coproduct() {
        let x = representable(&obj("[1;1]", 2));
        let c = coproduct(std::slice::from_ref(&x));
        let c2 = coproduct(&[x.clone(), x.clone()]);
        for o in enumerate_objects(2, 2) {
            assert_eq!(c.presheaf.size(&o), x.size(&o));
            assert_eq!(c2.presheaf.size(&o), 2 * x.size(&o));
        }
    }

    #[test]
    fn restriction_is_well_defined() {
        let d1 = globe(1, 2).unwrap();
        let (_, incl) = boundary(&d1);
        let po = pushout(&incl, &incl).unwrap();
        let gm = globe_maps(1, 2).unwrap();
        for e in po.presheaf.eval(&d1).iter() {
            let (v, x) = e.as_tag().unwrap();
            for m in [&gm.s, &gm.t] {
                let direct = po.presheaf.restrict(m, e);
                let via = po.class_of(m.src(), v, &incl.dst().restrict(m, x));
                assert_eq!(direct, via);
            }
        }
        assert!(!po.diagram().to_dot().is_empty());
    }
}
