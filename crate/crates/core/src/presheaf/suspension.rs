//! Suspension of presheaves and its right adjoint, the hom-fiber.
//!
//! `(ΣX)([q](ψ_1, …, ψ_q))` is the two basepoints together with one copy of
//! `X(ψ_a)` for each block `a`. An element in block `a` restricts along
//! `[g](β)` to block `a'` through `β_a` when `g(a'-1) < a <= g(a')`; when no
//! source block covers `a` the element lands on basepoint 0 if the whole image
//! lies left of `a` and on basepoint 1 otherwise.
//!
//! The basepoints are never multiplied by a set of components: ΣX is a
//! bipointed colimit, so for a disconnected `X` all components share the same
//! two endpoints.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::theta::{ThetaMorphism, ThetaObject};

use super::{Construction, Element, Kind, NatTransformation, Presheaf};

struct SuspensionC {
    x: Presheaf,
}

impl Construction for SuspensionC {
    fn level(&self) -> usize {
        self.x.level() + 1
    }
    fn kind(&self) -> Kind {
        Kind::Suspension
    }
    fn compute(&self, obj: &ThetaObject) -> Vec<Element> {
        let mut out = vec![Element::Base(0), Element::Base(1)];
        for a in 1..=obj.width() {
            out.extend(self.x.eval(obj.block(a)).iter().map(|e| Element::Slot(a, Box::new(e.clone()))));
        }
        out
    }
    fn restrict(&self, g: &ThetaMorphism, e: &Element) -> Element {
        match e {
            Element::Base(_) => e.clone(),
            Element::Slot(a, x) => restrict_slot(&self.x, g, *a, x),
            _ => panic!("{e} is not an element of a suspension"),
        }
    }
}

fn restrict_slot(x: &Presheaf, g: &ThetaMorphism, a: usize, e: &Element) -> Element {
    let map = g.map();
    match (1..=map.src()).find(|&i| map.apply(i - 1) < a && a <= map.apply(i)) {
        Some(i) => Element::Slot(i, Box::new(x.restrict(g.component(a).expect("covered block"), e))),
        None if map.apply(map.src()) < a => Element::Base(0),
        None => Element::Base(1),
    }
}

/// `ΣX`, one level up, bipointed by `Base(0)` and `Base(1)`.
pub fn suspension_presheaf(x: &Presheaf) -> Presheaf {
    Presheaf::new(format!("Σ{}", x.name()), SuspensionC { x: x.clone() })
}

/// `Σu: ΣX -> ΣY`.
pub fn suspension_map(u: &NatTransformation, src: &Presheaf, dst: &Presheaf) -> NatTransformation {
    let u = u.clone();
    NatTransformation::new(format!("Σ{}", u.name()), src, dst, move |obj, e| match e {
        Element::Slot(a, x) => Element::Slot(*a, Box::new(u.apply(obj.block(*a), x))),
        other => other.clone(),
    })
}

/// The isomorphism `Σ(Θ[θ]) -> Θ[σθ]`: basepoint ε goes to the constant map
/// at vertex ε, and `h` in block `a` goes to the map cutting `[q]` at `a`
/// with component `h`.
pub fn sigma_representable_iso(theta: &ThetaObject, src: &Presheaf, dst: &Presheaf) -> NatTransformation {
    let target = theta.suspension();
    NatTransformation::new(format!("Σ(Θ[{theta}]) ≅ Θ[σ{theta}]"), src, dst, move |obj, e| {
        let q = obj.width();
        match e {
            Element::Base(eps) => {
                Element::Mor(ThetaMorphism::constant(obj, &target, *eps as usize).expect("vertex of σθ"))
            }
            Element::Slot(a, h) => {
                let h = h.as_mor().expect("representable element").clone();
                let values = (0..=q).map(|k| usize::from(k >= *a)).collect();
                let map = crate::simplex::MonotoneMap::new(q, 1, values).expect("cut map");
                Element::Mor(ThetaMorphism::from_rule(obj, &target, map, |_, _| h.clone()))
            }
            _ => panic!("{e} is not an element of a suspension"),
        }
    })
}

struct HomFiberC {
    x: Presheaf,
    a: Element,
    b: Element,
}

impl Construction for HomFiberC {
    fn level(&self) -> usize {
        self.x.level() - 1
    }
    fn kind(&self) -> Kind {
        Kind::HomFiber
    }
    fn compute(&self, obj: &ThetaObject) -> Vec<Element> {
        let s = obj.suspension();
        let v0 = ThetaMorphism::vertex(&s, 0).expect("vertex");
        let v1 = ThetaMorphism::vertex(&s, 1).expect("vertex");
        self.x
            .eval(&s)
            .iter()
            .filter(|e| self.x.restrict(&v0, e) == self.a && self.x.restrict(&v1, e) == self.b)
            .cloned()
            .collect()
    }
    fn restrict(&self, f: &ThetaMorphism, e: &Element) -> Element {
        self.x.restrict(&f.suspension(), e)
    }
}

/// `Hom_X(a, b)`: at θ, the elements of `X(σθ)` with endpoints `a` and `b`.
pub fn hom_fiber(x: &Presheaf, a: &Element, b: &Element) -> Result<Presheaf> {
    if x.level() == 0 {
        return Err(Error::LevelTooLow { what: "a hom-fiber", min: 1, level: 0 });
    }
    let pt = ThetaObject::terminal(x.level());
    for e in [a, b] {
        if !x.contains(&pt, e) {
            return Err(Error::NotAVertex(e.to_string()));
        }
    }
    Ok(Presheaf::new(
        format!("Hom_{}({a}, {b})", x.name()),
        HomFiberC { x: x.clone(), a: a.clone(), b: b.clone() },
    ))
}

/// Connected components of `X_0` under the relation generated by 1-cells,
/// each listed in canonical order.
pub fn pi0(x: &Presheaf) -> Vec<Vec<Element>> {
    let level = x.level();
    let pt = ThetaObject::terminal(level);
    let verts = x.eval(&pt);
    let mut comp: Vec<usize> = (0..verts.len()).collect();
    fn root(c: &mut [usize], mut i: usize) -> usize {
        while c[i] != i {
            c[i] = c[c[i]];
            i = c[i];
        }
        i
    }
    if level >= 1 {
        let d1 = crate::theta::globe(1, level).expect("D_1 exists at level >= 1");
        let v0 = ThetaMorphism::vertex(&d1, 0).expect("vertex");
        let v1 = ThetaMorphism::vertex(&d1, 1).expect("vertex");
        for e in x.eval(&d1).iter() {
            let i = verts.binary_search(&x.restrict(&v0, e)).expect("vertex of X");
            let j = verts.binary_search(&x.restrict(&v1, e)).expect("vertex of X");
            let (ri, rj) = (root(&mut comp, i), root(&mut comp, j));
            comp[ri.max(rj)] = ri.min(rj);
        }
    }
    let mut groups: BTreeMap<usize, Vec<Element>> = BTreeMap::new();
    for (i, v) in verts.iter().enumerate() {
        groups.entry(root(&mut comp, i)).or_default().push(v.clone());
    }
    groups.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::super::{boundary, representable, terminal};
    use super::*;
    use crate::term::parse_object;
    use crate::theta::{enumerate_objects, globe};

    fn obj(s: &str, n: usize) -> ThetaObject {
        parse_object(s, n).unwrap()
    }

    #[test]
    fn suspension_counts() {
        let s = suspension_presheaf(&representable(&obj("[1]", 1)));
        assert_eq!(s.size(&obj("[1;0]", 2)), 4);
        assert_eq!(s.size(&obj("[1;0]", 2)), representable(&globe(2, 2).unwrap()).size(&obj("[1;0]", 2)));
        let st = suspension_presheaf(&terminal(1));
        assert_eq!(st.size(&globe(1, 2).unwrap()), 3);
    }

    #[test]
    fn suspension_of_representables() {
        for theta in enumerate_objects(1, 2) {
            let x = representable(&theta);
            let s = suspension_presheaf(&x);
            let y = representable(&theta.suspension());
            let iso = sigma_representable_iso(&theta, &s, &y);
            for o in enumerate_objects(2, 2) {
                let mut image: Vec<_> = s.eval(&o).iter().map(|e| iso.apply(&o, e)).collect();
                image.sort();
                assert_eq!(image, *y.eval(&o), "Σ Θ[{theta}] at {o}");
            }
        }
    }

    #[test]
    fn boundary_of_suspended_interval() {
        let d = obj("[1]", 1);
        let (b, _) = boundary(&d);
        let s = suspension_presheaf(&b);
        let (target, _) = boundary(&globe(2, 2).unwrap());
        for o in enumerate_objects(2, 2) {
            assert_eq!(s.size(&o), target.size(&o), "at {o}");
        }
        assert_eq!(s.size(&ThetaObject::terminal(2)), 2);
    }

    #[test]
    fn hom_fiber_of_globe() {
        let d2 = globe(2, 2).unwrap();
        let x = representable(&d2);
        let pt = ThetaObject::terminal(2);
        let a = Element::Mor(ThetaMorphism::vertex(&d2, 0).unwrap());
        let b = Element::Mor(ThetaMorphism::vertex(&d2, 1).unwrap());
        let h = hom_fiber(&x, &a, &b).unwrap();
        let d1 = representable(&obj("[1]", 1));
        for o in enumerate_objects(1, 3) {
            assert_eq!(h.size(&o), d1.size(&o), "at {o}");
        }
        assert_eq!(h.size(&ThetaObject::terminal(1)), 2);
        assert!(hom_fiber(&x, &a, &Element::Point).is_err());
        let t = hom_fiber(&terminal(2), &Element::Point, &Element::Point).unwrap();
        for o in enumerate_objects(1, 2) {
            assert_eq!(t.size(&o), 1);
        }
        let _ = pt;
    }

    #[test]
    fn components() {
        let d = obj("[1]", 1);
        assert_eq!(pi0(&representable(&d)).len(), 1);
        assert_eq!(pi0(&boundary(&d).0).len(), 2);
        assert_eq!(pi0(&terminal(2)).len(), 1);
    }
}
