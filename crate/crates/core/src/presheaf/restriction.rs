//! Restriction along `i: Δ -> Θ_n` and its left adjoint `i_! ≅ π^*`.

use crate::theta::{self, ThetaMorphism, ThetaObject};
use crate::simplex::Ordinal;

use super::{Construction, Element, Kind, NatTransformation, Presheaf};

fn simplex_of(obj: &ThetaObject, n: usize) -> ThetaObject {
    ThetaObject::inclusion(Ordinal(obj.width()), n).expect("level >= 1")
}

struct RestrictedC {
    x: Presheaf,
}

impl Construction for RestrictedC {
    fn level(&self) -> usize {
        1
    }
    fn kind(&self) -> Kind {
        Kind::Restricted
    }
    fn compute(&self, obj: &ThetaObject) -> Vec<Element> {
        self.x.eval(&simplex_of(obj, self.x.level())).to_vec()
    }
    fn restrict(&self, f: &ThetaMorphism, e: &Element) -> Element {
        let u = ThetaMorphism::inclusion(f.map(), self.x.level()).expect("level >= 1");
        self.x.restrict(&u, e)
    }
}

/// `i^*X`, a presheaf on Θ_1 = Δ with `(i^*X)_m = X(i[m])`.
pub fn restrict_i(x: &Presheaf) -> Presheaf {
    assert!(x.level() >= 1, "i^* needs a presheaf of level >= 1");
    Presheaf::new(format!("i^*{}", x.name()), RestrictedC { x: x.clone() })
}

struct ExtendedC {
    s: Presheaf,
    level: usize,
}

impl Construction for ExtendedC {
    fn level(&self) -> usize {
        self.level
    }
    fn kind(&self) -> Kind {
        Kind::Extended
    }
    fn compute(&self, obj: &ThetaObject) -> Vec<Element> {
        self.s.eval(&simplex_of(obj, 1)).to_vec()
    }
    fn restrict(&self, f: &ThetaMorphism, e: &Element) -> Element {
        let u = ThetaMorphism::inclusion(f.map(), 1).expect("level 1");
        self.s.restrict(&u, e)
    }
}

/// `i_!S = π^*S` at level `n`: `θ ↦ S(πθ)`.
pub fn lower_shriek_i(s: &Presheaf, n: usize) -> Presheaf {
    assert_eq!(s.level(), 1, "i_! takes a simplicial presheaf");
    assert!(n >= 1, "i_! lands in level >= 1");
    Presheaf::new(format!("i_!{}", s.name()), ExtendedC { s: s.clone(), level: n })
}

/// `i_!(Δ[m]) -> Θ_n[i[m]]`, transposing `u: πθ -> [m]` to `θ -> i[m]`.
pub fn lower_shriek_representable_iso(src: &Presheaf, dst: &Presheaf) -> NatTransformation {
    NatTransformation::new(format!("{} ≅ {}", src.name(), dst.name()), src, dst, |obj, e| {
        let u = e.as_mor().expect("simplex").map();
        Element::Mor(theta::pi_i_transpose(obj, u).expect("transpose"))
    })
}

/// Unit `S -> i^* i_! S`; both sides share an encoding.
pub fn unit_i(s: &Presheaf, iis: &Presheaf) -> NatTransformation {
    NatTransformation::inclusion(format!("η_{}", s.name()), s, iis)
}

/// Counit `i_! i^* X -> X`, restriction along `θ -> iπθ`.
pub fn counit_i(iix: &Presheaf, x: &Presheaf) -> NatTransformation {
    let xc = x.clone();
    NatTransformation::new(format!("ε_{}", x.name()), iix, x, move |obj, e| {
        xc.restrict(&theta::pi_i_unit(obj).expect("unit"), e)
    })
}

#[cfg(test)]
mod tests {
    use super::super::{boundary, representable, terminal};
    use super::*;
    use crate::term::parse_object;
    use crate::theta::enumerate_objects;

    fn obj(s: &str, n: usize) -> ThetaObject {
        parse_object(s, n).unwrap()
    }

    #[test]
    fn restriction_counts() {
        let x = representable(&obj("[2]", 2));
        let r = restrict_i(&x);
        assert_eq!(r.size(&obj("[1]", 1)), 6);
        let t = lower_shriek_i(&representable(&obj("[0]", 1)), 2);
        for o in enumerate_objects(2, 2) {
            assert_eq!(t.size(&o), terminal(2).size(&o));
        }
    }

    #[test]
    fn boundary_commutes_with_extension() {
        let s = boundary(&obj("[2]", 1)).0;
        let e = lower_shriek_i(&s, 2);
        let b = boundary(&obj("[2]", 2)).0;
        for o in enumerate_objects(2, 2) {
            assert_eq!(e.size(&o), b.size(&o), "at {o}");
        }
    }

    #[test]
    fn representables_extend_to_representables() {
        for m in 0..3 {
            let s = representable(&ThetaObject::inclusion(Ordinal(m), 1).unwrap());
            let e = lower_shriek_i(&s, 2);
            let y = representable(&ThetaObject::inclusion(Ordinal(m), 2).unwrap());
            let iso = lower_shriek_representable_iso(&e, &y);
            for o in enumerate_objects(2, 2) {
                let mut img: Vec<_> = e.eval(&o).iter().map(|x| iso.apply(&o, x)).collect();
                img.sort();
                assert_eq!(img, *y.eval(&o));
            }
        }
    }
}
