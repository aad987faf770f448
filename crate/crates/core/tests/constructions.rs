use thetan::constructions::cylinder::cylinder_i;
use thetan::constructions::nerve::nerve_j;
use thetan::constructions::spine::spine;
use thetan::presheaf::check::{check_iso, count_natural_maps};
use thetan::presheaf::restriction::lower_shriek_i;
use thetan::presheaf::suspension::{hom_fiber, suspension_presheaf};
use thetan::presheaf::{boundary, pushout, representable, Element, NatTransformation};
use thetan::theta::{enumerate_objects, globe};
use thetan::{parse_object, ThetaMorphism, ThetaObject};

fn obj(s: &str, n: usize) -> ThetaObject {
    parse_object(s, n).unwrap()
}

#[test]
fn cylinder_spot_counts() {
    let c = cylinder_i(&obj("[1]", 1)).unwrap();
    assert_eq!(c.presheaf().size(&obj("[1]", 1)), 9);
    assert_eq!(c.product.presheaf.size(&obj("[1]", 1)), 9);
    let c = cylinder_i(&globe(2, 2).unwrap()).unwrap();
    let d1 = globe(1, 2).unwrap();
    assert_eq!(c.presheaf().size(&d1), 12);
    assert_eq!(c.product.presheaf.size(&d1), 12);
}

#[test]
fn globe_boundary_as_pushout() {
    let d1 = globe(1, 2).unwrap();
    let (bd, incl) = boundary(&d1);
    let other = representable(&d1);
    let incl2 = NatTransformation::inclusion("∂ ⊂ Θ", &bd, &other);
    let po = pushout(&incl, &incl2).unwrap();
    let (target, _) = boundary(&globe(2, 2).unwrap());
    assert_eq!(po.presheaf.size(&d1), 4);
    assert_eq!(target.size(&d1), 4);
}

#[test]
fn sphere_from_simplicial_boundary() {
    let (bd, _) = boundary(&obj("[2]", 1));
    let ext = lower_shriek_i(&bd, 2);
    let (target, _) = boundary(&obj("[2]", 2));
    for o in enumerate_objects(2, 2) {
        assert_eq!(ext.size(&o), target.size(&o), "at {o}");
    }
}

#[test]
fn bipointed_maps_into_the_two_globe() {
    let d2 = globe(2, 2).unwrap();
    let y = representable(&d2);
    let a = Element::Mor(ThetaMorphism::vertex(&d2, 0).unwrap());
    let b = Element::Mor(ThetaMorphism::vertex(&d2, 1).unwrap());
    let x = representable(&obj("[1]", 1));
    let sx = suspension_presheaf(&x);
    let ends = [a.clone(), b.clone()];
    let yc = y.clone();
    let fixed = move |o: &ThetaObject, e: &Element| match e {
        Element::Base(eps) => Some(yc.restrict(&ThetaMorphism::to_terminal(o), &ends[*eps as usize])),
        _ => None,
    };
    assert_eq!(count_natural_maps(&sx, &y, &enumerate_objects(2, 2), &fixed, usize::MAX), 3);
    let none = |_: &ThetaObject, _: &Element| None;
    let h = hom_fiber(&y, &a, &b).unwrap();
    assert_eq!(count_natural_maps(&x, &h, &enumerate_objects(1, 2), &none, usize::MAX), 3);
}

#[test]
fn nerve_of_j_doubles() {
    let nj = nerve_j(2);
    for o in enumerate_objects(2, 2) {
        assert_eq!(nj.size(&o), 1 << (o.width() + 1));
    }
}

#[test]
fn spine_of_two_composable_arrows() {
    let s = spine(&obj("[2]", 1)).unwrap();
    assert_eq!(s.presheaf().size(&obj("[1]", 1)), 5);
    assert_eq!(s.presheaf().size(&obj("[2]", 1)), 7);
    assert!(check_iso(&NatTransformation::identity(s.presheaf()), &enumerate_objects(1, 2)).holds());
}
