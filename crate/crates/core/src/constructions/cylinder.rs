//! The cylinder `𝓘(c)` of an object `c = [p](a_1, …, a_p)` of Θ_n and its
//! isomorphism with `Θ[c] × I`, `I = [1](*)`.
//!
//! The pieces are `c^i = [p+1](a_1, …, a_i, *, a_{i+1}, …, a_p)` for
//! `0 <= i <= p`, glued along the zigzag
//! `c^0 <-α^0- c -β^1-> c^1 <-α^1- c -β^2-> … -β^p-> c^p`.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::presheaf::{self, colimit, product, Colimit, Diagram, Element, NatTransformation, Presheaf, Product};
use crate::simplex::MonotoneMap;
use crate::theta::{ThetaMorphism, ThetaObject};

/// The pieces and structure maps of `𝓘(c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CylinderDecomposition {
    pub c: ThetaObject,
    pub pieces: Vec<ThetaObject>,
    /// `α^i: c -> c^i` for `0 <= i < p`.
    pub alpha: Vec<ThetaMorphism>,
    /// `β^i: c -> c^i` for `1 <= i <= p`, stored at index `i - 1`.
    pub beta: Vec<ThetaMorphism>,
    /// `σ^i: c^i -> c`.
    pub sigma: Vec<ThetaMorphism>,
    /// `γ^i: c^i -> I`.
    pub gamma: Vec<ThetaMorphism>,
    pub interval: ThetaObject,
}

/// Builds a map `c -> c^i` or `d -> c^i` from outer values, taking the
/// component into the inserted block to be terminal and all others from `comp`.
fn into_piece(
    src: &ThetaObject,
    piece: &ThetaObject,
    i: usize,
    values: Vec<usize>,
    comp: impl Fn(usize, usize) -> ThetaMorphism,
) -> ThetaMorphism {
    let map = MonotoneMap::new(src.width(), piece.width(), values).expect("monotone");
    ThetaMorphism::from_rule(src, piece, map, |s, b| {
        if b == i + 1 {
            ThetaMorphism::to_terminal(src.block(s))
        } else {
            comp(s, if b <= i { b } else { b - 1 })
        }
    })
}

impl CylinderDecomposition {
    pub fn new(c: &ThetaObject) -> Result<Self> {
        let n = c.level();
        if n == 0 {
            return Err(Error::LevelTooLow { what: "the cylinder", min: 1, level: 0 });
        }
        let p = c.width();
        let star = ThetaObject::terminal(n - 1);
        let interval = ThetaObject::new(n, vec![star.clone()])?;
        let pieces: Vec<_> = (0..=p).map(|i| c.with_block_inserted(i + 1, star.clone())).collect();
        let id = |s: usize, _| ThetaMorphism::identity(c.block(s));
        let alpha = (0..p)
            .map(|i| into_piece(c, &pieces[i], i, (0..=p).map(|k| if k <= i { k } else { k + 1 }).collect(), id))
            .collect();
        let beta = (1..=p)
            .map(|i| into_piece(c, &pieces[i], i, (0..=p).map(|k| if k < i { k } else { k + 1 }).collect(), id))
            .collect();
        let sigma = (0..=p)
            .map(|i| {
                let map = MonotoneMap::new(p + 1, p, (0..=p + 1).map(|k| if k <= i { k } else { k - 1 }).collect())
                    .expect("monotone");
                ThetaMorphism::from_rule(&pieces[i], c, map, |_, b| ThetaMorphism::identity(c.block(b)))
            })
            .collect();
        let gamma = (0..=p)
            .map(|i| {
                let map = MonotoneMap::new(p + 1, 1, (0..=p + 1).map(|k| usize::from(k > i)).collect())
                    .expect("monotone");
                ThetaMorphism::from_rule(&pieces[i], &interval, map, |s, _| {
                    ThetaMorphism::to_terminal(pieces[i].block(s))
                })
            })
            .collect();
        Ok(Self { c: c.clone(), pieces, alpha, beta, sigma, gamma, interval })
    }

    pub fn width(&self) -> usize {
        self.c.width()
    }

    /// `[δ^{p+1}]: c -> c^p` and `[δ^0]: c -> c^0`.
    pub fn outer_faces(&self) -> (ThetaMorphism, ThetaMorphism) {
        let p = self.width();
        let c = &self.c;
        let id = |s: usize, _| ThetaMorphism::identity(c.block(s));
        let last = into_piece(c, &self.pieces[p], p, (0..=p).collect(), id);
        let first = into_piece(c, &self.pieces[0], 0, (0..=p).map(|k| k + 1).collect(), id);
        (last, first)
    }

    /// The factorization of `(g, h): d -> c × I` through a piece, as
    /// `(k, f'')` with `f'': d -> c^k`. `choice` selects `k` within the
    /// admissible range; `None` takes the least.
    pub fn factor(&self, g: &ThetaMorphism, h: &ThetaMorphism, choice: Option<usize>) -> (usize, ThetaMorphism) {
        let d = g.src();
        let q = d.width();
        let hv = h.map();
        if (0..=q).all(|k| hv.apply(k) == 0) {
            let (last, _) = self.outer_faces();
            return (self.width(), last.after(g).expect("composable"));
        }
        if (0..=q).all(|k| hv.apply(k) == 1) {
            let (_, first) = self.outer_faces();
            return (0, first.after(g).expect("composable"));
        }
        let jh = (1..=q).find(|&j| hv.apply(j) == 1).expect("h jumps");
        let gm = g.map();
        let (lo, hi) = (gm.apply(jh - 1), gm.apply(jh));
        let k = choice.unwrap_or(lo);
        assert!((lo..=hi).contains(&k), "k = {k} outside [{lo}, {hi}]");
        let values = (0..=q).map(|i| if i < jh { gm.apply(i) } else { gm.apply(i) + 1 }).collect();
        let f = into_piece(d, &self.pieces[k], k, values, |_, b| g.component(b).expect("covered").clone());
        (k, f)
    }

    /// The admissible range of `k` for a non-constant `h`.
    pub fn choice_range(&self, g: &ThetaMorphism, h: &ThetaMorphism) -> Option<(usize, usize)> {
        let q = g.src().width();
        let jh = (1..=q).find(|&j| h.map().apply(j) == 1 && h.map().apply(j - 1) == 0)?;
        Some((g.map().apply(jh - 1), g.map().apply(jh)))
    }

    pub fn to_json(&self) -> Value {
        let ms = |v: &[ThetaMorphism]| v.iter().map(|m| json!({"src": m.src().to_string(), "dst": m.dst().to_string(), "map": m.to_json()})).collect::<Vec<_>>();
        json!({
            "c": self.c.to_string(),
            "interval": self.interval.to_string(),
            "pieces": self.pieces.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "alpha": ms(&self.alpha),
            "beta": ms(&self.beta),
            "sigma": ms(&self.sigma),
            "gamma": ms(&self.gamma),
        })
    }
}

/// `𝓘(c)` with `σ`, `γ`, the comparison `⟨σ, γ⟩` and its explicit inverse.
#[derive(Clone, Debug)]
pub struct Cylinder {
    pub decomposition: CylinderDecomposition,
    pub colimit: Colimit,
    pub sigma: NatTransformation,
    pub gamma: NatTransformation,
    pub product: Product,
    pub comparison: NatTransformation,
    pub inverse: NatTransformation,
}

impl Cylinder {
    pub fn presheaf(&self) -> &Presheaf {
        &self.colimit.presheaf
    }

    /// The class of `(g, h)` computed with a chosen `k`.
    pub fn preimage_with(&self, obj: &ThetaObject, g: &ThetaMorphism, h: &ThetaMorphism, k: Option<usize>) -> Element {
        let (k, f) = self.decomposition.factor(g, h, k);
        self.colimit.class_of(obj, k, &Element::Mor(f))
    }
}

pub fn cylinder_i(c: &ThetaObject) -> Result<Cylinder> {
    let dec = CylinderDecomposition::new(c)?;
    let p = dec.width();
    let pieces: Vec<Presheaf> = dec.pieces.iter().map(presheaf::representable).collect();
    let mut d = Diagram::new(format!("W_{p} for {c}"));
    for (x, r) in dec.pieces.iter().zip(&pieces) {
        d.add_vertex(x.to_string(), r);
    }
    let copies: Vec<Presheaf> = (0..p).map(|_| presheaf::representable(c)).collect();
    for (i, copy) in copies.iter().enumerate() {
        let v = d.add_vertex(format!("{c} ({}')", i + 1), copy);
        d.add_edge(v, i, &presheaf::representable_map(&dec.alpha[i], copy, &pieces[i]).renamed(format!("α^{i}")))?;
        d.add_edge(v, i + 1, &presheaf::representable_map(&dec.beta[i], copy, &pieces[i + 1]).renamed(format!("β^{}", i + 1)))?;
    }
    let colimit = colimit(d);
    let target = presheaf::representable(c);
    let interval = presheaf::representable(&dec.interval);
    let legs = |maps: &dyn Fn(usize) -> ThetaMorphism, dst: &Presheaf| -> Vec<NatTransformation> {
        let mut legs: Vec<_> = (0..=p).map(|i| presheaf::representable_map(&maps(i), &pieces[i], dst)).collect();
        for i in 0..p {
            let via = maps(i).after(&dec.alpha[i]).expect("composable");
            legs.push(presheaf::representable_map(&via, &copies[i], dst));
        }
        legs
    };
    let sigma = colimit.induced("σ", &target, &legs(&|i| dec.sigma[i].clone(), &target));
    let gamma = colimit.induced("γ", &interval, &legs(&|i| dec.gamma[i].clone(), &interval));
    let product = product(&target, &interval)?;
    let comparison = product.pairing(&sigma, &gamma).renamed("<σ, γ>");
    let (dec2, col2) = (dec.clone(), colimit.clone());
    let inverse = NatTransformation::new("<σ, γ>^-1", &product.presheaf, &colimit.presheaf, move |obj, e| {
        let (g, h) = e.as_pair().expect("pair");
        let (g, h) = (g.as_mor().expect("map to c"), h.as_mor().expect("map to I"));
        let (k, f) = dec2.factor(g, h, None);
        col2.class_of(obj, k, &Element::Mor(f))
    });
    Ok(Cylinder { decomposition: dec, colimit, sigma, gamma, product, comparison, inverse })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presheaf::check::{check_inverse, check_iso};
    use crate::term::parse_object;
    use crate::theta::{enumerate_objects, globe};

    fn obj(s: &str, n: usize) -> ThetaObject {
        parse_object(s, n).unwrap()
    }

    #[test]
    fn decomposition_identities() {
        for c in enumerate_objects(2, 2).into_iter().chain(enumerate_objects(1, 3)) {
            let dec = CylinderDecomposition::new(&c).unwrap();
            let p = dec.width();
            let id = ThetaMorphism::identity(&c);
            for i in 0..p {
                assert_eq!(dec.sigma[i].after(&dec.alpha[i]).unwrap(), id);
                assert_eq!(dec.sigma[i + 1].after(&dec.beta[i]).unwrap(), id);
                assert_eq!(dec.gamma[i].after(&dec.alpha[i]).unwrap(), dec.gamma[i + 1].after(&dec.beta[i]).unwrap());
            }
        }
        assert!(CylinderDecomposition::new(&ThetaObject::point()).is_err());
    }

    #[test]
    fn spot_counts() {
        let c = cylinder_i(&obj("[1]", 1)).unwrap();
        assert_eq!(c.presheaf().size(&obj("[1]", 1)), 9);
        let c = cylinder_i(&globe(2, 2).unwrap()).unwrap();
        assert_eq!(c.presheaf().size(&globe(1, 2).unwrap()), 12);
        let c = cylinder_i(&obj("[0]", 2)).unwrap();
        assert_eq!(c.decomposition.pieces, vec![globe(1, 2).unwrap()]);
    }

    #[test]
    fn comparison_is_iso() {
        let objs = enumerate_objects(2, 1);
        for c in enumerate_objects(2, 1) {
            let cyl = cylinder_i(&c).unwrap();
            let out = check_iso(&cyl.comparison, &objs);
            assert!(out.holds(), "{c}: {:?}", out.counterexample);
            assert!(check_inverse(&cyl.comparison, &cyl.inverse, &objs).holds());
            assert!(check_inverse(&cyl.inverse, &cyl.comparison, &objs).holds());
        }
    }

    #[test]
    fn every_choice_of_k_agrees() {
        let cyl = cylinder_i(&obj("[2;1,0]", 2)).unwrap();
        for d in enumerate_objects(2, 2) {
            for e in cyl.product.presheaf.eval(&d).iter() {
                let (g, h) = e.as_pair().unwrap();
                let (g, h) = (g.as_mor().unwrap(), h.as_mor().unwrap());
                if let Some((lo, hi)) = cyl.decomposition.choice_range(g, h) {
                    let first = cyl.preimage_with(&d, g, h, Some(lo));
                    for k in lo..=hi {
                        assert_eq!(cyl.preimage_with(&d, g, h, Some(k)), first);
                    }
                }
            }
        }
    }
}
