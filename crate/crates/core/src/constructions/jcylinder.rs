//! The cylinder `𝓙(X) = X × I ∪ X_0 × J` and its alternative presentation
//! `𝓙′(θ)` for representables.
//!
//! `𝓙(X)` is built as the pushout of `X × I <- X_0 × I -> X_0 × J`, where
//! `I = Θ[[1](*)]`, `J = N(J)` and `X_0` is the constant presheaf on the
//! vertices of `X`. The union inside `X × J` is recovered through the
//! comparison map [`JCylinder::embedding`].

use crate::error::Result;
use crate::presheaf::{
    self, colimit, product, product_map, pushout, Colimit, Diagram, Element, NatTransformation, Presheaf, Product,
};
use crate::simplex::MonotoneMap;
use crate::theta::{ThetaMorphism, ThetaObject};

use super::cylinder::{cylinder_i, Cylinder, CylinderDecomposition};
use super::nerve::{interval_inclusion, nerve_j};

/// `I` and `J` at one level with the inclusion `ι: I -> J`.
#[derive(Clone, Debug)]
pub struct Intervals {
    pub level: usize,
    pub interval: ThetaObject,
    pub i: Presheaf,
    pub j: Presheaf,
    pub iota: NatTransformation,
}

impl Intervals {
    pub fn new(level: usize) -> Self {
        let interval = ThetaObject::inclusion(crate::simplex::Ordinal(1), level).expect("level >= 1");
        let i = presheaf::representable(&interval);
        let j = nerve_j(level);
        let iota = interval_inclusion(&i, &j);
        Self { level, interval, i, j, iota }
    }

    /// The endpoint `ε` of `I` at `obj`.
    pub fn endpoint(&self, obj: &ThetaObject, eps: usize) -> Element {
        Element::Mor(ThetaMorphism::constant(obj, &self.interval, eps).expect("vertex of I"))
    }
}

#[derive(Clone, Debug)]
pub struct JCylinder {
    pub x: Presheaf,
    pub intervals: Intervals,
    pub x0: Presheaf,
    pub x0_incl: NatTransformation,
    pub xi: Product,
    pub x0i: Product,
    pub x0j: Product,
    pub colimit: Colimit,
    pub d0: NatTransformation,
    pub d1: NatTransformation,
    /// `σ_X: 𝓙(X) -> X`.
    pub sigma: NatTransformation,
    /// `X × J` and the comparison `𝓙(X) -> X × J`.
    pub xj: Product,
    pub embedding: NatTransformation,
}

impl JCylinder {
    pub fn presheaf(&self) -> &Presheaf {
        &self.colimit.presheaf
    }

    pub fn boundary(&self, eps: usize) -> &NatTransformation {
        if eps == 0 {
            &self.d0
        } else {
            &self.d1
        }
    }

    /// `⟨∂^0, ∂^1⟩: X ⊔ X -> 𝓙(X)`.
    pub fn ends(&self) -> NatTransformation {
        let both = presheaf::coproduct(&[self.x.clone(), self.x.clone()]);
        both.induced("<∂^0, ∂^1>", self.presheaf(), &[self.d0.clone(), self.d1.clone()])
    }
}

pub fn cylinder_j(x: &Presheaf) -> Result<JCylinder> {
    cylinder_j_with(x, Intervals::new(x.level()))
}

/// Like [`cylinder_j`] with shared interval presheaves, so that maps between
/// cylinders of different presheaves can be compared.
pub fn cylinder_j_with(x: &Presheaf, iv: Intervals) -> Result<JCylinder> {
    let (x0, x0_incl) = presheaf::vertices(x);
    let xi = product(x, &iv.i)?;
    let x0i = product(&x0, &iv.i)?;
    let x0j = product(&x0, &iv.j)?;
    let id_i = NatTransformation::identity(&iv.i);
    let id_x0 = NatTransformation::identity(&x0);
    let left = product_map(&x0_incl, &id_i, &x0i, &xi);
    let right = product_map(&id_x0, &iv.iota, &x0i, &x0j);
    let colimit = pushout(&left, &right)?;
    let jx = colimit.presheaf.clone();
    let boundary_map = |eps: usize| {
        let (iv2, col) = (iv.clone(), colimit.clone());
        NatTransformation::new(format!("∂^{eps}"), x, &jx, move |obj, e| {
            col.class_of(obj, 0, &Element::pair(e.clone(), iv2.endpoint(obj, eps)))
        })
    };
    let d0 = boundary_map(0);
    let d1 = boundary_map(1);
    let incl = x0_incl.clone();
    let sigma = colimit.induced(
        "σ_X",
        x,
        &[
            xi.p1.clone(),
            NatTransformation::new("σ on X_0 × J", &x0j.presheaf, x, move |obj, e| {
                incl.apply(obj, e.as_pair().expect("pair").0)
            }),
            x0i.p1.then(&x0_incl),
        ],
    );
    let xj = product(x, &iv.j)?;
    let embedding = colimit.induced(
        "𝓙(X) -> X × J",
        &xj.presheaf,
        &[
            product_map(&NatTransformation::identity(x), &iv.iota, &xi, &xj),
            product_map(&x0_incl, &NatTransformation::identity(&iv.j), &x0j, &xj),
            product_map(&x0_incl, &iv.iota, &x0i, &xj),
        ],
    );
    Ok(JCylinder { x: x.clone(), intervals: iv, x0, x0_incl, xi, x0i, x0j, colimit, d0, d1, sigma, xj, embedding })
}

/// `𝓙(u): 𝓙(X) -> 𝓙(Y)`.
pub fn cylinder_j_map(u: &NatTransformation, src: &JCylinder, dst: &JCylinder) -> NatTransformation {
    let (u1, u2, u3) = (u.clone(), u.clone(), u.clone());
    let (c1, c2, c3) = (dst.colimit.clone(), dst.colimit.clone(), dst.colimit.clone());
    let legs = [
        NatTransformation::new("𝓙u on X × I", &src.xi.presheaf, dst.presheaf(), move |obj, e| {
            let (x, i) = e.as_pair().expect("pair");
            c1.class_of(obj, 0, &Element::pair(u1.apply(obj, x), i.clone()))
        }),
        NatTransformation::new("𝓙u on X_0 × J", &src.x0j.presheaf, dst.presheaf(), move |obj, e| {
            let (v, j) = e.as_pair().expect("pair");
            let pt = ThetaObject::terminal(obj.level());
            c2.class_of(obj, 1, &Element::pair(u2.apply(&pt, v), j.clone()))
        }),
        NatTransformation::new("𝓙u on X_0 × I", &src.x0i.presheaf, dst.presheaf(), move |obj, e| {
            let (v, i) = e.as_pair().expect("pair");
            let pt = ThetaObject::terminal(obj.level());
            c3.class_of(obj, 2, &Element::pair(u3.apply(&pt, v), i.clone()))
        }),
    ];
    src.colimit.induced(format!("𝓙({})", u.name()), dst.presheaf(), &legs)
}

/// `θ^i_J = J ⊔_I θ^i`, with `φ^i: θ^i -> θ^i_J` and `ψ^i: J -> θ^i_J`.
#[derive(Clone, Debug)]
pub struct ThetaIJ {
    pub piece: ThetaObject,
    pub piece_presheaf: Presheaf,
    pub colimit: Colimit,
    pub phi: NatTransformation,
    pub psi: NatTransformation,
    /// `{i, i+1}: I -> θ^i`.
    pub edge: ThetaMorphism,
}

pub fn theta_ij(theta: &ThetaObject, i: usize, iv: &Intervals) -> Result<ThetaIJ> {
    let dec = CylinderDecomposition::new(theta)?;
    theta_ij_from(&dec, i, iv, &presheaf::representable(dec.pieces.get(i).ok_or(
        crate::error::Error::IndexOutOfRange { what: "piece index", index: i, bound: theta.width() },
    )?))
}

fn theta_ij_from(dec: &CylinderDecomposition, i: usize, iv: &Intervals, piece_presheaf: &Presheaf) -> Result<ThetaIJ> {
    let piece = dec.pieces[i].clone();
    let map = MonotoneMap::new(1, piece.width(), vec![i, i + 1])?;
    let star = piece.block(i + 1).clone();
    let edge = ThetaMorphism::from_rule(&iv.interval, &piece, map, |_, _| ThetaMorphism::identity(&star));
    let into_piece = presheaf::representable_map(&edge, &iv.i, piece_presheaf);
    let colimit = pushout(&into_piece, &iv.iota)?;
    let phi = colimit.coprojections[0].clone().renamed(format!("φ^{i}"));
    let psi = colimit.coprojections[1].clone().renamed(format!("ψ^{i}"));
    Ok(ThetaIJ { piece, piece_presheaf: piece_presheaf.clone(), colimit, phi, psi, edge })
}

/// `𝓙′(θ)` with the comparison `φ: 𝓙(θ) -> 𝓙′(θ)` and `μ: 𝓙′(θ) -> θ`.
#[derive(Clone, Debug)]
pub struct JPrime {
    pub theta: ThetaObject,
    pub cylinder: Cylinder,
    pub j_theta: JCylinder,
    pub pieces_j: Vec<ThetaIJ>,
    pub colimit: Colimit,
    pub phi: NatTransformation,
    pub mu: NatTransformation,
    /// `μ^i: θ^i_J -> θ`.
    pub mu_i: Vec<NatTransformation>,
}

impl JPrime {
    pub fn presheaf(&self) -> &Presheaf {
        &self.colimit.presheaf
    }
}

pub fn cylinder_jprime(theta: &ThetaObject) -> Result<JPrime> {
    let iv = Intervals::new(theta.level());
    let target = presheaf::representable(theta);
    let j_theta = cylinder_j_with(&target, iv.clone())?;
    let cylinder = cylinder_i(theta)?;
    let dec = cylinder.decomposition.clone();
    let p = dec.width();
    let piece_presheaves: Vec<Presheaf> = dec.pieces.iter().map(presheaf::representable).collect();
    let pieces_j = (0..=p)
        .map(|i| theta_ij_from(&dec, i, &iv, &piece_presheaves[i]))
        .collect::<Result<Vec<_>>>()?;

    // vertices: θ^i_J (0..=p), θ^i (p+1..=2p+1), copies of θ (2p+2..)
    let mut d = Diagram::new(format!("W_{p} for {theta} with J"));
    for (i, pj) in pieces_j.iter().enumerate() {
        d.add_vertex(format!("{}_J ({i})", pj.piece), &pj.colimit.presheaf);
    }
    for (i, pp) in piece_presheaves.iter().enumerate() {
        let v = d.add_vertex(dec.pieces[i].to_string(), pp);
        d.add_edge(v, i, &pieces_j[i].phi)?;
    }
    let copies: Vec<Presheaf> = (0..p).map(|_| presheaf::representable(theta)).collect();
    for (i, copy) in copies.iter().enumerate() {
        let v = d.add_vertex(format!("{theta} ({}')", i + 1), copy);
        d.add_edge(v, p + 1 + i, &presheaf::representable_map(&dec.alpha[i], copy, &piece_presheaves[i]).renamed(format!("α^{i}")))?;
        d.add_edge(v, p + 2 + i, &presheaf::representable_map(&dec.beta[i], copy, &piece_presheaves[i + 1]).renamed(format!("β^{}", i + 1)))?;
    }
    let colimit = colimit(d);

    let mu_i: Vec<NatTransformation> = pieces_j
        .iter()
        .enumerate()
        .map(|(i, pj)| {
            let on_piece = presheaf::representable_map(&dec.sigma[i], &pj.piece_presheaf, &target);
            let th = theta.clone();
            let on_j = NatTransformation::new(format!("{{{i}}}"), &iv.j, &target, move |obj, _| {
                Element::Mor(ThetaMorphism::constant(obj, &th, i).expect("vertex"))
            });
            let via_i = presheaf::representable_map(&pj.edge, &iv.i, &pj.piece_presheaf).then(&on_piece);
            let legs = [on_piece, on_j, via_i];
            pj.colimit.induced(format!("μ^{i}"), &target, &legs)
        })
        .collect();
    let mut legs = mu_i.clone();
    for (i, pp) in piece_presheaves.iter().enumerate() {
        legs.push(presheaf::representable_map(&dec.sigma[i], pp, &target));
    }
    for copy in &copies {
        legs.push(NatTransformation::inclusion("id", copy, &target));
    }
    let mu = colimit.induced("μ", &target, &legs);

    let (col, cyl_dec, pj2) = (colimit.clone(), dec.clone(), pieces_j.clone());
    let on_xi = NatTransformation::new("φ on θ × I", &j_theta.xi.presheaf, &colimit.presheaf, move |obj, e| {
        let (g, h) = e.as_pair().expect("pair");
        let (k, f) = cyl_dec.factor(g.as_mor().expect("map"), h.as_mor().expect("map"), None);
        let inner = pj2[k].colimit.class_of(obj, 0, &Element::Mor(f));
        col.class_of(obj, k, &inner)
    });
    let (col, pj3) = (colimit.clone(), pieces_j.clone());
    let on_x0j = NatTransformation::new("φ on θ_0 × J", &j_theta.x0j.presheaf, &colimit.presheaf, move |obj, e| {
        let (v, j) = e.as_pair().expect("pair");
        let v = v.as_mor().expect("vertex").map().apply(0);
        let inner = pj3[v].colimit.class_of(obj, 1, j);
        col.class_of(obj, v, &inner)
    });
    let via_xi = product_map(&j_theta.x0_incl, &NatTransformation::identity(&iv.i), &j_theta.x0i, &j_theta.xi).then(&on_xi);
    let phi = j_theta.colimit.induced("φ", &colimit.presheaf, &[on_xi, on_x0j, via_xi]);
    Ok(JPrime { theta: theta.clone(), cylinder, j_theta, pieces_j, colimit, phi, mu, mu_i })
}
