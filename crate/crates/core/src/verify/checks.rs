//! The standard checks.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::constructions::cylinder::cylinder_i;
use crate::constructions::jcylinder::{cylinder_j, cylinder_j_map, cylinder_jprime};
use crate::constructions::nerve::{
    collapse_functor, nerve, nerve_j, nerve_map, nerve_representable_iso, ThinCategory,
};
use crate::constructions::spine::{globe_dimension, spine, spine_shape};
use crate::error::Result;
use crate::presheaf::check::{
    check_equal, check_functorial, check_inverse, check_iso, check_mono, check_natural, count_natural_maps,
};
use crate::presheaf::restriction::{counit_i, lower_shriek_i, lower_shriek_representable_iso, restrict_i, unit_i};
use crate::presheaf::suspension::{hom_fiber, sigma_representable_iso, suspension_map, suspension_presheaf};
use crate::presheaf::{
    boundary, coproduct, pullback, pushout, representable, representable_map, terminal, Element,
    Kind, NatTransformation, Outcome, Presheaf,
};
use crate::simplex::{MonotoneMap, Ordinal};
use crate::theta::{self, enumerate_theta_hom, globe, globe_maps, ThetaMorphism, ThetaObject};

use super::{small, Check, Params};

pub(super) fn standard() -> Vec<Check> {
    vec![
        Check::new("delta-axioms", "Δ is a category: identities and associativity", 0, delta_axioms),
        Check::new("theta-axioms", "Θ_n is a category: identities and associativity", 0, theta_axioms),
        Check::new(
            "surjection-composition",
            "monotone maps factor as a surjection followed by an injection; both classes compose",
            0,
            surjection_composition,
        ),
        Check::new("functor-laws", "σ: Θ_{n-1} -> Θ_n, i: Δ -> Θ_n and π: Θ_n -> Δ are functors", 1, functor_laws),
        Check::new("pi-i-adjunction", "π ⊣ i: Hom_Δ(πθ, [m]) ≅ Hom_Θ(θ, i[m]) naturally", 1, pi_i_adjunction),
        Check::new("i-fully-faithful", "i: Δ -> Θ_n is fully faithful", 1, i_fully_faithful),
        Check::new("yoneda", "natural maps Θ[θ] -> X correspond to X(θ)", 0, yoneda),
        Check::new("presheaf-functoriality", "sampled presheaves respect identities and composition", 0, functoriality),
        Check::new(
            "boundary-pushout-globe",
            "∂Θ[D_{k+1}] is the pushout of Θ[D_k] <- ∂Θ[D_k] -> Θ[D_k]",
            1,
            boundary_pushout_globe,
        ),
        Check::new("boundary-i-shriek", "∂Θ_n[i[m]] ≅ i_!(∂Δ[m])", 1, boundary_i_shriek),
        Check::new("boundary-suspension", "∂Θ_n[σθ] ≅ Σ(∂Θ_{n-1}[θ])", 1, boundary_suspension),
        Check::new("sigma-representable", "Σ(Θ_{n-1}[θ]) ≅ Θ_n[σθ]", 1, sigma_representable),
        Check::new(
            "sigma-hom-adjunction",
            "bipointed maps ΣX -> (Y, a, b) correspond to maps X -> Hom_Y(a, b)",
            1,
            sigma_hom_adjunction,
        ),
        Check::new("cylinder-iso", "⟨σ, γ⟩: 𝓘(c) -> c × I is an isomorphism with the explicit inverse", 1, cylinder_iso),
        Check::new(
            "cylinder-choice-agreement",
            "every admissible block index in the inverse of ⟨σ, γ⟩ gives the same element",
            1,
            cylinder_choice_agreement,
        ),
        Check::new("jtheta-iso", "φ: 𝓙(θ) -> 𝓙′(θ) is an isomorphism", 1, jtheta_iso),
        Check::new("mu-triangle", "the μ^i assemble into μ: 𝓙′(θ) -> θ with σ = μ ∘ φ", 1, mu_triangle),
        Check::new("cylinder-axioms", "σ ∂^ε = id and ⟨∂^0, ∂^1⟩: X ⊔ X -> 𝓙(X) is a monomorphism", 1, cylinder_axioms),
        Check::new("ehd-hd1", "𝓙 preserves coproducts, pushouts and monomorphisms", 1, ehd_hd1),
        Check::new("ehd-hd2", "for a monomorphism K -> L the ∂^ε squares into 𝓙 are pullbacks", 1, ehd_hd2),
        Check::new("spine-mono", "the spine inclusion I[θ] -> Θ[θ] is a monomorphism", 1, spine_mono),
        Check::new("spine-zigzag-shape", "the spine diagram is a zigzag of globes under θ", 1, spine_zigzag_shape),
        Check::new(
            "spine-simplicial-agreement",
            "the spine of i[m] is i_! of the simplicial spine of [m]",
            1,
            spine_simplicial_agreement,
        ),
        Check::new("nerve-thin-globe", "the thin nerve of a globe or of i[m] is representable", 1, nerve_thin_globe),
        Check::new("nerve-j-count", "N(J)([p](…)) has 2^{p+1} elements", 1, nerve_j_count),
        Check::new(
            "nerve-equivalence-naturality",
            "the collapse J_k -> D_{k-1} induces a natural map of nerves",
            1,
            nerve_equivalence_naturality,
        ),
        Check::new("i-shriek-restriction", "i_!(Δ[m]) ≅ Θ_n[i[m]], so i_! agrees with π^*", 1, i_shriek_restriction),
        Check::new(
            "i-shriek-adjunction-triangles",
            "triangle identities for i_! ⊣ i^*",
            1,
            i_shriek_adjunction_triangles,
        ),
        Check::new(
            "colimit-levelwise-count",
            "coproducts add and pushouts of monomorphisms satisfy |X| + |Y| - |A|",
            0,
            colimit_levelwise_count,
        ),
    ]
}

/// Runs `f` on every item in parallel and keeps the first failure in item
/// order.
fn each<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<Outcome> + Sync + Send) -> Result<Outcome> {
    let outs: Vec<Result<Outcome>> = items.par_iter().map(f).collect();
    let mut acc = Vec::with_capacity(outs.len());
    for o in outs {
        acc.push(o?);
    }
    Ok(Outcome::all(acc))
}

/// Prepends `obj` to the counterexample objects.
fn at(obj: &ThetaObject, mut out: Outcome) -> Outcome {
    if let Some(c) = &mut out.counterexample {
        c.objects.insert(0, obj.to_string());
    }
    out
}

fn note(what: &str, mut out: Outcome) -> Outcome {
    if let Some(c) = &mut out.counterexample {
        c.detail = format!("{what}: {}", c.detail);
    }
    out
}

fn homs(a: &ThetaObject, b: &ThetaObject) -> std::sync::Arc<Vec<ThetaMorphism>> {
    enumerate_theta_hom(a, b).expect("objects of one level")
}

fn simplex(m: usize) -> ThetaObject {
    ThetaObject::inclusion(Ordinal(m), 1).expect("level 1")
}

fn show_map(u: &MonotoneMap) -> Element {
    Element::Mor(ThetaMorphism::inclusion(u, 1).expect("level 1"))
}

/// Identity and associativity laws for a finite category given by hom sets
/// and a composition `compose(g, f) = g ∘ f`, via precomputed composition
/// tables.
pub fn category_axioms<M>(
    objs: &[ThetaObject],
    hom: &(dyn Fn(&ThetaObject, &ThetaObject) -> Vec<M> + Sync),
    identity: &(dyn Fn(&ThetaObject) -> M + Sync),
    compose: &(dyn Fn(&M, &M) -> M + Sync),
    show: &(dyn Fn(&M) -> Element + Sync),
) -> Outcome
where
    M: Clone + Ord + Send + Sync,
{
    let k = objs.len();
    let h: Vec<Vec<Vec<M>>> = objs
        .par_iter()
        .map(|a| {
            objs.iter()
                .map(|b| {
                    let mut v = hom(a, b);
                    v.sort();
                    v
                })
                .collect()
        })
        .collect();
    for (a, oa) in objs.iter().enumerate() {
        for (b, ob) in objs.iter().enumerate() {
            let (ia, ib) = (identity(oa), identity(ob));
            for f in &h[a][b] {
                if &compose(&ib, f) != f || &compose(f, &ia) != f {
                    return Outcome::fail(&[oa, ob], &[&show(f)], "identity law fails");
                }
            }
        }
    }
    // table[a][b][c][i * |H(b,c)| + j] = index of H(b,c)[j] ∘ H(a,b)[i] in H(a,c)
    let table: Vec<Vec<Vec<std::result::Result<Vec<usize>, Outcome>>>> = (0..k)
        .into_par_iter()
        .map(|a| {
            (0..k)
                .map(|b| {
                    (0..k)
                        .map(|c| {
                            let mut out = Vec::with_capacity(h[a][b].len() * h[b][c].len());
                            for f in &h[a][b] {
                                for g in &h[b][c] {
                                    let gf = compose(g, f);
                                    match h[a][c].binary_search(&gf) {
                                        Ok(i) => out.push(i),
                                        Err(_) => {
                                            return Err(Outcome::fail(
                                                &[&objs[a], &objs[b], &objs[c]],
                                                &[&show(f), &show(g)],
                                                "composite outside the hom set",
                                            ))
                                        }
                                    }
                                }
                            }
                            Ok(out)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    for row in &table {
        for col in row {
            for t in col {
                if let Err(o) = t {
                    return o.clone();
                }
            }
        }
    }
    let t = |a: usize, b: usize, c: usize, i: usize, j: usize| -> usize {
        let tab = table[a][b][c].as_ref().expect("checked");
        tab[i * h[b][c].len() + j]
    };
    let per_a: Vec<Outcome> = (0..k)
        .into_par_iter()
        .map(|a| {
            let mut cases = 0;
            for b in 0..k {
                for c in 0..k {
                    for d in 0..k {
                        for i in 0..h[a][b].len() {
                            for j in 0..h[b][c].len() {
                                let gf = t(a, b, c, i, j);
                                for l in 0..h[c][d].len() {
                                    cases += 1;
                                    let left = t(a, c, d, gf, l);
                                    let right = t(a, b, d, i, t(b, c, d, j, l));
                                    if left != right {
                                        return Outcome::fail(
                                            &[&objs[a], &objs[b], &objs[c], &objs[d]],
                                            &[&show(&h[a][b][i]), &show(&h[b][c][j]), &show(&h[c][d][l])],
                                            "(h ∘ g) ∘ f differs from h ∘ (g ∘ f)",
                                        );
                                    }
                                }
                            }
                        }
                    }
                }
            }
            Outcome::pass(cases)
        })
        .collect();
    Outcome::all(per_a)
}

fn delta_axioms(p: &Params) -> Result<Outcome> {
    let objs: Vec<_> = (0..=p.delta_max).map(simplex).collect();
    Ok(category_axioms(
        &objs,
        &|a, b| MonotoneMap::enumerate(a.width(), b.width()),
        &|a| MonotoneMap::identity(a.width()),
        &|g, f| g.after(f).expect("composable"),
        &show_map,
    ))
}

fn theta_axioms(p: &Params) -> Result<Outcome> {
    Ok(category_axioms(
        &p.objects(),
        &|a, b| homs(a, b).to_vec(),
        &ThetaMorphism::identity,
        &|g, f| g.after(f).expect("composable"),
        &|f| Element::Mor(f.clone()),
    ))
}

fn surjection_composition(p: &Params) -> Result<Outcome> {
    let range: Vec<usize> = (0..=p.delta_max).collect();
    each(&range, |&a| {
        let mut cases = 0;
        for b in 0..=p.delta_max {
            for f in MonotoneMap::enumerate(a, b) {
                let (e, m) = f.epi_mono();
                cases += 1;
                if !e.is_surjective() || !m.is_injective() || m.after(&e)? != f {
                    return Ok(Outcome::fail(&[&simplex(a), &simplex(b)], &[&show_map(&f)], "bad epi-mono factorization"));
                }
                for c in 0..=p.delta_max {
                    for g in MonotoneMap::enumerate(b, c) {
                        let gf = g.after(&f)?;
                        cases += 1;
                        let bad = (f.is_surjective() && g.is_surjective() && !gf.is_surjective())
                            || (f.is_injective() && g.is_injective() && !gf.is_injective());
                        if bad {
                            return Ok(Outcome::fail(
                                &[&simplex(a), &simplex(b), &simplex(c)],
                                &[&show_map(&f), &show_map(&g)],
                                "class not closed under composition",
                            ));
                        }
                    }
                }
            }
        }
        Ok(Outcome::pass(cases))
    })
}

fn functor_laws(p: &Params) -> Result<Outcome> {
    let n = p.level();
    let objs = p.objects();
    let lower = p.lower().objects();
    let suspension = each(&lower, |a| {
        let mut cases = 1;
        if ThetaMorphism::identity(a).suspension() != ThetaMorphism::identity(&a.suspension()) {
            return Ok(Outcome::fail(&[a], &[], "σ(id) is not the identity"));
        }
        for b in &lower {
            for c in &lower {
                for f in homs(a, b).iter() {
                    for g in homs(b, c).iter() {
                        cases += 1;
                        if g.after(f)?.suspension() != g.suspension().after(&f.suspension())? {
                            return Ok(Outcome::fail(
                                &[a, b, c],
                                &[&Element::Mor(f.clone()), &Element::Mor(g.clone())],
                                "σ does not preserve composition",
                            ));
                        }
                    }
                }
            }
        }
        Ok(Outcome::pass(cases))
    })?;
    let range: Vec<usize> = (0..=p.delta_max).collect();
    let inclusion = each(&range, |&a| {
        let mut cases = 1;
        let ia = ThetaObject::inclusion(Ordinal(a), n)?;
        if ThetaMorphism::inclusion(&MonotoneMap::identity(a), n)? != ThetaMorphism::identity(&ia) {
            return Ok(Outcome::fail(&[&ia], &[], "i(id) is not the identity"));
        }
        for b in 0..=p.delta_max {
            for c in 0..=p.delta_max {
                for f in MonotoneMap::enumerate(a, b) {
                    for g in MonotoneMap::enumerate(b, c) {
                        cases += 1;
                        let lhs = ThetaMorphism::inclusion(&g.after(&f)?, n)?;
                        let rhs = ThetaMorphism::inclusion(&g, n)?.after(&ThetaMorphism::inclusion(&f, n)?)?;
                        if lhs != rhs {
                            return Ok(Outcome::fail(
                                &[&ia, &simplex(b), &simplex(c)],
                                &[&show_map(&f), &show_map(&g)],
                                "i does not preserve composition",
                            ));
                        }
                    }
                }
            }
        }
        Ok(Outcome::pass(cases))
    })?;
    let truncation = each(&objs, |a| {
        let mut cases = 1;
        if !ThetaMorphism::identity(a).truncation()?.is_identity() {
            return Ok(Outcome::fail(&[a], &[], "π(id) is not the identity"));
        }
        for b in &objs {
            for c in &objs {
                for f in homs(a, b).iter() {
                    for g in homs(b, c).iter() {
                        cases += 1;
                        if g.after(f)?.truncation()? != g.truncation()?.after(&f.truncation()?)? {
                            return Ok(Outcome::fail(
                                &[a, b, c],
                                &[&Element::Mor(f.clone()), &Element::Mor(g.clone())],
                                "π does not preserve composition",
                            ));
                        }
                    }
                }
            }
        }
        Ok(Outcome::pass(cases))
    })?;
    Ok(Outcome::all([note("σ", suspension), note("i", inclusion), note("π", truncation)]))
}

fn pi_i_adjunction(p: &Params) -> Result<Outcome> {
    let n = p.level();
    let objs = p.objects();
    each(&objs, |theta| {
        let mut cases = 0;
        for m in 0..=p.delta_max {
            let im = ThetaObject::inclusion(Ordinal(m), n)?;
            let us = MonotoneMap::enumerate(theta.width(), m);
            let mut image = BTreeSet::new();
            for u in &us {
                cases += 1;
                let f = theta::pi_i_transpose(theta, u)?;
                if theta::pi_i_untranspose(&f)? != *u {
                    return Ok(Outcome::fail(&[theta, &im], &[&show_map(u)], "transpose does not invert"));
                }
                image.insert(f.clone());
                for v in (0..=p.delta_max).flat_map(|k| MonotoneMap::enumerate(m, k)) {
                    cases += 1;
                    let lhs = theta::pi_i_transpose(theta, &v.after(u)?)?;
                    let rhs = ThetaMorphism::inclusion(&v, n)?.after(&f)?;
                    if lhs != rhs {
                        return Ok(Outcome::fail(&[theta, &im], &[&show_map(u), &show_map(&v)], "not natural in [m]"));
                    }
                }
                for src in &objs {
                    for g in homs(src, theta).iter() {
                        cases += 1;
                        let lhs = theta::pi_i_transpose(src, &u.after(&g.truncation()?)?)?;
                        if lhs != f.after(g)? {
                            return Ok(Outcome::fail(
                                &[src, theta, &im],
                                &[&show_map(u), &Element::Mor(g.clone())],
                                "not natural in θ",
                            ));
                        }
                    }
                }
            }
            let all: BTreeSet<_> = homs(theta, &im).iter().cloned().collect();
            if image != all {
                return Ok(Outcome::fail(&[theta, &im], &[], "transpose is not onto Hom(θ, i[m])"));
            }
        }
        Ok(Outcome::pass(cases))
    })
}

fn i_fully_faithful(p: &Params) -> Result<Outcome> {
    let n = p.level();
    let mut cases = 0;
    for a in 0..=p.delta_max {
        for b in 0..=p.delta_max {
            let (ia, ib) = (ThetaObject::inclusion(Ordinal(a), n)?, ThetaObject::inclusion(Ordinal(b), n)?);
            let image: BTreeSet<_> =
                MonotoneMap::enumerate(a, b).iter().map(|u| ThetaMorphism::inclusion(u, n)).collect::<Result<_>>()?;
            let all: BTreeSet<_> = homs(&ia, &ib).iter().cloned().collect();
            cases += 1;
            if image.len() != MonotoneMap::enumerate(a, b).len() || image != all {
                return Ok(Outcome::fail(&[&ia, &ib], &[], "i is not bijective on this hom set"));
            }
        }
    }
    Ok(Outcome::pass(cases))
}

/// Representables and boundaries of the small objects, plus the terminal
/// presheaf.
fn sample(p: &Params) -> Vec<Presheaf> {
    let mut out = vec![terminal(p.level())];
    for t in p.small() {
        out.push(representable(&t));
        if !t.is_terminal() {
            out.push(boundary(&t).0);
        }
    }
    out
}

fn yoneda(p: &Params) -> Result<Outcome> {
    let objs = p.objects();
    let xs = sample(p);
    let none = |_: &ThetaObject, _: &Element| None;
    let jobs: Vec<(ThetaObject, &Presheaf)> =
        p.small().into_iter().flat_map(|t| xs.iter().map(move |x| (t.clone(), x))).collect();
    each(&jobs, |(theta, x)| {
        let n = count_natural_maps(&representable(theta), x, &objs, &none, usize::MAX);
        Ok(Outcome::expect(n == x.size(theta), &[theta], || {
            format!("{} natural maps Θ[{theta}] -> {} but {} elements", n, x.name(), x.size(theta))
        }))
    })
}

fn functoriality(p: &Params) -> Result<Outcome> {
    let objs = p.objects();
    // representables are covered by theta-axioms
    let mut xs: Vec<Presheaf> = sample(p).into_iter().filter(|x| x.kind() != Kind::Representable).collect();
    if p.level() >= 1 {
        xs.push(nerve_j(p.level()));
        for t in p.lower().objects().iter().filter(|t| t.total_cells() <= p.max_cells) {
            xs.push(suspension_presheaf(&representable(t)));
        }
        for m in 0..=p.delta_max.min(2) {
            xs.push(lower_shriek_i(&representable(&simplex(m)), p.level()));
        }
        for t in p.small() {
            xs.push(spine(&t)?.presheaf().clone());
        }
    }
    each(&xs, |x| Ok(note(x.name(), check_functorial(x, &objs))))
}

fn into_boundary(theta: &ThetaObject, src: &Presheaf, bd: &Presheaf, u: &ThetaMorphism) -> NatTransformation {
    let u = u.clone();
    NatTransformation::new(format!("{theta} face"), src, bd, move |_, e| {
        Element::Mor(u.after(e.as_mor().expect("representable element")).expect("composable"))
    })
}

fn boundary_pushout_globe(p: &Params) -> Result<Outcome> {
    let n = p.level();
    let objs = p.objects();
    let ks: Vec<usize> = (0..n).collect();
    each(&ks, |&k| {
        let dk = globe(k, n)?;
        let dk1 = globe(k + 1, n)?;
        let gm = globe_maps(k + 1, n)?;
        let (bd, incl) = boundary(&dk);
        let second = representable(&dk);
        let incl2 = NatTransformation::inclusion("∂ ⊂ Θ", &bd, &second);
        let po = pushout(&incl, &incl2)?;
        let (target, _) = boundary(&dk1);
        let legs = [
            into_boundary(&dk1, incl.dst(), &target, &gm.s),
            into_boundary(&dk1, &second, &target, &gm.t),
            into_boundary(&dk1, &bd, &target, &gm.s),
        ];
        let cmp = po.induced("comparison", &target, &legs);
        Ok(at(&dk1, check_iso(&cmp, &objs)))
    })
}

fn transpose_into(src: &Presheaf, dst: &Presheaf) -> NatTransformation {
    NatTransformation::new(format!("{} -> {}", src.name(), dst.name()), src, dst, |obj, e| {
        Element::Mor(theta::pi_i_transpose(obj, e.as_mor().expect("simplex").map()).expect("transpose"))
    })
}

fn boundary_i_shriek(p: &Params) -> Result<Outcome> {
    let n = p.level();
    let objs = p.objects();
    let ms: Vec<usize> = (1..=p.delta_max).collect();
    each(&ms, |&m| {
        let (bd_delta, _) = boundary(&simplex(m));
        let ext = lower_shriek_i(&bd_delta, n);
        let im = ThetaObject::inclusion(Ordinal(m), n)?;
        let (bd, _) = boundary(&im);
        Ok(at(&im, check_iso(&transpose_into(&ext, &bd), &objs)))
    })
}

fn boundary_suspension(p: &Params) -> Result<Outcome> {
    let objs = p.objects();
    let lower = p.lower().objects();
    each(&lower, |theta| {
        let rep = representable(theta);
        let (bd, incl) = boundary(theta);
        let s_bd = suspension_presheaf(&bd);
        let s_rep = suspension_presheaf(&rep);
        let st = theta.suspension();
        let (target, _) = boundary(&st);
        let into_rep = suspension_map(&incl, &s_bd, &s_rep).then(&sigma_representable_iso(theta, &s_rep, &representable(&st)));
        let cmp = NatTransformation::new("Σ∂ -> ∂σ", &s_bd, &target, move |o, e| into_rep.apply(o, e));
        Ok(at(theta, check_iso(&cmp, &objs)))
    })
}

fn sigma_representable(p: &Params) -> Result<Outcome> {
    let objs = p.objects();
    let lower = p.lower().objects();
    each(&lower, |theta| {
        let s = suspension_presheaf(&representable(theta));
        let iso = sigma_representable_iso(theta, &s, &representable(&theta.suspension()));
        Ok(at(theta, check_iso(&iso, &objs).and(|| check_natural(&iso, &objs))))
    })
}

fn sigma_hom_adjunction(p: &Params) -> Result<Outcome> {
    let n = p.level();
    let objs = p.objects();
    let lower = p.lower().objects();
    let mut sources = vec![terminal(n - 1)];
    for t in &lower {
        sources.push(representable(t));
        sources.push(boundary(t).0);
    }
    let pt = ThetaObject::terminal(n);
    let mut jobs = Vec::new();
    for t in p.small() {
        let y = representable(&t);
        for a in y.eval(&pt).iter() {
            for b in y.eval(&pt).iter() {
                for x in &sources {
                    jobs.push((t.clone(), y.clone(), a.clone(), b.clone(), x.clone()));
                }
            }
        }
    }
    each(&jobs, |(t, y, a, b, x)| {
        let sx = suspension_presheaf(x);
        let ends = [a.clone(), b.clone()];
        let yc = y.clone();
        let fixed = move |o: &ThetaObject, e: &Element| match e {
            Element::Base(eps) => Some(yc.restrict(&ThetaMorphism::to_terminal(o), &ends[*eps as usize])),
            _ => None,
        };
        let bipointed = count_natural_maps(&sx, y, &objs, &fixed, usize::MAX);
        let fiber = hom_fiber(y, a, b)?;
        let none = |_: &ThetaObject, _: &Element| None;
        let plain = count_natural_maps(x, &fiber, &lower, &none, usize::MAX);
        Ok(Outcome::expect(bipointed == plain, &[t], || {
            format!("{bipointed} bipointed maps Σ{} -> ({}, {a}, {b}) but {plain} maps into the hom-fiber", x.name(), y.name())
        }))
    })
}

/// Objects indexing a per-object construction, each with the universe to
/// evaluate it over.
fn construction_range(p: &Params, all_simplicial: bool) -> Vec<(ThetaObject, Vec<ThetaObject>)> {
    let simp = p.simplicial().objects();
    let mut out: Vec<(ThetaObject, Vec<ThetaObject>)> = Vec::new();
    let cs = if all_simplicial { simp.clone() } else { small(&simp, p.max_cells) };
    out.extend(cs.into_iter().map(|c| (c, simp.clone())));
    if p.level() >= 2 {
        let objs = p.objects();
        out.extend(p.small().into_iter().map(|c| (c, objs.clone())));
    }
    out
}

fn cylinder_iso(p: &Params) -> Result<Outcome> {
    each(&construction_range(p, true), |(c, objs)| {
        let cyl = cylinder_i(c)?;
        let out = check_iso(&cyl.comparison, objs)
            .and(|| check_inverse(&cyl.comparison, &cyl.inverse, objs))
            .and(|| check_inverse(&cyl.inverse, &cyl.comparison, objs));
        Ok(at(c, out))
    })
}

fn cylinder_choice_agreement(p: &Params) -> Result<Outcome> {
    each(&construction_range(p, true), |(c, objs)| {
        let cyl = cylinder_i(c)?;
        let mut cases = 0;
        for d in objs {
            for e in cyl.product.presheaf.eval(d).iter() {
                let (g, h) = e.as_pair().expect("pair");
                let (g, h) = (g.as_mor().expect("map"), h.as_mor().expect("map"));
                let Some((lo, hi)) = cyl.decomposition.choice_range(g, h) else { continue };
                let first = cyl.preimage_with(d, g, h, Some(lo));
                for k in lo + 1..=hi {
                    cases += 1;
                    if cyl.preimage_with(d, g, h, Some(k)) != first {
                        return Ok(Outcome::fail(&[c, d], &[e], format!("block {k} disagrees with block {lo}")));
                    }
                }
            }
        }
        Ok(Outcome::pass(cases))
    })
}

fn jtheta_iso(p: &Params) -> Result<Outcome> {
    each(&construction_range(p, false), |(theta, objs)| {
        let jp = cylinder_jprime(theta)?;
        Ok(at(theta, check_iso(&jp.phi, objs)))
    })
}

fn mu_triangle(p: &Params) -> Result<Outcome> {
    each(&construction_range(p, false), |(theta, objs)| {
        let jp = cylinder_jprime(theta)?;
        let mut out = check_natural(&jp.mu, objs);
        for m in &jp.mu_i {
            out = out.and(|| check_natural(m, objs));
        }
        let out = out.and(|| check_equal(&jp.phi.then(&jp.mu), &jp.j_theta.sigma, objs));
        Ok(at(theta, out))
    })
}

fn cylinder_axioms(p: &Params) -> Result<Outcome> {
    let objs = p.objects();
    each(&sample(p), |x| {
        let j = cylinder_j(x)?;
        let id = NatTransformation::identity(x);
        let mut out = check_natural(&j.sigma, &objs);
        for eps in 0..2 {
            out = out
                .and(|| check_natural(j.boundary(eps), &objs))
                .and(|| note(&format!("σ ∂^{eps}"), check_equal(&j.boundary(eps).then(&j.sigma), &id, &objs)));
        }
        let out = out
            .and(|| note("⟨∂^0, ∂^1⟩", check_mono(&j.ends(), &objs)))
            .and(|| note("𝓙(X) -> X × J", check_mono(&j.embedding, &objs)));
        Ok(note(x.name(), out))
    })
}

/// Monomorphisms between sampled presheaves: boundary inclusions and the
/// globe face maps.
fn sample_monos(p: &Params) -> Result<Vec<NatTransformation>> {
    let n = p.level();
    let mut out = Vec::new();
    for t in p.small() {
        if !t.is_terminal() {
            out.push(boundary(&t).1);
        }
    }
    for k in 0..n {
        let gm = globe_maps(k + 1, n)?;
        let (dk, dk1) = (globe(k, n)?, globe(k + 1, n)?);
        if dk1.total_cells() > p.max_cells {
            continue;
        }
        let (a, b) = (representable(&dk), representable(&dk1));
        out.push(representable_map(&gm.s, &a, &b));
        out.push(representable_map(&gm.t, &a, &b));
    }
    Ok(out)
}

fn ehd_hd1(p: &Params) -> Result<Outcome> {
    let objs = p.objects();
    let xs = sample(p);
    // each sample beside the terminal presheaf, and each boundary beside its
    // representable
    let mut pairs: Vec<(usize, usize)> = (0..xs.len()).map(|a| (a, 0)).collect();
    pairs.extend((1..xs.len()).filter(|&a| xs[a].kind() == Kind::Boundary).map(|a| (a - 1, a)));
    let coproducts = each(&pairs, |&(a, b)| {
        let (x, y) = (&xs[a], &xs[b]);
        let sum = coproduct(&[x.clone(), y.clone()]);
        let (jx, jy, js) = (cylinder_j(x)?, cylinder_j(y)?, cylinder_j(&sum.presheaf)?);
        let legs = [
            cylinder_j_map(&sum.coprojections[0], &jx, &js),
            cylinder_j_map(&sum.coprojections[1], &jy, &js),
        ];
        let jsum = coproduct(&[jx.presheaf().clone(), jy.presheaf().clone()]);
        let cmp = jsum.induced("𝓙X ⊔ 𝓙Y -> 𝓙(X ⊔ Y)", js.presheaf(), &legs);
        Ok(note(&format!("{} ⊔ {}", x.name(), y.name()), check_iso(&cmp, &objs)))
    })?;
    let attach: Vec<ThetaObject> = p.small().into_iter().filter(|t| !t.is_terminal()).collect();
    let pushouts = each(&attach, |t| {
        let (bd, incl) = boundary(t);
        let second = representable(t);
        let incl2 = NatTransformation::inclusion("∂ ⊂ Θ", &bd, &second);
        let po = pushout(&incl, &incl2)?;
        let (jx, jy, ja) = (cylinder_j(incl.dst())?, cylinder_j(&second)?, cylinder_j(&bd)?);
        let jp = cylinder_j(&po.presheaf)?;
        let jf = cylinder_j_map(&incl, &ja, &jx);
        let jg = cylinder_j_map(&incl2, &ja, &jy);
        let jpo = pushout(&jf, &jg)?;
        let legs = [
            cylinder_j_map(&po.coprojections[0], &jx, &jp),
            cylinder_j_map(&po.coprojections[1], &jy, &jp),
            cylinder_j_map(&po.coprojections[2], &ja, &jp),
        ];
        let cmp = jpo.induced("𝓙X ⊔_𝓙A 𝓙Y -> 𝓙(X ⊔_A Y)", jp.presheaf(), &legs);
        Ok(at(t, check_iso(&cmp, &objs)))
    })?;
    let monos = sample_monos(p)?;
    let preserved = each(&monos, |u| {
        let (js, jd) = (cylinder_j(u.src())?, cylinder_j(u.dst())?);
        Ok(note(u.name(), check_mono(&cylinder_j_map(u, &js, &jd), &objs)))
    })?;
    Ok(Outcome::all([note("coproduct", coproducts), note("pushout", pushouts), note("mono", preserved)]))
}

fn ehd_hd2(p: &Params) -> Result<Outcome> {
    let objs = p.objects();
    let monos = sample_monos(p)?;
    each(&monos, |u| {
        let (jk, jl) = (cylinder_j(u.src())?, cylinder_j(u.dst())?);
        let ju = cylinder_j_map(u, &jk, &jl);
        let mut out = Outcome::pass(0);
        for eps in 0..2 {
            let pb = pullback(&ju, jl.boundary(eps))?;
            let (d, uu) = (jk.boundary(eps).clone(), u.clone());
            let cmp = NatTransformation::new("K -> 𝓙K ×_𝓙L L", u.src(), &pb.presheaf, move |o, e| {
                Element::pair(d.apply(o, e), uu.apply(o, e))
            });
            out = out.and(|| note(&format!("ε = {eps}"), check_iso(&cmp, &objs)));
        }
        Ok(note(u.name(), out))
    })
}

fn spine_mono(p: &Params) -> Result<Outcome> {
    let objs = p.objects();
    each(&objs, |t| Ok(at(t, check_mono(&spine(t)?.inclusion, &objs))))
}

fn spine_zigzag_shape(p: &Params) -> Result<Outcome> {
    let objs = p.objects();
    each(&objs, |t| {
        let s = spine_shape(t);
        let mut cases = 0;
        for (v, leg) in s.vertices.iter().zip(&s.legs) {
            cases += 1;
            if globe_dimension(v).is_none() || leg.src() != v || leg.dst() != t {
                return Ok(Outcome::fail(&[t, v], &[], "vertex is not a globe under θ"));
            }
        }
        for (a, b, f) in &s.edges {
            cases += 1;
            let (va, vb) = (&s.vertices[*a], &s.vertices[*b]);
            if globe_dimension(va) >= globe_dimension(vb) || s.legs[*b].after(f)? != s.legs[*a] {
                return Ok(Outcome::fail(&[t, va, vb], &[&Element::Mor(f.clone())], "edge breaks the zigzag or the cocone"));
            }
        }
        Ok(Outcome::pass(cases))
    })
}

fn spine_simplicial_agreement(p: &Params) -> Result<Outcome> {
    let n = p.level();
    let objs = p.objects();
    let ms: Vec<usize> = (0..=p.delta_max).collect();
    each(&ms, |&m| {
        let im = ThetaObject::inclusion(Ordinal(m), n)?;
        let top = spine(&im)?;
        let simp = spine(&simplex(m))?;
        let mut cases = 0;
        for o in &objs {
            cases += 1;
            let here: BTreeSet<Element> =
                top.presheaf().eval(o).iter().map(|e| top.inclusion.apply(o, e)).collect();
            let po = simplex(o.width());
            let there: BTreeSet<Element> = simp
                .presheaf()
                .eval(&po)
                .iter()
                .map(|e| {
                    let u = simp.inclusion.apply(&po, e);
                    Ok(Element::Mor(theta::pi_i_transpose(o, u.as_mor().expect("simplex").map())?))
                })
                .collect::<Result<_>>()?;
            if here != there {
                return Ok(Outcome::fail(&[&im, o], &[], "spine of i[m] differs from i_! of the simplicial spine"));
            }
        }
        Ok(Outcome::pass(cases))
    })
}

fn nerve_thin_globe(p: &Params) -> Result<Outcome> {
    let objs = p.objects();
    let thin: Vec<(ThetaObject, ThinCategory)> =
        objs.iter().filter_map(|t| ThinCategory::from_theta(t).ok().map(|c| (t.clone(), c))).collect();
    each(&thin, |(t, c)| {
        let nv = nerve(format!("N({t})"), c);
        let iso = nerve_representable_iso(t, &nv, &representable(t));
        Ok(at(t, check_iso(&iso, &objs).and(|| check_natural(&iso, &objs))))
    })
}

fn nerve_j_count(p: &Params) -> Result<Outcome> {
    let nj = nerve_j(p.level());
    let objs = p.objects();
    let outs = objs.iter().map(|t| {
        Outcome::expect(nj.size(t) == 1 << (t.width() + 1), &[t], || format!("{} elements", nj.size(t)))
    });
    Ok(Outcome::all(outs.collect::<Vec<_>>()))
}

fn nerve_equivalence_naturality(p: &Params) -> Result<Outcome> {
    let n = p.level();
    let objs = p.objects();
    let ks: Vec<usize> = (1..=n).collect();
    each(&ks, |&k| {
        let src = nerve(format!("N(J_{k})"), &ThinCategory::j_k(k, n)?);
        let dst = nerve(format!("N(D_{})", k - 1), &ThinCategory::globe(k - 1, n)?);
        let f = nerve_map(format!("N(j_{k})"), &collapse_functor(k, n)?, &src, &dst);
        Ok(note(f.name(), check_natural(&f, &objs)))
    })
}

fn i_shriek_restriction(p: &Params) -> Result<Outcome> {
    let n = p.level();
    let objs = p.objects();
    let ms: Vec<usize> = (0..=p.delta_max).collect();
    each(&ms, |&m| {
        let ext = lower_shriek_i(&representable(&simplex(m)), n);
        let im = ThetaObject::inclusion(Ordinal(m), n)?;
        let iso = lower_shriek_representable_iso(&ext, &representable(&im));
        Ok(at(&im, check_iso(&iso, &objs).and(|| check_natural(&iso, &objs))))
    })
}

fn i_shriek_adjunction_triangles(p: &Params) -> Result<Outcome> {
    let n = p.level();
    let objs = p.objects();
    let simp = p.simplicial().objects();
    let mut ss = Vec::new();
    for m in 0..=p.delta_max.min(2) {
        ss.push(representable(&simplex(m)));
        ss.push(boundary(&simplex(m)).0);
    }
    let left = each(&ss, |s| {
        let ext = lower_shriek_i(s, n);
        let round = lower_shriek_i(&restrict_i(&ext), n);
        let eta = NatTransformation::inclusion("i_!η", &ext, &round);
        let eps = counit_i(&round, &ext);
        Ok(note(s.name(), check_equal(&eta.then(&eps), &NatTransformation::identity(&ext), &objs)))
    })?;
    let right = each(&sample(p), |x| {
        let ix = restrict_i(x);
        let iix = lower_shriek_i(&ix, n);
        let round = restrict_i(&iix);
        let eta = unit_i(&ix, &round);
        let eps = counit_i(&iix, x);
        let restricted = NatTransformation::new("i^*ε", &round, &ix, move |o, e| {
            eps.apply(&ThetaObject::inclusion(Ordinal(o.width()), n).expect("level >= 1"), e)
        });
        Ok(note(x.name(), check_equal(&eta.then(&restricted), &NatTransformation::identity(&ix), &simp)))
    })?;
    Ok(Outcome::all([left, right]))
}

fn colimit_levelwise_count(p: &Params) -> Result<Outcome> {
    let objs = p.objects();
    let xs = sample(p);
    let mut cases = 0;
    for x in &xs {
        for y in &xs {
            let sum = coproduct(&[x.clone(), y.clone()]);
            for o in &objs {
                cases += 1;
                if sum.presheaf.size(o) != x.size(o) + y.size(o) {
                    return Ok(Outcome::fail(&[o], &[], format!("{} ⊔ {} has the wrong size", x.name(), y.name())));
                }
            }
        }
    }
    for f in sample_monos(p)? {
        let po = pushout(&f, &f)?;
        for o in &objs {
            cases += 1;
            let expected = 2 * f.dst().size(o) - f.src().size(o);
            if po.presheaf.size(o) != expected {
                return Ok(Outcome::fail(&[o], &[], format!("pushout along {} has the wrong size", f.name())));
            }
        }
    }
    Ok(Outcome::pass(cases))
}
