//! Spines: the colimit of globes along the composition backbone of θ.
//!
//! The diagram `𝒟(θ)` for `θ = [p](θ_1, …, θ_p)` is the suspension of each
//! `𝒟(θ_i)`, with a copy of `D_0` between consecutive blocks whose two legs
//! hit the target of the last globe of block `i` and the source of the first
//! globe of block `i + 1`. For `p = 0` it is the single globe `D_0`.

use crate::error::Result;
use crate::presheaf::{self, colimit, Colimit, Diagram, NatTransformation, Presheaf, UniverseSpec};
use crate::simplex::MonotoneMap;
use crate::theta::{ThetaMorphism, ThetaObject};

/// A diagram of objects of Θ_n with morphisms as edges and a cocone into θ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpineShape {
    pub vertices: Vec<ThetaObject>,
    /// `(from, to, map)` with `map: vertices[from] -> vertices[to]`.
    pub edges: Vec<(usize, usize, ThetaMorphism)>,
    pub legs: Vec<ThetaMorphism>,
}

pub fn spine_shape(theta: &ThetaObject) -> SpineShape {
    if theta.level() == 0 || theta.width() == 0 {
        return SpineShape {
            vertices: vec![theta.clone()],
            edges: Vec::new(),
            legs: vec![ThetaMorphism::identity(theta)],
        };
    }
    let p = theta.width();
    let pt = ThetaObject::terminal(theta.level());
    let mut out = SpineShape { vertices: Vec::new(), edges: Vec::new(), legs: Vec::new() };
    let mut last_of_prev: Option<usize> = None;
    for i in 1..=p {
        let sub = spine_shape(theta.block(i));
        let base = out.vertices.len();
        let connector = last_of_prev.map(|last| {
            out.vertices.push(pt.clone());
            out.legs.push(ThetaMorphism::vertex(theta, i - 1).expect("vertex"));
            (out.vertices.len() - 1, last)
        });
        let base = if connector.is_some() { base + 1 } else { base };
        let cut = MonotoneMap::new(1, p, vec![i - 1, i]).expect("block inclusion");
        for (v, leg) in sub.vertices.iter().zip(&sub.legs) {
            let sv = v.suspension();
            out.legs.push(ThetaMorphism::from_rule(&sv, theta, cut.clone(), |_, _| leg.clone()));
            out.vertices.push(sv);
        }
        for (a, b, f) in &sub.edges {
            out.edges.push((base + a, base + b, f.suspension()));
        }
        if let Some((c, last)) = connector {
            let t = ThetaMorphism::vertex(&out.vertices[last], 1).expect("target vertex");
            let s = ThetaMorphism::vertex(&out.vertices[base], 0).expect("source vertex");
            out.edges.push((c, last, t));
            out.edges.push((c, base, s));
        }
        last_of_prev = Some(out.vertices.len() - 1);
    }
    out
}

#[derive(Clone, Debug)]
pub struct Spine {
    pub theta: ThetaObject,
    pub shape: SpineShape,
    pub colimit: Colimit,
    /// `i_θ: I[θ] -> Θ[θ]`.
    pub inclusion: NatTransformation,
}

impl Spine {
    pub fn presheaf(&self) -> &Presheaf {
        &self.colimit.presheaf
    }

    pub fn diagram(&self) -> &Diagram {
        self.colimit.diagram()
    }
}

pub fn spine(theta: &ThetaObject) -> Result<Spine> {
    let shape = spine_shape(theta);
    let reps: Vec<Presheaf> = shape.vertices.iter().map(presheaf::representable).collect();
    let mut d = Diagram::new(format!("spine {theta}"));
    for (v, r) in shape.vertices.iter().zip(&reps) {
        d.add_vertex(v.to_string(), r);
    }
    for (a, b, f) in &shape.edges {
        d.add_edge(*a, *b, &presheaf::representable_map(f, &reps[*a], &reps[*b]))?;
    }
    let colimit = colimit(d);
    let target = presheaf::representable(theta);
    let legs: Vec<_> = shape
        .legs
        .iter()
        .zip(&reps)
        .map(|(l, r)| presheaf::representable_map(l, r, &target))
        .collect();
    let inclusion = colimit.induced(format!("i_{theta}"), &target, &legs);
    Ok(Spine { theta: theta.clone(), shape, colimit, inclusion })
}

/// The spine inclusions of every object of the universe.
pub fn spine_class(u: &UniverseSpec) -> Result<Vec<NatTransformation>> {
    u.objects().iter().map(|t| Ok(spine(t)?.inclusion)).collect()
}

/// `D_k` for the globe `g`, if it is one.
pub fn globe_dimension(g: &ThetaObject) -> Option<usize> {
    if g.level() == 0 || g.is_terminal() {
        return Some(0);
    }
    if g.width() == 1 {
        return globe_dimension(g.block(1)).map(|k| k + 1);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presheaf::check::check_mono;
    use crate::term::parse_object;
    use crate::theta::enumerate_objects;

    fn obj(s: &str, n: usize) -> ThetaObject {
        parse_object(s, n).unwrap()
    }

    #[test]
    fn spine_counts() {
        let s = spine(&obj("[2]", 1)).unwrap();
        assert_eq!(s.presheaf().size(&obj("[1]", 1)), 5);
        let s = spine(&obj("[2;0,0]", 2)).unwrap();
        assert_eq!(s.presheaf().size(&obj("[0]", 2)), 3);
        let s = spine(&obj("[1;1]", 2)).unwrap();
        assert_eq!(s.shape.vertices, vec![obj("[1;1]", 2)]);
    }

    #[test]
    fn spine_inclusions_are_mono() {
        let objs = enumerate_objects(2, 2);
        for t in &objs {
            let s = spine(t).unwrap();
            let out = check_mono(&s.inclusion, &objs);
            assert!(out.holds(), "{t}: {:?}", out.counterexample);
        }
    }

    #[test]
    fn zigzag_of_globes() {
        for t in enumerate_objects(2, 2) {
            let s = spine_shape(&t);
            assert!(s.vertices.iter().all(|v| globe_dimension(v).is_some()));
            for (a, b, _) in &s.edges {
                assert!(globe_dimension(&s.vertices[*a]) < globe_dimension(&s.vertices[*b]));
            }
        }
        let s = spine_shape(&obj("[3;1,0,2]", 2));
        assert_eq!(s.vertices.len(), 7);
    }
}
