//! Nondegenerate elements and their face graph.
//!
//! An element of `X(θ)` is degenerate when it is the restriction of some
//! element along a non-identity surjection `θ -> θ''`. Only surjections
//! between objects of the given list are searched, so the classification is
//! exact relative to that list.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::Write as _;

use crate::theta::{enumerate_theta_hom, ThetaObject};

use super::{Element, Presheaf};

/// Nondegenerate elements per object, in the order of `objs`.
pub fn nondegenerate(x: &Presheaf, objs: &[ThetaObject]) -> Vec<(ThetaObject, Vec<Element>)> {
    objs.iter()
        .map(|a| {
            let mut degenerate = HashSet::new();
            for b in objs {
                for g in enumerate_theta_hom(a, b).expect("same level").iter() {
                    if g.is_surjective() && !g.is_identity() {
                        degenerate.extend(x.eval(b).iter().map(|e| x.restrict(g, e)));
                    }
                }
            }
            let cells = x.eval(a).iter().filter(|e| !degenerate.contains(*e)).cloned().collect();
            (a.clone(), cells)
        })
        .collect()
}

/// Number of nondegenerate elements at each object with at least one.
pub fn nondegenerate_census(x: &Presheaf, objs: &[ThetaObject]) -> BTreeMap<ThetaObject, usize> {
    nondegenerate(x, objs)
        .into_iter()
        .filter(|(_, c)| !c.is_empty())
        .map(|(a, c)| (a, c.len()))
        .collect()
}

/// Graphviz rendering of the nondegenerate elements with an edge from each
/// element to its maximal proper faces.
pub fn face_graph_dot(x: &Presheaf, objs: &[ThetaObject]) -> String {
    let cells: Vec<(ThetaObject, Element)> = nondegenerate(x, objs)
        .into_iter()
        .flat_map(|(a, cs)| cs.into_iter().map(move |e| (a.clone(), e)))
        .collect();
    let index = |o: &ThetaObject, e: &Element| cells.iter().position(|(a, c)| a == o && c == e);
    let mut faces: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); cells.len()];
    for (i, (a, e)) in cells.iter().enumerate() {
        for b in objs {
            for f in enumerate_theta_hom(b, a).expect("same level").iter() {
                if f.is_identity() {
                    continue;
                }
                if let Some(j) = index(b, &x.restrict(f, e)) {
                    if j != i {
                        faces[i].insert(j);
                    }
                }
            }
        }
    }
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", x.name().replace('"', "'"));
    for (i, (a, e)) in cells.iter().enumerate() {
        let _ = writeln!(out, "  c{i} [label=\"{a}: {}\"];", e.to_string().replace('"', "'"));
    }
    for (i, fs) in faces.iter().enumerate() {
        for &j in fs {
            let through = fs.iter().any(|&k| k != j && faces[k].contains(&j));
            if !through {
                let _ = writeln!(out, "  c{i} -> c{j};");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::super::{boundary, representable, terminal};
    use super::*;
    use crate::theta::{enumerate_objects, globe};

    #[test]
    fn globe_census() {
        let objs = enumerate_objects(2, 2);
        let (d0, d1, d2) = (globe(0, 2).unwrap(), globe(1, 2).unwrap(), globe(2, 2).unwrap());
        let c = nondegenerate_census(&representable(&d2), &objs);
        assert_eq!(c, BTreeMap::from([(d0.clone(), 2), (d1.clone(), 2), (d2.clone(), 1)]));
        let b = nondegenerate_census(&boundary(&d2).0, &objs);
        assert_eq!(b, BTreeMap::from([(d0.clone(), 2), (d1, 2)]));
        assert_eq!(nondegenerate_census(&terminal(2), &objs), BTreeMap::from([(d0, 1)]));
    }

    #[test]
    fn face_graph() {
        let objs = enumerate_objects(2, 1);
        let dot = face_graph_dot(&representable(&globe(2, 2).unwrap()), &objs);
        assert_eq!(dot.matches("->").count(), 6);
    }
}
