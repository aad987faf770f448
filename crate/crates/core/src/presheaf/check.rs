//! Exhaustive levelwise checks over a finite list of objects.
//!
//! Every check returns an [`Outcome`]: the number of cases examined and the
//! first counterexample found, if any. Quantification is over the given
//! objects and all morphisms between them.

use std::collections::HashMap;

use serde::Serialize;

use crate::theta::{enumerate_theta_hom, ThetaMorphism, ThetaObject};

use super::{Element, NatTransformation, Presheaf};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub objects: Vec<String>,
    pub elements: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub cases: usize,
    pub counterexample: Option<Counterexample>,
}

impl Outcome {
    pub fn pass(cases: usize) -> Self {
        Self { cases, counterexample: None }
    }

    pub fn fail(objects: &[&ThetaObject], elements: &[&Element], detail: impl Into<String>) -> Self {
        Self {
            cases: 1,
            counterexample: Some(Counterexample {
                objects: objects.iter().map(|o| o.to_string()).collect(),
                elements: elements.iter().map(|e| e.to_string()).collect(),
                detail: detail.into(),
            }),
        }
    }

    /// Fails with `detail` unless `ok`.
    pub fn expect(ok: bool, objects: &[&ThetaObject], detail: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(1)
        } else {
            Self::fail(objects, &[], detail())
        }
    }

    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }

    /// Runs `next` only if `self` holds, accumulating case counts.
    pub fn and(self, next: impl FnOnce() -> Outcome) -> Outcome {
        if !self.holds() {
            return self;
        }
        let n = next();
        Outcome { cases: self.cases + n.cases, counterexample: n.counterexample }
    }

    pub fn all(outcomes: impl IntoIterator<Item = Outcome>) -> Outcome {
        let mut acc = Outcome::pass(0);
        for o in outcomes {
            acc.cases += o.cases;
            if o.counterexample.is_some() {
                acc.counterexample = o.counterexample;
                return acc;
            }
        }
        acc
    }
}

fn homs(a: &ThetaObject, b: &ThetaObject) -> std::sync::Arc<Vec<ThetaMorphism>> {
    enumerate_theta_hom(a, b).expect("same level")
}

/// `restrict(id) = id`, restrictions land in the right set, and
/// `restrict(f∘g) = restrict(g)∘restrict(f)` for all composable `f`, `g`.
///
/// Restrictions are tabulated once per morphism as maps between element
/// indices, so the composition law is checked on the tables.
pub fn check_functorial(x: &Presheaf, objs: &[ThetaObject]) -> Outcome {
    let mut cases = 0;
    let hom: Vec<Vec<Vec<ThetaMorphism>>> = objs
        .iter()
        .map(|b| {
            objs.iter()
                .map(|a| {
                    let mut v = homs(b, a).to_vec();
                    v.sort();
                    v
                })
                .collect()
        })
        .collect();
    // table[a][b][k][i]: index in X(b) of the i-th element of X(a) restricted
    // along hom[b][a][k]
    let mut table: Vec<Vec<Vec<Vec<usize>>>> = Vec::with_capacity(objs.len());
    for (ai, a) in objs.iter().enumerate() {
        let xa = x.eval(a);
        let id = ThetaMorphism::identity(a);
        for e in xa.iter() {
            cases += 1;
            if x.restrict(&id, e) != *e {
                return Outcome::fail(&[a], &[e], format!("{}: restriction along the identity moves the element", x.name()));
            }
        }
        let mut row = Vec::with_capacity(objs.len());
        for (bi, b) in objs.iter().enumerate() {
            let xb = x.eval(b);
            let mut per_f = Vec::with_capacity(hom[bi][ai].len());
            for f in &hom[bi][ai] {
                let mut t = Vec::with_capacity(xa.len());
                for e in xa.iter() {
                    cases += 1;
                    let r = x.restrict(f, e);
                    match xb.binary_search(&r) {
                        Ok(i) => t.push(i),
                        Err(_) => {
                            return Outcome::fail(&[a, b], &[e, &r], format!("{}: restriction along {f} leaves X({b})", x.name()))
                        }
                    }
                }
                per_f.push(t);
            }
            row.push(per_f);
        }
        table.push(row);
    }
    for (ai, a) in objs.iter().enumerate() {
        let xa = x.eval(a);
        for (bi, b) in objs.iter().enumerate() {
            for (fi, f) in hom[bi][ai].iter().enumerate() {
                for (ci, c) in objs.iter().enumerate() {
                    for (gi, g) in hom[ci][bi].iter().enumerate() {
                        let fg = f.after(g).expect("composable");
                        let k = hom[ci][ai].binary_search(&fg).expect("composite in the hom set");
                        let (direct, via_f, then_g) = (&table[ai][ci][k], &table[ai][bi][fi], &table[bi][ci][gi]);
                        for i in 0..xa.len() {
                            cases += 1;
                            if direct[i] != then_g[via_f[i]] {
                                let xc = x.eval(c);
                                return Outcome::fail(
                                    &[a, b, c],
                                    &[&xa[i], &xc[direct[i]], &xc[then_g[via_f[i]]]],
                                    format!("{}: restriction along {f} then {g} disagrees with the composite", x.name()),
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    Outcome::pass(cases)
}

/// Components land in the codomain and all naturality squares commute.
pub fn check_natural(t: &NatTransformation, objs: &[ThetaObject]) -> Outcome {
    let (src, dst) = (t.src(), t.dst());
    let mut cases = 0;
    for a in objs {
        let sa = src.eval(a);
        for e in sa.iter() {
            cases += 1;
            let te = t.apply(a, e);
            if !dst.contains(a, &te) {
                return Outcome::fail(&[a], &[e, &te], format!("{} sends an element outside {}", t.name(), dst.name()));
            }
        }
        for b in objs {
            for f in homs(b, a).iter() {
                for e in sa.iter() {
                    cases += 1;
                    let lhs = t.apply(b, &src.restrict(f, e));
                    let rhs = dst.restrict(f, &t.apply(a, e));
                    if lhs != rhs {
                        return Outcome::fail(
                            &[a, b],
                            &[e, &lhs, &rhs],
                            format!("{} is not natural along {f}", t.name()),
                        );
                    }
                }
            }
        }
    }
    Outcome::pass(cases)
}

fn check_injective(t: &NatTransformation, objs: &[ThetaObject]) -> Outcome {
    let mut cases = 0;
    for a in objs {
        let mut seen: HashMap<Element, Element> = HashMap::new();
        for e in t.src().eval(a).iter() {
            cases += 1;
            let te = t.apply(a, e);
            if let Some(prev) = seen.insert(te.clone(), e.clone()) {
                return Outcome::fail(&[a], &[&prev, e, &te], format!("{} identifies two elements", t.name()));
            }
        }
    }
    Outcome::pass(cases)
}

fn check_surjective(t: &NatTransformation, objs: &[ThetaObject]) -> Outcome {
    let mut cases = 0;
    for a in objs {
        let image: std::collections::HashSet<Element> = t.src().eval(a).iter().map(|e| t.apply(a, e)).collect();
        for y in t.dst().eval(a).iter() {
            cases += 1;
            if !image.contains(y) {
                return Outcome::fail(&[a], &[y], format!("{} misses an element of {}", t.name(), t.dst().name()));
            }
        }
    }
    Outcome::pass(cases)
}

/// Natural and levelwise injective.
pub fn check_mono(t: &NatTransformation, objs: &[ThetaObject]) -> Outcome {
    check_natural(t, objs).and(|| check_injective(t, objs))
}

/// Natural and levelwise surjective.
pub fn check_epi(t: &NatTransformation, objs: &[ThetaObject]) -> Outcome {
    check_natural(t, objs).and(|| check_surjective(t, objs))
}

/// Natural and levelwise bijective.
pub fn check_iso(t: &NatTransformation, objs: &[ThetaObject]) -> Outcome {
    check_mono(t, objs).and(|| check_surjective(t, objs))
}

/// `f` and `g` agree on every element.
pub fn check_equal(f: &NatTransformation, g: &NatTransformation, objs: &[ThetaObject]) -> Outcome {
    let mut cases = 0;
    for a in objs {
        for e in f.src().eval(a).iter() {
            cases += 1;
            let (x, y) = (f.apply(a, e), g.apply(a, e));
            if x != y {
                return Outcome::fail(&[a], &[e, &x, &y], format!("{} and {} differ", f.name(), g.name()));
            }
        }
    }
    Outcome::pass(cases)
}

/// `g ∘ f` is the identity on every element.
pub fn check_inverse(f: &NatTransformation, g: &NatTransformation, objs: &[ThetaObject]) -> Outcome {
    let mut cases = 0;
    for a in objs {
        for e in f.src().eval(a).iter() {
            cases += 1;
            let back = g.apply(a, &f.apply(a, e));
            if back != *e {
                return Outcome::fail(&[a], &[e, &back], format!("{} does not undo {}", g.name(), f.name()));
            }
        }
    }
    Outcome::pass(cases)
}

/// Equal levelwise counts.
pub fn check_same_size(x: &Presheaf, y: &Presheaf, objs: &[ThetaObject]) -> Outcome {
    Outcome::all(objs.iter().map(|a| {
        let (m, n) = (x.size(a), y.size(a));
        Outcome::expect(m == n, &[a], || format!("|{}| = {m} but |{}| = {n}", x.name(), y.name()))
    }))
}

/// Prescribed values for some cells of a natural-map search.
pub type Fixed<'a> = &'a dyn Fn(&ThetaObject, &Element) -> Option<Element>;

struct Search {
    /// `(object index, element)` for every cell of the source.
    cells: Vec<(usize, Element)>,
    /// Codomain values per object.
    targets: Vec<Vec<Element>>,
    /// For each cell, the cells it restricts to and the matching map on
    /// codomain indices.
    down: Vec<Vec<(usize, usize)>>,
    tables: Vec<Vec<usize>>,
    fixed: Vec<Option<usize>>,
}

/// Number of natural maps `x -> y` over `objs`, up to `limit`, by
/// backtracking with propagation along all restrictions.
pub fn count_natural_maps(x: &Presheaf, y: &Presheaf, objs: &[ThetaObject], fixed: Fixed<'_>, limit: usize) -> usize {
    let mut order: Vec<usize> = (0..objs.len()).collect();
    order.sort_by(|&i, &j| objs[j].total_cells().cmp(&objs[i].total_cells()).then(i.cmp(&j)));
    let mut cell_index: HashMap<(usize, Element), usize> = HashMap::new();
    let mut cells = Vec::new();
    for &i in &order {
        for e in x.eval(&objs[i]).iter() {
            cell_index.insert((i, e.clone()), cells.len());
            cells.push((i, e.clone()));
        }
    }
    let targets: Vec<Vec<Element>> = objs.iter().map(|o| y.eval(o).to_vec()).collect();
    let mut tables = Vec::new();
    let mut table_of: HashMap<(usize, usize, usize), usize> = HashMap::new();
    let mut down = vec![Vec::new(); cells.len()];
    for (c, (i, e)) in cells.iter().enumerate() {
        for (j, b) in objs.iter().enumerate() {
            for (k, f) in homs(b, &objs[*i]).iter().enumerate() {
                let r = x.restrict(f, e);
                let Some(&rc) = cell_index.get(&(j, r)) else { continue };
                let t = *table_of.entry((*i, j, k)).or_insert_with(|| {
                    tables.push(
                        targets[*i]
                            .iter()
                            .map(|v| targets[j].binary_search(&y.restrict(f, v)).expect("restriction in Y"))
                            .collect(),
                    );
                    tables.len() - 1
                });
                down[c].push((rc, t));
            }
        }
    }
    let fixed = cells
        .iter()
        .map(|(i, e)| fixed(&objs[*i], e).map(|v| targets[*i].binary_search(&v).expect("fixed value in Y")))
        .collect();
    let s = Search { cells, targets, down, tables, fixed };
    let mut assign = vec![None; s.cells.len()];
    let mut count = 0;
    s.go(0, &mut assign, &mut count, limit);
    count
}

impl Search {
    fn propagate(&self, c: usize, v: usize, assign: &mut [Option<usize>], trail: &mut Vec<usize>) -> bool {
        for &(d, t) in &self.down[c] {
            let w = self.tables[t][v];
            match assign[d] {
                Some(old) if old != w => return false,
                Some(_) => {}
                None => {
                    if self.fixed[d].is_some_and(|f| f != w) {
                        return false;
                    }
                    assign[d] = Some(w);
                    trail.push(d);
                }
            }
        }
        true
    }

    fn go(&self, c: usize, assign: &mut Vec<Option<usize>>, count: &mut usize, limit: usize) {
        if *count >= limit {
            return;
        }
        if c == self.cells.len() {
            *count += 1;
            return;
        }
        if assign[c].is_some() {
            return self.go(c + 1, assign, count, limit);
        }
        let choices: Vec<usize> = match self.fixed[c] {
            Some(v) => vec![v],
            None => (0..self.targets[self.cells[c].0].len()).collect(),
        };
        for v in choices {
            let mut trail = vec![c];
            assign[c] = Some(v);
            if self.propagate(c, v, assign, &mut trail) {
                self.go(c + 1, assign, count, limit);
            }
            for d in trail {
                assign[d] = None;
            }
        }
    }
}
