//! Finite categories given by a composition table.

use crate::bicat::UnionFind;
use crate::error::{Error, Result};
use crate::ids::{first_duplicate, sort_by_names, Arr, Obj};
use crate::report::{Law, ValidationReport};
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub src: Obj,
    pub tgt: Obj,
}

#[derive(Clone, Debug)]
pub struct FinCategory {
    pub(crate) objects: Vec<String>,
    pub(crate) arrows: Vec<Arrow>,
    pub(crate) identity: Vec<Arr>,
    pub(crate) compose: HashMap<(Arr, Arr), Arr>,
    homs: Vec<Vec<Arr>>,
    inverses: Vec<Option<Arr>>,
    obj_by_name: HashMap<String, Obj>,
    arr_by_name: HashMap<String, Arr>,
}

impl PartialEq for FinCategory {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.arrows == other.arrows
            && self.identity == other.identity
            && self.compose == other.compose
    }
}

impl Eq for FinCategory {}

/// Builder with provisional ids; `build` sorts by name.
#[derive(Clone, Debug, Default)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    arrows: Vec<(String, Obj, Obj)>,
    identity: Vec<Option<Arr>>,
    compose: Vec<(Arr, Arr, Arr)>,
}

impl CategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }
    pub fn object(&mut self, name: impl Into<String>) -> Obj {
        self.objects.push(name.into());
        self.identity.push(None);
        Obj::from_idx(self.objects.len() - 1)
    }
    pub fn arrow(&mut self, name: impl Into<String>, src: Obj, tgt: Obj) -> Arr {
        self.arrows.push((name.into(), src, tgt));
        Arr::from_idx(self.arrows.len() - 1)
    }
    pub fn set_identity(&mut self, a: Obj, f: Arr) {
        self.identity[a.idx()] = Some(f);
    }
    /// Adds an object together with an identity arrow named `1_<name>`.
    pub fn object_with_id(&mut self, name: impl Into<String>) -> (Obj, Arr) {
        let name = name.into();
        let o = self.object(name.clone());
        let i = self.arrow(format!("1_{name}"), o, o);
        self.set_identity(o, i);
        (o, i)
    }
    pub fn set_compose(&mut self, g: Arr, f: Arr, r: Arr) {
        self.compose.push((g, f, r));
    }
    /// Fills in `1 ∘ f = f = f ∘ 1` for every arrow.
    pub fn unit_laws(&mut self) {
        for i in 0..self.arrows.len() {
            let f = Arr::from_idx(i);
            let (_, s, t) = self.arrows[i];
            if let (Some(is), Some(it)) = (self.identity[s.idx()], self.identity[t.idx()]) {
                self.compose.push((f, is, f));
                self.compose.push((it, f, f));
            }
        }
    }

    pub fn build(self) -> Result<FinCategory> {
        let names: Vec<String> = self.arrows.iter().map(|a| a.0.clone()).collect();
        if let Some(d) = first_duplicate(&self.objects) {
            return Err(Error::Structural(format!("duplicate object id {d}")));
        }
        if let Some(d) = first_duplicate(&names) {
            return Err(Error::Structural(format!("duplicate arrow id {d}")));
        }
        let (o_ord, o_rank) = sort_by_names(&self.objects);
        let (a_ord, a_rank) = sort_by_names(&names);
        let ro = |a: Obj| Obj::from_idx(o_rank[a.idx()]);
        let ra = |a: Arr| Arr::from_idx(a_rank[a.idx()]);
        let objects = o_ord.iter().map(|&i| self.objects[i].clone()).collect();
        let arrows = a_ord
            .iter()
            .map(|&i| {
                let (n, s, t) = &self.arrows[i];
                Arrow { name: n.clone(), src: ro(*s), tgt: ro(*t) }
            })
            .collect();
        let mut identity = Vec::new();
        for &i in &o_ord {
            match self.identity[i] {
                Some(f) => identity.push(ra(f)),
                None => return Err(Error::Structural(format!("object {} has no identity", self.objects[i]))),
            }
        }
        let mut compose = HashMap::new();
        for &(g, f, r) in &self.compose {
            if let Some(old) = compose.insert((ra(g), ra(f)), ra(r)) {
                if old != ra(r) {
                    return Err(Error::Structural(format!(
                        "conflicting composition entries for ({}, {})",
                        names[g.idx()],
                        names[f.idx()]
                    )));
                }
            }
        }
        Ok(FinCategory::from_parts(objects, arrows, identity, compose))
    }
}

impl FinCategory {
    pub(crate) fn from_parts(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identity: Vec<Arr>,
        compose: HashMap<(Arr, Arr), Arr>,
    ) -> Self {
        let mut c = FinCategory {
            objects,
            arrows,
            identity,
            compose,
            homs: Vec::new(),
            inverses: Vec::new(),
            obj_by_name: HashMap::new(),
            arr_by_name: HashMap::new(),
        };
        c.reindex();
        c
    }

    fn reindex(&mut self) {
        let n = self.objects.len();
        let mut homs = vec![Vec::new(); n * n];
        for (i, a) in self.arrows.iter().enumerate() {
            homs[a.src.idx() * n + a.tgt.idx()].push(Arr::from_idx(i));
        }
        self.homs = homs;
        self.obj_by_name = self.objects.iter().enumerate().map(|(i, s)| (s.clone(), Obj::from_idx(i))).collect();
        self.arr_by_name = self.arrows.iter().enumerate().map(|(i, a)| (a.name.clone(), Arr::from_idx(i))).collect();
        let mut inverses = vec![None; self.arrows.len()];
        for (i, a) in self.arrows.iter().enumerate() {
            let f = Arr::from_idx(i);
            for &g in &self.homs[a.tgt.idx() * n + a.src.idx()] {
                if self.compose.get(&(g, f)) == Some(&self.identity[a.src.idx()])
                    && self.compose.get(&(f, g)) == Some(&self.identity[a.tgt.idx()])
                {
                    inverses[i] = Some(g);
                    break;
                }
            }
        }
        self.inverses = inverses;
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }
    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }
    pub fn objects(&self) -> impl Iterator<Item = Obj> + Clone {
        (0..self.objects.len()).map(Obj::from_idx)
    }
    pub fn arrows(&self) -> impl Iterator<Item = Arr> + Clone {
        (0..self.arrows.len()).map(Arr::from_idx)
    }
    pub fn obj_name(&self, a: Obj) -> &str {
        &self.objects[a.idx()]
    }
    pub fn arr_name(&self, f: Arr) -> &str {
        &self.arrows[f.idx()].name
    }
    pub fn find_obj(&self, name: &str) -> Option<Obj> {
        self.obj_by_name.get(name).copied()
    }
    pub fn find_arr(&self, name: &str) -> Option<Arr> {
        self.arr_by_name.get(name).copied()
    }
    pub fn src(&self, f: Arr) -> Obj {
        self.arrows[f.idx()].src
    }
    pub fn tgt(&self, f: Arr) -> Obj {
        self.arrows[f.idx()].tgt
    }
    pub fn hom(&self, a: Obj, b: Obj) -> &[Arr] {
        &self.homs[a.idx() * self.objects.len() + b.idx()]
    }
    pub fn id(&self, a: Obj) -> Arr {
        self.identity[a.idx()]
    }
    pub fn try_compose(&self, g: Arr, f: Arr) -> Option<Arr> {
        self.compose.get(&(g, f)).copied()
    }
    /// `g ∘ f`.
    pub fn compose(&self, g: Arr, f: Arr) -> Arr {
        match self.compose.get(&(g, f)) {
            Some(&c) => c,
            None => panic!("composition undefined on ({}, {})", self.arr_name(g), self.arr_name(f)),
        }
    }
    /// Composite of a chain in application order.
    pub fn seq(&self, fs: &[Arr]) -> Arr {
        let mut it = fs.iter();
        let mut acc = *it.next().expect("empty chain");
        for &f in it {
            acc = self.compose(f, acc);
        }
        acc
    }
    pub fn inverse(&self, f: Arr) -> Option<Arr> {
        self.inverses[f.idx()]
    }
    pub fn inv(&self, f: Arr) -> Arr {
        match self.inverses[f.idx()] {
            Some(g) => g,
            None => panic!("arrow {} is not invertible", self.arr_name(f)),
        }
    }
    pub fn is_identity(&self, f: Arr) -> bool {
        self.identity[self.src(f).idx()] == f
    }

    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::default();
        for a in self.objects() {
            let i = self.id(a);
            if self.src(i) != a || self.tgt(i) != a {
                rep.push(Law::CategoryTyping, self.obj_name(a), vec![self.arr_name(i).into()], "identity mistyped");
            }
        }
        let mut from: Vec<Vec<Arr>> = vec![Vec::new(); self.num_objects()];
        for f in self.arrows() {
            from[self.src(f).idx()].push(f);
        }
        for f in self.arrows() {
            for &g in &from[self.tgt(f).idx()] {
                match self.try_compose(g, f) {
                    None => rep.push(
                        Law::CategoryTyping,
                        "compose",
                        vec![self.arr_name(g).into(), self.arr_name(f).into()],
                        "composite undefined",
                    ),
                    Some(h) if self.src(h) != self.src(f) || self.tgt(h) != self.tgt(g) => rep.push(
                        Law::CategoryTyping,
                        "compose",
                        vec![self.arr_name(g).into(), self.arr_name(f).into(), self.arr_name(h).into()],
                        "composite has wrong boundary",
                    ),
                    _ => {}
                }
            }
        }
        if !rep.is_empty() {
            return rep;
        }
        for f in self.arrows() {
            if self.compose(f, self.id(self.src(f))) != f || self.compose(self.id(self.tgt(f)), f) != f {
                rep.push(Law::CategoryUnit, "compose", vec![self.arr_name(f).into()], "identity is not a unit");
            }
            for &g in &from[self.tgt(f).idx()] {
                let gf = self.compose(g, f);
                for &h in &from[self.tgt(g).idx()] {
                    if self.compose(h, gf) != self.compose(self.compose(h, g), f) {
                        rep.push(
                            Law::CategoryAssociativity,
                            "compose",
                            vec![self.arr_name(h).into(), self.arr_name(g).into(), self.arr_name(f).into()],
                            "composition not associative",
                        );
                    }
                }
            }
        }
        rep
    }

    pub fn op(&self) -> FinCategory {
        let arrows = self.arrows.iter().map(|a| Arrow { name: a.name.clone(), src: a.tgt, tgt: a.src }).collect();
        let compose = self.compose.iter().map(|(&(g, f), &r)| ((f, g), r)).collect();
        FinCategory::from_parts(self.objects.clone(), arrows, self.identity.clone(), compose)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.num_objects();
        let mut uf = UnionFind::new(n);
        for a in &self.arrows {
            uf.union(a.src.idx(), a.tgt.idx());
        }
        (1..n).all(|i| uf.find(i) == uf.find(0))
    }

    /// Nonempty, every hom a singleton (the arrows are then automatically
    /// invertible, which is checked anyway).
    pub fn is_contractible_groupoid(&self) -> bool {
        if self.num_objects() == 0 {
            return false;
        }
        for a in self.objects() {
            for b in self.objects() {
                if self.hom(a, b).len() != 1 {
                    return false;
                }
            }
        }
        self.arrows().all(|f| self.inverse(f).is_some())
    }

    /// The terminal category.
    pub fn terminal() -> FinCategory {
        let mut b = CategoryBuilder::new();
        let (o, i) = b.object_with_id("*");
        b.set_compose(i, i, i);
        let _ = o;
        b.build().unwrap()
    }

    /// Discrete category on the given object names.
    pub fn discrete(names: &[&str]) -> FinCategory {
        let mut b = CategoryBuilder::new();
        for n in names {
            b.object_with_id(*n);
        }
        b.unit_laws();
        b.build().unwrap()
    }

    /// Chaotic (indiscrete) groupoid: exactly one arrow between any two objects.
    pub fn chaotic(names: &[&str]) -> FinCategory {
        let mut b = CategoryBuilder::new();
        let objs: Vec<Obj> = names.iter().map(|n| b.object(*n)).collect();
        let mut arr = HashMap::new();
        for (i, &x) in objs.iter().enumerate() {
            for (j, &y) in objs.iter().enumerate() {
                let name = if i == j { format!("1_{}", names[i]) } else { format!("{}>{}", names[i], names[j]) };
                let f = b.arrow(name, x, y);
                arr.insert((i, j), f);
                if i == j {
                    b.set_identity(x, f);
                }
            }
        }
        let n = objs.len();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    b.set_compose(arr[&(j, k)], arr[&(i, j)], arr[&(i, k)]);
                }
            }
        }
        b.build().unwrap()
    }
}
