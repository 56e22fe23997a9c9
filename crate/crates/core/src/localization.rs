//! One-dimensional calculus of fractions on a finite category.

use crate::axioms::{AxiomReport, AxiomVerdict};
use crate::bicat::{Pi0, UnionFind};
use crate::category::{CategoryBuilder, FinCategory};
use crate::error::{Error, Result};
use crate::family::{ArrFamily, ArrowFamily};
use crate::functors::FinFunctor;
use crate::ids::{Arr, Obj};
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// `A ← apex → B`, the leg to `A` in W.
    Right,
    /// `A → apex ← B`, the leg from `B` in W.
    Left,
}

/// A fraction with designated leg `w` in W and other leg `f`. For a right
/// roof `w : apex → A`, `f : apex → B`; for a left roof `f : A → apex`,
/// `w : B → apex`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Roof {
    pub apex: Obj,
    pub w: Arr,
    pub f: Arr,
    pub side: Side,
}

/// Which Ore square composition picks among the valid ones.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OreChoice {
    #[default]
    First,
    Last,
}

#[derive(Clone, Debug)]
pub struct LocalizedCategory {
    pub category: FinCategory,
    /// The localization functor from the source category.
    pub loc: FinFunctor,
    /// Canonical (least) roof of each arrow class.
    pub reps: Vec<Roof>,
    /// All roofs of each arrow class.
    pub classes: Vec<Vec<Roof>>,
    /// Set when the transitive closure of the common-refinement relation
    /// merged roofs not directly related.
    pub closure_added: bool,
}

impl LocalizedCategory {
    /// Class of a roof, if it is one.
    pub fn class_of(&self, r: &Roof) -> Option<Arr> {
        self.classes.iter().position(|c| c.contains(r)).map(Arr::from_idx)
    }
}

fn in_w<'a>(c: &'a FinCategory, w: &'a ArrFamily, d: Obj, t: Obj) -> impl Iterator<Item = Arr> + 'a {
    c.hom(d, t).iter().copied().filter(move |&u| w.contains(u))
}

/// Ore squares `(u, h)` with `u : D → C` in W and `f u = w h`, for
/// `w : A → B` in W and `f : C → B`, in canonical order.
pub fn ore_squares(c: &FinCategory, w: &ArrFamily, wa: Arr, f: Arr) -> Vec<(Arr, Arr)> {
    let mut out = Vec::new();
    for d in c.objects() {
        for u in in_w(c, w, d, c.src(f)) {
            let fu = c.compose(f, u);
            for &h in c.hom(d, c.src(wa)) {
                if c.compose(wa, h) == fu {
                    out.push((u, h));
                }
            }
        }
    }
    out
}

/// R0 (wide subcategory), R1 (Ore condition), R2 (equalizing arrows) for
/// right fractions.
pub fn check_r(c: &FinCategory, w: &ArrFamily) -> AxiomReport {
    let mut r0 = AxiomVerdict::new("R0");
    for a in c.objects() {
        if !w.contains(c.id(a)) {
            r0.fail(vec![c.arr_name(c.id(a)).into()]);
        }
    }
    for &x in w.members() {
        for &y in w.members() {
            if let Some(xy) = c.try_compose(x, y) {
                if !w.contains(xy) {
                    r0.fail(vec![c.arr_name(x).into(), c.arr_name(y).into()]);
                }
            }
        }
    }
    let mut r1 = AxiomVerdict::new("R1");
    for &wa in w.members() {
        for s in c.objects() {
            for &f in c.hom(s, c.tgt(wa)) {
                let input = vec![c.arr_name(wa).into(), c.arr_name(f).into()];
                match ore_squares(c, w, wa, f).first() {
                    Some(&(u, h)) => r1.witness(input, vec![c.arr_name(u).into(), c.arr_name(h).into()]),
                    None => r1.fail(input),
                }
            }
        }
    }
    let mut r2 = AxiomVerdict::new("R2");
    for &wa in w.members() {
        for s in c.objects() {
            let hom = c.hom(s, c.src(wa));
            for &f in hom {
                for &g in hom {
                    if c.compose(wa, f) != c.compose(wa, g) {
                        continue;
                    }
                    let input = vec![c.arr_name(wa).into(), c.arr_name(f).into(), c.arr_name(g).into()];
                    let found = c.objects().find_map(|d| in_w(c, w, d, s).find(|&u| c.compose(f, u) == c.compose(g, u)));
                    match found {
                        Some(u) => r2.witness(input, vec![c.arr_name(u).into()]),
                        None => r2.fail(input),
                    }
                }
            }
        }
    }
    AxiomReport { verdicts: vec![r0, r1, r2] }
}

/// R0–R2 for left fractions, i.e. on the opposite category.
pub fn check_l(c: &FinCategory, w: &ArrFamily) -> AxiomReport {
    check_r(&c.op(), &w.op())
}

fn roofs_between(c: &FinCategory, w: &ArrFamily, a: Obj, b: Obj) -> Vec<Roof> {
    let mut out = Vec::new();
    for x in c.objects() {
        for wa in in_w(c, w, x, a) {
            for &f in c.hom(x, b) {
                out.push(Roof { apex: x, w: wa, f, side: Side::Right });
            }
        }
    }
    out
}

/// Common refinement: `u₁, u₂` with `w₁u₁ = w₂u₂` in W and `f₁u₁ = f₂u₂`.
fn refine(c: &FinCategory, w: &ArrFamily, r1: &Roof, r2: &Roof) -> bool {
    c.objects().any(|x| {
        c.hom(x, r1.apex).iter().any(|&u1| {
            let wu = c.compose(r1.w, u1);
            w.contains(wu)
                && c.hom(x, r2.apex)
                    .iter()
                    .any(|&u2| c.compose(r2.w, u2) == wu && c.compose(r1.f, u1) == c.compose(r2.f, u2))
        })
    })
}

pub fn localize_right(c: &FinCategory, w: &ArrFamily) -> Result<LocalizedCategory> {
    localize_right_with(c, w, OreChoice::First)
}

pub fn localize_right_with(c: &FinCategory, w: &ArrFamily, choice: OreChoice) -> Result<LocalizedCategory> {
    let rep = check_r(c, w);
    if !rep.passes() {
        return Err(Error::Precondition(format!("right fractions fail: {}", rep.failed().join(", "))));
    }
    let mut classes: Vec<Vec<Roof>> = Vec::new();
    let mut hom_classes: HashMap<(Obj, Obj), Vec<usize>> = HashMap::new();
    let mut closure_added = false;
    for a in c.objects() {
        for b in c.objects() {
            let roofs = roofs_between(c, w, a, b);
            let n = roofs.len();
            let mut rel = vec![false; n * n];
            let mut uf = UnionFind::new(n);
            for i in 0..n {
                for j in 0..n {
                    if i == j || refine(c, w, &roofs[i], &roofs[j]) {
                        rel[i * n + j] = true;
                        uf.union(i, j);
                    }
                }
            }
            let mut groups: Vec<(usize, Vec<Roof>)> = Vec::new();
            for i in 0..n {
                let r = uf.find(i);
                match groups.iter_mut().find(|g| g.0 == r) {
                    Some(g) => g.1.push(roofs[i]),
                    None => groups.push((r, vec![roofs[i]])),
                }
            }
            for i in 0..n {
                for j in 0..n {
                    if uf.find(i) == uf.find(j) && !rel[i * n + j] {
                        closure_added = true;
                    }
                }
            }
            let ids = hom_classes.entry((a, b)).or_default();
            for (_, g) in groups {
                ids.push(classes.len());
                classes.push(g);
            }
        }
    }
    let name = |r: &Roof| format!("({},{})", c.arr_name(r.w), c.arr_name(r.f));
    let mut cb = CategoryBuilder::new();
    let objs: Vec<Obj> = c.objects().map(|a| cb.object(c.obj_name(a))).collect();
    let mut class_of: HashMap<Roof, usize> = HashMap::new();
    let prov: Vec<Arr> = classes
        .iter()
        .enumerate()
        .map(|(k, g)| {
            for r in g {
                class_of.insert(*r, k);
            }
            let r = g[0];
            cb.arrow(name(&r), objs[c.tgt(r.w).idx()], objs[c.tgt(r.f).idx()])
        })
        .collect();
    for a in c.objects() {
        let r = Roof { apex: a, w: c.id(a), f: c.id(a), side: Side::Right };
        cb.set_identity(objs[a.idx()], prov[class_of[&r]]);
    }
    for (k1, g1) in classes.iter().enumerate() {
        let r1 = g1[0];
        for (k2, g2) in classes.iter().enumerate() {
            let r2 = g2[0];
            if c.tgt(r1.f) != c.tgt(r2.w) {
                continue;
            }
            let squares = ore_squares(c, w, r2.w, r1.f);
            let &(u, h) = match choice {
                OreChoice::First => squares.first(),
                OreChoice::Last => squares.last(),
            }
            .expect("R1 holds");
            let r = Roof { apex: c.src(u), w: c.compose(r1.w, u), f: c.compose(r2.f, h), side: Side::Right };
            let k = *class_of.get(&r).ok_or_else(|| Error::Internal("composite roof has leg outside W".into()))?;
            cb.set_compose(prov[k2], prov[k1], prov[k]);
        }
    }
    let category = cb.build()?;
    // reorder classes to built arrow order
    let mut ordered = vec![Vec::new(); classes.len()];
    for g in classes {
        let a = category.find_arr(&name(&g[0])).unwrap();
        ordered[a.idx()] = g;
    }
    let reps: Vec<Roof> = ordered.iter().map(|g| g[0]).collect();
    let src = Arc::new(c.clone());
    let tgt = Arc::new(category.clone());
    let arr = c
        .arrows()
        .map(|f| {
            let r = Roof { apex: c.src(f), w: c.id(c.src(f)), f, side: Side::Right };
            Arr::from_idx(ordered.iter().position(|g| g.contains(&r)).unwrap())
        })
        .collect();
    let loc = FinFunctor { src, tgt, obj: c.objects().collect(), arr };
    Ok(LocalizedCategory { category, loc, reps, classes: ordered, closure_added })
}

pub fn localize_left(c: &FinCategory, w: &ArrFamily) -> Result<LocalizedCategory> {
    localize_left_with(c, w, OreChoice::First)
}

/// Left fractions, computed as right fractions on `C^op` and dualized back.
pub fn localize_left_with(c: &FinCategory, w: &ArrFamily, choice: OreChoice) -> Result<LocalizedCategory> {
    let r = localize_right_with(&c.op(), &w.op(), choice)?;
    let category = r.category.op();
    let flip = |x: &Roof| Roof { side: Side::Left, ..*x };
    let src = Arc::new(c.clone());
    let tgt = Arc::new(category.clone());
    let loc = FinFunctor { src, tgt, obj: r.loc.obj.clone(), arr: r.loc.arr.clone() };
    Ok(LocalizedCategory {
        category,
        loc,
        reps: r.reps.iter().map(flip).collect(),
        classes: r.classes.iter().map(|g| g.iter().map(flip).collect()).collect(),
        closure_added: r.closure_added,
    })
}

/// The classes `[w]`, `w ∈ W`, as a family on `π₀(B)`.
pub fn induced_w0(pi: &Pi0, w: &ArrowFamily) -> ArrFamily {
    ArrFamily::new(&pi.category, w.members().iter().map(|&f| pi.quotient[f.idx()]))
}
