//! Functors between finite categories, pseudo-functors between finite
//! bicategories, Cat-valued pseudo-functors and pseudo-cocones.

mod catvalued;
mod cocone;
mod psf;

pub use catvalued::CatValuedPSF;
pub use cocone::PseudoCocone;
pub(crate) use cocone::composable_pairs;
pub use psf::PseudoFunctor;

use crate::category::FinCategory;
use crate::ids::{Arr, Obj};
use crate::report::{Law, ValidationReport};
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct FinFunctor {
    pub src: Arc<FinCategory>,
    pub tgt: Arc<FinCategory>,
    pub obj: Vec<Obj>,
    pub arr: Vec<Arr>,
}

impl PartialEq for FinFunctor {
    fn eq(&self, other: &Self) -> bool {
        self.obj == other.obj && self.arr == other.arr && *self.src == *other.src && *self.tgt == *other.tgt
    }
}

impl FinFunctor {
    pub fn identity(c: Arc<FinCategory>) -> Self {
        FinFunctor {
            obj: c.objects().collect(),
            arr: c.arrows().collect(),
            src: c.clone(),
            tgt: c,
        }
    }

    /// The functor to the terminal category.
    pub fn to_terminal(c: Arc<FinCategory>) -> Self {
        let t = Arc::new(FinCategory::terminal());
        FinFunctor {
            obj: vec![Obj(0); c.num_objects()],
            arr: vec![Arr(0); c.num_arrows()],
            src: c,
            tgt: t,
        }
    }

    pub fn map_obj(&self, x: Obj) -> Obj {
        self.obj[x.idx()]
    }
    pub fn map_arr(&self, f: Arr) -> Arr {
        self.arr[f.idx()]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &FinFunctor) -> FinFunctor {
        FinFunctor {
            src: first.src.clone(),
            tgt: self.tgt.clone(),
            obj: first.obj.iter().map(|&x| self.obj[x.idx()]).collect(),
            arr: first.arr.iter().map(|&f| self.arr[f.idx()]).collect(),
        }
    }

    pub fn validate(&self) -> ValidationReport {
        self.validate_at("functor")
    }

    pub(crate) fn validate_at(&self, loc: &str) -> ValidationReport {
        let (c, d) = (&*self.src, &*self.tgt);
        let mut rep = ValidationReport::default();
        if self.obj.len() != c.num_objects() || self.arr.len() != c.num_arrows() {
            rep.push(Law::FunctorTyping, loc, vec![], "map sizes do not match the source");
            return rep;
        }
        for f in c.arrows() {
            let g = self.arr[f.idx()];
            if d.src(g) != self.obj[c.src(f).idx()] || d.tgt(g) != self.obj[c.tgt(f).idx()] {
                rep.push(Law::FunctorTyping, loc, vec![c.arr_name(f).into(), d.arr_name(g).into()], "arrow image mistyped");
            }
        }
        if !rep.is_empty() {
            return rep;
        }
        for x in c.objects() {
            if self.arr[c.id(x).idx()] != d.id(self.obj[x.idx()]) {
                rep.push(Law::Functoriality, loc, vec![c.obj_name(x).into()], "identity not preserved");
            }
        }
        for f in c.arrows() {
            for g in c.arrows().filter(|&g| c.src(g) == c.tgt(f)) {
                let lhs = self.arr[c.compose(g, f).idx()];
                let rhs = d.compose(self.arr[g.idx()], self.arr[f.idx()]);
                if lhs != rhs {
                    rep.push(
                        Law::Functoriality,
                        loc,
                        vec![c.arr_name(g).into(), c.arr_name(f).into()],
                        "composition not preserved",
                    );
                }
            }
        }
        rep
    }

    pub fn is_faithful(&self) -> bool {
        let c = &*self.src;
        for a in c.objects() {
            for b in c.objects() {
                let mut imgs: Vec<Arr> = c.hom(a, b).iter().map(|&f| self.arr[f.idx()]).collect();
                imgs.sort();
                let n = imgs.len();
                imgs.dedup();
                if imgs.len() != n {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_full(&self) -> bool {
        let (c, d) = (&*self.src, &*self.tgt);
        for a in c.objects() {
            for b in c.objects() {
                let imgs: Vec<Arr> = c.hom(a, b).iter().map(|&f| self.arr[f.idx()]).collect();
                if d.hom(self.obj[a.idx()], self.obj[b.idx()]).iter().any(|g| !imgs.contains(g)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_essentially_surjective(&self) -> bool {
        let d = &*self.tgt;
        d.objects().all(|y| {
            self.obj.iter().any(|&fx| fx == y || d.hom(fx, y).iter().any(|&g| d.inverse(g).is_some()))
        })
    }

    pub fn is_equivalence_of_categories(&self) -> bool {
        self.is_faithful() && self.is_full() && self.is_essentially_surjective()
    }

    /// Inverse functor, if the maps are bijective and the inverse is a functor.
    pub fn inverse(&self) -> Option<FinFunctor> {
        let (c, d) = (&*self.src, &*self.tgt);
        if c.num_objects() != d.num_objects() || c.num_arrows() != d.num_arrows() {
            return None;
        }
        let mut obj = vec![None; d.num_objects()];
        for x in c.objects() {
            let y = self.obj[x.idx()];
            if obj[y.idx()].replace(x).is_some() {
                return None;
            }
        }
        let mut arr = vec![None; d.num_arrows()];
        for f in c.arrows() {
            let g = self.arr[f.idx()];
            if arr[g.idx()].replace(f).is_some() {
                return None;
            }
        }
        let inv = FinFunctor {
            src: self.tgt.clone(),
            tgt: self.src.clone(),
            obj: obj.into_iter().map(|x| x.unwrap()).collect(),
            arr: arr.into_iter().map(|x| x.unwrap()).collect(),
        };
        if inv.validate().is_empty() {
            Some(inv)
        } else {
            None
        }
    }

    pub fn is_iso_of_categories(&self) -> bool {
        self.inverse().is_some()
    }

    pub fn is_identity(&self) -> bool {
        *self.src == *self.tgt
            && self.obj.iter().enumerate().all(|(i, x)| x.idx() == i)
            && self.arr.iter().enumerate().all(|(i, f)| f.idx() == i)
    }
}

/// Natural transformation `F ⇒ G` given by its components.
#[derive(Clone, Debug, PartialEq)]
pub struct FinNatTransf {
    pub components: Vec<Arr>,
}

impl FinNatTransf {
    pub fn identity(f: &FinFunctor) -> Self {
        FinNatTransf { components: f.obj.iter().map(|&y| f.tgt.id(y)).collect() }
    }

    pub fn validate(&self, f: &FinFunctor, g: &FinFunctor) -> ValidationReport {
        validate_components(&self.components, f, g, "transformation", Law::Naturality)
    }
}

/// Typing and naturality of a family of components `F x → G x`.
pub(crate) fn validate_components(
    comps: &[Arr],
    f: &FinFunctor,
    g: &FinFunctor,
    loc: &str,
    law: Law,
) -> ValidationReport {
    let (c, d) = (&*f.src, &*f.tgt);
    let mut rep = ValidationReport::default();
    if comps.len() != c.num_objects() {
        rep.push(Law::TransformationTyping, loc, vec![], "component count does not match the source");
        return rep;
    }
    for x in c.objects() {
        let k = comps[x.idx()];
        if d.src(k) != f.map_obj(x) || d.tgt(k) != g.map_obj(x) {
            rep.push(
                Law::TransformationTyping,
                loc,
                vec![c.obj_name(x).into(), d.arr_name(k).into()],
                "component mistyped",
            );
        }
    }
    if !rep.is_empty() {
        return rep;
    }
    for a in c.arrows() {
        let (x, y) = (c.src(a), c.tgt(a));
        let lhs = d.compose(g.map_arr(a), comps[x.idx()]);
        let rhs = d.compose(comps[y.idx()], f.map_arr(a));
        if lhs != rhs {
            rep.push(law, loc, vec![c.arr_name(a).into()], "naturality square does not commute");
        }
    }
    rep
}
