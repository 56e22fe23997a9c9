use super::{validate_components, FinFunctor, PseudoFunctor};
use crate::bicat::FinBicategory;
use crate::category::{Arrow, FinCategory};
use crate::error::{Error, Result};
use crate::ids::{Arr, Cell1, Cell2, Obj};
use crate::report::{Law, ValidationReport};
use std::collections::HashMap;
use std::sync::Arc;

/// A pseudo-functor `F : B → Cat` with finite fibers, stored componentwise.
///
/// * `on1[u] : F(src u) → F(tgt u)`
/// * `on2[α][x] = (Fα)_x : Fu(x) → Fv(x)` for `α : u ⇒ v`
/// * `f2[(u, v)][x] = (F²_{u,v})_x : Fu(Fv x) → F(uv)(x)`, `x` in `F(src v)`
/// * `f0[A][x] = (F⁰_A)_x : x → F(1_A)(x)`
#[derive(Clone, Debug)]
pub struct CatValuedPSF {
    pub base: Arc<FinBicategory>,
    pub fibers: Vec<Arc<FinCategory>>,
    pub on1: Vec<FinFunctor>,
    pub on2: Vec<Vec<Arr>>,
    pub f2: HashMap<(Cell1, Cell1), Vec<Arr>>,
    pub f0: Vec<Vec<Arr>>,
}

impl CatValuedPSF {
    pub fn fiber(&self, a: Obj) -> &FinCategory {
        &self.fibers[a.idx()]
    }
    pub fn functor(&self, u: Cell1) -> &FinFunctor {
        &self.on1[u.idx()]
    }
    /// `Fu(x)`.
    pub fn act(&self, u: Cell1, x: Obj) -> Obj {
        self.on1[u.idx()].map_obj(x)
    }
    /// `Fu(φ)`.
    pub fn act_arr(&self, u: Cell1, phi: Arr) -> Arr {
        self.on1[u.idx()].map_arr(phi)
    }
    /// `(Fα)_x`.
    pub fn comp2(&self, alpha: Cell2, x: Obj) -> Arr {
        self.on2[alpha.idx()][x.idx()]
    }
    /// `(F²_{u,v})_x`.
    pub fn f2_at(&self, u: Cell1, v: Cell1, x: Obj) -> Arr {
        self.f2[&(u, v)][x.idx()]
    }
    /// `(F⁰_A)_x`.
    pub fn f0_at(&self, a: Obj, x: Obj) -> Arr {
        self.f0[a.idx()][x.idx()]
    }

    /// All constraints identities; fails unless `F(uv) = Fu∘Fv` and
    /// `F(1_A) = 1` hold on the nose.
    pub fn strict(
        base: Arc<FinBicategory>,
        fibers: Vec<Arc<FinCategory>>,
        on1: Vec<FinFunctor>,
        on2: Vec<Vec<Arr>>,
    ) -> Result<Self> {
        let mut f2 = HashMap::new();
        for (&(u, v), &uv) in base.hcomp1.iter() {
            let comp = on1[u.idx()].after(&on1[v.idx()]);
            if comp.obj != on1[uv.idx()].obj || comp.arr != on1[uv.idx()].arr {
                return Err(Error::Structural(format!(
                    "F({}) ∘ F({}) differs from F({})",
                    base.cell1_name(u),
                    base.cell1_name(v),
                    base.cell1_name(uv)
                )));
            }
            let fib = &fibers[base.tgt1(u).idx()];
            let comps = fibers[base.src1(v).idx()].objects().map(|x| fib.id(comp.map_obj(x))).collect();
            f2.insert((u, v), comps);
        }
        let mut f0 = Vec::new();
        for a in base.objects() {
            let fa = &on1[base.id1(a).idx()];
            if !fa.is_identity() {
                return Err(Error::Structural(format!("F(1_{}) is not the identity", base.obj_name(a))));
            }
            let fib = &fibers[a.idx()];
            f0.push(fib.objects().map(|x| fib.id(x)).collect());
        }
        Ok(CatValuedPSF { base, fibers, on1, on2, f2, f0 })
    }

    /// The constant pseudo-functor at `k`.
    pub fn constant(base: Arc<FinBicategory>, k: Arc<FinCategory>) -> Self {
        let id = FinFunctor::identity(k.clone());
        let ids: Vec<Arr> = k.objects().map(|x| k.id(x)).collect();
        CatValuedPSF {
            fibers: vec![k.clone(); base.num_objects()],
            on1: vec![id; base.num_cells1()],
            on2: vec![ids.clone(); base.num_cells2()],
            f2: base.hcomp1.keys().map(|&key| (key, ids.clone())).collect(),
            f0: vec![ids; base.num_objects()],
            base,
        }
    }

    /// The representable `B(X, −)`: `F(u) = u ∘ −`, `(Fα)_k = α ⋆ 1_k`,
    /// `(F²_{u,v})_k = a⁻¹_{u,v,k}`, `(F⁰_A)_k = l_k⁻¹`.
    pub fn representable(base: Arc<FinBicategory>, x: Obj) -> Self {
        let b = &*base;
        let homs: Vec<_> = b.objects().map(|a| b.hom_category(x, a)).collect();
        let fibers: Vec<Arc<FinCategory>> = homs.iter().map(|h| h.cat.clone()).collect();
        let on1 = b
            .cells1()
            .map(|u| {
                let (s, t) = (b.src1(u), b.tgt1(u));
                let (hs, ht) = (&homs[s.idx()], &homs[t.idx()]);
                FinFunctor {
                    src: hs.cat.clone(),
                    tgt: ht.cat.clone(),
                    obj: hs.cells1.iter().map(|&k| ht.obj(b.hcomp1(u, k))).collect(),
                    arr: hs.cells2.iter().map(|&th| ht.arr(b.whisker_l(u, th))).collect(),
                }
            })
            .collect();
        let on2 = b
            .cells2()
            .map(|al| {
                let ht = &homs[b.tgt1(b.src2(al)).idx()];
                homs[b.src1(b.src2(al)).idx()].cells1.iter().map(|&k| ht.arr(b.whisker_r(al, k))).collect()
            })
            .collect();
        let mut f2 = HashMap::new();
        for &(u, v) in b.hcomp1.keys() {
            let hs = &homs[b.src1(v).idx()];
            let ht = &homs[b.tgt1(u).idx()];
            f2.insert((u, v), hs.cells1.iter().map(|&k| ht.arr(b.assoc_inv(u, v, k))).collect());
        }
        let f0 = b
            .objects()
            .map(|a| homs[a.idx()].cells1.iter().map(|&k| homs[a.idx()].arr(b.inv(b.lunitor(k)))).collect())
            .collect();
        CatValuedPSF { base, fibers, on1, on2, f2, f0 }
    }

    /// `B(D−, T)` over `X^op` for a pseudo-functor `D : X → B`; `xop` must be
    /// `op_dual` of the domain of `D`.
    ///
    /// For `p : C → C'` in `X`, `F(p) = − ∘ Dp : B(DC', T) → B(DC, T)`,
    /// `(Fξ)_k = k ⋆ Dξ`, `(F²)_k = (k ⋆ D²_{p,q}) ∘ a_{k,Dp,Dq}` and
    /// `(F⁰_C)_k = (k ⋆ D⁰_C) ∘ r_k⁻¹`.
    pub fn hom_into(d: &PseudoFunctor, t: Obj, xop: Arc<FinBicategory>) -> Self {
        let (x, b) = (&*d.dom, &*d.cod);
        let homs: Vec<_> = x.objects().map(|c| b.hom_category(d.map_obj(c), t)).collect();
        let fibers: Vec<Arc<FinCategory>> = homs.iter().map(|h| h.cat.clone()).collect();
        let on1 = x
            .cells1()
            .map(|p| {
                let (s, tt) = (x.src1(p), x.tgt1(p));
                let (from, to) = (&homs[tt.idx()], &homs[s.idx()]);
                let dp = d.map1(p);
                FinFunctor {
                    src: from.cat.clone(),
                    tgt: to.cat.clone(),
                    obj: from.cells1.iter().map(|&k| to.obj(b.hcomp1(k, dp))).collect(),
                    arr: from.cells2.iter().map(|&th| to.arr(b.whisker_r(th, dp))).collect(),
                }
            })
            .collect();
        let on2 = x
            .cells2()
            .map(|xi| {
                let p = x.src2(xi);
                let (from, to) = (&homs[x.tgt1(p).idx()], &homs[x.src1(p).idx()]);
                from.cells1.iter().map(|&k| to.arr(b.whisker_l(k, d.map2(xi)))).collect()
            })
            .collect();
        let mut f2 = HashMap::new();
        // In X^op the composite of (g, f) is hcomp1_X(f, g).
        for &(p, q) in x.hcomp1.keys() {
            let from = &homs[x.tgt1(p).idx()];
            let to = &homs[x.src1(q).idx()];
            let (dp, dq) = (d.map1(p), d.map1(q));
            let comps = from
                .cells1
                .iter()
                .map(|&k| to.arr(b.vcomp(b.whisker_l(k, d.f2(p, q)), b.assoc(k, dp, dq))))
                .collect();
            f2.insert((q, p), comps);
        }
        let f0 = x
            .objects()
            .map(|c| {
                let h = &homs[c.idx()];
                h.cells1.iter().map(|&k| h.arr(b.vcomp(b.whisker_l(k, d.f0(c)), b.inv(b.runitor(k))))).collect()
            })
            .collect();
        CatValuedPSF { base: xop, fibers, on1, on2, f2, f0 }
    }

    /// Pointwise product `F × G` over the same base.
    pub fn product(&self, other: &CatValuedPSF) -> CatValuedPSF {
        let b = &*self.base;
        let fibers: Vec<Arc<FinCategory>> =
            b.objects().map(|a| Arc::new(self.fiber(a).product(other.fiber(a)))).collect();
        let pair_o = |m: usize, x: Obj, y: Obj| Obj::from_idx(x.idx() * m + y.idx());
        let pair_a = |g: &FinCategory, fa: Arr, ga: Arr| Arr::from_idx(fa.idx() * g.num_arrows() + ga.idx());
        let pair_comps = |a: Obj, xs: &[Arr], ys: &[Arr]| -> Vec<Arr> {
            let g = other.fiber(a);
            let mut out = Vec::with_capacity(xs.len() * ys.len());
            for &p in xs {
                for &q in ys {
                    out.push(pair_a(g, p, q));
                }
            }
            out
        };
        let on1 = b
            .cells1()
            .map(|u| {
                let (s, t) = (b.src1(u), b.tgt1(u));
                let (fu, gu) = (self.functor(u), other.functor(u));
                let (fs, gs) = (self.fiber(s), other.fiber(s));
                let gt = other.fiber(t);
                let mut obj = Vec::new();
                for x in fs.objects() {
                    for y in gs.objects() {
                        obj.push(pair_o(gt.num_objects(), fu.map_obj(x), gu.map_obj(y)));
                    }
                }
                let mut arr = Vec::new();
                for p in fs.arrows() {
                    for q in gs.arrows() {
                        arr.push(pair_a(gt, fu.map_arr(p), gu.map_arr(q)));
                    }
                }
                FinFunctor { src: fibers[s.idx()].clone(), tgt: fibers[t.idx()].clone(), obj, arr }
            })
            .collect();
        let on2 = b
            .cells2()
            .map(|al| pair_comps(b.tgt1(b.src2(al)), &self.on2[al.idx()], &other.on2[al.idx()]))
            .collect();
        let f2 = self
            .f2
            .iter()
            .map(|(&(u, v), xs)| ((u, v), pair_comps(b.tgt1(u), xs, &other.f2[&(u, v)])))
            .collect();
        let f0 = b.objects().map(|a| pair_comps(a, &self.f0[a.idx()], &other.f0[a.idx()])).collect();
        CatValuedPSF { base: self.base.clone(), fibers, on1, on2, f2, f0 }
    }

    /// Componentwise check of the pseudo-functor laws.
    ///
    /// Fibers are validated first, then the typing of functors, components
    /// and constraints; the coherence laws are only evaluated on well-typed data.
    pub fn validate(&self) -> ValidationReport {
        let b = &*self.base;
        let mut rep = ValidationReport::default();
        if self.fibers.len() != b.num_objects()
            || self.on1.len() != b.num_cells1()
            || self.on2.len() != b.num_cells2()
            || self.f0.len() != b.num_objects()
        {
            rep.push(Law::PsfTyping, "maps", vec![], "map sizes do not match the base");
            return rep;
        }
        for a in b.objects() {
            for v in self.fiber(a).validate().violations {
                rep.push(Law::FiberCategory, format!("F({})", b.obj_name(a)), v.cells, format!("{}: {}", v.law, v.detail));
            }
        }
        if !rep.is_empty() {
            return rep;
        }
        let n = |u: Cell1| b.cell1_name(u).to_string();
        for u in b.cells1() {
            let fu = self.functor(u);
            if *fu.src != *self.fibers[b.src1(u).idx()] || *fu.tgt != *self.fibers[b.tgt1(u).idx()] {
                rep.push(Law::FunctorTyping, format!("F({})", n(u)), vec![n(u)], "functor between the wrong fibers");
                continue;
            }
            rep.extend(fu.validate_at(&format!("F({})", n(u))));
        }
        if !rep.is_empty() {
            return rep;
        }
        for al in b.cells2() {
            let (u, v) = (b.src2(al), b.tgt2(al));
            rep.extend(validate_components(
                &self.on2[al.idx()],
                self.functor(u),
                self.functor(v),
                &format!("F({})", b.cell2_name(al)),
                Law::Naturality,
            ));
        }
        for (&(u, v), comps) in self.sorted_f2() {
            let fuv = self.functor(u).after(self.functor(v));
            rep.extend(validate_components(
                comps,
                &fuv,
                self.functor(b.hcomp1(u, v)),
                &format!("F2({},{})", n(u), n(v)),
                Law::ConstraintNaturality,
            ));
        }
        for &(u, v) in b.hcomp1.keys() {
            if !self.f2.contains_key(&(u, v)) {
                rep.push(Law::PsfTyping, "F2", vec![n(u), n(v)], "missing");
            }
        }
        for a in b.objects() {
            let id = FinFunctor::identity(self.fibers[a.idx()].clone());
            rep.extend(validate_components(
                &self.f0[a.idx()],
                &id,
                self.functor(b.id1(a)),
                &format!("F0({})", b.obj_name(a)),
                Law::ConstraintNaturality,
            ));
        }
        if rep.violations.iter().any(|v| matches!(v.law, Law::TransformationTyping | Law::PsfTyping)) {
            return rep;
        }

        // local functoriality
        for u in b.cells1() {
            let fib = self.fiber(b.tgt1(u));
            let fu = self.functor(u);
            for x in self.fiber(b.src1(u)).objects() {
                if self.comp2(b.id2(u), x) != fib.id(fu.map_obj(x)) {
                    rep.push(Law::LocalFunctoriality, format!("F(1_{})", n(u)), vec![n(u)], "identity 2-cell not preserved");
                    break;
                }
            }
        }
        let mut vkeys: Vec<_> = b.vcomp.iter().collect();
        vkeys.sort();
        for (&(be, al), &ba) in vkeys {
            let u = b.src2(al);
            let fib = self.fiber(b.tgt1(u));
            for x in self.fiber(b.src1(u)).objects() {
                if self.comp2(ba, x) != fib.compose(self.comp2(be, x), self.comp2(al, x)) {
                    rep.push(
                        Law::LocalFunctoriality,
                        "vcomp",
                        vec![b.cell2_name(be).into(), b.cell2_name(al).into()],
                        "vertical composite not preserved",
                    );
                    break;
                }
            }
        }
        // invertibility
        for (&(u, v), comps) in self.sorted_f2() {
            let fib = self.fiber(b.tgt1(u));
            if comps.iter().any(|&c| fib.inverse(c).is_none()) {
                rep.push(Law::ConstraintInvertible, "F2", vec![n(u), n(v)], "component not invertible");
            }
        }
        for a in b.objects() {
            let fib = self.fiber(a);
            if self.f0[a.idx()].iter().any(|&c| fib.inverse(c).is_none()) {
                rep.push(Law::ConstraintInvertible, "F0", vec![b.obj_name(a).into()], "component not invertible");
            }
        }
        // naturality of F2 in 2-cells
        let mut hkeys: Vec<_> = b.hcomp2.iter().collect();
        hkeys.sort();
        for (&(be, al), &ba) in hkeys {
            let (u, v) = (b.src2(be), b.src2(al));
            let (u2, v2) = (b.tgt2(be), b.tgt2(al));
            let fib = self.fiber(b.tgt1(u));
            for x in self.fiber(b.src1(v)).objects() {
                // (Fβ ⋆ Fα)_x = (Fβ)_{Fv' x} ∘ Fu((Fα)_x)
                let star = fib.compose(self.comp2(be, self.act(v2, x)), self.act_arr(u, self.comp2(al, x)));
                let lhs = fib.compose(self.comp2(ba, x), self.f2_at(u, v, x));
                let rhs = fib.compose(self.f2_at(u2, v2, x), star);
                if lhs != rhs {
                    rep.push(
                        Law::ConstraintNaturality,
                        "F2",
                        vec![b.cell2_name(be).into(), b.cell2_name(al).into()],
                        "F2 not natural in 2-cells",
                    );
                    break;
                }
            }
        }
        // lax associativity
        for (u, v, w) in b.composable_triples() {
            let fib = self.fiber(b.tgt1(u));
            let (uv, vw) = (b.hcomp1(u, v), b.hcomp1(v, w));
            let a = b.assoc(u, v, w);
            for x in self.fiber(b.src1(w)).objects() {
                let lhs = fib.seq(&[self.f2_at(u, v, self.act(w, x)), self.f2_at(uv, w, x), self.comp2(a, x)]);
                let rhs = fib.compose(self.f2_at(u, vw, x), self.act_arr(u, self.f2_at(v, w, x)));
                if lhs != rhs {
                    rep.push(Law::LaxAssociativity, "F2", vec![n(u), n(v), n(w)], "lax associativity fails");
                    break;
                }
            }
        }
        // lax unity
        for u in b.cells1() {
            let (s, t) = (b.src1(u), b.tgt1(u));
            let fib = self.fiber(t);
            for x in self.fiber(s).objects() {
                let fx = self.act(u, x);
                let left = fib.seq(&[self.f0_at(t, fx), self.f2_at(b.id1(t), u, x), self.comp2(b.lunitor(u), x)]);
                if left != fib.id(fx) {
                    rep.push(Law::LaxLeftUnity, "F0", vec![n(u)], "lax left unity fails");
                    break;
                }
            }
            for x in self.fiber(s).objects() {
                let fx = self.act(u, x);
                let right =
                    fib.seq(&[self.act_arr(u, self.f0_at(s, x)), self.f2_at(u, b.id1(s), x), self.comp2(b.runitor(u), x)]);
                if right != fib.id(fx) {
                    rep.push(Law::LaxRightUnity, "F0", vec![n(u)], "lax right unity fails");
                    break;
                }
            }
        }
        rep
    }

    fn sorted_f2(&self) -> Vec<(&(Cell1, Cell1), &Vec<Arr>)> {
        let mut v: Vec<_> = self.f2.iter().collect();
        v.sort_by_key(|(k, _)| **k);
        v
    }
}

impl FinCategory {
    /// Product category; objects and arrows named `(x,y)` and indexed
    /// row-major, which agrees with the name order when no name contains
    /// characters sorting below `,`.
    pub fn product(&self, other: &FinCategory) -> FinCategory {
        let (m0, m1) = (other.num_objects(), other.num_arrows());
        let mut objects = Vec::new();
        for x in self.objects() {
            for y in other.objects() {
                objects.push(format!("({},{})", self.obj_name(x), other.obj_name(y)));
            }
        }
        let po = |x: Obj, y: Obj| Obj::from_idx(x.idx() * m0 + y.idx());
        let pa = |f: Arr, g: Arr| Arr::from_idx(f.idx() * m1 + g.idx());
        let mut arrows = Vec::new();
        for f in self.arrows() {
            for g in other.arrows() {
                arrows.push(Arrow {
                    name: format!("({},{})", self.arr_name(f), other.arr_name(g)),
                    src: po(self.src(f), other.src(g)),
                    tgt: po(self.tgt(f), other.tgt(g)),
                });
            }
        }
        let mut identity = Vec::new();
        for x in self.objects() {
            for y in other.objects() {
                identity.push(pa(self.id(x), other.id(y)));
            }
        }
        let mut compose = HashMap::new();
        for (&(g1, f1), &r1) in &self.compose {
            for (&(g2, f2), &r2) in &other.compose {
                compose.insert((pa(g1, g2), pa(f1, f2)), pa(r1, r2));
            }
        }
        FinCategory::from_parts(objects, arrows, identity, compose)
    }
}
