use crate::bicat::FinBicategory;
use crate::error::{Error, Result};
use crate::ids::{Cell1, Cell2, Obj};
use crate::report::{Law, ValidationReport};
use std::collections::HashMap;
use std::sync::Arc;

/// A pseudo-functor between finite bicategories.
///
/// `f2[(u, v)] : Fu ∘ Fv ⇒ F(u ∘ v)` for composable `(u, v)` (v first) and
/// `f0[A] : 1_{FA} ⇒ F(1_A)`.
#[derive(Clone, Debug)]
pub struct PseudoFunctor {
    pub dom: Arc<FinBicategory>,
    pub cod: Arc<FinBicategory>,
    pub obj: Vec<Obj>,
    pub c1: Vec<Cell1>,
    pub c2: Vec<Cell2>,
    pub f2: HashMap<(Cell1, Cell1), Cell2>,
    pub f0: Vec<Cell2>,
}

impl PseudoFunctor {
    pub fn identity(b: Arc<FinBicategory>) -> Self {
        PseudoFunctor::strict(b.clone(), b.clone(), b.objects().collect(), b.cells1().collect(), b.cells2().collect())
            .expect("identity is strict")
    }

    /// A pseudo-functor with identity constraints; fails if the maps do not
    /// strictly preserve composition and identities of 1-cells.
    pub fn strict(
        dom: Arc<FinBicategory>,
        cod: Arc<FinBicategory>,
        obj: Vec<Obj>,
        c1: Vec<Cell1>,
        c2: Vec<Cell2>,
    ) -> Result<Self> {
        let mut f2 = HashMap::new();
        for (&(u, v), &uv) in dom.hcomp1.iter() {
            let (fu, fv) = (c1[u.idx()], c1[v.idx()]);
            match cod.try_hcomp1(fu, fv) {
                Some(x) if x == c1[uv.idx()] => {
                    f2.insert((u, v), cod.id2(x));
                }
                _ => {
                    return Err(Error::Structural(format!(
                        "map does not strictly preserve the composite ({}, {})",
                        dom.cell1_name(u),
                        dom.cell1_name(v)
                    )))
                }
            }
        }
        let mut f0 = Vec::new();
        for a in dom.objects() {
            let fa = obj[a.idx()];
            let fid = c1[dom.id1(a).idx()];
            if cod.id1(fa) != fid {
                return Err(Error::Structural(format!(
                    "map does not strictly preserve the identity of {}",
                    dom.obj_name(a)
                )));
            }
            f0.push(cod.id2(fid));
        }
        Ok(PseudoFunctor { dom, cod, obj, c1, c2, f2, f0 })
    }

    pub fn map_obj(&self, a: Obj) -> Obj {
        self.obj[a.idx()]
    }
    pub fn map1(&self, f: Cell1) -> Cell1 {
        self.c1[f.idx()]
    }
    pub fn map2(&self, a: Cell2) -> Cell2 {
        self.c2[a.idx()]
    }
    pub fn f2(&self, u: Cell1, v: Cell1) -> Cell2 {
        self.f2[&(u, v)]
    }
    pub fn f0(&self, a: Obj) -> Cell2 {
        self.f0[a.idx()]
    }

    /// `G ∘ F` with constraints `G(F²) ∘ G²` and `G(F⁰) ∘ G⁰`; `self` is F.
    pub fn then(&self, g: &PseudoFunctor) -> PseudoFunctor {
        let cod = &g.cod;
        let mut f2 = HashMap::new();
        for (&(u, v), &c) in &self.f2 {
            let (fu, fv) = (self.map1(u), self.map1(v));
            f2.insert((u, v), cod.vcomp(g.map2(c), g.f2(fu, fv)));
        }
        let f0 = self
            .dom
            .objects()
            .map(|a| cod.vcomp(g.map2(self.f0(a)), g.f0(self.map_obj(a))))
            .collect();
        PseudoFunctor {
            dom: self.dom.clone(),
            cod: g.cod.clone(),
            obj: self.obj.iter().map(|&x| g.map_obj(x)).collect(),
            c1: self.c1.iter().map(|&x| g.map1(x)).collect(),
            c2: self.c2.iter().map(|&x| g.map2(x)).collect(),
            f2,
            f0,
        }
    }

    /// `F^op : B^op → C^op`; constraint cells are reused with swapped keys.
    pub fn op(&self) -> PseudoFunctor {
        PseudoFunctor {
            dom: Arc::new(self.dom.op_dual()),
            cod: Arc::new(self.cod.op_dual()),
            obj: self.obj.clone(),
            c1: self.c1.clone(),
            c2: self.c2.clone(),
            f2: self.f2.iter().map(|(&(u, v), &c)| ((v, u), c)).collect(),
            f0: self.f0.clone(),
        }
    }

    /// Same as [`op`](Self::op) but reusing already computed duals.
    pub fn op_with(&self, dom_op: Arc<FinBicategory>, cod_op: Arc<FinBicategory>) -> PseudoFunctor {
        PseudoFunctor {
            dom: dom_op,
            cod: cod_op,
            obj: self.obj.clone(),
            c1: self.c1.clone(),
            c2: self.c2.clone(),
            f2: self.f2.iter().map(|(&(u, v), &c)| ((v, u), c)).collect(),
            f0: self.f0.clone(),
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let (b, c) = (&*self.dom, &*self.cod);
        let mut rep = ValidationReport::default();
        let n = |x: Cell1| b.cell1_name(x).to_string();
        let n2 = |x: Cell2| b.cell2_name(x).to_string();
        if self.obj.len() != b.num_objects()
            || self.c1.len() != b.num_cells1()
            || self.c2.len() != b.num_cells2()
            || self.f0.len() != b.num_objects()
        {
            rep.push(Law::PsfTyping, "maps", vec![], "map sizes do not match the domain");
            return rep;
        }
        for f in b.cells1() {
            let g = self.map1(f);
            if c.src1(g) != self.map_obj(b.src1(f)) || c.tgt1(g) != self.map_obj(b.tgt1(f)) {
                rep.push(Law::PsfTyping, "1-cells", vec![n(f)], "image mistyped");
            }
        }
        for a in b.cells2() {
            let x = self.map2(a);
            if c.src2(x) != self.map1(b.src2(a)) || c.tgt2(x) != self.map1(b.tgt2(a)) {
                rep.push(Law::PsfTyping, "2-cells", vec![n2(a)], "image mistyped");
            }
        }
        for (&(u, v), &uv) in b.hcomp1.iter() {
            match self.f2.get(&(u, v)) {
                None => rep.push(Law::PsfTyping, "F2", vec![n(u), n(v)], "missing"),
                Some(&k) => {
                    let want_s = c.try_hcomp1(self.map1(u), self.map1(v));
                    if Some(c.src2(k)) != want_s || c.tgt2(k) != self.map1(uv) {
                        rep.push(Law::PsfTyping, "F2", vec![n(u), n(v)], "constraint mistyped");
                    }
                }
            }
        }
        for a in b.objects() {
            let k = self.f0(a);
            if c.src2(k) != c.id1(self.map_obj(a)) || c.tgt2(k) != self.map1(b.id1(a)) {
                rep.push(Law::PsfTyping, "F0", vec![b.obj_name(a).into()], "constraint mistyped");
            }
        }
        if !rep.is_empty() {
            return rep;
        }

        // local functoriality
        for f in b.cells1() {
            if self.map2(b.id2(f)) != c.id2(self.map1(f)) {
                rep.push(Law::LocalFunctoriality, "identities", vec![n(f)], "1_f not preserved");
            }
        }
        for (&(y, x), &yx) in b.vcomp.iter() {
            if self.map2(yx) != c.vcomp(self.map2(y), self.map2(x)) {
                rep.push(Law::LocalFunctoriality, "vcomp", vec![n2(y), n2(x)], "vertical composite not preserved");
            }
        }
        // constraints invertible
        for (&(u, v), &k) in &self.f2 {
            if c.inverse(k).is_none() {
                rep.push(Law::ConstraintInvertible, "F2", vec![n(u), n(v)], "not invertible");
            }
        }
        for a in b.objects() {
            if c.inverse(self.f0(a)).is_none() {
                rep.push(Law::ConstraintInvertible, "F0", vec![b.obj_name(a).into()], "not invertible");
            }
        }
        // naturality of F2: F(a * b) o F2_{u,v} = F2_{u',v'} o (Fa * Fb)
        for (&(y, x), &yx) in b.hcomp2.iter() {
            let (u, v) = (b.src2(y), b.src2(x));
            let (u2, v2) = (b.tgt2(y), b.tgt2(x));
            let lhs = c.vcomp(self.map2(yx), self.f2(u, v));
            let rhs = c.vcomp(self.f2(u2, v2), c.hcomp2(self.map2(y), self.map2(x)));
            if lhs != rhs {
                rep.push(Law::ConstraintNaturality, "F2", vec![n2(y), n2(x)], "F2 not natural");
            }
        }
        // lax associativity
        for (u, v, w) in b.composable_triples() {
            let (fu, fv, fw) = (self.map1(u), self.map1(v), self.map1(w));
            let uv = b.hcomp1(u, v);
            let vw = b.hcomp1(v, w);
            let lhs = c.vseq(&[
                c.whisker_r(self.f2(u, v), fw),
                self.f2(uv, w),
                self.map2(b.assoc(u, v, w)),
            ]);
            let rhs = c.vseq(&[c.assoc(fu, fv, fw), c.whisker_l(fu, self.f2(v, w)), self.f2(u, vw)]);
            if lhs != rhs {
                rep.push(Law::LaxAssociativity, "F2", vec![n(u), n(v), n(w)], "lax associativity fails");
            }
        }
        // lax unity
        for u in b.cells1() {
            let (s, t) = (b.src1(u), b.tgt1(u));
            let fu = self.map1(u);
            let left = c.vseq(&[
                c.whisker_r(self.f0(t), fu),
                self.f2(b.id1(t), u),
                self.map2(b.lunitor(u)),
            ]);
            if left != c.lunitor(fu) {
                rep.push(Law::LaxLeftUnity, "F0", vec![n(u)], "lax left unity fails");
            }
            let right = c.vseq(&[
                c.whisker_l(fu, self.f0(s)),
                self.f2(u, b.id1(s)),
                self.map2(b.runitor(u)),
            ]);
            if right != c.runitor(fu) {
                rep.push(Law::LaxRightUnity, "F0", vec![n(u)], "lax right unity fails");
            }
        }
        rep
    }
}
