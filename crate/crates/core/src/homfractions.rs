//! Hom-categories of a bicategory of fractions: the slice `W/A`, the diagram
//! `F_A^B = B(U−, B)` on its dual, the quintuple presentation and the
//! comparison between the two.

use crate::axioms::{check_flt, check_frc, AxiomReport, AxiomVerdict};
use crate::bicat::{BicategoryBuilder, FinBicategory, HomCat, UnionFind};
use crate::category::{CategoryBuilder, FinCategory};
use crate::colimit::{colimit_direct, ColimitCategory, IsoWitness, Premorphism};
use crate::error::{Error, Result};
use crate::family::ArrowFamily;
use crate::functors::{CatValuedPSF, FinFunctor, PseudoFunctor};
use crate::ids::{Arr, Cell1, Cell2, Obj};
use std::collections::HashMap;
use std::sync::Arc;

/// `f` is isomorphic to a member of W.
pub fn in_w_up_to_iso(b: &FinBicategory, w: &ArrowFamily, f: Cell1) -> bool {
    w_witness(b, w, f).is_some()
}

/// The first member `m` of W with an invertible `θ : m ⇒ f`, preferring
/// `f` itself.
fn w_witness(b: &FinBicategory, w: &ArrowFamily, f: Cell1) -> Option<(Cell1, Cell2)> {
    if w.contains(f) {
        return Some((f, b.id2(f)));
    }
    b.hom(b.src1(f), b.tgt1(f))
        .iter()
        .filter(|&&m| w.contains(m))
        .find_map(|&m| b.first_iso(m, f).map(|t| (m, t)))
}

/// `W/A` with its forgetful functor to `B`.
///
/// Objects `(C, w)`, 1-cells `(f, α, w₂) : (C₁, w₁) → (C₂, w₂)` with
/// `α : w₁ ⇒ w₂f` invertible, 2-cells `ξ : f₁ ⇒ f₂` with
/// `(w₂ ⋆ ξ) ∘ α₁ = α₂`.
#[derive(Clone, Debug)]
pub struct SliceBicategory {
    pub bicat: Arc<FinBicategory>,
    pub base: Arc<FinBicategory>,
    pub apex: Obj,
    /// The leg `w` of each object.
    pub obj_data: Vec<Cell1>,
    /// `(f, α, w₂)` of each 1-cell.
    pub cell1_data: Vec<(Cell1, Cell2, Cell1)>,
    pub cell2_data: Vec<Cell2>,
    pub forget: PseudoFunctor,
}

impl SliceBicategory {
    pub fn object(&self, w: Cell1) -> Option<Obj> {
        self.obj_data.iter().position(|&x| x == w).map(Obj::from_idx)
    }
    pub fn cell1(&self, f: Cell1, alpha: Cell2, w2: Cell1) -> Option<Cell1> {
        self.cell1_data.iter().position(|&d| d == (f, alpha, w2)).map(Cell1::from_idx)
    }
    /// `(A, 1_A)`.
    pub fn terminal(&self) -> Option<Obj> {
        self.object(self.base.id1(self.apex))
    }
}

pub fn slice(base: Arc<FinBicategory>, w: &ArrowFamily, a: Obj) -> Result<SliceBicategory> {
    let b = &*base;
    let legs: Vec<Cell1> = w.members().iter().copied().filter(|&m| b.tgt1(m) == a).collect();
    let mut bb = BicategoryBuilder::new();
    let mut objs: HashMap<Cell1, Obj> = HashMap::new();
    for &m in &legs {
        objs.insert(m, bb.object(format!("({},{})", b.obj_name(b.src1(m)), b.cell1_name(m))));
    }
    type K1 = (Cell1, Cell2, Cell1);
    let name1 = |k: &K1| format!("({},{},{})", b.cell1_name(k.0), b.cell2_name(k.1), b.cell1_name(k.2));
    let mut c1: HashMap<K1, Cell1> = HashMap::new();
    let mut c1_list: Vec<(K1, Cell1)> = Vec::new();
    for &w1 in &legs {
        for &w2 in &legs {
            for &f in b.hom(b.src1(w1), b.src1(w2)) {
                for &al in b.hom2(w1, b.hcomp1(w2, f)) {
                    if b.inverse(al).is_none() {
                        continue;
                    }
                    let k = (f, al, w2);
                    let id = bb.cell1(name1(&k), objs[&w1], objs[&w2]);
                    c1.insert(k, id);
                    c1_list.push((k, w1));
                }
            }
        }
    }
    let id_key = |m: Cell1| (b.id1(b.src1(m)), b.inv(b.runitor(m)), m);
    for &m in &legs {
        bb.set_id1(objs[&m], c1[&id_key(m)]);
    }
    // (g, β, w₃) ∘ (f, α, w₂) = (gf, a ∘ (β ⋆ f) ∘ α, w₃)
    let comp = |gk: K1, fk: K1| -> K1 {
        let ((g, be, w3), (f, al, _)) = (gk, fk);
        (b.hcomp1(g, f), b.vseq(&[al, b.whisker_r(be, f), b.assoc(w3, g, f)]), w3)
    };
    for &(fk, _) in &c1_list {
        for &(gk, gsrc) in &c1_list {
            if gsrc == fk.2 {
                bb.set_hcomp1(c1[&gk], c1[&fk], c1[&comp(gk, fk)]);
            }
        }
    }
    type K2 = (Cell2, K1, K1);
    let name2 = |k: &K2| format!("({},{},{},{})", b.cell2_name(k.0), b.cell2_name(k.1 .1), b.cell2_name(k.2 .1), b.cell1_name(k.1 .2));
    let mut c2: HashMap<K2, Cell2> = HashMap::new();
    let mut c2_list: Vec<K2> = Vec::new();
    for &(sk, s_src) in &c1_list {
        for &(tk, t_src) in &c1_list {
            if s_src != t_src || sk.2 != tk.2 {
                continue;
            }
            for &xi in b.hom2(sk.0, tk.0) {
                if b.vcomp(b.whisker_l(sk.2, xi), sk.1) == tk.1 {
                    let k = (xi, sk, tk);
                    c2.insert(k, bb.cell2(name2(&k), c1[&sk], c1[&tk]));
                    c2_list.push(k);
                }
            }
        }
    }
    let lookup = |xi: Cell2, s: K1, t: K1, what: &str| -> Result<Cell2> {
        c2.get(&(xi, s, t))
            .copied()
            .ok_or_else(|| Error::Internal(format!("W/A: {what} {} from {} to {} is not a 2-cell", b.cell2_name(xi), name1(&s), name1(&t))))
    };
    for &(fk, _) in &c1_list {
        bb.set_id2(c1[&fk], lookup(b.id2(fk.0), fk, fk, "identity")?);
    }
    for &(be, gk, hk) in &c2_list {
        for &(al, fk, _) in c2_list.iter().filter(|k| k.2 == gk) {
            bb.set_vcomp(c2[&(be, gk, hk)], c2[&(al, fk, gk)], lookup(b.vcomp(be, al), fk, hk, "vertical composite")?);
        }
    }
    let src_of: HashMap<K1, Cell1> = c1_list.iter().copied().collect();
    for &(be, gk, gk2) in &c2_list {
        for &(al, fk, fk2) in c2_list.iter().filter(|k| k.1 .2 == src_of[&gk]) {
            let r = lookup(b.hcomp2(be, al), comp(gk, fk), comp(gk2, fk2), "horizontal composite")?;
            bb.set_hcomp2(c2[&(be, gk, gk2)], c2[&(al, fk, fk2)], r);
        }
    }
    for &(fk, w1) in &c1_list {
        let l = lookup(b.lunitor(fk.0), comp(id_key(fk.2), fk), fk, "left unitor")?;
        let r = lookup(b.runitor(fk.0), comp(fk, id_key(w1)), fk, "right unitor")?;
        bb.set_unitors(c1[&fk], l, r);
    }
    for &(hk, hsrc) in &c1_list {
        for &(gk, gsrc) in c1_list.iter().filter(|k| k.0 .2 == hsrc) {
            for &(fk, _) in c1_list.iter().filter(|k| k.0 .2 == gsrc) {
                let a = lookup(b.assoc(hk.0, gk.0, fk.0), comp(comp(hk, gk), fk), comp(hk, comp(gk, fk)), "associator")?;
                bb.set_assoc(c1[&hk], c1[&gk], c1[&fk], a);
            }
        }
    }
    let total = Arc::new(bb.build()?);
    let mut obj_data = vec![Cell1(0); total.num_objects()];
    for &m in &legs {
        let name = format!("({},{})", b.obj_name(b.src1(m)), b.cell1_name(m));
        obj_data[total.find_obj(&name).unwrap().idx()] = m;
    }
    let mut cell1_data = vec![(Cell1(0), Cell2(0), Cell1(0)); total.num_cells1()];
    for &(k, _) in &c1_list {
        cell1_data[total.find_cell1(&name1(&k)).unwrap().idx()] = k;
    }
    let mut cell2_data = vec![Cell2(0); total.num_cells2()];
    for k in &c2_list {
        cell2_data[total.find_cell2(&name2(k)).unwrap().idx()] = k.0;
    }
    let forget = PseudoFunctor::strict(
        total.clone(),
        base.clone(),
        obj_data.iter().map(|&m| b.src1(m)).collect(),
        cell1_data.iter().map(|k| k.0).collect(),
        cell2_data.clone(),
    )?;
    Ok(SliceBicategory { bicat: total, base, apex: a, obj_data, cell1_data, cell2_data, forget })
}

/// `W/A` is cofiltered, i.e. its dual passes the filteredness axioms.
pub fn check_slice_cofiltered(s: &SliceBicategory) -> AxiomReport {
    check_flt(&s.bicat.op_dual())
}

/// A lifted square in `W/A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LiftedSquare {
    /// `(D, wh)`.
    pub object: Obj,
    /// `(h, 1_{wh})`.
    pub left: Cell1,
    /// `(g, □)`.
    pub right: Cell1,
    /// `γ` as a 2-cell `(v, β)(g, □) ⇒ (u, α)(h, 1)` of `W/A`.
    pub cell: Cell2,
}

/// Lift `γ : vg ≅ uh` over the cospan `(C, w) → (C₂, w₂) ← (C', w')` given by
/// slice 1-cells `left = (u, α)` and `right = (v, β)`.
pub fn lift_square(s: &SliceBicategory, left: Cell1, right: Cell1, h: Cell1, g: Cell1, gamma: Cell2) -> Result<LiftedSquare> {
    let b = &*s.base;
    let t = &*s.bicat;
    let (u, al, w2) = s.cell1_data[left.idx()];
    let (v, be, w2b) = s.cell1_data[right.idx()];
    let w = s.obj_data[t.src1(left).idx()];
    let wp = s.obj_data[t.src1(right).idx()];
    if w2 != w2b || b.src2(gamma) != b.hcomp1(v, g) || b.tgt2(gamma) != b.hcomp1(u, h) {
        return Err(Error::Precondition("square does not fit the cospan".into()));
    }
    let gi = b.inverse(gamma).ok_or_else(|| Error::Precondition("γ is not invertible".into()))?;
    let wh = b.hcomp1(w, h);
    let object = s.object(wh).ok_or_else(|| Error::Precondition(format!("{} is not in W", b.cell1_name(wh))))?;
    let boxed = b.vseq(&[
        b.whisker_r(al, h),
        b.assoc(w2, u, h),
        b.whisker_l(w2, gi),
        b.assoc_inv(w2, v, g),
        b.inv(b.whisker_r(be, g)),
    ]);
    let lift_l = s.cell1(h, b.id2(wh), w).ok_or_else(|| Error::Internal("(h, 1) missing".into()))?;
    let lift_r = s.cell1(g, boxed, wp).ok_or_else(|| Error::Internal("(g, □) missing".into()))?;
    let (src, tgt) = (t.hcomp1(right, lift_r), t.hcomp1(left, lift_l));
    let cell = t
        .hom2(src, tgt)
        .iter()
        .copied()
        .find(|&c| s.cell2_data[c.idx()] == gamma)
        .ok_or_else(|| Error::Internal("lifted γ is not a 2-cell of W/A".into()))?;
    Ok(LiftedSquare { object, left: lift_l, right: lift_r, cell })
}

/// `F_A^B = B(U−, B)` over `(W/A)^op`.
pub fn build_fab(s: &SliceBicategory, bobj: Obj) -> CatValuedPSF {
    CatValuedPSF::hom_into(&s.forget, bobj, Arc::new(s.bicat.op_dual()))
}

/// `(C, u, v, α, ξ) : (C₁, w₁, f₁) → (C₂, w₂, f₂)`; endpoints are stored as
/// `(w, f)` pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quintuple {
    pub apex: Obj,
    pub u: Cell1,
    pub v: Cell1,
    pub alpha: Cell2,
    pub xi: Cell2,
    pub src: (Cell1, Cell1),
    pub tgt: (Cell1, Cell1),
}

impl Quintuple {
    pub fn label(&self, b: &FinBicategory) -> String {
        format!(
            "({},{},{},{},{})",
            b.obj_name(self.apex),
            b.cell1_name(self.u),
            b.cell1_name(self.v),
            b.cell2_name(self.alpha),
            b.cell2_name(self.xi)
        )
    }
}

/// `(C̄, h, h̃, γ, δ)` between two quintuples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuintupleHomotopy {
    pub apex: Obj,
    pub h: Cell1,
    pub ht: Cell1,
    pub gamma: Cell2,
    pub delta: Cell2,
}

fn triple_label(b: &FinBicategory, t: (Cell1, Cell1)) -> String {
    format!("({},{},{})", b.obj_name(b.src1(t.0)), b.cell1_name(t.0), b.cell1_name(t.1))
}

fn inverses<'a>(b: &'a FinBicategory, f: Cell1, g: Cell1) -> impl Iterator<Item = Cell2> + 'a {
    b.hom2(f, g).iter().copied().filter(move |&x| b.inverse(x).is_some())
}

/// All quintuples between two triples, canonical order.
pub fn quintuples(b: &FinBicategory, w: &ArrowFamily, t1: (Cell1, Cell1), t2: (Cell1, Cell1)) -> Vec<Quintuple> {
    let ((w1, f1), (w2, f2)) = (t1, t2);
    let (c1, c2) = (b.src1(w1), b.src1(w2));
    let mut out = Vec::new();
    for c in b.objects() {
        for &u in b.hom(c, c1) {
            let w1u = b.hcomp1(w1, u);
            if !in_w_up_to_iso(b, w, w1u) {
                continue;
            }
            for &v in b.hom(c, c2) {
                let (w2v, f1u, f2v) = (b.hcomp1(w2, v), b.hcomp1(f1, u), b.hcomp1(f2, v));
                for alpha in inverses(b, w1u, w2v) {
                    for &xi in b.hom2(f1u, f2v) {
                        out.push(Quintuple { apex: c, u, v, alpha, xi, src: t1, tgt: t2 });
                    }
                }
            }
        }
    }
    out
}

/// Both sides of the two pasting equalities of a homotopy, as
/// `((w-side lhs, rhs), (f-side lhs, rhs))`.
pub fn homotopy_sides(b: &FinBicategory, p: &Quintuple, q: &Quintuple, h: &QuintupleHomotopy) -> ((Cell2, Cell2), (Cell2, Cell2)) {
    let side = |x1: Cell1, x2: Cell1, c: Cell2, ct: Cell2| {
        let lhs = b.vseq(&[
            b.assoc(x1, p.u, h.h),
            b.whisker_l(x1, h.gamma),
            b.assoc_inv(x1, q.u, h.ht),
            b.whisker_r(ct, h.ht),
        ]);
        let rhs = b.vseq(&[
            b.whisker_r(c, h.h),
            b.assoc(x2, p.v, h.h),
            b.whisker_l(x2, h.delta),
            b.assoc_inv(x2, q.v, h.ht),
        ]);
        (lhs, rhs)
    };
    (side(p.src.0, p.tgt.0, p.alpha, q.alpha), side(p.src.1, p.tgt.1, p.xi, q.xi))
}

/// First homotopy `p ≡ q` in canonical order.
pub fn quintuple_homotopic(b: &FinBicategory, w: &ArrowFamily, p: &Quintuple, q: &Quintuple) -> Option<QuintupleHomotopy> {
    if p.src != q.src || p.tgt != q.tgt {
        return None;
    }
    let (w1, f1) = p.src;
    let (w2, f2) = p.tgt;
    for cb in b.objects() {
        for &h in b.hom(cb, p.apex) {
            let uh = b.hcomp1(p.u, h);
            if !in_w_up_to_iso(b, w, b.hcomp1(w1, uh)) {
                continue;
            }
            let vh = b.hcomp1(p.v, h);
            for &ht in b.hom(cb, q.apex) {
                let (uht, vht) = (b.hcomp1(q.u, ht), b.hcomp1(q.v, ht));
                let deltas: Vec<(Cell2, Cell2, Cell2)> = inverses(b, vh, vht)
                    .map(|delta| {
                        let rw = b.vseq(&[
                            b.whisker_r(p.alpha, h),
                            b.assoc(w2, p.v, h),
                            b.whisker_l(w2, delta),
                            b.assoc_inv(w2, q.v, ht),
                        ]);
                        let rf = b.vseq(&[
                            b.whisker_r(p.xi, h),
                            b.assoc(f2, p.v, h),
                            b.whisker_l(f2, delta),
                            b.assoc_inv(f2, q.v, ht),
                        ]);
                        (delta, rw, rf)
                    })
                    .collect();
                if deltas.is_empty() {
                    continue;
                }
                for gamma in inverses(b, uh, uht) {
                    let lw = b.vseq(&[
                        b.assoc(w1, p.u, h),
                        b.whisker_l(w1, gamma),
                        b.assoc_inv(w1, q.u, ht),
                        b.whisker_r(q.alpha, ht),
                    ]);
                    let lf = b.vseq(&[
                        b.assoc(f1, p.u, h),
                        b.whisker_l(f1, gamma),
                        b.assoc_inv(f1, q.u, ht),
                        b.whisker_r(q.xi, ht),
                    ]);
                    if let Some(&(delta, _, _)) = deltas.iter().find(|d| d.1 == lw && d.2 == lf) {
                        return Some(QuintupleHomotopy { apex: cb, h, ht, gamma, delta });
                    }
                }
            }
        }
    }
    None
}

/// Squares `(D, h, g, γ : vh ⇒ u'g)` usable to compose `q ∘ p`: `γ`
/// invertible and `w₁(uh)` in W up to isomorphism. Canonical order.
pub fn composition_squares(b: &FinBicategory, w: &ArrowFamily, p: &Quintuple, q: &Quintuple) -> Vec<(Obj, Cell1, Cell1, Cell2)> {
    let mut out = Vec::new();
    for d in b.objects() {
        for &h in b.hom(d, p.apex) {
            if !in_w_up_to_iso(b, w, b.hcomp1(p.src.0, b.hcomp1(p.u, h))) {
                continue;
            }
            let vh = b.hcomp1(p.v, h);
            for &g in b.hom(d, q.apex) {
                for gamma in inverses(b, vh, b.hcomp1(q.u, g)) {
                    out.push((d, h, g, gamma));
                }
            }
        }
    }
    out
}

/// `q ∘ p` through the square `(D, h, g, γ)`: the α's and the ξ's are each
/// pasted with `γ`.
pub fn vcompose_through(b: &FinBicategory, p: &Quintuple, q: &Quintuple, sq: (Obj, Cell1, Cell1, Cell2)) -> Quintuple {
    let (d, h, g, gamma) = sq;
    let paste = |x1: Cell1, x2: Cell1, x3: Cell1, c: Cell2, c2: Cell2| {
        b.vseq(&[
            b.assoc_inv(x1, p.u, h),
            b.whisker_r(c, h),
            b.assoc(x2, p.v, h),
            b.whisker_l(x2, gamma),
            b.assoc_inv(x2, q.u, g),
            b.whisker_r(c2, g),
            b.assoc(x3, q.v, g),
        ])
    };
    Quintuple {
        apex: d,
        u: b.hcomp1(p.u, h),
        v: b.hcomp1(q.v, g),
        alpha: paste(p.src.0, p.tgt.0, q.tgt.0, p.alpha, q.alpha),
        xi: paste(p.src.1, p.tgt.1, q.tgt.1, p.xi, q.xi),
        src: p.src,
        tgt: q.tgt,
    }
}

pub fn vcompose(b: &FinBicategory, w: &ArrowFamily, p: &Quintuple, q: &Quintuple) -> Result<Quintuple> {
    let sq = *composition_squares(b, w, p, q)
        .first()
        .ok_or_else(|| Error::Precondition(format!("no square to compose at {}", triple_label(b, p.tgt))))?;
    Ok(vcompose_through(b, p, q, sq))
}

pub fn identity_quintuple(b: &FinBicategory, t: (Cell1, Cell1)) -> Quintuple {
    let c = b.src1(t.0);
    let i = b.id1(c);
    Quintuple {
        apex: c,
        u: i,
        v: i,
        alpha: b.id2(b.hcomp1(t.0, i)),
        xi: b.id2(b.hcomp1(t.1, i)),
        src: t,
        tgt: t,
    }
}

/// `B[W⁻¹](A, B)` presented by triples and quintuple classes.
#[derive(Clone, Debug)]
pub struct HomCategory {
    pub cat: FinCategory,
    /// `(w, f)` of each object.
    pub objects: Vec<(Cell1, Cell1)>,
    pub reps: Vec<Quintuple>,
    pub classes: Vec<Vec<Quintuple>>,
    /// Reading "isomorphic to a member of W" as plain membership gives the
    /// same quintuples.
    pub literal_agrees: bool,
    index: HashMap<Quintuple, Arr>,
}

impl HomCategory {
    pub fn class_of(&self, q: &Quintuple) -> Option<Arr> {
        self.index.get(q).copied()
    }
    pub fn object(&self, t: (Cell1, Cell1)) -> Option<Obj> {
        self.objects.iter().position(|&o| o == t).map(Obj::from_idx)
    }
}

fn triples(b: &FinBicategory, w: &ArrowFamily, a: Obj, bobj: Obj) -> Vec<(Cell1, Cell1)> {
    let mut out = Vec::new();
    for &m in w.members().iter().filter(|&&m| b.tgt1(m) == a) {
        for &f in b.hom(b.src1(m), bobj) {
            out.push((m, f));
        }
    }
    out
}

pub fn homcat_pronk(b: &FinBicategory, w: &ArrowFamily, a: Obj, bobj: Obj) -> Result<HomCategory> {
    let rep = check_frc(b, w);
    if !rep.passes() {
        return Err(Error::Precondition(format!("fractions fail: {}", rep.failed().join(", "))));
    }
    let objs = triples(b, w, a, bobj);
    let mut classes: Vec<Vec<Quintuple>> = Vec::new();
    let mut literal_agrees = true;
    for &t1 in &objs {
        for &t2 in &objs {
            let qs = quintuples(b, w, t1, t2);
            if qs.iter().any(|q| !w.contains(b.hcomp1(t1.0, q.u))) {
                literal_agrees = false;
            }
            let n = qs.len();
            let mut rel = vec![false; n * n];
            let mut uf = UnionFind::new(n);
            for i in 0..n {
                for j in 0..n {
                    if quintuple_homotopic(b, w, &qs[i], &qs[j]).is_some() {
                        rel[i * n + j] = true;
                        uf.union(i, j);
                    }
                }
            }
            for i in 0..n {
                for j in 0..n {
                    if uf.find(i) == uf.find(j) && !rel[i * n + j] {
                        return Err(Error::Internal(format!(
                            "quintuple equivalence is not an equivalence relation: {} and {}",
                            qs[i].label(b),
                            qs[j].label(b)
                        )));
                    }
                }
            }
            let mut groups: Vec<(usize, Vec<Quintuple>)> = Vec::new();
            for (i, q) in qs.iter().enumerate() {
                let r = uf.find(i);
                match groups.iter_mut().find(|g| g.0 == r) {
                    Some(g) => g.1.push(*q),
                    None => groups.push((r, vec![*q])),
                }
            }
            classes.extend(groups.into_iter().map(|g| g.1));
        }
    }
    let name = |q: &Quintuple| format!("{}:{}->{}", q.label(b), triple_label(b, q.src), triple_label(b, q.tgt));
    let mut cb = CategoryBuilder::new();
    let prov_obj: Vec<Obj> = objs.iter().map(|&t| cb.object(triple_label(b, t))).collect();
    let opos = |t: (Cell1, Cell1)| prov_obj[objs.iter().position(|&o| o == t).unwrap()];
    let mut index: HashMap<Quintuple, usize> = HashMap::new();
    let prov: Vec<Arr> = classes
        .iter()
        .enumerate()
        .map(|(k, g)| {
            for q in g {
                index.insert(*q, k);
            }
            cb.arrow(name(&g[0]), opos(g[0].src), opos(g[0].tgt))
        })
        .collect();
    for &t in &objs {
        let id = index
            .get(&identity_quintuple(b, t))
            .ok_or_else(|| Error::Internal(format!("identity of {} is not a quintuple", triple_label(b, t))))?;
        cb.set_identity(opos(t), prov[*id]);
    }
    for (k1, g1) in classes.iter().enumerate() {
        for (k2, g2) in classes.iter().enumerate() {
            if g1[0].tgt != g2[0].src {
                continue;
            }
            let r = vcompose(b, w, &g1[0], &g2[0])?;
            let k = *index.get(&r).ok_or_else(|| Error::Internal("vertical composite is not a quintuple".into()))?;
            cb.set_compose(prov[k2], prov[k1], prov[k]);
        }
    }
    let cat = cb.build()?;
    let problems = cat.validate();
    if !problems.is_empty() {
        return Err(Error::Internal(format!("hom-category of fractions is not a category: {problems}")));
    }
    let mut ordered = vec![Vec::new(); classes.len()];
    for g in classes {
        let a = cat.find_arr(&name(&g[0])).unwrap();
        ordered[a.idx()] = g;
    }
    let mut objects = vec![(Cell1(0), Cell1(0)); objs.len()];
    for &t in &objs {
        objects[cat.find_obj(&triple_label(b, t)).unwrap().idx()] = t;
    }
    let index = ordered
        .iter()
        .enumerate()
        .flat_map(|(k, g)| g.iter().map(move |q| (*q, Arr::from_idx(k))))
        .collect();
    let reps = ordered.iter().map(|g| g[0]).collect();
    Ok(HomCategory { cat, objects, reps, classes: ordered, literal_agrees, index })
}

/// The colimit side: `W/A`, `F_A^B` and its pseudo-colimit.
#[derive(Clone, Debug)]
pub struct HomViaColimit {
    pub slice: SliceBicategory,
    pub fab: CatValuedPSF,
    pub colimit: ColimitCategory,
    homs: Vec<HomCat>,
}

pub fn homcat_via_colimit(base: Arc<FinBicategory>, w: &ArrowFamily, a: Obj, bobj: Obj) -> Result<HomViaColimit> {
    let s = slice(base.clone(), w, a)?;
    let cof = check_slice_cofiltered(&s);
    if !cof.passes() {
        return Err(Error::Precondition(format!("W/A is not cofiltered: {}", cof.failed().join(", "))));
    }
    let fab = build_fab(&s, bobj);
    let colimit = colimit_direct(&fab)?;
    let homs = s.obj_data.iter().map(|&m| base.hom_category(base.src1(m), bobj)).collect();
    Ok(HomViaColimit { slice: s, fab, colimit, homs })
}

impl HomViaColimit {
    /// `H`: `((C, w), (u, α_u), (v, α_v), ξ) ↦ (C, u, v, α_v α_u⁻¹, ξ)`.
    pub fn to_quintuple(&self, p: &Premorphism) -> Quintuple {
        let s = &self.slice;
        let b = &*s.base;
        let (u, au, w1) = s.cell1_data[p.u.idx()];
        let (v, av, w2) = s.cell1_data[p.v.idx()];
        let (xs, ys) = (s.bicat.tgt1(p.u), s.bicat.tgt1(p.v));
        let f1 = self.homs[xs.idx()].cells1[p.x.idx()];
        let f2 = self.homs[ys.idx()].cells1[p.y.idx()];
        Quintuple {
            apex: b.src1(u),
            u,
            v,
            alpha: b.vcomp(av, b.inv(au)),
            xi: self.homs[p.apex.idx()].cells2[p.xi.idx()],
            src: (w1, f1),
            tgt: (w2, f2),
        }
    }

    /// `K`: `w = w₁u` (or the first member of W isomorphic to it),
    /// `α_v = α ∘ α_u`.
    pub fn to_premorphism(&self, w: &ArrowFamily, q: &Quintuple) -> Option<Premorphism> {
        let s = &self.slice;
        let b = &*s.base;
        let (w1, f1) = q.src;
        let (w2, f2) = q.tgt;
        let (m, au) = w_witness(b, w, b.hcomp1(w1, q.u))?;
        let apex = s.object(m)?;
        let av = b.vcomp(q.alpha, au);
        let u = s.cell1(q.u, au, w1)?;
        let v = s.cell1(q.v, av, w2)?;
        let (xs, ys) = (s.object(w1)?, s.object(w2)?);
        Some(Premorphism {
            apex,
            u,
            v,
            xi: *self.homs[apex.idx()].arr_of.get(&q.xi)?,
            x: self.homs[xs.idx()].obj(f1),
            y: self.homs[ys.idx()].obj(f2),
        })
    }
}

pub fn crosscheck_homcat(base: Arc<FinBicategory>, w: &ArrowFamily, a: Obj, bobj: Obj) -> Result<IsoWitness> {
    let pronk = homcat_pronk(&base, w, a, bobj)?;
    let via = homcat_via_colimit(base.clone(), w, a, bobj)?;
    crosscheck_homcat_with(w, &pronk, &via)
}

/// `H : colim F_A^B → B[W⁻¹](A, B)` and its inverse `K`.
pub fn crosscheck_homcat_with(w: &ArrowFamily, pronk: &HomCategory, via: &HomViaColimit) -> Result<IsoWitness> {
    let col = &via.colimit;
    let (cc, pc) = (&col.cat, &pronk.cat);
    let s = &via.slice;
    let obj_h: Vec<Obj> = col
        .objects
        .iter()
        .map(|&(x, f)| {
            let t = (s.obj_data[x.idx()], via.homs[x.idx()].cells1[f.idx()]);
            pronk.object(t).ok_or_else(|| Error::Internal("H is undefined on an object".into()))
        })
        .collect::<Result<_>>()?;
    let obj_k: Vec<Obj> = pronk
        .objects
        .iter()
        .map(|&(m, f)| {
            let x = s.object(m).unwrap();
            col.object(x, via.homs[x.idx()].obj(f))
        })
        .collect();
    let mut h_well_defined = true;
    let mut arr_h = Vec::new();
    for (k, g) in col.classes.iter().enumerate() {
        let img = |p: &Premorphism| pronk.class_of(&via.to_quintuple(p));
        let Some(first) = img(&col.reps[k]) else {
            return Err(Error::Internal(format!("H is undefined on {}", cc.arr_name(Arr::from_idx(k)))));
        };
        if g.iter().any(|p| img(p) != Some(first)) {
            h_well_defined = false;
        }
        arr_h.push(first);
    }
    let mut k_well_defined = true;
    let mut arr_k = Vec::new();
    for (k, g) in pronk.classes.iter().enumerate() {
        let img = |q: &Quintuple| via.to_premorphism(w, q).and_then(|p| col.class_of(&p));
        let Some(first) = img(&pronk.reps[k]) else {
            return Err(Error::Internal(format!("K is undefined on {}", pc.arr_name(Arr::from_idx(k)))));
        };
        if g.iter().any(|q| img(q) != Some(first)) {
            k_well_defined = false;
        }
        arr_k.push(first);
    }
    let (ca, pa) = (Arc::new(cc.clone()), Arc::new(pc.clone()));
    let h = FinFunctor { src: ca.clone(), tgt: pa.clone(), obj: obj_h, arr: arr_h };
    let k = FinFunctor { src: pa, tgt: ca, obj: obj_k, arr: arr_k };
    let h_functor = h.validate().is_empty();
    let k_functor = k.validate().is_empty();
    let strict_inverse = k.after(&h).is_identity() && h.after(&k).is_identity();
    Ok(IsoWitness {
        h_iso: h_functor && h.is_iso_of_categories(),
        k_iso: k_functor && k.is_iso_of_categories(),
        h,
        k,
        h_well_defined,
        k_well_defined,
        h_functor,
        k_functor,
        strict_inverse,
    })
}

/// Every vertical composite of every pair of class members lands in the
/// class of the composite, for every usable square.
pub fn check_gamma_independence(b: &FinBicategory, w: &ArrowFamily, hom: &HomCategory) -> AxiomVerdict {
    let mut v = AxiomVerdict::new("gamma-independence");
    let c = &hom.cat;
    for f in c.arrows() {
        for g in c.arrows().filter(|&g| c.src(g) == c.tgt(f)) {
            let expected = c.compose(g, f);
            let mut squares = 0;
            let mut ok = true;
            for p in &hom.classes[f.idx()] {
                for q in &hom.classes[g.idx()] {
                    for sq in composition_squares(b, w, p, q) {
                        squares += 1;
                        ok &= hom.class_of(&vcompose_through(b, p, q, sq)) == Some(expected);
                    }
                }
            }
            let input = vec![c.arr_name(f).to_string(), c.arr_name(g).to_string()];
            if ok {
                v.witness(input, vec![format!("{squares} squares")]);
            } else {
                v.fail(input);
            }
        }
    }
    v
}

/// For each biterminal `T` and each `A`, `B[W⁻¹](A, T)` is a contractible
/// groupoid.
pub fn check_biterminal_preserved(b: &FinBicategory, w: &ArrowFamily) -> Result<AxiomVerdict> {
    let ts = b.biterminal_objects();
    if ts.is_empty() {
        return Err(Error::Precondition("no biterminal object".into()));
    }
    let mut v = AxiomVerdict::new("biterminal-preserved");
    for &t in &ts {
        for a in b.objects() {
            let h = homcat_pronk(b, w, a, t)?;
            let input = vec![b.obj_name(a).into(), b.obj_name(t).into()];
            if h.cat.is_contractible_groupoid() {
                v.witness(input, vec![format!("{} objects", h.cat.num_objects())]);
            } else {
                v.fail(input);
            }
        }
    }
    Ok(v)
}

/// `B(A, B) → B[W⁻¹](A, B)`: `f ↦ (A, 1_A, f)`, `ξ ↦ [(A, 1, 1, 1, r⁻¹ ξ r)]`.
/// Needs `1_A` in W.
pub fn canonical_functor(b: &FinBicategory, a: Obj, bobj: Obj, hom: &HomCategory) -> Result<FinFunctor> {
    let hc = b.hom_category(a, bobj);
    let i = b.id1(a);
    let obj = hc
        .cells1
        .iter()
        .map(|&f| hom.object((i, f)).ok_or_else(|| Error::Precondition(format!("1_{} is not in W", b.obj_name(a)))))
        .collect::<Result<Vec<_>>>()?;
    let arr = hc
        .cells2
        .iter()
        .map(|&xi| {
            let (f1, f2) = (b.src2(xi), b.tgt2(xi));
            let q = Quintuple {
                apex: a,
                u: i,
                v: i,
                alpha: b.id2(b.hcomp1(i, i)),
                xi: b.vseq(&[b.runitor(f1), xi, b.inv(b.runitor(f2))]),
                src: (i, f1),
                tgt: (i, f2),
            };
            hom.class_of(&q).ok_or_else(|| Error::Internal(format!("{} has no fraction class", b.cell2_name(xi))))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FinFunctor { src: hc.cat.clone(), tgt: Arc::new(hom.cat.clone()), obj, arr })
}
