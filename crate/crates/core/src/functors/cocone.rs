use super::PseudoFunctor;
use crate::bicat::FinBicategory;
use crate::ids::{Cell1, Cell2, Obj};
use crate::report::{Law, ValidationReport};

/// A pseudo-cocone on a diagram `D : C → B` with apex `E`.
///
/// `theta[A] : DA → E` and, for `f : A → B`, `theta_f[f] : θ_B ∘ Df ⇒ θ_A`.
#[derive(Clone, Debug)]
pub struct PseudoCocone {
    pub diagram: PseudoFunctor,
    pub apex: Obj,
    pub theta: Vec<Cell1>,
    pub theta_f: Vec<Cell2>,
}

impl PseudoCocone {
    pub fn validate(&self) -> ValidationReport {
        let d = &self.diagram;
        let (c, b): (&FinBicategory, &FinBicategory) = (&d.dom, &d.cod);
        let mut rep = ValidationReport::default();
        if self.theta.len() != c.num_objects() || self.theta_f.len() != c.num_cells1() {
            rep.push(Law::CoconeTyping, "cocone", vec![], "component counts do not match the diagram");
            return rep;
        }
        for a in c.objects() {
            let t = self.theta[a.idx()];
            if b.src1(t) != d.map_obj(a) || b.tgt1(t) != self.apex {
                rep.push(Law::CoconeTyping, "theta", vec![c.obj_name(a).into(), b.cell1_name(t).into()], "mistyped");
            }
        }
        if !rep.is_empty() {
            return rep;
        }
        for f in c.cells1() {
            let k = self.theta_f[f.idx()];
            let want = b.hcomp1(self.theta[c.tgt1(f).idx()], d.map1(f));
            if b.src2(k) != want || b.tgt2(k) != self.theta[c.src1(f).idx()] {
                rep.push(Law::CoconeTyping, "theta_f", vec![c.cell1_name(f).into(), b.cell2_name(k).into()], "mistyped");
            } else if b.inverse(k).is_none() {
                rep.push(Law::CoconeInvertible, "theta_f", vec![c.cell1_name(f).into(), b.cell2_name(k).into()], "not invertible");
            }
        }
        if !rep.is_empty() {
            return rep;
        }
        for a in c.objects() {
            if !self.pc0_holds(a) {
                rep.push(Law::Pc0, "PC0", vec![c.obj_name(a).into()], "unity axiom fails");
            }
        }
        for (g, f) in composable_pairs(c) {
            if !self.pc1_holds(g, f) {
                rep.push(Law::Pc1, "PC1", vec![c.cell1_name(g).into(), c.cell1_name(f).into()], "composition axiom fails");
            }
        }
        for gamma in c.cells2() {
            if !self.pc2_holds(gamma) {
                rep.push(Law::Pc2, "PC2", vec![c.cell2_name(gamma).into()], "naturality axiom fails");
            }
        }
        rep
    }

    /// Both sides of PC0 at `A`: `θ_{1_A} ∘ (θ_A ⋆ F⁰_A)` and `r_{θ_A}`.
    pub fn pc0_sides(&self, a: Obj) -> (Cell2, Cell2) {
        let (d, b) = (&self.diagram, &*self.diagram.cod);
        let t = self.theta[a.idx()];
        let lhs = b.vcomp(self.theta_f[d.dom.id1(a).idx()], b.whisker_l(t, d.f0(a)));
        (lhs, b.runitor(t))
    }

    /// Both sides of PC1 at `g ∘ f`, `f : A → B`, `g : B → C`.
    pub fn pc1_sides(&self, g: Cell1, f: Cell1) -> (Cell2, Cell2) {
        let (d, c, b) = (&self.diagram, &*self.diagram.dom, &*self.diagram.cod);
        let tc = self.theta[c.tgt1(g).idx()];
        let (dg, df) = (d.map1(g), d.map1(f));
        let lhs = b.vseq(&[
            b.assoc_inv(tc, dg, df),
            b.whisker_r(self.theta_f[g.idx()], df),
            self.theta_f[f.idx()],
        ]);
        let rhs = b.vcomp(self.theta_f[c.hcomp1(g, f).idx()], b.whisker_l(tc, d.f2(g, f)));
        (lhs, rhs)
    }

    /// Both sides of PC2 at `γ : f ⇒ g`.
    pub fn pc2_sides(&self, gamma: Cell2) -> (Cell2, Cell2) {
        let (d, c, b) = (&self.diagram, &*self.diagram.dom, &*self.diagram.cod);
        let (f, g) = (c.src2(gamma), c.tgt2(gamma));
        let tb = self.theta[c.tgt1(f).idx()];
        let rhs = b.vcomp(self.theta_f[g.idx()], b.whisker_l(tb, d.map2(gamma)));
        (self.theta_f[f.idx()], rhs)
    }

    pub fn pc0_holds(&self, a: Obj) -> bool {
        let (l, r) = self.pc0_sides(a);
        l == r
    }
    pub fn pc1_holds(&self, g: Cell1, f: Cell1) -> bool {
        let (l, r) = self.pc1_sides(g, f);
        l == r
    }
    pub fn pc2_holds(&self, gamma: Cell2) -> bool {
        let (l, r) = self.pc2_sides(gamma);
        l == r
    }
}

/// Composable pairs `(g, f)`, `f` first, in canonical order of `(f, g)`.
pub(crate) fn composable_pairs(c: &FinBicategory) -> Vec<(Cell1, Cell1)> {
    let mut out = Vec::new();
    for f in c.cells1() {
        for g in c.cells1().filter(|&g| c.src1(g) == c.tgt1(f)) {
            out.push((g, f));
        }
    }
    out
}

impl PseudoFunctor {
    /// The constant diagram `C → B` at `e`; constraints are `l_{1_e}` and
    /// identities.
    pub fn constant(dom: std::sync::Arc<FinBicategory>, cod: std::sync::Arc<FinBicategory>, e: Obj) -> PseudoFunctor {
        let i = cod.id1(e);
        let ii = cod.id2(i);
        PseudoFunctor {
            obj: vec![e; dom.num_objects()],
            c1: vec![i; dom.num_cells1()],
            c2: vec![ii; dom.num_cells2()],
            f2: dom.hcomp1.keys().map(|&k| (k, cod.lunitor(i))).collect(),
            f0: vec![ii; dom.num_objects()],
            dom,
            cod,
        }
    }
}
