use super::{AxiomReport, AxiomVerdict};
use crate::bicat::FinBicategory;
use crate::family::ArrowFamily;
use crate::ids::{Cell1, Cell2, Obj};
use serde::{Deserialize, Serialize};

fn in_w<'a>(b: &'a FinBicategory, w: &'a ArrowFamily, d: Obj, c: Obj) -> impl Iterator<Item = Cell1> + 'a {
    b.hom(d, c).iter().copied().filter(move |&u| w.contains(u))
}

/// First `(D, u, h, α)` with `u: D → C` in W and `α : fu ≅ wh`, for `w: A → B`
/// in W and `f: C → B`.
pub fn frc0(b: &FinBicategory, w: &ArrowFamily, wc: Cell1, f: Cell1) -> Option<(Obj, Cell1, Cell1, Cell2)> {
    let (a, c) = (b.src1(wc), b.src1(f));
    for d in b.objects() {
        for u in in_w(b, w, d, c) {
            let fu = b.hcomp1(f, u);
            for &h in b.hom(d, a) {
                if let Some(alpha) = b.first_iso(fu, b.hcomp1(wc, h)) {
                    return Some((d, u, h, alpha));
                }
            }
        }
    }
    None
}

/// All `(A, u, β)` with `u: A → B` in W and
/// `a_{w,g,u} ∘ (α ⋆ u) = (w ⋆ β) ∘ a_{w,f,u}`, in canonical order.
pub fn frc1_solutions(
    b: &FinBicategory,
    w: &ArrowFamily,
    wc: Cell1,
    f: Cell1,
    g: Cell1,
    alpha: Cell2,
) -> Vec<(Obj, Cell1, Cell2)> {
    let bo = b.src1(f);
    let mut out = Vec::new();
    for a in b.objects() {
        for u in in_w(b, w, a, bo) {
            let lhs = b.vcomp(b.assoc(wc, g, u), b.whisker_r(alpha, u));
            let (fu, gu) = (b.hcomp1(f, u), b.hcomp1(g, u));
            let afu = b.assoc(wc, f, u);
            for &beta in b.hom2(fu, gu) {
                if b.vcomp(b.whisker_l(wc, beta), afu) == lhs {
                    out.push((a, u, beta));
                }
            }
        }
    }
    out
}

/// First `u` in W into the common source with `α ⋆ u = β ⋆ u`.
pub fn frc2(b: &FinBicategory, w: &ArrowFamily, alpha: Cell2, beta: Cell2) -> Option<Cell1> {
    let s = b.src1(b.src2(alpha));
    for a in b.objects() {
        for u in in_w(b, w, a, s) {
            if b.whisker_r(alpha, u) == b.whisker_r(beta, u) {
                return Some(u);
            }
        }
    }
    None
}

fn closures(b: &FinBicategory, w: &ArrowFamily, rep: &mut AxiomReport) {
    let mut bf1 = AxiomVerdict::new("BF1");
    for f in b.cells1() {
        if b.is_equivalence1(f).is_some() && !w.contains(f) {
            bf1.fail(vec![b.cell1_name(f).into()]);
        }
    }
    rep.verdicts.push(bf1);
    let mut bf2 = AxiomVerdict::new("BF2");
    for &u in w.members() {
        for &v in w.members() {
            if let Some(uv) = b.try_hcomp1(u, v) {
                if !w.contains(uv) {
                    bf2.fail(b.names1(&[u, v]));
                }
            }
        }
    }
    rep.verdicts.push(bf2);
    let mut bf5 = AxiomVerdict::new("BF5");
    for &u in w.members() {
        for &v in b.hom(b.src1(u), b.tgt1(u)) {
            if !w.contains(v) && b.isomorphic1(u, v) {
                bf5.fail(b.names1(&[u, v]));
            }
        }
    }
    rep.verdicts.push(bf5);
}

/// `(w, f, g, α)` inputs of 1-Frc, canonical order: `w` in W, then parallel
/// `f, g` into its source, then `α : wf ⇒ wg`.
fn frc1_inputs(b: &FinBicategory, w: &ArrowFamily) -> Vec<(Cell1, Cell1, Cell1, Cell2)> {
    let mut out = Vec::new();
    for &wc in w.members() {
        let c = b.src1(wc);
        for bo in b.objects() {
            let h = b.hom(bo, c);
            for &f in h {
                for &g in h {
                    for &alpha in b.hom2(b.hcomp1(wc, f), b.hcomp1(wc, g)) {
                        out.push((wc, f, g, alpha));
                    }
                }
            }
        }
    }
    out
}

fn frc0_verdict(b: &FinBicategory, w: &ArrowFamily, name: &str) -> AxiomVerdict {
    let mut v0 = AxiomVerdict::new(name);
    for &wc in w.members() {
        for c in b.objects() {
            for &f in b.hom(c, b.tgt1(wc)) {
                let input = b.names1(&[wc, f]);
                match frc0(b, w, wc, f) {
                    Some((d, u, h, alpha)) => v0.witness(
                        input,
                        vec![b.obj_name(d).into(), b.cell1_name(u).into(), b.cell1_name(h).into(), b.cell2_name(alpha).into()],
                    ),
                    None => v0.fail(input),
                }
            }
        }
    }
    v0
}

fn frc1_verdict(b: &FinBicategory, w: &ArrowFamily) -> AxiomVerdict {
    let mut v1 = AxiomVerdict::new("1-Frc");
    let mut non_inv = 0usize;
    for (wc, f, g, alpha) in frc1_inputs(b, w) {
        let mut input = b.names1(&[wc, f, g]);
        input.push(b.cell2_name(alpha).into());
        let sols = frc1_solutions(b, w, wc, f, g, alpha);
        match sols.first() {
            Some(&(a, u, beta)) => {
                if b.inverse(alpha).is_some() && !sols.iter().any(|s| b.inverse(s.2).is_some()) {
                    non_inv += 1;
                }
                v1.witness(input, vec![b.obj_name(a).into(), b.cell1_name(u).into(), b.cell2_name(beta).into()]);
            }
            None => v1.fail(input),
        }
    }
    if non_inv > 0 {
        v1.notes.push(format!("{non_inv} invertible inputs have no invertible solution"));
    }
    v1
}

fn frc2_verdict(b: &FinBicategory, w: &ArrowFamily) -> AxiomVerdict {
    let mut v2 = AxiomVerdict::new("2-Frc");
    for &wc in w.members() {
        let c = b.src1(wc);
        for bo in b.objects() {
            let h = b.hom(bo, c);
            for &f in h {
                for &g in h {
                    let cells = b.hom2(f, g);
                    for &x in cells {
                        for &y in cells {
                            if b.whisker_l(wc, x) != b.whisker_l(wc, y) {
                                continue;
                            }
                            let mut input = vec![b.cell1_name(wc).to_string()];
                            input.extend(b.names2(&[x, y]));
                            match frc2(b, w, x, y) {
                                Some(u) => v2.witness(input, vec![b.obj_name(b.src1(u)).into(), b.cell1_name(u).into()]),
                                None => v2.fail(input),
                            }
                        }
                    }
                }
            }
        }
    }
    v2
}

/// Closure axioms plus 0-Frc, 1-Frc, 2-Frc for the pair `(B, W)`.
pub fn check_frc(b: &FinBicategory, w: &ArrowFamily) -> AxiomReport {
    let mut rep = AxiomReport::default();
    closures(b, w, &mut rep);
    rep.verdicts.push(frc0_verdict(b, w, "0-Frc"));
    rep.verdicts.push(frc1_verdict(b, w));
    rep.verdicts.push(frc2_verdict(b, w));
    rep
}

/// The final part of BF4: any two 1-Frc solutions for the same input are
/// related by a square `ε : u₁s ≅ u₂t` with legs in W pasting the two
/// solutions together.
pub fn check_bf4_tail(b: &FinBicategory, w: &ArrowFamily) -> AxiomReport {
    let mut v = AxiomVerdict::new("BF4-tail");
    for (wc, f, g, alpha) in frc1_inputs(b, w) {
        let sols = frc1_solutions(b, w, wc, f, g, alpha);
        for i in 0..sols.len() {
            for j in i + 1..sols.len() {
                let (a1, u1, b1) = sols[i];
                let (a2, u2, b2) = sols[j];
                let mut input = b.names1(&[wc, f, g]);
                input.push(b.cell2_name(alpha).into());
                input.extend([b.cell1_name(u1).into(), b.cell2_name(b1).into(), b.cell1_name(u2).into(), b.cell2_name(b2).into()]);
                match bf4_square(b, w, f, g, (a1, u1, b1), (a2, u2, b2)) {
                    Some((x, s, t, eps)) => v.witness(
                        input,
                        vec![b.obj_name(x).into(), b.cell1_name(s).into(), b.cell1_name(t).into(), b.cell2_name(eps).into()],
                    ),
                    None => v.fail(input),
                }
            }
        }
    }
    AxiomReport { verdicts: vec![v] }
}

fn bf4_square(
    b: &FinBicategory,
    w: &ArrowFamily,
    f: Cell1,
    g: Cell1,
    (a1, u1, b1): (Obj, Cell1, Cell2),
    (a2, u2, b2): (Obj, Cell1, Cell2),
) -> Option<(Obj, Cell1, Cell1, Cell2)> {
    for x in b.objects() {
        for &s in b.hom(x, a1) {
            let u1s = b.hcomp1(u1, s);
            if !w.contains(u1s) {
                continue;
            }
            for &t in b.hom(x, a2) {
                let u2t = b.hcomp1(u2, t);
                if !w.contains(u2t) {
                    continue;
                }
                for &eps in b.hom2(u1s, u2t) {
                    if b.inverse(eps).is_none() {
                        continue;
                    }
                    let lhs = b.vseq(&[
                        b.assoc(f, u1, s),
                        b.whisker_l(f, eps),
                        b.assoc_inv(f, u2, t),
                        b.whisker_r(b2, t),
                    ]);
                    let rhs = b.vseq(&[
                        b.whisker_r(b1, s),
                        b.assoc(g, u1, s),
                        b.whisker_l(g, eps),
                        b.assoc_inv(g, u2, t),
                    ]);
                    if lhs == rhs {
                        return Some((x, s, t, eps));
                    }
                }
            }
        }
    }
    None
}

/// The original axiom set: closures, BF3 (= 0-Frc) and BF4 (1-Frc with the
/// tail condition).
pub fn check_bf(b: &FinBicategory, w: &ArrowFamily) -> AxiomReport {
    let mut rep = AxiomReport::default();
    closures(b, w, &mut rep);
    rep.verdicts.push(frc0_verdict(b, w, "BF3"));
    let v1 = frc1_verdict(b, w);
    let tail = check_bf4_tail(b, w).verdicts.remove(0);
    let mut v4 = AxiomVerdict::new("BF4");
    v4.pass = v1.pass && tail.pass;
    v4.counterexample = v1.counterexample.or(tail.counterexample);
    v4.witnesses = v1.witnesses;
    v4.witnesses.extend(tail.witnesses);
    v4.notes = v1.notes;
    rep.verdicts.push(v4);
    rep
}

/// Outcome of running both diagrammatic axiom sets on one input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomEquivalence {
    pub closures: bool,
    pub frc: bool,
    pub bf: bool,
}

impl AxiomEquivalence {
    /// Agreement is only claimed under the closure axioms.
    pub fn agree(&self) -> bool {
        !self.closures || self.frc == self.bf
    }
}

pub fn check_axiom_equivalence(b: &FinBicategory, w: &ArrowFamily) -> AxiomEquivalence {
    let rep = check_frc(b, w);
    let closures = rep.pass("BF1") && rep.pass("BF2") && rep.pass("BF5");
    let base = rep.pass("0-Frc") && rep.pass("1-Frc");
    let frc = base && rep.pass("2-Frc");
    let bf = base && check_bf4_tail(b, w).passes();
    AxiomEquivalence { closures, frc, bf }
}
