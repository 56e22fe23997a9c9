use super::FinBicategory;
use crate::ids::{Cell1, Cell2};
use crate::report::{Law, ValidationReport};

impl FinBicategory {
    /// 2-cells grouped by source 1-cell.
    pub(crate) fn cells2_from(&self) -> Vec<Vec<Cell2>> {
        let mut out = vec![Vec::new(); self.num_cells1()];
        for a in self.cells2() {
            out[self.src2(a).idx()].push(a);
        }
        out
    }

    /// 1-cells grouped by source object.
    pub(crate) fn cells1_from(&self) -> Vec<Vec<Cell1>> {
        let mut out = vec![Vec::new(); self.num_objects()];
        for f in self.cells1() {
            out[self.src1(f).idx()].push(f);
        }
        out
    }

    /// Checks every bicategory law on the tables.
    ///
    /// Typing and totality of the tables are checked first; if any table is
    /// ill-typed the equational laws are not evaluated, since they would be
    /// reading undefined composites.
    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::default();
        self.check_typing(&mut rep);
        if !rep.is_empty() {
            return rep;
        }
        self.check_local_laws(&mut rep);
        self.check_horizontal_laws(&mut rep);
        self.check_coherence_invertible(&mut rep);
        self.check_naturality(&mut rep);
        self.check_pentagon_triangle(&mut rep);
        rep
    }

    fn check_typing(&self, rep: &mut ValidationReport) {
        let from2 = self.cells2_from();
        let from1 = self.cells1_from();
        for f in self.cells1() {
            let i = self.id2(f);
            if self.src2(i) != f || self.tgt2(i) != f {
                rep.push(
                    Law::LocalCategory,
                    self.hom_label(self.src1(f), self.tgt1(f)),
                    vec![self.cell1_name(f).into(), self.cell2_name(i).into()],
                    "identity 2-cell has wrong boundary",
                );
            }
        }
        for a in self.cells2() {
            for &b in &from2[self.tgt2(a).idx()] {
                let (s, t) = (self.src2(a), self.tgt2(b));
                let loc = self.hom_label(self.src1(s), self.tgt1(s));
                match self.try_vcomp(b, a) {
                    None => rep.push(Law::LocalCategory, loc, self.names2(&[b, a]), "vcomp undefined"),
                    Some(c) if self.src2(c) != s || self.tgt2(c) != t => rep.push(
                        Law::LocalCategory,
                        loc,
                        self.names2(&[b, a, c]),
                        "vcomp result has wrong boundary",
                    ),
                    _ => {}
                }
            }
        }
        for (&(b, a), _) in self.vcomp.iter() {
            if self.tgt2(a) != self.src2(b) {
                let s = self.src2(a);
                rep.push(
                    Law::LocalCategory,
                    self.hom_label(self.src1(s), self.tgt1(s)),
                    self.names2(&[b, a]),
                    "vcomp entry on a non-composable pair",
                );
            }
        }
        for x in self.objects() {
            let i = self.id1(x);
            if self.src1(i) != x || self.tgt1(i) != x {
                rep.push(
                    Law::HorizontalComposition,
                    self.obj_name(x).to_string(),
                    vec![self.cell1_name(i).into()],
                    "identity 1-cell has wrong boundary",
                );
            }
        }
        for f in self.cells1() {
            for &g in &from1[self.tgt1(f).idx()] {
                match self.try_hcomp1(g, f) {
                    None => rep.push(
                        Law::HorizontalComposition,
                        "hcomp1",
                        self.names1(&[g, f]),
                        "hcomp1 undefined",
                    ),
                    Some(gf) if self.src1(gf) != self.src1(f) || self.tgt1(gf) != self.tgt1(g) => rep.push(
                        Law::HorizontalComposition,
                        "hcomp1",
                        self.names1(&[g, f, gf]),
                        "hcomp1 result has wrong boundary",
                    ),
                    _ => {}
                }
            }
        }
        if !rep.is_empty() {
            return;
        }
        for a in self.cells2() {
            let (f, f2) = (self.src2(a), self.tgt2(a));
            for b in self.cells2().filter(|&b| self.src1(self.src2(b)) == self.tgt1(f)) {
                let (g, g2) = (self.src2(b), self.tgt2(b));
                match self.try_hcomp2(b, a) {
                    None => rep.push(
                        Law::HorizontalComposition,
                        "hcomp2",
                        self.names2(&[b, a]),
                        "hcomp2 undefined",
                    ),
                    Some(c) if self.src2(c) != self.hcomp1(g, f) || self.tgt2(c) != self.hcomp1(g2, f2) => rep
                        .push(
                            Law::HorizontalComposition,
                            "hcomp2",
                            self.names2(&[b, a, c]),
                            "hcomp2 result has wrong boundary",
                        ),
                    _ => {}
                }
            }
        }
        for u in self.cells1() {
            let (s, t) = (self.src1(u), self.tgt1(u));
            let l = self.lunitor(u);
            if self.src2(l) != self.hcomp1(self.id1(t), u) || self.tgt2(l) != u {
                rep.push(
                    Law::CoherenceTyping,
                    "lunitor",
                    vec![self.cell1_name(u).into(), self.cell2_name(l).into()],
                    "left unitor has wrong boundary",
                );
            }
            let r = self.runitor(u);
            if self.src2(r) != self.hcomp1(u, self.id1(s)) || self.tgt2(r) != u {
                rep.push(
                    Law::CoherenceTyping,
                    "runitor",
                    vec![self.cell1_name(u).into(), self.cell2_name(r).into()],
                    "right unitor has wrong boundary",
                );
            }
        }
        for (u, v, w) in self.composable_triples() {
            let want_s = self.hcomp1(self.hcomp1(u, v), w);
            let want_t = self.hcomp1(u, self.hcomp1(v, w));
            match self.try_assoc(u, v, w) {
                None => rep.push(Law::CoherenceTyping, "associator", self.names1(&[u, v, w]), "associator missing"),
                Some(a) if self.src2(a) != want_s || self.tgt2(a) != want_t => rep.push(
                    Law::CoherenceTyping,
                    "associator",
                    self.names1(&[u, v, w]),
                    format!("associator {} has wrong boundary", self.cell2_name(a)),
                ),
                _ => {}
            }
        }
    }

    fn check_local_laws(&self, rep: &mut ValidationReport) {
        let from2 = self.cells2_from();
        for a in self.cells2() {
            let s = self.src2(a);
            let loc = || self.hom_label(self.src1(s), self.tgt1(s));
            if self.vcomp(a, self.id2(s)) != a || self.vcomp(self.id2(self.tgt2(a)), a) != a {
                rep.push(Law::LocalCategory, loc(), self.names2(&[a]), "identity 2-cell is not a unit");
            }
            for &b in &from2[self.tgt2(a).idx()] {
                let ba = self.vcomp(b, a);
                for &c in &from2[self.tgt2(b).idx()] {
                    if self.vcomp(c, ba) != self.vcomp(self.vcomp(c, b), a) {
                        rep.push(Law::LocalCategory, loc(), self.names2(&[c, b, a]), "vcomp not associative");
                    }
                }
            }
        }
    }

    fn check_horizontal_laws(&self, rep: &mut ValidationReport) {
        let from2 = self.cells2_from();
        for f in self.cells1() {
            for g in self.cells1().filter(|&g| self.src1(g) == self.tgt1(f)) {
                if self.hcomp2(self.id2(g), self.id2(f)) != self.id2(self.hcomp1(g, f)) {
                    rep.push(
                        Law::IdentityPreservation,
                        "hcomp2",
                        self.names1(&[g, f]),
                        "1_g * 1_f is not 1_{gf}",
                    );
                }
            }
        }
        // (b' * a') o (b * a) = (b' o b) * (a' o a)
        for a in self.cells2() {
            for &a2 in &from2[self.tgt2(a).idx()] {
                let aa = self.vcomp(a2, a);
                let b_src = self.tgt1(self.src2(a));
                for b in self.cells2().filter(|&b| self.src1(self.src2(b)) == b_src) {
                    let hb = self.hcomp2(b, a);
                    for &b2 in &from2[self.tgt2(b).idx()] {
                        let lhs = self.vcomp(self.hcomp2(b2, a2), hb);
                        let rhs = self.hcomp2(self.vcomp(b2, b), aa);
                        if lhs != rhs {
                            rep.push(
                                Law::Interchange,
                                "hcomp2",
                                self.names2(&[b2, a2, b, a]),
                                "interchange fails",
                            );
                        }
                    }
                }
            }
        }
    }

    fn check_coherence_invertible(&self, rep: &mut ValidationReport) {
        for u in self.cells1() {
            for (c, which) in [(self.lunitor(u), "left"), (self.runitor(u), "right")] {
                if self.inverse(c).is_none() {
                    rep.push(
                        Law::UnitorInvertible,
                        "unitors",
                        vec![self.cell1_name(u).into(), self.cell2_name(c).into()],
                        format!("{which} unitor not invertible"),
                    );
                }
            }
        }
        for (u, v, w) in self.composable_triples() {
            let a = self.assoc(u, v, w);
            if self.inverse(a).is_none() {
                rep.push(
                    Law::AssociatorInvertible,
                    "associator",
                    self.names1(&[u, v, w]),
                    format!("associator {} not invertible", self.cell2_name(a)),
                );
            }
        }
    }

    fn check_naturality(&self, rep: &mut ValidationReport) {
        for a in self.cells2() {
            let (u, u2) = (self.src2(a), self.tgt2(a));
            let (s, t) = (self.src1(u), self.tgt1(u));
            // l_{u'} o (1_{1_B} * a) = a o l_u
            if self.vcomp(self.lunitor(u2), self.whisker_l(self.id1(t), a)) != self.vcomp(a, self.lunitor(u)) {
                rep.push(Law::UnitorNaturality, "lunitor", self.names2(&[a]), "left unitor not natural");
            }
            if self.vcomp(self.runitor(u2), self.whisker_r(a, self.id1(s))) != self.vcomp(a, self.runitor(u)) {
                rep.push(Law::UnitorNaturality, "runitor", self.names2(&[a]), "right unitor not natural");
            }
        }
        // naturality of a_{u,v,w} separately in each variable
        let from1 = self.cells1_from();
        for x in self.cells2() {
            let (p, p2) = (self.src2(x), self.tgt2(x));
            // x in the last slot w
            for &v in &from1[self.tgt1(p).idx()] {
                for &u in &from1[self.tgt1(v).idx()] {
                    let lhs = self.vcomp(
                        self.assoc(u, v, p2),
                        self.whisker_l(self.hcomp1(u, v), x),
                    );
                    let rhs = self.vcomp(
                        self.whisker_l(u, self.whisker_l(v, x)),
                        self.assoc(u, v, p),
                    );
                    if lhs != rhs {
                        rep.push(
                            Law::AssociatorNaturality,
                            "associator",
                            vec![self.cell1_name(u).into(), self.cell1_name(v).into(), self.cell2_name(x).into()],
                            "associator not natural in its third argument",
                        );
                    }
                }
            }
            // x in the middle slot v
            for w in self.cells1().filter(|&w| self.tgt1(w) == self.src1(p)) {
                for &u in &from1[self.tgt1(p).idx()] {
                    let lhs = self.vcomp(
                        self.assoc(u, p2, w),
                        self.whisker_r(self.whisker_l(u, x), w),
                    );
                    let rhs = self.vcomp(
                        self.whisker_l(u, self.whisker_r(x, w)),
                        self.assoc(u, p, w),
                    );
                    if lhs != rhs {
                        rep.push(
                            Law::AssociatorNaturality,
                            "associator",
                            vec![self.cell1_name(u).into(), self.cell2_name(x).into(), self.cell1_name(w).into()],
                            "associator not natural in its second argument",
                        );
                    }
                }
            }
            // x in the first slot u
            for v in self.cells1().filter(|&v| self.tgt1(v) == self.src1(p)) {
                for w in self.cells1().filter(|&w| self.tgt1(w) == self.src1(v)) {
                    let lhs = self.vcomp(
                        self.assoc(p2, v, w),
                        self.whisker_r(self.whisker_r(x, v), w),
                    );
                    let rhs = self.vcomp(
                        self.whisker_r(x, self.hcomp1(v, w)),
                        self.assoc(p, v, w),
                    );
                    if lhs != rhs {
                        rep.push(
                            Law::AssociatorNaturality,
                            "associator",
                            vec![self.cell2_name(x).into(), self.cell1_name(v).into(), self.cell1_name(w).into()],
                            "associator not natural in its first argument",
                        );
                    }
                }
            }
        }
    }

    fn check_pentagon_triangle(&self, rep: &mut ValidationReport) {
        let from1 = self.cells1_from();
        for (v, w, x) in self.composable_triples() {
            for &u in &from1[self.tgt1(v).idx()] {
                let uv = self.hcomp1(u, v);
                let wx = self.hcomp1(w, x);
                let vw = self.hcomp1(v, w);
                let lhs = self.vcomp(self.assoc(u, v, wx), self.assoc(uv, w, x));
                let rhs = self.vseq(&[
                    self.whisker_r(self.assoc(u, v, w), x),
                    self.assoc(u, vw, x),
                    self.whisker_l(u, self.assoc(v, w, x)),
                ]);
                if lhs != rhs {
                    rep.push(Law::Pentagon, "associator", self.names1(&[u, v, w, x]), "pentagon fails");
                }
            }
        }
        for v in self.cells1() {
            let b = self.tgt1(v);
            for &u in &from1[b.idx()] {
                let one = self.id1(b);
                let lhs = self.vcomp(self.whisker_l(u, self.lunitor(v)), self.assoc(u, one, v));
                let rhs = self.whisker_r(self.runitor(u), v);
                if lhs != rhs {
                    rep.push(Law::Triangle, "unitors", self.names1(&[u, v]), "triangle fails");
                }
            }
        }
    }
}
