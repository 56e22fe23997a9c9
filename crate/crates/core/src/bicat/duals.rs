use super::{BicategoryBuilder, FinBicategory, OneCell, TwoCell};
use crate::ids::{Cell1, Cell2, Obj};

impl FinBicategory {
    /// `B^op`: 1-cells reversed, 2-cells kept. Names are unchanged, so the
    /// canonical order is preserved and `op_dual(op_dual(B)) == B`.
    pub fn op_dual(&self) -> FinBicategory {
        let cells1 = self
            .cells1
            .iter()
            .map(|c| OneCell { name: c.name.clone(), src: c.tgt, tgt: c.src })
            .collect();
        let mut b = FinBicategory::from_raw(
            self.objects.clone(),
            cells1,
            self.cells2.clone(),
            self.id1.clone(),
            self.id2.clone(),
        );
        b.vcomp = self.vcomp.clone();
        b.hcomp1 = self.hcomp1.iter().map(|(&(g, f), &r)| ((f, g), r)).collect();
        b.hcomp2 = self.hcomp2.iter().map(|(&(x, y), &r)| ((y, x), r)).collect();
        b.lunitor = self.runitor.clone();
        b.runitor = self.lunitor.clone();
        // (u v) w in the dual is w (v u) here.
        b.assoc = self.assoc.iter().map(|(&(u, v, w), &a)| ((w, v, u), self.inv(a))).collect();
        b.reindex();
        b
    }

    /// `B^co`: 2-cells reversed, 1-cells kept.
    pub fn co_dual(&self) -> FinBicategory {
        let cells2 = self
            .cells2
            .iter()
            .map(|c| TwoCell { name: c.name.clone(), src: c.tgt, tgt: c.src })
            .collect();
        let mut b = FinBicategory::from_raw(
            self.objects.clone(),
            self.cells1.clone(),
            cells2,
            self.id1.clone(),
            self.id2.clone(),
        );
        b.vcomp = self.vcomp.iter().map(|(&(x, y), &r)| ((y, x), r)).collect();
        b.hcomp1 = self.hcomp1.clone();
        b.hcomp2 = self.hcomp2.clone();
        b.lunitor = self.lunitor.iter().map(|&c| self.inv(c)).collect();
        b.runitor = self.runitor.iter().map(|&c| self.inv(c)).collect();
        b.assoc = self.assoc.iter().map(|(&k, &a)| (k, self.inv(a))).collect();
        b.reindex();
        b
    }

    /// Cartesian product, cells named `(x,y)`.
    pub fn product(&self, other: &FinBicategory) -> FinBicategory {
        let mut bb = BicategoryBuilder::new();
        let (n0, m0) = (self.num_objects(), other.num_objects());
        let (n1, m1) = (self.num_cells1(), other.num_cells1());
        let (n2, m2) = (self.num_cells2(), other.num_cells2());
        let pair = |a: &str, b: &str| format!("({a},{b})");
        let mut objs = Vec::with_capacity(n0 * m0);
        for a in self.objects() {
            for b in other.objects() {
                objs.push(bb.object(pair(self.obj_name(a), other.obj_name(b))));
            }
        }
        let o = |a: Obj, b: Obj| objs[a.idx() * m0 + b.idx()];
        let mut c1 = Vec::with_capacity(n1 * m1);
        for f in self.cells1() {
            for g in other.cells1() {
                c1.push(bb.cell1(
                    pair(self.cell1_name(f), other.cell1_name(g)),
                    o(self.src1(f), other.src1(g)),
                    o(self.tgt1(f), other.tgt1(g)),
                ));
            }
        }
        let p1 = |f: Cell1, g: Cell1| c1[f.idx() * m1 + g.idx()];
        let mut c2 = Vec::with_capacity(n2 * m2);
        for x in self.cells2() {
            for y in other.cells2() {
                c2.push(bb.cell2(
                    pair(self.cell2_name(x), other.cell2_name(y)),
                    p1(self.src2(x), other.src2(y)),
                    p1(self.tgt2(x), other.tgt2(y)),
                ));
            }
        }
        let p2 = |x: Cell2, y: Cell2| c2[x.idx() * m2 + y.idx()];
        for a in self.objects() {
            for b in other.objects() {
                bb.set_id1(o(a, b), p1(self.id1(a), other.id1(b)));
            }
        }
        for f in self.cells1() {
            for g in other.cells1() {
                bb.set_id2(p1(f, g), p2(self.id2(f), other.id2(g)));
                bb.set_unitors(
                    p1(f, g),
                    p2(self.lunitor(f), other.lunitor(g)),
                    p2(self.runitor(f), other.runitor(g)),
                );
            }
        }
        for (&(x1, y1), &r1) in &self.vcomp {
            for (&(x2, y2), &r2) in &other.vcomp {
                bb.set_vcomp(p2(x1, x2), p2(y1, y2), p2(r1, r2));
            }
        }
        for (&(x1, y1), &r1) in &self.hcomp1 {
            for (&(x2, y2), &r2) in &other.hcomp1 {
                bb.set_hcomp1(p1(x1, x2), p1(y1, y2), p1(r1, r2));
            }
        }
        for (&(x1, y1), &r1) in &self.hcomp2 {
            for (&(x2, y2), &r2) in &other.hcomp2 {
                bb.set_hcomp2(p2(x1, x2), p2(y1, y2), p2(r1, r2));
            }
        }
        for (&(u1, v1, w1), &a1) in &self.assoc {
            for (&(u2, v2, w2), &a2) in &other.assoc {
                bb.set_assoc(p1(u1, u2), p1(v1, v2), p1(w1, w2), p2(a1, a2));
            }
        }
        bb.build().expect("product of valid presentations")
    }

    /// Disjoint union; cells of the summands are tagged `l.` and `r.`.
    pub fn coproduct(&self, other: &FinBicategory) -> FinBicategory {
        let mut bb = BicategoryBuilder::new();
        let mut maps: Vec<(Vec<Obj>, Vec<Cell1>, Vec<Cell2>)> = Vec::new();
        for (tag, b) in [("l.", self), ("r.", other)] {
            let o: Vec<Obj> = b.objects().map(|a| bb.object(format!("{tag}{}", b.obj_name(a)))).collect();
            let c1: Vec<Cell1> = b
                .cells1()
                .map(|f| bb.cell1(format!("{tag}{}", b.cell1_name(f)), o[b.src1(f).idx()], o[b.tgt1(f).idx()]))
                .collect();
            let c2: Vec<Cell2> = b
                .cells2()
                .map(|x| bb.cell2(format!("{tag}{}", b.cell2_name(x)), c1[b.src2(x).idx()], c1[b.tgt2(x).idx()]))
                .collect();
            maps.push((o, c1, c2));
        }
        for (k, b) in [self, other].into_iter().enumerate() {
            let (o, c1, c2) = &maps[k];
            for a in b.objects() {
                bb.set_id1(o[a.idx()], c1[b.id1(a).idx()]);
            }
            for f in b.cells1() {
                bb.set_id2(c1[f.idx()], c2[b.id2(f).idx()]);
                bb.set_unitors(c1[f.idx()], c2[b.lunitor(f).idx()], c2[b.runitor(f).idx()]);
            }
            for (&(x, y), &r) in &b.vcomp {
                bb.set_vcomp(c2[x.idx()], c2[y.idx()], c2[r.idx()]);
            }
            for (&(x, y), &r) in &b.hcomp1 {
                bb.set_hcomp1(c1[x.idx()], c1[y.idx()], c1[r.idx()]);
            }
            for (&(x, y), &r) in &b.hcomp2 {
                bb.set_hcomp2(c2[x.idx()], c2[y.idx()], c2[r.idx()]);
            }
            for (&(u, v, w), &a) in &b.assoc {
                bb.set_assoc(c1[u.idx()], c1[v.idx()], c1[w.idx()], c2[a.idx()]);
            }
        }
        bb.build().expect("coproduct of valid presentations")
    }
}
