use super::{BicategoryBuilder, FinBicategory};
use crate::category::FinCategory;
use crate::error::{Error, Result};
use crate::ids::{Arr, Cell1, Cell2};

impl FinBicategory {
    /// The locally discrete bicategory on a category: identity 2-cells only.
    pub fn locally_discrete(c: &FinCategory) -> Result<FinBicategory> {
        FinBicategory::locally_preordered(c, |f, g| f == g, |_, _| None)
    }

    /// The strict 2-category with a unique 2-cell `f ⇒ g` whenever `le(f, g)`.
    ///
    /// `le` must be a preorder on each hom-set that is compatible with
    /// composition. 2-cells are named `1_f` and `f=>g` unless `name` supplies
    /// a name.
    pub fn locally_preordered(
        c: &FinCategory,
        le: impl Fn(Arr, Arr) -> bool,
        name: impl Fn(Arr, Arr) -> Option<String>,
    ) -> Result<FinBicategory> {
        let mut bb = BicategoryBuilder::new();
        let objs: Vec<_> = c.objects().map(|a| bb.object(c.obj_name(a))).collect();
        let cells1: Vec<Cell1> =
            c.arrows().map(|f| bb.cell1(c.arr_name(f), objs[c.src(f).idx()], objs[c.tgt(f).idx()])).collect();
        for a in c.objects() {
            bb.set_id1(objs[a.idx()], cells1[c.id(a).idx()]);
        }
        let m = c.num_arrows();
        let mut cell2: Vec<Option<Cell2>> = vec![None; m * m];
        for a in c.objects() {
            for b in c.objects() {
                let hom = c.hom(a, b);
                for &f in hom {
                    if !le(f, f) {
                        return Err(Error::Structural(format!("2-cell relation not reflexive at {}", c.arr_name(f))));
                    }
                    for &g in hom {
                        if le(f, g) {
                            let n = name(f, g).unwrap_or_else(|| {
                                if f == g {
                                    format!("1_{}", c.arr_name(f))
                                } else {
                                    format!("{}=>{}", c.arr_name(f), c.arr_name(g))
                                }
                            });
                            cell2[f.idx() * m + g.idx()] = Some(bb.cell2(n, cells1[f.idx()], cells1[g.idx()]));
                        }
                    }
                }
                for &f in hom {
                    for &g in hom {
                        for &h in hom {
                            if le(f, g) && le(g, h) && !le(f, h) {
                                return Err(Error::Structural(format!(
                                    "2-cell relation not transitive at {}",
                                    c.arr_name(f)
                                )));
                            }
                        }
                    }
                }
            }
        }
        let cell = |f: Arr, g: Arr| cell2[f.idx() * m + g.idx()];
        for f in c.arrows() {
            bb.set_id2(cells1[f.idx()], cell(f, f).unwrap());
        }
        for f in c.arrows() {
            let (a, b) = (c.src(f), c.tgt(f));
            for &g in c.hom(a, b) {
                if let Some(x) = cell(f, g) {
                    for &h in c.hom(a, b) {
                        if let Some(y) = cell(g, h) {
                            bb.set_vcomp(y, x, cell(f, h).unwrap());
                        }
                    }
                }
            }
        }
        for f in c.arrows() {
            for g in c.arrows().filter(|&g| c.src(g) == c.tgt(f)) {
                bb.set_hcomp1(cells1[g.idx()], cells1[f.idx()], cells1[c.compose(g, f).idx()]);
            }
        }
        for f in c.arrows() {
            for &f2 in c.hom(c.src(f), c.tgt(f)) {
                let Some(x) = cell(f, f2) else { continue };
                for g in c.arrows().filter(|&g| c.src(g) == c.tgt(f)) {
                    for &g2 in c.hom(c.src(g), c.tgt(g)) {
                        let Some(y) = cell(g, g2) else { continue };
                        let (gf, gf2) = (c.compose(g, f), c.compose(g2, f2));
                        match cell(gf, gf2) {
                            Some(r) => bb.set_hcomp2(y, x, r),
                            None => {
                                return Err(Error::Structural(format!(
                                    "2-cell relation not compatible with composition at ({}, {})",
                                    c.arr_name(g),
                                    c.arr_name(f)
                                )))
                            }
                        }
                    }
                }
            }
        }
        bb.build()
    }
}
