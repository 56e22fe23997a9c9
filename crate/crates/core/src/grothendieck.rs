//! The bicategory of elements of a Cat-valued pseudo-functor and its
//! projection onto the base.

use crate::bicat::{BicategoryBuilder, FinBicategory};
use crate::error::{Error, Result};
use crate::family::ArrowFamily;
use crate::functors::{CatValuedPSF, PseudoFunctor};
use crate::ids::{Arr, Cell1, Cell2, Obj};
use std::collections::HashMap;
use std::sync::Arc;

/// `el F` together with its projection and co-Cartesian cells.
///
/// Objects are `(C, x)` with `x : FC`; 1-cells `(f, x, φ)` with
/// `φ : Ff(x) → y`; 2-cells `(α, x, φ, ψ) : (f, x, φ) ⇒ (g, x, ψ)` whenever
/// `ψ ∘ (Fα)_x = φ`.
#[derive(Clone, Debug)]
pub struct ElementsResult {
    pub total: Arc<FinBicategory>,
    pub proj: PseudoFunctor,
    /// 1-cells whose second coordinate is invertible.
    pub cocart1: ArrowFamily,
    /// 2-cells whose fiber component is invertible (all of them, as fibers
    /// are categories).
    pub cocart2: Vec<Cell2>,
    /// `(C, x)` for each object of `total`.
    pub obj_data: Vec<(Obj, Obj)>,
    /// `(f, x, φ)` for each 1-cell of `total`.
    pub cell1_data: Vec<(Cell1, Obj, Arr)>,
}

impl ElementsResult {
    pub fn object(&self, c: Obj, x: Obj) -> Obj {
        Obj::from_idx(self.obj_data.iter().position(|&d| d == (c, x)).expect("object of el F"))
    }
    pub fn cell1(&self, f: Cell1, x: Obj, phi: Arr) -> Option<Cell1> {
        self.cell1_data.iter().position(|&d| d == (f, x, phi)).map(Cell1::from_idx)
    }
}

pub fn elements(fun: &CatValuedPSF) -> Result<ElementsResult> {
    let b = &*fun.base;
    let mut bb = BicategoryBuilder::new();
    let mut objs: HashMap<(Obj, Obj), Obj> = HashMap::new();
    let mut obj_list = Vec::new();
    for c in b.objects() {
        let fc = fun.fiber(c);
        for x in fc.objects() {
            let o = bb.object(format!("({},{})", b.obj_name(c), fc.obj_name(x)));
            objs.insert((c, x), o);
            obj_list.push((c, x));
        }
    }
    // 1-cells
    let mut c1: HashMap<(Cell1, Obj, Arr), Cell1> = HashMap::new();
    let mut c1_list = Vec::new();
    for f in b.cells1() {
        let (c, d) = (b.src1(f), b.tgt1(f));
        let (fc, fd) = (fun.fiber(c), fun.fiber(d));
        for x in fc.objects() {
            let fx = fun.act(f, x);
            for phi in fd.arrows().filter(|&p| fd.src(p) == fx) {
                let name = format!("({},{},{})", b.cell1_name(f), fc.obj_name(x), fd.arr_name(phi));
                let k = bb.cell1(name, objs[&(c, x)], objs[&(d, fd.tgt(phi))]);
                c1.insert((f, x, phi), k);
                c1_list.push((f, x, phi));
            }
        }
    }
    let label1 = |key: &(Cell1, Obj, Arr)| -> String {
        let (f, x, phi) = *key;
        format!("({},{},{})", b.cell1_name(f), fun.fiber(b.src1(f)).obj_name(x), fun.fiber(b.tgt1(f)).arr_name(phi))
    };
    // identities and composition
    for c in b.objects() {
        let fc = fun.fiber(c);
        let i = b.id1(c);
        for x in fc.objects() {
            let phi = fc.inv(fun.f0_at(c, x));
            bb.set_id1(objs[&(c, x)], c1[&(i, x, phi)]);
        }
    }
    let comp1 = |gk: (Cell1, Obj, Arr), fk: (Cell1, Obj, Arr)| -> (Cell1, Obj, Arr) {
        let ((g, _, psi), (f, x, phi)) = (gk, fk);
        let e = b.tgt1(g);
        let fe = fun.fiber(e);
        let gf = b.hcomp1(g, f);
        let second = fe.seq(&[fe.inv(fun.f2_at(g, f, x)), fun.act_arr(g, phi), psi]);
        (gf, x, second)
    };
    for &fk in &c1_list {
        let (f, _, phi) = fk;
        let y = fun.fiber(b.tgt1(f)).tgt(phi);
        for &gk in c1_list.iter().filter(|k| b.src1(k.0) == b.tgt1(f) && k.1 == y) {
            bb.set_hcomp1(c1[&gk], c1[&fk], c1[&comp1(gk, fk)]);
        }
    }
    // 2-cells
    type Key2 = (Cell2, (Cell1, Obj, Arr), (Cell1, Obj, Arr));
    let mut c2: HashMap<Key2, Cell2> = HashMap::new();
    let mut c2_list: Vec<Key2> = Vec::new();
    for alpha in b.cells2() {
        let (f, g) = (b.src2(alpha), b.tgt2(alpha));
        let fd = fun.fiber(b.tgt1(f));
        for &fk in c1_list.iter().filter(|k| k.0 == f) {
            let (_, x, phi) = fk;
            let a = fun.comp2(alpha, x);
            for &gk in c1_list.iter().filter(|k| k.0 == g && k.1 == x) {
                if fd.compose(gk.2, a) == phi {
                    let name = format!("({},{},{},{})", b.cell2_name(alpha), fun.fiber(b.src1(f)).obj_name(x), fd.arr_name(phi), fd.arr_name(gk.2));
                    let k = bb.cell2(name, c1[&fk], c1[&gk]);
                    c2.insert((alpha, fk, gk), k);
                    c2_list.push((alpha, fk, gk));
                }
            }
        }
    }
    let lookup = |alpha: Cell2, s: (Cell1, Obj, Arr), t: (Cell1, Obj, Arr), what: &str| -> Result<Cell2> {
        c2.get(&(alpha, s, t)).copied().ok_or_else(|| {
            Error::Internal(format!("el F: {what} cell {} from {} to {} is missing", b.cell2_name(alpha), label1(&s), label1(&t)))
        })
    };
    for &fk in &c1_list {
        bb.set_id2(c1[&fk], lookup(b.id2(fk.0), fk, fk, "identity")?);
    }
    for &(beta, gk, hk) in &c2_list {
        for &(alpha, fk, gk2) in c2_list.iter().filter(|k| k.2 == gk) {
            let _ = gk2;
            let r = lookup(b.vcomp(beta, alpha), fk, hk, "vertical composite")?;
            bb.set_vcomp(c2[&(beta, gk, hk)], c2[&(alpha, fk, gk)], r);
        }
    }
    let target_obj = |k: &(Cell1, Obj, Arr)| fun.fiber(b.tgt1(k.0)).tgt(k.2);
    for &(beta, gk, gk2) in &c2_list {
        for &(alpha, fk, fk2) in c2_list.iter().filter(|k| b.src1(gk.0) == b.tgt1(k.1 .0) && gk.1 == target_obj(&k.1)) {
            let r = lookup(b.hcomp2(beta, alpha), comp1(gk, fk), comp1(gk2, fk2), "horizontal composite")?;
            bb.set_hcomp2(c2[&(beta, gk, gk2)], c2[&(alpha, fk, fk2)], r);
        }
    }
    // coherence cells
    let id_key = |c: Obj, x: Obj| {
        let fc = fun.fiber(c);
        (b.id1(c), x, fc.inv(fun.f0_at(c, x)))
    };
    for &fk in &c1_list {
        let (f, x, phi) = fk;
        let y = target_obj(&fk);
        let l = lookup(b.lunitor(f), comp1(id_key(b.tgt1(f), y), fk), fk, "left unitor")?;
        let r = lookup(b.runitor(f), comp1(fk, id_key(b.src1(f), x)), fk, "right unitor")?;
        let _ = phi;
        bb.set_unitors(c1[&fk], l, r);
    }
    for &hk in &c1_list {
        for &gk in c1_list.iter().filter(|k| b.tgt1(k.0) == b.src1(hk.0) && target_obj(k) == hk.1) {
            for &fk in c1_list.iter().filter(|k| b.tgt1(k.0) == b.src1(gk.0) && target_obj(k) == gk.1) {
                let s = comp1(comp1(hk, gk), fk);
                let t = comp1(hk, comp1(gk, fk));
                let a = lookup(b.assoc(hk.0, gk.0, fk.0), s, t, "associator")?;
                bb.set_assoc(c1[&hk], c1[&gk], c1[&fk], a);
            }
        }
    }
    let total = Arc::new(bb.build()?);

    // index data in built order
    let mut obj_data = vec![(Obj(0), Obj(0)); total.num_objects()];
    for (&k, _) in objs.iter() {
        let name = format!("({},{})", b.obj_name(k.0), fun.fiber(k.0).obj_name(k.1));
        obj_data[total.find_obj(&name).unwrap().idx()] = k;
    }
    let mut cell1_data = vec![(Cell1(0), Obj(0), Arr(0)); total.num_cells1()];
    for k in &c1_list {
        cell1_data[total.find_cell1(&label1(k)).unwrap().idx()] = *k;
    }
    let mut base2 = vec![Cell2(0); total.num_cells2()];
    for &(alpha, fk, gk) in &c2_list {
        let fd = fun.fiber(b.tgt1(fk.0));
        let name = format!("({},{},{},{})", b.cell2_name(alpha), fun.fiber(b.src1(fk.0)).obj_name(fk.1), fd.arr_name(fk.2), fd.arr_name(gk.2));
        base2[total.find_cell2(&name).unwrap().idx()] = alpha;
    }
    let proj = PseudoFunctor::strict(
        total.clone(),
        fun.base.clone(),
        obj_data.iter().map(|d| d.0).collect(),
        cell1_data.iter().map(|d| d.0).collect(),
        base2,
    )?;
    let cocart1 = ArrowFamily::new(
        &total,
        "cocartesian",
        total.cells1().filter(|k| {
            let (f, _, phi) = cell1_data[k.idx()];
            fun.fiber(b.tgt1(f)).inverse(phi).is_some()
        }),
    );
    let cocart2 = total.cells2().collect();
    Ok(ElementsResult { total, proj, cocart1, cocart2, obj_data, cell1_data })
}
