//! The shipped fixtures, built in code. The JSON files under `fixtures/` are
//! generated from these builders and tests assert that both agree.

use crate::bicat::{BicategoryBuilder, FinBicategory};
use crate::category::{CategoryBuilder, FinCategory};
use crate::family::ArrowFamily;
use crate::functors::{CatValuedPSF, FinFunctor, PseudoFunctor};
use crate::ids::{Cell1, Cell2, Obj};
use crate::report::Law;
use std::sync::Arc;

/// One object `*`, its identity `id`.
pub fn fix1() -> FinBicategory {
    let mut c = CategoryBuilder::new();
    let o = c.object("*");
    let i = c.arrow("id", o, o);
    c.set_identity(o, i);
    c.unit_laws();
    FinBicategory::locally_discrete(&c.build().unwrap()).unwrap()
}

/// The arrow category `0 → 1`, locally discrete.
pub fn fixi_category() -> FinCategory {
    let mut c = CategoryBuilder::new();
    let (z, o) = (c.object("0"), c.object("1"));
    let i0 = c.arrow("id0", z, z);
    let i1 = c.arrow("id1", o, o);
    c.arrow("u", z, o);
    c.set_identity(z, i0);
    c.set_identity(o, i1);
    c.unit_laws();
    c.build().unwrap()
}

pub fn fixi() -> FinBicategory {
    FinBicategory::locally_discrete(&fixi_category()).unwrap()
}

/// Two parallel arrows `f, g : A → B` joined by `sigma : f ⇒ g` and its inverse.
pub fn fixp() -> FinBicategory {
    let mut c = CategoryBuilder::new();
    let (a, b) = (c.object("A"), c.object("B"));
    let ia = c.arrow("idA", a, a);
    let ib = c.arrow("idB", b, b);
    c.arrow("f", a, b);
    c.arrow("g", a, b);
    c.set_identity(a, ia);
    c.set_identity(b, ib);
    c.unit_laws();
    let c = c.build().unwrap();
    let (f, g) = (c.find_arr("f").unwrap(), c.find_arr("g").unwrap());
    FinBicategory::locally_preordered(
        &c,
        |x, y| x == y || ((x == f || x == g) && (y == f || y == g)),
        |x, y| match (x == f, y == g) {
            _ if x == y => None,
            (true, true) => Some("sigma".into()),
            _ => Some("sigma_inv".into()),
        },
    )
    .unwrap()
}

/// [`fixp`] with a biterminal object `T`; `a : A → T`, `b : B → T`, `bf = bg = a`.
pub fn fixw() -> FinBicategory {
    let mut c = CategoryBuilder::new();
    let (a, b, t) = (c.object("A"), c.object("B"), c.object("T"));
    let ia = c.arrow("idA", a, a);
    let ib = c.arrow("idB", b, b);
    let it = c.arrow("idT", t, t);
    let f = c.arrow("f", a, b);
    let g = c.arrow("g", a, b);
    let ta = c.arrow("a", a, t);
    let tb = c.arrow("b", b, t);
    c.set_identity(a, ia);
    c.set_identity(b, ib);
    c.set_identity(t, it);
    c.unit_laws();
    c.set_compose(tb, f, ta);
    c.set_compose(tb, g, ta);
    let c = c.build().unwrap();
    let (f, g) = (c.find_arr("f").unwrap(), c.find_arr("g").unwrap());
    FinBicategory::locally_preordered(
        &c,
        |x, y| x == y || ((x == f || x == g) && (y == f || y == g)),
        |x, y| match (x == f, y == g) {
            _ if x == y => None,
            (true, true) => Some("sigma".into()),
            _ => Some("sigma_inv".into()),
        },
    )
    .unwrap()
}

/// Category with one arrow `name : s → t` besides identities.
pub fn walking_arrow(s: &str, t: &str, name: &str) -> FinCategory {
    let mut c = CategoryBuilder::new();
    let (x, y) = (c.object_with_id(s).0, c.object_with_id(t).0);
    c.arrow(name, x, y);
    c.unit_laws();
    c.build().unwrap()
}

/// Strict diagram over [`fixi`]: `F0 = {a : x → y}`, `F1 = {e : p → q}`,
/// `F(u) : x ↦ p, y ↦ q, a ↦ e`.
pub fn fixf() -> CatValuedPSF {
    let base = Arc::new(fixi());
    let f0 = Arc::new(walking_arrow("x", "y", "a"));
    let f1 = Arc::new(walking_arrow("p", "q", "e"));
    let fu = FinFunctor {
        src: f0.clone(),
        tgt: f1.clone(),
        obj: f0.objects().map(|x| f1.find_obj(if f0.obj_name(x) == "x" { "p" } else { "q" }).unwrap()).collect(),
        arr: f0
            .arrows()
            .map(|a| {
                let n = match f0.arr_name(a) {
                    "1_x" => "1_p",
                    "1_y" => "1_q",
                    _ => "e",
                };
                f1.find_arr(n).unwrap()
            })
            .collect(),
    };
    let f = generic_over_fixi(base, f0, f1, fu);
    CatValuedPSF::strict(f.base, f.fibers, f.on1, f.on2).unwrap()
}

/// Locally discrete chaotic category on `{0, 1}`.
pub fn chaotic2() -> FinBicategory {
    FinBicategory::locally_discrete(&FinCategory::chaotic(&["0", "1"])).unwrap()
}

pub fn discrete2() -> FinBicategory {
    FinBicategory::locally_discrete(&FinCategory::discrete(&["A", "B"])).unwrap()
}

/// Two disjoint copies of [`fix1`].
pub fn fix1_plus_fix1() -> FinBicategory {
    fix1().coproduct(&fix1())
}

/// One object, one 1-cell `e`, and `End(e)` a commutative monoid given by
/// `vmul`; `hmul` is the horizontal table and the coherence cells are given
/// by index.
pub(crate) fn hom_monoid(
    names: &[&str],
    vmul: impl Fn(usize, usize) -> usize,
    hmul: impl Fn(usize, usize) -> usize,
    a: usize,
    l: usize,
    r: usize,
) -> FinBicategory {
    let mut bb = BicategoryBuilder::new();
    let o = bb.object("*");
    let e = bb.cell1("e", o, o);
    bb.set_id1(o, e);
    bb.set_hcomp1(e, e, e);
    let cells: Vec<Cell2> = names.iter().map(|n| bb.cell2(*n, e, e)).collect();
    bb.set_id2(e, cells[0]);
    for i in 0..names.len() {
        for j in 0..names.len() {
            bb.set_vcomp(cells[i], cells[j], cells[vmul(i, j)]);
            bb.set_hcomp2(cells[i], cells[j], cells[hmul(i, j)]);
        }
    }
    bb.set_unitors(e, cells[l], cells[r]);
    bb.set_assoc(e, e, e, cells[a]);
    bb.build().unwrap()
}

/// One object whose only 1-cell has `End = Z/2 = {1, z}`.
pub fn z2() -> FinBicategory {
    hom_monoid(&["1", "z"], |i, j| i ^ j, |i, j| i ^ j, 0, 0, 0)
}

/// `End(e) = {1, n, 0}` with `n² = 0`.
pub fn hom_monoid3() -> FinBicategory {
    let mul = |i: usize, j: usize| match (i, j) {
        (0, k) | (k, 0) => k,
        _ => 2,
    };
    hom_monoid(&["1", "n", "nn"], mul, mul, 0, 0, 0)
}

/// 1-cells `e` (identity) and `f` with `ff = f`; `End(f) = {1_f, n}`, `n² = n`.
/// `af` is the associator `a_{f,f,f}` (`n` breaks invertibility).
fn idem_with(af_is_n: bool) -> FinBicategory {
    let mut bb = BicategoryBuilder::new();
    let o = bb.object("*");
    let (e, f) = (bb.cell1("e", o, o), bb.cell1("f", o, o));
    bb.set_id1(o, e);
    bb.set_hcomp1(e, e, e);
    bb.set_hcomp1(e, f, f);
    bb.set_hcomp1(f, e, f);
    bb.set_hcomp1(f, f, f);
    let ie = bb.cell2("1_e", e, e);
    let i_f = bb.cell2("1_f", f, f);
    let n = bb.cell2("n", f, f);
    bb.set_id2(e, ie);
    bb.set_id2(f, i_f);
    bb.set_vcomp(ie, ie, ie);
    let endf = [i_f, n];
    let m = |x: Cell2, y: Cell2| if x == n || y == n { n } else { i_f };
    for &x in &endf {
        for &y in &endf {
            bb.set_vcomp(x, y, m(x, y));
            bb.set_hcomp2(x, y, m(x, y));
        }
        bb.set_hcomp2(ie, x, x);
        bb.set_hcomp2(x, ie, x);
    }
    bb.set_hcomp2(ie, ie, ie);
    bb.set_unitors(e, ie, ie);
    bb.set_unitors(f, i_f, i_f);
    for u in [e, f] {
        for v in [e, f] {
            for w in [e, f] {
                let uvw = if u == f || v == f || w == f { i_f } else { ie };
                let a = if af_is_n && u == f && v == f && w == f { n } else { uvw };
                bb.set_assoc(u, v, w, a);
            }
        }
    }
    bb.build().unwrap()
}

pub fn idem() -> FinBicategory {
    idem_with(false)
}

/// 1-cells `e` (identity) and `z` with `zz = z`; `End(z) = {1_z, tau}` with
/// `tau² = tau` and `x ⋆ y = x` on `End(z)`. Filtered, with non-invertible
/// 2-cells that only become trivial after whiskering.
pub fn kproj() -> FinBicategory {
    let mut bb = BicategoryBuilder::new();
    let o = bb.object("*");
    let (e, z) = (bb.cell1("e", o, o), bb.cell1("z", o, o));
    bb.set_id1(o, e);
    bb.set_hcomp1(e, e, e);
    bb.set_hcomp1(e, z, z);
    bb.set_hcomp1(z, e, z);
    bb.set_hcomp1(z, z, z);
    let ie = bb.cell2("1_e", e, e);
    let iz = bb.cell2("1_z", z, z);
    let tau = bb.cell2("tau", z, z);
    bb.set_id2(e, ie);
    bb.set_id2(z, iz);
    bb.set_vcomp(ie, ie, ie);
    bb.set_hcomp2(ie, ie, ie);
    for x in [iz, tau] {
        for y in [iz, tau] {
            bb.set_vcomp(x, y, if x == tau || y == tau { tau } else { iz });
            bb.set_hcomp2(x, y, x);
        }
        bb.set_hcomp2(ie, x, x);
        bb.set_hcomp2(x, ie, x);
    }
    bb.build().unwrap()
}

/// Discrete `{X, Y, Z}` over [`fixi`] with `X, Y ↦ 0`, `Z ↦ 1`. Nothing
/// lies over `u` out of `Z`'s fiber, so the 1-fibration test fails at `(Z, u)`.
pub fn non_fibration() -> PseudoFunctor {
    let dom = Arc::new(FinBicategory::locally_discrete(&FinCategory::discrete(&["X", "Y", "Z"])).unwrap());
    let cod = Arc::new(fixi());
    let obj: Vec<Obj> = dom.objects().map(|x| if dom.obj_name(x) == "Z" { Obj(1) } else { Obj(0) }).collect();
    let c1: Vec<Cell1> = dom.cells1().map(|f| cod.id1(obj[dom.src1(f).idx()])).collect();
    let c2: Vec<Cell2> = dom.cells2().map(|a| cod.id2(c1[dom.src2(a).idx()])).collect();
    PseudoFunctor::strict(dom, cod, obj, c1, c2).unwrap()
}

/// Named families declared for a fixture, beyond the built-ins.
pub fn families(b: &FinBicategory, fixture: &str) -> Vec<ArrowFamily> {
    let mut out = vec![ArrowFamily::all(b), ArrowFamily::equivalences(b), ArrowFamily::identities(b)];
    if fixture == "fixi" {
        let one = b.find_cell1("id1").unwrap();
        out.push(ArrowFamily::new(b, "id1_only", [one]));
    }
    out
}

/// A fixture that breaks exactly one law, with the law it breaks.
pub struct Mutation {
    pub name: &'static str,
    pub law: Law,
    pub data: MutationData,
}

pub enum MutationData {
    Bicategory(FinBicategory),
    Pseudofunctor(PseudoFunctor),
    Catvalued(CatValuedPSF),
}

/// The ten mutation fixtures, in file order.
pub fn mutations() -> Vec<Mutation> {
    use MutationData::*;
    let xor = |i: usize, j: usize| i ^ j;
    let mut out = Vec::new();

    let mut p = fixp();
    let (s, si) = (p.find_cell2("sigma").unwrap(), p.find_cell2("sigma_inv").unwrap());
    p.vcomp.insert((s, si), s);
    out.push(Mutation { name: "m01_vcomp_mistyped", law: Law::LocalCategory, data: Bicategory(p) });

    out.push(Mutation {
        name: "m02_pentagon",
        law: Law::Pentagon,
        data: Bicategory(hom_monoid(&["1", "z"], xor, xor, 1, 1, 0)),
    });
    out.push(Mutation {
        name: "m03_triangle",
        law: Law::Triangle,
        data: Bicategory(hom_monoid(&["1", "z"], xor, xor, 0, 1, 0)),
    });
    out.push(Mutation {
        name: "m04_interchange",
        law: Law::Interchange,
        data: Bicategory(hom_monoid(&["1", "z"], xor, |i, j| if i == 1 && j == 1 { 1 } else { i ^ j }, 0, 0, 0)),
    });
    let idm = |i: usize, j: usize| i | j;
    out.push(Mutation {
        name: "m05_unitor_invertible",
        law: Law::UnitorInvertible,
        data: Bicategory(hom_monoid(&["1", "n"], idm, idm, 0, 1, 1)),
    });
    out.push(Mutation {
        name: "m06_associator_invertible",
        law: Law::AssociatorInvertible,
        data: Bicategory(idem_with(true)),
    });
    out.push(Mutation { name: "m07_unitor_naturality", law: Law::UnitorNaturality, data: Bicategory(psi_tensor()) });

    let i = Arc::new(idem());
    let mut psf = PseudoFunctor::identity(i.clone());
    let f = i.find_cell1("f").unwrap();
    psf.f2.insert((f, f), i.find_cell2("n").unwrap());
    out.push(Mutation { name: "m08_constraint_invertible", law: Law::ConstraintInvertible, data: Pseudofunctor(psf) });

    out.push(Mutation { name: "m09_functoriality", law: Law::Functoriality, data: Catvalued(bad_functor()) });
    out.push(Mutation { name: "m10_fiber_category", law: Law::FiberCategory, data: Catvalued(bad_fiber()) });
    out
}

/// Hom category `{1_e, 1_f, z, s, t}` with `z² = 1`, `zs = t`, `zt = s`;
/// `X ⋆ Y = ψX ⊗ ψY` where `ψ` collapses `z` and `t` and `⊗` is max on
/// `e ≤ f`. Everything holds except naturality of the (identity) unitors.
fn psi_tensor() -> FinBicategory {
    let mut bb = BicategoryBuilder::new();
    let o = bb.object("*");
    let (e, f) = (bb.cell1("e", o, o), bb.cell1("f", o, o));
    bb.set_id1(o, e);
    for (x, y) in [(e, e), (e, f), (f, e), (f, f)] {
        bb.set_hcomp1(x, y, if x == f || y == f { f } else { e });
    }
    let ie = bb.cell2("1_e", e, e);
    let i_f = bb.cell2("1_f", f, f);
    let z = bb.cell2("z", f, f);
    let s = bb.cell2("s", e, f);
    let t = bb.cell2("t", e, f);
    bb.set_id2(e, ie);
    bb.set_id2(f, i_f);
    let all = [ie, i_f, z, s, t];
    let vc = |x: Cell2, y: Cell2| -> Option<Cell2> {
        match (x, y) {
            _ if y == ie && (x == ie || x == s || x == t) => Some(x),
            _ if x == i_f && y != ie => Some(y),
            _ if y == i_f && (x == i_f || x == z) => Some(x),
            _ if x == z && y == z => Some(i_f),
            _ if x == z && y == s => Some(t),
            _ if x == z && y == t => Some(s),
            _ => None,
        }
    };
    // levels: 0 = 1_e, 1 = 1_f, 2 = s (after ψ)
    let psi = |x: Cell2| if x == ie { 0 } else if x == s || x == t { 2 } else { 1 };
    // src/tgt of each level in {e = 0, f = 1}; ⊗ takes the max of both ends
    let ends = [(0, 0), (1, 1), (0, 1)];
    let tensor = |a: usize, b: usize| {
        let (s, t) = (ends[a].0.max(ends[b].0), ends[a].1.max(ends[b].1));
        ends.iter().position(|&x| x == (s, t)).unwrap()
    };
    let back = [ie, i_f, s];
    for &x in &all {
        for &y in &all {
            if let Some(r) = vc(x, y) {
                bb.set_vcomp(x, y, r);
            }
            bb.set_hcomp2(x, y, back[tensor(psi(x), psi(y))]);
        }
    }
    bb.build().unwrap()
}

/// The monoid `{1, m}`, `m² = m`, as a one-object category.
fn monoid_cat(obj: &str, names: [&str; 2], mul: impl Fn(usize, usize) -> usize) -> FinCategory {
    let mut c = CategoryBuilder::new();
    let o = c.object(obj);
    let a: Vec<_> = names.iter().map(|n| c.arrow(*n, o, o)).collect();
    c.set_identity(o, a[0]);
    for i in 0..2 {
        for j in 0..2 {
            c.set_compose(a[i], a[j], a[mul(i, j)]);
        }
    }
    c.build().unwrap()
}

/// Over [`fixi`]: `F0 = {1, m}` with `m² = m`, `F1 = Z/2`, `F(u) : m ↦ z`.
fn bad_functor() -> CatValuedPSF {
    let base = Arc::new(fixi());
    let f0 = Arc::new(monoid_cat("x", ["1_x", "m"], |i, j| i | j));
    let f1 = Arc::new(monoid_cat("p", ["1_p", "z"], |i, j| i ^ j));
    let fu = FinFunctor { src: f0.clone(), tgt: f1.clone(), obj: vec![Obj(0)], arr: vec![crate::ids::Arr(0), crate::ids::Arr(1)] };
    generic_over_fixi(base, f0, f1, fu)
}

/// Over [`fixi`] with `F0 = Z/2` whose table claims `z ∘ 1 = 1`.
fn bad_fiber() -> CatValuedPSF {
    let base = Arc::new(fixi());
    let mut f0 = monoid_cat("x", ["1_x", "z"], |i, j| i ^ j);
    f0.compose.insert((crate::ids::Arr(1), crate::ids::Arr(0)), crate::ids::Arr(0));
    let f0 = Arc::new(f0);
    let f1 = Arc::new(FinCategory::terminal());
    let fu = FinFunctor { src: f0.clone(), tgt: f1.clone(), obj: vec![Obj(0)], arr: vec![crate::ids::Arr(0), crate::ids::Arr(0)] };
    generic_over_fixi(base, f0, f1, fu)
}

fn generic_over_fixi(
    base: Arc<FinBicategory>,
    f0: Arc<FinCategory>,
    f1: Arc<FinCategory>,
    fu: FinFunctor,
) -> CatValuedPSF {
    let fibers = vec![f0.clone(), f1.clone()];
    let u = base.find_cell1("u").unwrap();
    let on1: Vec<FinFunctor> = base
        .cells1()
        .map(|c| if c == u { fu.clone() } else { FinFunctor::identity(fibers[base.src1(c).idx()].clone()) })
        .collect();
    let ids = |c: &FinCategory, f: &FinFunctor| -> Vec<crate::ids::Arr> {
        c.objects().map(|x| f.tgt.id(f.map_obj(x))).collect()
    };
    let on2 = base.cells2().map(|a| ids(&fibers[base.src1(base.src2(a)).idx()], &on1[base.src2(a).idx()])).collect();
    let mut f2 = std::collections::HashMap::new();
    for (&(x, y), &xy) in base.hcomp1.iter() {
        f2.insert((x, y), ids(&fibers[base.src1(y).idx()], &on1[xy.idx()]));
    }
    let f0s = base.objects().map(|a| ids(&fibers[a.idx()], &on1[base.id1(a).idx()])).collect();
    CatValuedPSF { base, fibers, on1, on2, f2, f0: f0s }
}

/// Locally discrete `f, g : A → B`; fails 1-Flt at `(f, g)`.
pub fn parallel2() -> FinBicategory {
    let mut c = CategoryBuilder::new();
    let (a, b) = (c.object_with_id("A").0, c.object_with_id("B").0);
    c.arrow("f", a, b);
    c.arrow("g", a, b);
    c.unit_laws();
    FinBicategory::locally_discrete(&c.build().unwrap()).unwrap()
}

/// The strict diagram `parallel2 → fixp` sending `f, g` to `f, g`.
pub fn parallel_into_fixp() -> PseudoFunctor {
    let dom = Arc::new(parallel2());
    let cod = Arc::new(fixp());
    let obj = dom.objects().map(|x| cod.find_obj(dom.obj_name(x)).unwrap()).collect();
    let c1: Vec<Cell1> = dom
        .cells1()
        .map(|f| {
            let n = match dom.cell1_name(f) {
                "1_A" => "idA",
                "1_B" => "idB",
                n => n,
            };
            cod.find_cell1(n).unwrap()
        })
        .collect();
    let c2 = dom.cells2().map(|a| cod.id2(c1[dom.src2(a).idx()])).collect();
    PseudoFunctor::strict(dom, cod, obj, c1, c2).unwrap()
}

/// Hand count of `el(FIXF)`: `(C, x)` pairs, `(f, x, φ)` triples, identity
/// 2-cells, and triples with `φ` invertible.
pub const FIXF_ELEMENTS: [usize; 4] = [4, 9, 9, 6];

/// Every shipped fixture file as `(relative path, contents)`.
pub fn files() -> Vec<(String, String)> {
    use crate::io::{bicategory_to_file, catvalued_to_file, psf_to_file, to_json, BicategoryRef};
    let mut out = Vec::new();
    for (name, b) in [("fix1", fix1()), ("fixi", fixi()), ("fixp", fixp()), ("fixw", fixw())] {
        let extra: Vec<ArrowFamily> = families(&b, name).into_iter().skip(3).collect();
        out.push((format!("{name}.json"), to_json(&bicategory_to_file(&b, &extra))));
    }
    out.push(("fixf.json".into(), to_json(&catvalued_to_file(&fixf(), Some(BicategoryRef::Path("fixi.json".into()))))));
    let counts = serde_json::json!({
        "format": "counts",
        "of": "elements(fixf)",
        "objects": FIXF_ELEMENTS[0],
        "cells1": FIXF_ELEMENTS[1],
        "cells2": FIXF_ELEMENTS[2],
        "cocartesian1": FIXF_ELEMENTS[3],
    });
    out.push(("fixf_elements.json".into(), to_json(&counts)));
    out.push((
        "parallel_into_fixp.json".into(),
        to_json(&psf_to_file(&parallel_into_fixp(), None, Some(BicategoryRef::Path("fixp.json".into())))),
    ));
    for m in mutations() {
        let mut v = match &m.data {
            MutationData::Bicategory(b) => serde_json::to_value(bicategory_to_file(b, &[])),
            MutationData::Pseudofunctor(p) => serde_json::to_value(psf_to_file(p, None, None)),
            MutationData::Catvalued(c) => {
                serde_json::to_value(catvalued_to_file(c, Some(BicategoryRef::Path("../fixi.json".into()))))
            }
        }
        .unwrap();
        v.as_object_mut().unwrap().insert("expected_law".into(), serde_json::to_value(m.law).unwrap());
        out.push((format!("mutations/{}.json", m.name), to_json(&v)));
    }
    out
}

/// Writes [`files`] under `dir`.
pub fn write_files(dir: &std::path::Path) -> std::io::Result<()> {
    for (rel, text) in files() {
        let p = dir.join(rel);
        if let Some(d) = p.parent() {
            std::fs::create_dir_all(d)?;
        }
        std::fs::write(p, text)?;
    }
    Ok(())
}
