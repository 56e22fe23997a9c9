//! Cartesian 1-cells and 2-cells of a pseudo-functor `P : E → B`, fibration
//! predicates and lifted families.
//!
//! Co-Cartesian notions are the Cartesian ones for `P^op`; callers pass
//! `P.op()` (see [`cocartesian`]).

use crate::bicat::FinBicategory;
use crate::family::ArrowFamily;
use crate::functors::PseudoFunctor;
use crate::ids::{Cell1, Cell2, Obj};
use std::sync::Arc;

/// First failing instance of the Cartesian test, by item of the
/// characterization (0: factorization, 1: 2-cell lifting, 2: uniqueness).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartesianFailure {
    pub item: u8,
    pub instance: Vec<String>,
}

/// Decides whether `f : X → Y` is Cartesian for `p`.
pub fn cartesian1_failure(p: &PseudoFunctor, f: Cell1) -> Option<CartesianFailure> {
    let (e, b) = (&*p.dom, &*p.cod);
    let (x, y) = (e.src1(f), e.tgt1(f));
    let pf = p.map1(f);
    for z in e.objects() {
        // item 0
        for &g in e.hom(z, y) {
            let pg = p.map1(g);
            for &h in b.hom(p.map_obj(z), p.map_obj(x)) {
                for &alpha in b.hom2(b.hcomp1(pf, h), pg) {
                    if b.inverse(alpha).is_none() {
                        continue;
                    }
                    if !has_factorization(p, f, g, h, alpha) {
                        return Some(CartesianFailure {
                            item: 0,
                            instance: vec![
                                e.obj_name(z).into(),
                                e.cell1_name(g).into(),
                                b.cell1_name(h).into(),
                                b.cell2_name(alpha).into(),
                            ],
                        });
                    }
                }
            }
        }
        let hom = e.hom(z, x);
        for &g in hom {
            for &h in hom {
                let (fg, fh) = (e.hcomp1(f, g), e.hcomp1(f, h));
                let (pg, ph) = (p.map1(g), p.map1(h));
                // item 1
                for &alpha in e.hom2(fg, fh) {
                    let pa = p.map2(alpha);
                    for &beta in b.hom2(pg, ph) {
                        let via = b.vseq(&[b.inv(p.f2(f, g)), b.whisker_l(pf, beta), p.f2(f, h)]);
                        if via != pa {
                            continue;
                        }
                        let ok = e
                            .hom2(g, h)
                            .iter()
                            .any(|&bh| p.map2(bh) == beta && e.whisker_l(f, bh) == alpha);
                        if !ok {
                            return Some(CartesianFailure {
                                item: 1,
                                instance: vec![
                                    e.cell1_name(g).into(),
                                    e.cell1_name(h).into(),
                                    e.cell2_name(alpha).into(),
                                    b.cell2_name(beta).into(),
                                ],
                            });
                        }
                    }
                }
                // item 2
                let cells = e.hom2(g, h);
                for (i, &a1) in cells.iter().enumerate() {
                    for &a2 in &cells[i + 1..] {
                        if p.map2(a1) == p.map2(a2) && e.whisker_l(f, a1) == e.whisker_l(f, a2) {
                            return Some(CartesianFailure {
                                item: 2,
                                instance: vec![e.cell2_name(a1).into(), e.cell2_name(a2).into()],
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

/// Searches `(ĥ, α̂, β̂)` with `α ∘ (Pf ⋆ β̂) = Pα̂ ∘ P²_{f,ĥ}`.
fn has_factorization(p: &PseudoFunctor, f: Cell1, g: Cell1, h: Cell1, alpha: Cell2) -> bool {
    let (e, b) = (&*p.dom, &*p.cod);
    let pf = p.map1(f);
    for &hh in e.hom(e.src1(g), e.src1(f)) {
        let phh = p.map1(hh);
        let fhh = e.hcomp1(f, hh);
        let inv_betas: Vec<Cell2> = b.hom2(phh, h).iter().copied().filter(|&x| b.inverse(x).is_some()).collect();
        if inv_betas.is_empty() {
            continue;
        }
        for &ah in e.hom2(fhh, g) {
            if e.inverse(ah).is_none() {
                continue;
            }
            let rhs = b.vcomp(p.map2(ah), p.f2(f, hh));
            if inv_betas.iter().any(|&bh| b.vcomp(alpha, b.whisker_l(pf, bh)) == rhs) {
                return true;
            }
        }
    }
    false
}

pub fn is_cartesian1(p: &PseudoFunctor, f: Cell1) -> bool {
    cartesian1_failure(p, f).is_none()
}

/// `α : f ⇒ g` is Cartesian for the local functor `P_{X,Y}`: every
/// `γ : h ⇒ g` with `Pγ = Pα ∘ φ` factors uniquely as `α ∘ χ` with `Pχ = φ`.
pub fn is_cartesian2(p: &PseudoFunctor, alpha: Cell2) -> bool {
    let (e, b) = (&*p.dom, &*p.cod);
    let (f, g) = (e.src2(alpha), e.tgt2(alpha));
    let pa = p.map2(alpha);
    for &h in e.hom(e.src1(f), e.tgt1(f)) {
        for &gamma in e.hom2(h, g) {
            for &phi in b.hom2(p.map1(h), p.map1(f)) {
                if b.vcomp(pa, phi) != p.map2(gamma) {
                    continue;
                }
                let n = e.hom2(h, f).iter().filter(|&&chi| e.vcomp(alpha, chi) == gamma && p.map2(chi) == phi).count();
                if n != 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// First strict lift `(B̂, f̂)` of `f : B → PE` at `E` that is Cartesian.
pub fn cartesian_lift(p: &PseudoFunctor, e_obj: Obj, f: Cell1) -> Option<(Obj, Cell1)> {
    let e = &*p.dom;
    for bh in e.objects().filter(|&x| p.map_obj(x) == p.cod.src1(f)) {
        for &fh in e.hom(bh, e_obj) {
            if p.map1(fh) == f && is_cartesian1(p, fh) {
                return Some((bh, fh));
            }
        }
    }
    None
}

/// A lift up to an invertible 2-cell `P f̂ ≅ f`, used only for diagnostics.
pub fn lax_cartesian_lift(p: &PseudoFunctor, e_obj: Obj, f: Cell1) -> Option<(Obj, Cell1, Cell2)> {
    let (e, b) = (&*p.dom, &*p.cod);
    for bh in e.objects().filter(|&x| p.map_obj(x) == b.src1(f)) {
        for &fh in e.hom(bh, e_obj) {
            if let Some(iso) = b.first_iso(p.map1(fh), f) {
                if is_cartesian1(p, fh) {
                    return Some((bh, fh, iso));
                }
            }
        }
    }
    None
}

/// Outcome of a fibration test.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FibrationReport {
    pub pass: bool,
    /// `(E, f)` with no strict Cartesian lift.
    pub uncovered: Option<(String, String)>,
    /// Whether a lift up to an invertible 2-cell exists for `uncovered`.
    pub lax_lift_exists: bool,
    /// First local functor failing to be a fibration, or the first pair of
    /// Cartesian 2-cells with non-Cartesian composite.
    pub local_failure: Option<Vec<String>>,
}

pub fn check_1fibration(p: &PseudoFunctor) -> FibrationReport {
    let (e, b) = (&*p.dom, &*p.cod);
    for x in e.objects() {
        for bo in b.objects() {
            for &f in b.hom(bo, p.map_obj(x)) {
                if cartesian_lift(p, x, f).is_none() {
                    return FibrationReport {
                        pass: false,
                        uncovered: Some((e.obj_name(x).into(), b.cell1_name(f).into())),
                        lax_lift_exists: lax_cartesian_lift(p, x, f).is_some(),
                        local_failure: None,
                    };
                }
            }
        }
    }
    FibrationReport { pass: true, ..Default::default() }
}

pub fn is_1fibration(p: &PseudoFunctor) -> bool {
    check_1fibration(p).pass
}

/// 1-fibration, local fibrations, and Cartesian 2-cells closed under `⋆`.
pub fn check_fibration(p: &PseudoFunctor) -> FibrationReport {
    let mut rep = check_1fibration(p);
    if !rep.pass {
        return rep;
    }
    let (e, b) = (&*p.dom, &*p.cod);
    let cart: Vec<bool> = e.cells2().map(|a| is_cartesian2(p, a)).collect();
    for g in e.cells1() {
        let (s, t) = (e.src1(g), e.tgt1(g));
        for &k in b.hom(p.map_obj(s), p.map_obj(t)) {
            for &phi in b.hom2(k, p.map1(g)) {
                let lifted = e.hom(s, t).iter().any(|&f| {
                    p.map1(f) == k && e.hom2(f, g).iter().any(|&a| p.map2(a) == phi && cart[a.idx()])
                });
                if !lifted {
                    rep.pass = false;
                    rep.local_failure = Some(vec![e.cell1_name(g).into(), b.cell2_name(phi).into()]);
                    return rep;
                }
            }
        }
    }
    for (&(x, y), &xy) in e.hcomp2.iter() {
        if cart[x.idx()] && cart[y.idx()] && !cart[xy.idx()] {
            rep.pass = false;
            rep.local_failure = Some(vec![e.cell2_name(x).into(), e.cell2_name(y).into()]);
            return rep;
        }
    }
    rep
}

pub fn is_fibration(p: &PseudoFunctor) -> bool {
    check_fibration(p).pass
}

/// The fibration test on `P^op`.
pub fn is_cofibration(p: &PseudoFunctor) -> bool {
    is_fibration(&p.op())
}

/// Cartesian 1-cells lying over members of `w`; pass `P.op()` for the
/// co-Cartesian family.
pub fn lifted_family(p: &PseudoFunctor, w: &ArrowFamily) -> ArrowFamily {
    let e = &*p.dom;
    let name = format!("cartesian_over_{}", w.name);
    ArrowFamily::new(e, name, e.cells1().filter(|&f| w.contains(p.map1(f)) && is_cartesian1(p, f)))
}

/// The co-Cartesian 1-cells of `p`, as a family on `p.dom`.
pub fn cocartesian(p: &PseudoFunctor) -> ArrowFamily {
    let q = p.op();
    let all = ArrowFamily::all(&q.cod);
    let mut fam = lifted_family(&q, &all);
    fam.name = "cocartesian".into();
    fam
}

/// The projection `B × X → B`, strict.
pub fn projection(b: Arc<FinBicategory>, x: &FinBicategory) -> PseudoFunctor {
    let prod = Arc::new(b.product(x));
    let mut obj = vec![Obj(0); prod.num_objects()];
    let mut c1 = vec![Cell1(0); prod.num_cells1()];
    let mut c2 = vec![Cell2(0); prod.num_cells2()];
    let pair = |a: &str, y: &str| format!("({a},{y})");
    for a in b.objects() {
        for y in x.objects() {
            obj[prod.find_obj(&pair(b.obj_name(a), x.obj_name(y))).unwrap().idx()] = a;
        }
    }
    for f in b.cells1() {
        for g in x.cells1() {
            c1[prod.find_cell1(&pair(b.cell1_name(f), x.cell1_name(g))).unwrap().idx()] = f;
        }
    }
    for a in b.cells2() {
        for c in x.cells2() {
            c2[prod.find_cell2(&pair(b.cell2_name(a), x.cell2_name(c))).unwrap().idx()] = a;
        }
    }
    PseudoFunctor::strict(prod, b, obj, c1, c2).expect("projection is strict")
}
