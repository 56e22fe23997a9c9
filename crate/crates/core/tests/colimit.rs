use bifrac::colimit::*;
use bifrac::fixtures;
use bifrac::{CatValuedPSF, FinCategory, FinFunctor};
use std::sync::Arc;

fn fixf() -> CatValuedPSF {
    fixtures::fixf()
}

#[test]
fn fixf_direct_shape() {
    let f = fixf();
    let c = colimit_direct(&f).unwrap();
    assert_eq!(c.cat.num_objects(), 4);
    // every object is isomorphic to one of (1,p), (1,q), and hom((1,p),(1,q)) is a point
    let p = c.cat.find_obj("(1,p)").unwrap();
    let q = c.cat.find_obj("(1,q)").unwrap();
    assert_eq!(c.cat.hom(p, q).len(), 1);
    assert_eq!(c.cat.hom(q, p).len(), 0);
    assert_eq!(c.cat.hom(p, p).len(), 1);
    let t = f.base.find_obj("1").unwrap();
    let lam = terminal_fiber_comparison(&f, &c, t).unwrap();
    assert!(lam.validate().is_empty());
    assert!(lam.is_equivalence_of_categories());
}

#[test]
fn fixf_identity_class() {
    let f = fixf();
    let c = colimit_direct(&f).unwrap();
    let zero = f.base.find_obj("0").unwrap();
    let x = f.fiber(zero).find_obj("x").unwrap();
    let o = c.object(zero, x);
    let id = c.cat.id(o);
    assert_eq!(c.reps[id.idx()], identity_premorphism(&f, zero, x));
    assert_eq!(c.cat.arr_name(id), "(0,id0,id0,1_x):(0,x)->(0,x)");
}

#[test]
fn fixf_crosscheck() {
    let w = crosscheck_iso(&fixf()).unwrap();
    assert!(w.holds(), "{w:?}");
}

#[test]
fn constant_terminal_is_terminal() {
    let base = Arc::new(fixtures::fixi());
    let f = CatValuedPSF::constant(base, Arc::new(FinCategory::terminal()));
    let c = colimit_direct(&f).unwrap();
    assert!(FinFunctor::to_terminal(Arc::new(c.cat.clone())).is_equivalence_of_categories());
    assert!(crosscheck_iso(&f).unwrap().holds());
}

#[test]
fn self_homotopy_and_pushes() {
    let f = fixf();
    let b = &f.base;
    let zero = b.find_obj("0").unwrap();
    let x = f.fiber(zero).find_obj("x").unwrap();
    let y = f.fiber(zero).find_obj("y").unwrap();
    let ps = premorphisms(&f, zero, x, zero, y);
    assert!(!ps.is_empty());
    let u = b.find_cell1("u").unwrap();
    for p in &ps {
        assert!(homotopic(&f, p, p).is_some());
        let id = elementary_homotopy(&f, p, b.id1(p.apex)).unwrap();
        assert!(homotopic(&f, p, &id).is_some());
        if p.apex == zero {
            let pushed = elementary_homotopy(&f, p, u).unwrap();
            assert_eq!(pushed.apex, b.find_obj("1").unwrap());
            assert_eq!(f.fiber(pushed.apex).arr_name(pushed.xi), "e");
            let h = homotopic(&f, p, &pushed).unwrap();
            assert!(is_homotopy(&f, p, &pushed, &h));
        }
    }
}

#[test]
fn composition_choices_agree() {
    let f = fixf();
    let c = colimit_direct(&f).unwrap();
    for p in &c.reps {
        for q in c.reps.iter().filter(|q| q.source(&f) == p.target(&f)) {
            let canon = c.class_of(&compose_premorphisms(&f, p, q).unwrap()).unwrap();
            let all = composite_choices(&f, p, q);
            assert!(!all.is_empty());
            for r in all {
                assert_eq!(c.class_of(&r), Some(canon));
            }
        }
    }
}

#[test]
fn insertions_and_cocone_cells() {
    let f = fixf();
    let c = colimit_direct(&f).unwrap();
    for a in f.base.objects() {
        assert!(c.insertion(&f, a).validate().is_empty());
    }
    let b = &f.base;
    for u in b.cells1() {
        let (s, t) = (b.src1(u), b.tgt1(u));
        let (ls, lt) = (c.insertion(&f, s), c.insertion(&f, t));
        let fs = f.fiber(s);
        for phi in fs.arrows() {
            let (x0, x1) = (fs.src(phi), fs.tgt(phi));
            let k0 = c.cocone_component(&f, u, x0);
            let k1 = c.cocone_component(&f, u, x1);
            assert!(c.cat.inverse(k0).is_some());
            let lhs = c.cat.compose(k1, ls.map_arr(phi));
            let rhs = c.cat.compose(lt.map_arr(f.act_arr(u, phi)), k0);
            assert_eq!(lhs, rhs);
        }
    }
}
