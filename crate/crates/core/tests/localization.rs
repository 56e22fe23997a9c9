use bifrac::family::{ArrFamily, ArrowFamily};
use bifrac::fixtures;
use bifrac::localization::*;
use bifrac::{CategoryBuilder, FinCategory};

#[test]
fn fixi_all_is_chaotic_groupoid() {
    let c = fixtures::fixi_category();
    let l = localize_right(&c, &ArrFamily::all(&c)).unwrap();
    let g = &l.category;
    assert!(g.validate().is_empty());
    assert!(g.is_contractible_groupoid());
    assert_eq!(g.num_objects(), 2);
    assert_eq!(g.num_arrows(), 4);
    assert!(!l.closure_added);
    let (z, o) = (g.find_obj("0").unwrap(), g.find_obj("1").unwrap());
    let back = g.hom(o, z);
    assert_eq!(back.len(), 1);
    let r = l.reps[back[0].idx()];
    assert_eq!(c.obj_name(r.apex), "0");
    assert_eq!(c.arr_name(r.w), "u");
    // L(u) invertible
    let u = c.find_arr("u").unwrap();
    assert!(g.inverse(l.loc.map_arr(u)).is_some());
    assert!(l.loc.validate().is_empty());
}

#[test]
fn identities_only_is_isomorphic() {
    for c in [fixtures::fixi_category(), FinCategory::chaotic(&["a", "b", "c"]), FinCategory::terminal()] {
        let l = localize_right(&c, &ArrFamily::identities(&c)).unwrap();
        assert!(l.loc.is_iso_of_categories());
        let l = localize_left(&c, &ArrFamily::identities(&c)).unwrap();
        assert!(l.loc.is_iso_of_categories());
    }
}

#[test]
fn left_mirror() {
    let c = fixtures::fixi_category();
    let l = localize_left(&c, &ArrFamily::all(&c)).unwrap();
    assert!(l.category.is_contractible_groupoid());
    let t = localize_left(&FinCategory::terminal(), &ArrFamily::all(&FinCategory::terminal())).unwrap();
    assert_eq!(t.category.num_arrows(), 1);
}

#[test]
fn r2_failure() {
    // a, b : X → Y with w a = w b for w : Y → Z in W, and nothing in W equalizes a, b
    let mut cb = CategoryBuilder::new();
    let (x, ix) = cb.object_with_id("X");
    let (y, iy) = cb.object_with_id("Y");
    let (z, iz) = cb.object_with_id("Z");
    let (v, iv) = cb.object_with_id("V");
    let a = cb.arrow("a", x, y);
    let b = cb.arrow("b", x, y);
    let w = cb.arrow("w", y, z);
    let wa = cb.arrow("wa", x, z);
    let _ = (ix, iy, iz, iv, v);
    cb.unit_laws();
    cb.set_compose(w, a, wa);
    cb.set_compose(w, b, wa);
    let c = cb.build().unwrap();
    assert!(c.validate().is_empty());
    let ids: Vec<_> = c.objects().map(|o| c.id(o)).collect();
    let fam = ArrFamily::new(&c, ids.into_iter().chain([c.find_arr("w").unwrap()]));
    let rep = check_r(&c, &fam);
    assert!(rep.pass("R0") && !rep.pass("R2"));
    assert_eq!(rep.verdict("R2").unwrap().counterexample, Some(vec!["w".into(), "a".into(), "b".into()]));
}

#[test]
fn pi0_regressions() {
    let p = fixtures::fixp();
    let pi = p.pi0().unwrap();
    let f = p.find_cell1("f").unwrap();
    let g = p.find_cell1("g").unwrap();
    assert_eq!(pi.quotient[f.idx()], pi.quotient[g.idx()]);
    let a = pi.category.find_obj("A").unwrap();
    let b = pi.category.find_obj("B").unwrap();
    assert_eq!(pi.category.hom(a, b).len(), 1);
    let w0 = induced_w0(&pi, &ArrowFamily::new(&p, "f", [f]));
    assert_eq!(w0.members(), &[pi.quotient[g.idx()]]);
}
