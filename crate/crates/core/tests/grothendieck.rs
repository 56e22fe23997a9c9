use bifrac::fibrations::{cartesian_lift, check_1fibration, cocartesian, is_cartesian1, is_cofibration, is_fibration, projection};
use bifrac::fixtures;
use bifrac::grothendieck::elements;
use bifrac::{CatValuedPSF, FinBicategory, FinCategory};
use std::sync::Arc;

#[test]
fn fixf_counts() {
    let el = elements(&fixtures::fixf()).unwrap();
    let t = &el.total;
    assert_eq!((t.num_objects(), t.num_cells1(), t.num_cells2(), el.cocart1.len()), (4, 9, 9, 6));
    assert!(t.validate().is_empty(), "{}", t.validate());
    assert!(el.proj.validate().is_empty());
    let x = t.find_obj("(0,x)").unwrap();
    let q = t.find_obj("(1,q)").unwrap();
    assert_eq!(t.names1(t.hom(x, q)), vec!["(u,x,e)"]);
}

#[test]
fn fixf_cofibration() {
    let el = elements(&fixtures::fixf()).unwrap();
    assert!(is_cofibration(&el.proj));
    assert_eq!(cocartesian(&el.proj), { let mut c = el.cocart1.clone(); c.name = "cocartesian".into(); c });
    // (u, x, 1_p) is co-Cartesian, (id0, x, a) is not
    let op = el.proj.op();
    let t = &op.dom;
    assert!(is_cartesian1(&op, t.find_cell1("(u,x,1_p)").unwrap()));
    assert!(!is_cartesian1(&op, t.find_cell1("(id0,x,a)").unwrap()));
}

#[test]
fn constant_terminal_elements_is_base() {
    let base = Arc::new(fixtures::fixi());
    let el = elements(&CatValuedPSF::constant(base.clone(), Arc::new(FinCategory::terminal()))).unwrap();
    assert_eq!(el.total.num_objects(), base.num_objects());
    assert_eq!(el.total.num_cells1(), base.num_cells1());
    assert_eq!(el.total.num_cells2(), base.num_cells2());
}

#[test]
fn projection_is_fibration() {
    let b: Arc<FinBicategory> = Arc::new(fixtures::fixi());
    for x in [fixtures::fixp(), fixtures::chaotic2(), fixtures::z2()] {
        let p = projection(b.clone(), &x);
        assert!(p.validate().is_empty());
        assert!(is_fibration(&p));
        assert!(is_cofibration(&p));
    }
}

#[test]
fn non_fibration_reports_uncovered() {
    let p = fixtures::non_fibration();
    let rep = check_1fibration(&p);
    assert!(!rep.pass);
    assert_eq!(rep.uncovered, Some(("Z".to_string(), "u".to_string())));
    assert!(!rep.lax_lift_exists);
    let z = p.dom.find_obj("Z").unwrap();
    assert!(cartesian_lift(&p, z, p.cod.find_cell1("u").unwrap()).is_none());
}
