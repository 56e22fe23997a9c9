use bifrac::axioms::*;
use bifrac::family::ArrowFamily;
use bifrac::fixtures;
use bifrac::{FinBicategory, PseudoFunctor};
use std::sync::Arc;

#[test]
fn filtered_examples() {
    assert!(check_flt(&fixtures::fix1()).passes());
    assert!(check_flt(&fixtures::fixi()).passes());
    assert!(check_flt(&fixtures::fixp()).passes());
    assert!(check_flt(&fixtures::kproj()).passes());
    let d = fixtures::discrete2();
    let rep = check_flt(&d);
    assert_eq!(rep.failed(), vec!["0-Flt"]);
    assert_eq!(rep.verdict("0-Flt").unwrap().counterexample, Some(vec!["A".to_string(), "B".to_string()]));
}

#[test]
fn pseudofiltered_examples() {
    assert!(check_pflt(&fixtures::fixi()).passes());
    let u = fixtures::fix1_plus_fix1();
    assert!(check_pflt(&u).passes());
    assert_eq!(check_flt(&u).failed(), vec!["0-Flt"]);
    let p = fixtures::parallel2();
    assert!(!check_pflt(&p).pass("1-pFlt"));
}

#[test]
fn upgrade_examples() {
    let b = fixtures::fix1();
    let id = b.find_cell1("id").unwrap();
    let (u, g, _) = upgrade_to_invertible(&b, id, id).unwrap();
    assert_eq!(u, id);
    assert_eq!(g, b.id2(id));

    let p = fixtures::fixp();
    let (f, g) = (p.find_cell1("f").unwrap(), p.find_cell1("g").unwrap());
    let (u, gamma, delta) = upgrade_to_invertible(&p, f, g).unwrap();
    assert_eq!(p.src2(gamma), p.hcomp1(u, f));
    assert_eq!(p.inverse(gamma), Some(delta));

    let k = fixtures::kproj();
    for &x in &k.cells1().collect::<Vec<_>>() {
        for &y in &k.cells1().collect::<Vec<_>>() {
            let (_, gamma, _) = upgrade_to_invertible(&k, x, y).unwrap();
            assert!(k.inverse(gamma).is_some());
        }
    }

    let q = fixtures::parallel2();
    let (f, g) = (q.find_cell1("f").unwrap(), q.find_cell1("g").unwrap());
    assert!(upgrade_to_invertible(&q, f, g).is_none());
}

#[test]
fn fractions_examples() {
    let i = fixtures::fixi();
    assert!(check_frc(&i, &ArrowFamily::all(&i)).passes());
    let p = fixtures::fixp();
    assert!(check_frc(&p, &ArrowFamily::equivalences(&p)).passes());
    let only = ArrowFamily::new(&i, "id1_only", [i.find_cell1("id1").unwrap()]);
    let rep = check_frc(&i, &only);
    assert!(!rep.pass("BF1"));
    assert_eq!(rep.verdict("BF1").unwrap().counterexample, Some(vec!["id0".to_string()]));
}

#[test]
fn bf4_tail_examples() {
    for b in [fixtures::fix1(), fixtures::fixi(), fixtures::fixp(), fixtures::fixw(), fixtures::kproj()] {
        for w in [ArrowFamily::all(&b), ArrowFamily::equivalences(&b)] {
            let eq = check_axiom_equivalence(&b, &w);
            assert!(eq.agree(), "{:?}", eq);
        }
    }
    let i = fixtures::fixi();
    assert!(check_bf4_tail(&i, &ArrowFamily::all(&i)).passes());
}

fn identity_on(b: FinBicategory) -> PseudoFunctor {
    PseudoFunctor::identity(Arc::new(b))
}

#[test]
fn cocones() {
    let c = build_pseudococone(&identity_on(fixtures::fixi())).unwrap();
    assert_eq!(c.diagram.cod.obj_name(c.apex), "1");
    let c = build_pseudococone(&fixtures::parallel_into_fixp()).unwrap();
    assert!(c.validate().is_empty());
    for b in [fixtures::fix1(), fixtures::fixp(), fixtures::fixw(), fixtures::kproj(), fixtures::chaotic2()] {
        let c = build_pseudococone(&identity_on(b)).unwrap();
        assert!(c.validate().is_empty());
    }
}
