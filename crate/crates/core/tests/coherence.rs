use bifrac::fixtures::{self, MutationData};
use bifrac::{Law, PseudoFunctor};
use std::sync::Arc;
use std::collections::BTreeSet;

#[test]
fn shipped_bicategories_validate() {
    for (name, b) in [
        ("fix1", fixtures::fix1()),
        ("fixi", fixtures::fixi()),
        ("fixp", fixtures::fixp()),
        ("fixw", fixtures::fixw()),
        ("chaotic2", fixtures::chaotic2()),
        ("discrete2", fixtures::discrete2()),
        ("fix1+fix1", fixtures::fix1_plus_fix1()),
        ("z2", fixtures::z2()),
        ("idem", fixtures::idem()),
        ("kproj", fixtures::kproj()),
        ("hom_monoid3", fixtures::hom_monoid3()),
    ] {
        let rep = b.validate();
        assert!(rep.is_empty(), "{name}:\n{rep}");
    }
}

#[test]
fn shipped_diagrams_validate() {
    let rep = fixtures::fixf().validate();
    assert!(rep.is_empty(), "{rep}");
    let rep = fixtures::non_fibration().validate();
    assert!(rep.is_empty(), "{rep}");
}

#[test]
fn each_mutation_breaks_exactly_its_law() {
    let ms = fixtures::mutations();
    assert_eq!(ms.len(), 10);
    for m in ms {
        let rep = match &m.data {
            MutationData::Bicategory(b) => b.validate(),
            MutationData::Pseudofunctor(p) => p.validate(),
            MutationData::Catvalued(c) => c.validate(),
        };
        let laws: BTreeSet<Law> = rep.laws().into_iter().collect();
        assert_eq!(laws, BTreeSet::from([m.law]), "{}:\n{rep}", m.name);
    }
}

#[test]
fn strict_inclusions_validate() {
    let one = Arc::new(fixtures::fix1());
    let p = Arc::new(fixtures::fixp());
    let a = p.find_obj("A").unwrap();
    let ida = p.id1(a);
    let inc = PseudoFunctor::strict(one.clone(), p.clone(), vec![a], vec![ida], vec![p.id2(ida)]).unwrap();
    assert!(inc.validate().is_empty());
    assert!(PseudoFunctor::identity(p).validate().is_empty());
}
