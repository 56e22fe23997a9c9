use bifrac::fixtures::{self, MutationData};
use bifrac::io::*;
use std::path::Path;

fn loader() -> Loader {
    Loader::with_fixtures(Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures"))
}

#[test]
fn committed_files_match_builders() {
    let l = loader();
    for (rel, text) in fixtures::files() {
        let on_disk = std::fs::read_to_string(l.fixtures.join(&rel)).unwrap_or_default();
        assert!(on_disk == text, "{rel} is stale; run `cargo run --example regenerate_fixtures`");
    }
}

#[test]
fn loaded_fixtures_equal_builders() {
    let l = loader();
    let bicats = [("fix1", fixtures::fix1()), ("fixi", fixtures::fixi()), ("fixp", fixtures::fixp()), ("fixw", fixtures::fixw())];
    for (name, b) in bicats {
        let (Loaded::Bicategory { bicat, families }, _) = l.load(name).unwrap() else { panic!("{name}") };
        assert!(*bicat == b, "{name}");
        assert!(bicat.validate().is_empty());
        assert_eq!(families.len(), if name == "fixi" { 1 } else { 0 });
    }
    let (Loaded::Catvalued(f), _) = l.load("fixf").unwrap() else { panic!() };
    let g = fixtures::fixf();
    assert!(f.validate().is_empty());
    assert!(*f.base == *g.base);
    assert_eq!(f.on1, g.on1);
    assert_eq!((&f.on2, &f.f2, &f.f0), (&g.on2, &g.f2, &g.f0));
    let (Loaded::Psf(p), _) = l.load("parallel_into_fixp").unwrap() else { panic!() };
    assert!(p.validate().is_empty());
}

#[test]
fn mutations_fail_with_their_law() {
    let l = loader();
    let ms = fixtures::mutations();
    assert_eq!(ms.len(), 10);
    for m in ms {
        let (loaded, _) = l.load(&format!("mutations/{}", m.name)).unwrap();
        let laws = match loaded {
            Loaded::Bicategory { bicat, .. } => bicat.validate().laws(),
            Loaded::Psf(p) => p.validate().laws(),
            Loaded::Catvalued(c) => c.validate().laws(),
            Loaded::Category(c) => c.validate().laws(),
        };
        assert_eq!(laws, vec![m.law], "{}", m.name);
        let built = match &m.data {
            MutationData::Bicategory(b) => b.validate().laws(),
            MutationData::Pseudofunctor(p) => p.validate().laws(),
            MutationData::Catvalued(c) => c.validate().laws(),
        };
        assert_eq!(built, vec![m.law]);
    }
}

#[test]
fn resolution_order() {
    let l = loader();
    let dir = l.fixtures.clone();
    // extensionless, explicit extension, bare fixture name
    assert_eq!(l.resolve(dir.join("fixp").to_str().unwrap(), None).unwrap(), dir.join("fixp.json"));
    assert_eq!(l.resolve(dir.join("fixp.json").to_str().unwrap(), None).unwrap(), dir.join("fixp.json"));
    assert_eq!(l.resolve("fixtures/fixp", None).unwrap(), dir.join("fixp.json"));
    assert!(l.resolve("no_such_fixture", None).is_err());
    let elsewhere = Loader::with_fixtures("/nonexistent");
    assert!(elsewhere.resolve("fixp", None).is_err());
}

#[test]
fn digests_are_stable() {
    let l = loader();
    let (_, a) = l.load("fixi").unwrap();
    let (_, b) = l.load("fixi").unwrap();
    assert_eq!(a, b);
    assert_eq!(a.path, "fixi");
    assert_eq!(a.sha256.len(), 64);
}

#[test]
fn round_trip_without_coherence_tables() {
    let b = fixtures::fixp();
    let f = bicategory_to_file(&b, &[]);
    assert!(f.unitors.is_none() && f.associators.is_none());
    let text = to_json(&f);
    let back: BicategoryFile = serde_json::from_str(&text).unwrap();
    assert_eq!(back, f);
    // a weak one keeps its tables
    let h = fixtures::hom_monoid3();
    let fh = bicategory_to_file(&h, &[]);
    assert!(bicategory_from_file(&fh).unwrap() == h);
}

#[test]
fn structural_errors() {
    let l = loader();
    let bad = serde_json::json!({"format": "bicategory", "objects": ["A"], "cells1": [], "cells2": [],
        "identities1": {"A": "idA"}, "identities2": {}});
    assert!(matches!(l.from_value(bad, None), Err(bifrac::Error::Structural(_))));
    let tag = serde_json::json!({"format": "nope"});
    assert!(l.from_value(tag, None).is_err());
}

#[test]
fn report_round_trip() {
    let mut r = Report::new("validate fixi");
    r.verdict("coherence", true);
    r.witness("objects", ["0", "1"]);
    let s = to_json(&r);
    let back: Report = serde_json::from_str(&s).unwrap();
    assert_eq!(back, r);
    assert_eq!(to_json(&back), s);
}
