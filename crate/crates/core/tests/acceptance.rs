//! One line per acceptance criterion. Exits nonzero if any fails.

use bifrac::axioms::{build_pseudococone, check_axiom_equivalence, check_flt, check_frc, check_pflt, upgrade_to_invertible};
use bifrac::colimit::{colimit_direct, compose_premorphisms, composite_choices, crosscheck_iso, terminal_fiber_comparison};
use bifrac::fibrations::{is_1fibration, lifted_family};
use bifrac::fixtures::{self, MutationData};
use bifrac::grothendieck::elements;
use bifrac::homfractions::{check_biterminal_preserved, check_gamma_independence, crosscheck_homcat, homcat_pronk, slice};
use bifrac::localization::{check_l, check_r, induced_w0, localize_right, localize_right_with, OreChoice};
use bifrac::random::{random_diagram, random_pair};
use bifrac::{ArrFamily, ArrowFamily, CatValuedPSF, FinBicategory, PseudoFunctor};
use std::sync::Arc;

type Check = std::result::Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bicats() -> Vec<(&'static str, Arc<FinBicategory>)> {
    vec![
        ("fix1", Arc::new(fixtures::fix1())),
        ("fixi", Arc::new(fixtures::fixi())),
        ("fixp", Arc::new(fixtures::fixp())),
        ("fixw", Arc::new(fixtures::fixw())),
    ]
}

/// Fixture pairs (B, W) over every declared family.
fn fixture_pairs() -> Vec<(String, Arc<FinBicategory>, ArrowFamily)> {
    let mut out = Vec::new();
    for (n, b) in bicats() {
        for w in fixtures::families(&b, n) {
            out.push((format!("{n}/{}", w.name), b.clone(), w));
        }
    }
    out
}

fn seeded_pairs(n: usize) -> Vec<(String, Arc<FinBicategory>, ArrowFamily)> {
    (0..n as u64)
        .map(|s| {
            let (rb, w) = random_pair(s);
            (format!("seed {s}"), rb.bicat, w)
        })
        .collect()
}

/// The first `n` seeded pairs whose family passes the fractions axioms.
fn seeded_frc_pairs(n: usize) -> Vec<(String, Arc<FinBicategory>, ArrowFamily)> {
    let mut out = Vec::new();
    let mut s = 0u64;
    while out.len() < n {
        let (rb, w) = random_pair(s);
        if check_frc(&rb.bicat, &w).passes() {
            out.push((format!("seed {s}"), rb.bicat, w));
        }
        s += 1;
    }
    out
}

fn c1_coherence() -> Check {
    for (n, b) in bicats() {
        ensure(b.validate().is_empty(), || format!("{n} rejected"))?;
    }
    ensure(fixtures::fixf().validate().is_empty(), || "fixf rejected".into())?;
    ensure(fixtures::parallel_into_fixp().validate().is_empty(), || "parallel_into_fixp rejected".into())?;
    let ms = fixtures::mutations();
    for m in &ms {
        let v = match &m.data {
            MutationData::Bicategory(b) => b.validate(),
            MutationData::Pseudofunctor(p) => p.validate(),
            MutationData::Catvalued(c) => c.validate(),
        };
        ensure(v.laws() == vec![m.law], || format!("{}: got {:?}, expected {:?}", m.name, v.laws(), m.law))?;
    }
    Ok(format!("6 fixtures accepted, {} mutations rejected with their law", ms.len()))
}

fn c2_colimit_crosscheck() -> Check {
    let w = crosscheck_iso(&fixtures::fixf()).map_err(|e| e.to_string())?;
    ensure(w.holds(), || "fixf".into())?;
    for s in 0..20 {
        let d = random_diagram(s, false);
        ensure(d.base.bicat.num_objects() <= 4, || format!("seed {s} too large"))?;
        ensure(d.diagram.fibers.iter().all(|f| f.num_objects() <= 3), || format!("seed {s} fiber too large"))?;
        let w = crosscheck_iso(&d.diagram).map_err(|e| format!("seed {s}: {e}"))?;
        ensure(w.holds(), || format!("seed {s}: {w:?}"))?;
    }
    Ok("fixf and 20 seeded diagrams: H, K strictly inverse".into())
}

fn terminal_equivalence(f: &CatValuedPSF) -> std::result::Result<(), String> {
    let t = *f.base.biterminal_objects().first().ok_or("no biterminal object")?;
    let c = colimit_direct(f).map_err(|e| e.to_string())?;
    let lam = terminal_fiber_comparison(f, &c, t).map_err(|e| e.to_string())?;
    ensure(lam.validate().is_empty() && lam.is_equivalence_of_categories(), || "not an equivalence".into())
}

fn c3_terminal_fiber() -> Check {
    terminal_equivalence(&fixtures::fixf()).map_err(|e| format!("fixf: {e}"))?;
    for s in 0..10 {
        let d = random_diagram(s, true);
        terminal_equivalence(&d.diagram).map_err(|e| format!("seed {s}: {e}"))?;
    }
    Ok("fixf and 10 variants: F(T) -> colim is an equivalence".into())
}

fn homcat_all_pairs(name: &str, b: &Arc<FinBicategory>, w: &ArrowFamily) -> std::result::Result<usize, String> {
    let mut n = 0;
    for a in b.objects() {
        for t in b.objects() {
            let x = crosscheck_homcat(b.clone(), w, a, t).map_err(|e| format!("{name}: {e}"))?;
            ensure(x.holds(), || format!("{name} ({}, {})", b.obj_name(a), b.obj_name(t)))?;
            n += 1;
        }
    }
    Ok(n)
}

fn c4_homcat() -> Check {
    let mut n = 0;
    for (name, b, w) in fixture_pairs() {
        if check_frc(&b, &w).passes() {
            n += homcat_all_pairs(&name, &b, &w)?;
        }
    }
    let mut m = 0;
    for (name, b, w) in seeded_frc_pairs(10) {
        m += homcat_all_pairs(&name, &b, &w)?;
    }
    Ok(format!("{n} fixture hom pairs, {m} pairs over 10 seeded (B, W)"))
}

fn pi0_implication(name: &str, b: &FinBicategory, w: &ArrowFamily) -> std::result::Result<bool, String> {
    if !check_frc(b, w).passes() {
        return Ok(false);
    }
    let pi = b.pi0().map_err(|e| e.to_string())?;
    let w0 = induced_w0(&pi, w);
    let r = check_r(&pi.category, &w0);
    ensure(r.passes(), || format!("{name}: {:?}", r.failed()))?;
    Ok(true)
}

fn c5_pi0() -> Check {
    let mut hits = 0;
    for (name, b, w) in fixture_pairs().into_iter().chain(seeded_pairs(20)) {
        hits += pi0_implication(&name, &b, &w)? as usize;
    }
    Ok(format!("{hits} inputs with Frc, all satisfy R on pi0"))
}

fn left_fractions(b: &FinBicategory, w: &ArrowFamily) -> bool {
    let op = b.op_dual();
    let w = ArrowFamily::new(&op, w.name.clone(), w.members().iter().copied());
    check_frc(&op, &w).passes()
}

fn c6_lifting() -> Check {
    let mut diagrams = vec![("fixf".to_string(), fixtures::fixf())];
    diagrams.extend((0..10).map(|s| (format!("seed {s}"), random_diagram(s, false).diagram)));
    for (name, f) in &diagrams {
        ensure(check_pflt(&f.base).passes(), || format!("{name}: base not pseudofiltered"))?;
        let el = elements(f).map_err(|e| e.to_string())?;
        ensure(left_fractions(&el.total, &el.cocart1), || format!("{name}: co-Cartesian family fails left fractions"))?;
    }
    let (mut slices, mut skipped) = (0, 0);
    for (name, b, w) in fixture_pairs().into_iter().chain(seeded_frc_pairs(5)) {
        if !check_frc(&b, &w).passes() {
            continue;
        }
        for a in b.objects() {
            let s = slice(b.clone(), &w, a).map_err(|e| format!("{name}: {e}"))?;
            if !is_1fibration(&s.forget) {
                skipped += 1;
                continue;
            }
            let lw = lifted_family(&s.forget, &w);
            let r = check_frc(&s.bicat, &lw);
            ensure(r.passes(), || format!("{name} over {}: {:?}", b.obj_name(a), r.failed()))?;
            slices += 1;
        }
    }
    ensure(slices > 0, || "no W/A projection is a 1-fibration".into())?;
    Ok(format!("{} el(dF) families left, {slices} W/A lifted families right, {skipped} W/A not 1-fibrations", diagrams.len()))
}

fn c7_axiom_sets() -> Check {
    let mut n = 0;
    for (name, b, w) in fixture_pairs().into_iter().chain(seeded_pairs(50)) {
        let e = check_axiom_equivalence(&b, &w);
        ensure(e.agree(), || format!("{name}: Frc {} vs BF {}", e.frc, e.bf))?;
        n += 1;
    }
    Ok(format!("{n} pairs agree"))
}

fn c8_cocones() -> Check {
    let mut diagrams = vec![("parallel_into_fixp".to_string(), fixtures::parallel_into_fixp())];
    for (n, b) in bicats() {
        if check_flt(&b).passes() {
            diagrams.push((format!("id_{n}"), PseudoFunctor::identity(b)));
        }
    }
    let mut upgrades = 0;
    for (name, d) in &diagrams {
        let c = build_pseudococone(d).map_err(|e| format!("{name}: {e}"))?;
        ensure(c.validate().is_empty(), || format!("{name}: {:?}", c.validate().laws()))?;
        let b = &*d.cod;
        for x in b.objects() {
            for y in b.objects() {
                for &f in b.hom(x, y) {
                    for &g in b.hom(x, y) {
                        let (_, gamma, _) = upgrade_to_invertible(b, f, g)
                            .ok_or_else(|| format!("{name}: no upgrade for ({}, {})", b.cell1_name(f), b.cell1_name(g)))?;
                        ensure(b.is_invertible2(gamma).is_some(), || format!("{name}: upgrade not invertible"))?;
                        upgrades += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{} cocones valid, {upgrades} upgrades invertible", diagrams.len()))
}

fn colimit_choices(name: &str, f: &CatValuedPSF) -> std::result::Result<usize, String> {
    let c = colimit_direct(f).map_err(|e| e.to_string())?;
    let mut n = 0;
    for p in &c.reps {
        for q in c.reps.iter().filter(|q| q.source(f) == p.target(f)) {
            let canon = compose_premorphisms(f, p, q).map_err(|e| e.to_string())?;
            let want = c.class_of(&canon);
            for r in composite_choices(f, p, q) {
                ensure(c.class_of(&r) == want, || format!("{name}: {} vs {}", r.label(f), canon.label(f)))?;
                n += 1;
            }
        }
    }
    Ok(n)
}

fn c9_choices() -> Check {
    let mut n = colimit_choices("fixf", &fixtures::fixf())?;
    for s in 0..10 {
        n += colimit_choices(&format!("seed {s}"), &random_diagram(s, false).diagram)?;
    }
    let mut squares = 0;
    for (name, b, w) in fixture_pairs().into_iter().chain(seeded_frc_pairs(5)) {
        if !check_frc(&b, &w).passes() {
            continue;
        }
        for a in b.objects() {
            for t in b.objects() {
                let h = homcat_pronk(&b, &w, a, t).map_err(|e| format!("{name}: {e}"))?;
                let g = check_gamma_independence(&b, &w, &h);
                ensure(g.pass, || format!("{name}: {:?}", g.counterexample))?;
                squares += 1;
            }
        }
    }
    let c = fixtures::fixi_category();
    let mut cats = vec![("fixi".to_string(), c.clone(), ArrFamily::all(&c))];
    for (name, b, w) in fixture_pairs() {
        if check_frc(&b, &w).passes() {
            let pi = b.pi0().map_err(|e| e.to_string())?;
            let w0 = induced_w0(&pi, &w);
            cats.push((format!("pi0 {name}"), pi.category, w0));
        }
    }
    for (name, c, w) in &cats {
        let first = localize_right_with(c, w, OreChoice::First).map_err(|e| format!("{name}: {e}"))?;
        let last = localize_right_with(c, w, OreChoice::Last).map_err(|e| format!("{name}: {e}"))?;
        ensure(first.category == last.category, || format!("{name}: Ore choice changes the localization"))?;
    }
    Ok(format!("{n} colimit composites, {squares} hom-categories over all squares, {} localizations under reversed Ore order", cats.len()))
}

fn c10_biterminal() -> Check {
    let mut n = 0;
    for (name, b, w) in fixture_pairs() {
        if b.biterminal_objects().is_empty() || !check_frc(&b, &w).passes() {
            continue;
        }
        let v = check_biterminal_preserved(&b, &w).map_err(|e| format!("{name}: {e}"))?;
        ensure(v.pass, || format!("{name}: {:?}", v.counterexample))?;
        n += 1;
    }
    ensure(n > 0, || "no fixture with a biterminal object".into())?;
    Ok(format!("{n} fixture pairs"))
}

fn c11_regressions() -> Check {
    let c = fixtures::fixi_category();
    let l = localize_right(&c, &ArrFamily::all(&c)).map_err(|e| e.to_string())?;
    let lc = &l.category;
    ensure(lc.num_objects() == 2, || "localization object count".into())?;
    for x in lc.objects() {
        for y in lc.objects() {
            ensure(lc.hom(x, y).len() == 1, || "localization is not chaotic".into())?;
        }
    }
    ensure(lc.arrows().all(|a| lc.inverse(a).is_some()), || "localization is not a groupoid".into())?;
    ensure(check_l(&c, &ArrFamily::all(&c)).passes(), || "left conditions".into())?;

    let p = fixtures::fixp();
    let pi = p.pi0().map_err(|e| e.to_string())?;
    let (f, g) = (p.find_cell1("f").unwrap(), p.find_cell1("g").unwrap());
    ensure(pi.quotient[f.idx()] == pi.quotient[g.idx()], || "[f] != [g]".into())?;
    let nonid = pi.category.arrows().filter(|&a| pi.category.src(a) != pi.category.tgt(a)).count();
    ensure(nonid == 1, || format!("{nonid} non-identity classes"))?;

    let el = elements(&fixtures::fixf()).map_err(|e| e.to_string())?;
    let t = &el.total;
    let got = [t.num_objects(), t.num_cells1(), t.num_cells2(), el.cocart1.len()];
    ensure(got == fixtures::FIXF_ELEMENTS, || format!("elements(fixf) = {got:?}"))?;
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/fixf_elements.json");
    let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let committed = ["objects", "cells1", "cells2", "cocartesian1"].map(|k| v[k].as_u64().unwrap_or(u64::MAX) as usize);
    ensure(committed == got, || format!("committed counts {committed:?}"))?;
    Ok("chaotic localization, single class [f]=[g], elements (4, 9, 9, 6)".into())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 11] = [
        ("coherence gate", c1_coherence),
        ("colimit cross-check", c2_colimit_crosscheck),
        ("terminal fiber", c3_terminal_fiber),
        ("homcat cross-check", c4_homcat),
        ("pi0 of fractions", c5_pi0),
        ("lifting fractions", c6_lifting),
        ("axiom-set equivalence", c7_axiom_sets),
        ("pseudo-cocones", c8_cocones),
        ("choice independence", c9_choices),
        ("biterminal preservation", c10_biterminal),
        ("regressions", c11_regressions),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(msg) => println!("criterion {:>2} {name}: pass ({msg})", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({msg})", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
