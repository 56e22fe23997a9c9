//! Filteredness and fractions axioms on the fixtures, with one witness each.
use bifrac::axioms::{check_axiom_equivalence, check_flt, check_frc, check_pflt};
use bifrac::fixtures;

fn main() {
    for (name, b) in [("fix1", fixtures::fix1()), ("fixi", fixtures::fixi()), ("fixp", fixtures::fixp()), ("fixw", fixtures::fixw())] {
        println!("{name}: filtered = {}, pseudofiltered = {}", check_flt(&b).passes(), check_pflt(&b).passes());
        for w in fixtures::families(&b, name) {
            let r = check_frc(&b, &w);
            let eq = check_axiom_equivalence(&b, &w);
            println!("  W = {:<12} Frc {:<5} BF {:<5} failed {:?}", w.name, eq.frc, eq.bf, r.failed());
            if let Some(x) = r.verdicts.iter().find_map(|v| v.witnesses.first().map(|x| (v.axiom.clone(), x.clone()))) {
                println!("    {}: {:?} -> {:?}", x.0, x.1.input, x.1.output);
            }
        }
    }
}
