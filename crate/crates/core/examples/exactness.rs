//! Hom-categories into a biterminal object stay contractible after localizing.
use bifrac::fixtures;
use bifrac::homfractions::check_biterminal_preserved;
use bifrac::ArrowFamily;

fn main() {
    let b = fixtures::fixw();
    for w in [ArrowFamily::equivalences(&b), ArrowFamily::all(&b)] {
        match check_biterminal_preserved(&b, &w) {
            Ok(v) => println!("W = {}: {} {:?}", w.name, v.pass, v.witnesses.iter().map(|x| (&x.input, &x.output)).collect::<Vec<_>>()),
            Err(e) => println!("W = {}: {e}", w.name),
        }
    }
}
