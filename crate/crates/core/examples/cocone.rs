//! A pseudo-cocone on a parallel pair in a filtered bicategory.
use bifrac::axioms::{build_pseudococone, upgrade_to_invertible};
use bifrac::fixtures;

fn main() {
    let d = fixtures::parallel_into_fixp();
    let c = build_pseudococone(&d).unwrap();
    let b = &*d.cod;
    println!("apex {}", b.obj_name(c.apex));
    println!("legs {:?}", b.names1(&c.theta));
    println!("cells {:?}", b.names2(&c.theta_f));
    println!("valid: {}", c.validate().is_empty());
    let (f, g) = (b.find_cell1("f").unwrap(), b.find_cell1("g").unwrap());
    if let Some((h, gamma, _)) = upgrade_to_invertible(b, f, g) {
        println!("{} equalizes f, g up to the invertible {}", b.cell1_name(h), b.cell2_name(gamma));
    }
}
