//! The pseudo-colimit of the fixture diagram, computed both ways and compared.
use bifrac::colimit::{colimit_direct, colimit_via_localization, crosscheck_iso_with, terminal_fiber_comparison};
use bifrac::fixtures;

fn main() {
    let f = fixtures::fixf();
    let d = colimit_direct(&f).unwrap();
    let c = &d.cat;
    for a in c.arrows() {
        println!("{}", c.arr_name(a));
    }
    let v = colimit_via_localization(&f).unwrap();
    println!("via localization: {} objects, {} arrows", v.localized.category.num_objects(), v.localized.category.num_arrows());
    let w = crosscheck_iso_with(&f, &d, &v).unwrap();
    println!("H and K strictly inverse: {}", w.holds());
    let t = f.base.find_obj("1").unwrap();
    let lam = terminal_fiber_comparison(&f, &d, t).unwrap();
    println!("F(1) -> colimit is an equivalence: {}", lam.is_equivalence_of_categories());
}
