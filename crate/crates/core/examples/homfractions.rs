//! A hom-category of the bicategory of fractions, by quintuples and as a colimit.
use bifrac::fixtures;
use bifrac::homfractions::{check_gamma_independence, crosscheck_homcat_with, homcat_pronk, homcat_via_colimit};
use bifrac::ArrowFamily;
use std::sync::Arc;

fn main() {
    let b = Arc::new(fixtures::fixp());
    let w = ArrowFamily::all(&b);
    let bb = b.find_obj("B").unwrap();
    let h = homcat_pronk(&b, &w, bb, bb).unwrap();
    let c = &h.cat;
    println!("{} objects, {} arrows", c.num_objects(), c.num_arrows());
    for o in c.objects() {
        println!("  {}", c.obj_name(o));
    }
    let v = homcat_via_colimit(b.clone(), &w, bb, bb).unwrap();
    println!("cross-check: {}", crosscheck_homcat_with(&w, &h, &v).unwrap().holds());
    let g = check_gamma_independence(&b, &w, &h);
    println!("composition independent of the square: {} ({:?})", g.pass, g.witnesses.first().map(|x| &x.output));
}
