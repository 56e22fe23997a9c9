//! Connected components of a bicategory and localization of the result.
use bifrac::fixtures;
use bifrac::localization::{check_r, induced_w0, localize_right};
use bifrac::ArrowFamily;

fn main() {
    let b = fixtures::fixp();
    let pi = b.pi0().unwrap();
    let c = &pi.category;
    for a in c.arrows() {
        println!("{} = {:?}", c.arr_name(a), b.names1(&pi.members[a.idx()]));
    }
    let w0 = induced_w0(&pi, &ArrowFamily::all(&b));
    println!("R on pi0: {}", check_r(c, &w0).passes());
    let l = localize_right(c, &w0).unwrap();
    let lc = &l.category;
    for a in lc.arrows() {
        println!("  {} : {} -> {}", lc.arr_name(a), lc.obj_name(lc.src(a)), lc.obj_name(lc.tgt(a)));
    }
}
