//! The slice W/A and a lifted square.
use bifrac::fixtures;
use bifrac::homfractions::{check_slice_cofiltered, lift_square, slice};
use bifrac::ArrowFamily;
use std::sync::Arc;

fn main() {
    let b = Arc::new(fixtures::fixi());
    let one = b.find_obj("1").unwrap();
    let s = slice(b.clone(), &ArrowFamily::all(&b), one).unwrap();
    let t = &s.bicat;
    println!("objects {:?}", t.objects().map(|o| t.obj_name(o)).collect::<Vec<_>>());
    println!("1-cells {:?}", t.cells1().map(|f| t.cell1_name(f)).collect::<Vec<_>>());
    println!("cofiltered: {}", check_slice_cofiltered(&s).passes());
    let o1 = s.terminal().unwrap();
    let i = t.id1(o1);
    let (u, id0) = (b.find_cell1("u").unwrap(), b.find_cell1("id0").unwrap());
    let k = t.hom(s.object(u).unwrap(), o1)[0];
    let l = lift_square(&s, i, k, u, id0, b.id2(u)).unwrap();
    println!("lift at {}: {} and {}", t.obj_name(l.object), t.cell1_name(l.left), t.cell1_name(l.right));
}
