//! The bicategory of elements of the fixture diagram and its co-Cartesian arrows.
use bifrac::fibrations::is_cofibration;
use bifrac::fixtures;
use bifrac::grothendieck::elements;

fn main() {
    let el = elements(&fixtures::fixf()).unwrap();
    let t = &el.total;
    println!("objects: {:?}", t.objects().map(|o| t.obj_name(o)).collect::<Vec<_>>());
    for f in t.cells1() {
        let mark = if el.cocart1.contains(f) { "co-Cartesian" } else { "" };
        println!("  {:<14} {} -> {} {mark}", t.cell1_name(f), t.obj_name(t.src1(f)), t.obj_name(t.tgt1(f)));
    }
    println!("2-cells: {}", t.num_cells2());
    println!("projection is a co-fibration: {}", is_cofibration(&el.proj));
}
