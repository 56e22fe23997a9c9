//! Validate the fixtures, then show which law each mutation breaks.
use bifrac::fixtures::{self, MutationData};

fn main() {
    for (name, b) in [("fix1", fixtures::fix1()), ("fixi", fixtures::fixi()), ("fixp", fixtures::fixp()), ("fixw", fixtures::fixw())] {
        println!("{name}: {} objects, {} 1-cells, {} 2-cells, valid = {}", b.num_objects(), b.num_cells1(), b.num_cells2(), b.validate().is_empty());
    }
    for m in fixtures::mutations() {
        let v = match &m.data {
            MutationData::Bicategory(b) => b.validate(),
            MutationData::Pseudofunctor(p) => p.validate(),
            MutationData::Catvalued(c) => c.validate(),
        };
        println!("{:<28} breaks {:?}", m.name, v.laws());
    }
}
