use nestlab::facial::OrientedBuildingSet;
use nestlab::om::om_from_digraph;
use nestlab::verify::samples::four_cycle_alternating;

fn main() {
    let d = four_cycle_alternating();
    let om = om_from_digraph(&d);
    println!("circuits:");
    for c in &om.circuits {
        println!("  {}", c.label(&om.ground));
    }
    println!("faces:");
    for f in om.faces().unwrap() {
        println!("  {}", om.face_label(f));
    }
    let ob = OrientedBuildingSet::graphical(&d).unwrap();
    println!("tubes: {:?}", ob.building.blocks.iter().map(|b| b.label(&om.ground)).collect::<Vec<_>>());
    let c = ob.acyclic_nested_complex().complex;
    println!("acyclic complex vertices: {:?}", c.vertices);
    println!("f-vector {:?}", c.f_vector());
}
