// Subgraph morphology on the path a-b-c-d under both forget modes.

use morpholattice::structures::{dilate_closed_form, erode_closed_form};
use morpholattice::{dilate, erode, fixtures, ForgetMode, StructuringElement};

fn main() {
    let l = fixtures::p4(ForgetMode::Vertices);
    println!("P4 has {} subgraphs", l.enumerate_subobjects().unwrap().len());
    let b = StructuringElement::builtin(&l, "closed-neighborhood").unwrap();
    let vb = fixtures::subgraph(&l, &["b"], &[]);
    let grown = dilate(&l, &b, &vb).unwrap();
    println!("dilate({}) = {}", l.show(&vb), l.show(&grown));
    let shrunk = erode(&l, &b, &grown).unwrap();
    println!("erode({}) = {}", l.show(&grown), l.show(&shrunk));
    println!(
        "closed forms agree here: {}",
        erode_closed_form(&l, &b, &grown).unwrap() == shrunk
            && dilate_closed_form(&l, &b, &vb).unwrap() == grown
    );

    // Edges as carrier: a substructure may keep vertices that no probe reaches.
    let le = fixtures::p4(ForgetMode::Edges);
    let be = StructuringElement::builtin(&le, "edge-neighborhood").unwrap();
    let d = fixtures::subgraph(&le, &["a", "b", "c", "d"], &[("a", "b"), ("b", "c")]);
    println!("edge carrier: erode({}) = {}", le.show(&d), le.show(&erode(&le, &be, &d).unwrap()));
    println!(
        "               closed form   = {}",
        le.show(&erode_closed_form(&le, &be, &d).unwrap())
    );
    println!("edge-neighborhood covers the lattice: {}", be.is_covered());

    // Heyting structure of the subgraph lattice.
    let nb = l.complement(&vb).unwrap();
    println!("pseudo-complement of {} = {}", l.show(&vb), l.show(&nb));
    println!("Boolean: {}", l.is_boolean());
}
