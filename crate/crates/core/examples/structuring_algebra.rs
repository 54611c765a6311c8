// Structuring elements form a complete lattice and compose.

use morpholattice::{dilate, fixtures, StructuringElement};

fn main() {
    let l = fixtures::fix_set();
    let line = StructuringElement::builtin(&l, "line").unwrap();
    let sgt = StructuringElement::identity(&l).unwrap();
    let shift = StructuringElement::relation(&l, [("0", "1"), ("1", "2"), ("2", "3"), ("3", "4")]).unwrap();

    let meet = StructuringElement::inf(&l, &[&line, &sgt]).unwrap();
    println!("line ∧ sgt = sgt: {}", meet == sgt);
    let join = StructuringElement::sup(&l, &[&shift, &sgt]).unwrap();
    for (x, img) in join.entries() {
        println!("  (shift ∨ sgt)({x}) = {}", l.show(img));
    }

    let twice = shift.compose(&shift).unwrap();
    let d = fixtures::set(&l, &["0"]);
    println!("δ[shift⋆shift]({{0}}) = {}", l.show(&dilate(&l, &twice, &d).unwrap()));
    println!("sgt⋆line = line: {}", sgt.compose(&line).unwrap() == line);

    let back = shift.transpose().unwrap();
    println!("transpose of shift maps 1 to {}", l.show(back.apply(&l.element("1").unwrap()).unwrap()));
    println!("shift covers: {}, line covers: {}", shift.is_covered(), line.is_covered());
    if let Some(w) = shift.cover_witness() {
        println!("  not covered: {}", l.show(&w));
    }
}
