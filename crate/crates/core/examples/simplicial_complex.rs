// Subcomplexes of a filled triangle and morphology by closed stars.

use morpholattice::{dilate, erode, fixtures, SimplicialComplex, StructuringElement};

fn main() {
    let k = fixtures::triangle_complex();
    let all = k.enumerate_subobjects().unwrap();
    println!("the filled triangle has {} subcomplexes", all.len());

    let b = StructuringElement::builtin(&k, "star-closure").unwrap();
    let hollow = fixtures::subcomplex(&k, &["a", "b", "c"], &[&["a", "b"], &["b", "c"], &["a", "c"]]);
    println!("erode(hollow)  = {}", k.show(&erode(&k, &b, &hollow).unwrap()));
    println!("dilate(hollow) = {}", k.show(&dilate(&k, &b, &hollow).unwrap()));
    let a = fixtures::subcomplex(&k, &["a"], &[]);
    println!("dilate(a)      = {}", k.show(&dilate(&k, &b, &a).unwrap()));

    // Strict construction rejects a face whose sides are missing.
    let err = SimplicialComplex::new(["a", "b", "c"], [vec!["a", "b", "c"]]).unwrap_err();
    println!("strict construction: {err}");
}
