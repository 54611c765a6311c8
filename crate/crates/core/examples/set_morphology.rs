// Erosion, dilation, opening and closing on the powerset of {0,..,4}.

use morpholattice::{
    closing, dilate, erode, fixtures, opening, StructuringElement,
};

fn main() {
    let l = fixtures::fix_set();
    let b = StructuringElement::builtin(&l, "line").unwrap();
    let a = fixtures::set(&l, &["1", "2", "3"]);

    let e = erode(&l, &b, &a).unwrap();
    let d = dilate(&l, &b, &a).unwrap();
    println!("A          = {}", l.show(&a));
    println!("erode(A)   = {}", l.show(&e));
    println!("dilate(A)  = {}", l.show(&d));
    println!("opening(A) = {}", l.show(&opening(&l, &b, &a).unwrap()));
    println!("closing(A) = {}", l.show(&closing(&l, &b, &a).unwrap()));
    assert_eq!(l.show(&e), "{2}");
    assert_eq!(l.show(&d), "{0,1,2,3,4}");

    // The powerset is Boolean: complements are exact.
    let c = l.complement(&a).unwrap();
    println!("complement = {}", l.show(&c));
    assert!(l.is_boolean());
}
