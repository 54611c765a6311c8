// The atom-based erosion procedure against the definition on the path
// u-z-x-y-w-s.

use morpholattice::morphology::MethodComparison;
use morpholattice::{compare_methods, fixtures, Method, StructuringElement};

fn main() {
    let l = fixtures::p6();
    let b = StructuringElement::builtin(&l, "closed-neighborhood").unwrap();
    let d = fixtures::induced(&l, &["z", "x", "y", "w"]);
    let cmp = compare_methods(&l, &b, &d).unwrap();

    println!("object: {}", l.show(&d));
    for r in &cmp.erosion {
        let shown = r.result.as_ref().map(|x| l.show(x)).unwrap_or_else(|| "n/a".into());
        println!("  erode by {:<16} {shown}", r.method.name());
    }
    println!("agreement matrix (generic, closed-form, paper-algorithm):");
    for row in MethodComparison::matrix(&cmp.erosion) {
        println!("  {row:?}");
    }
    assert_ne!(cmp.erosion_by(Method::Generic), cmp.erosion_by(Method::PaperAlgorithm));
}
