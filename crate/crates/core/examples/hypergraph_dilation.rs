// Hypergraph morphology: the generic dilation and the closed form disagree
// on {1,4}.

use morpholattice::structures::dilate_closed_form;
use morpholattice::{compare_methods, dilate, erode, fixtures, ForgetMode, StructuringElement};

fn main() {
    let h = fixtures::hypergraph(ForgetMode::Vertices);
    let b = StructuringElement::builtin(&h, "hyperedge-star").unwrap();
    let d = fixtures::subhypergraph(&h, &["1", "4"], &[]);

    let generic = dilate(&h, &b, &d).unwrap();
    let fast = dilate_closed_form(&h, &b, &d).unwrap();
    println!("generic dilation     {}", h.show(&generic));
    println!("closed-form dilation {}", h.show(&fast));

    let cmp = compare_methods(&h, &b, &d).unwrap();
    for (op, m) in cmp.divergences() {
        println!("divergence: {op} by {m}");
    }

    let top = h.top();
    println!("erode(top) = {}", h.show(&erode(&h, &b, &top).unwrap()));

    // Hyperedges as carrier.
    let he = fixtures::hypergraph(ForgetMode::Hyperedges);
    let bo = StructuringElement::builtin(&he, "hyperedge-overlap").unwrap();
    let e1 = fixtures::subhypergraph(&he, &["1", "2"], &["e1"]);
    println!("overlap dilation of e1: {}", he.show(&dilate(&he, &bo, &e1).unwrap()));
}
