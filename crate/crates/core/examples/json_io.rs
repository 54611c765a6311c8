// JSON documents and Graphviz output.

use morpholattice::io::{ground_to_json, model_to_json, se_to_json, subobject_to_json, to_dot, to_pretty};
use morpholattice::{dilate, fixtures, ForgetMode, StructuringElement};

fn main() {
    let l = fixtures::p4(ForgetMode::Vertices);
    let b = StructuringElement::builtin(&l, "closed-neighborhood").unwrap();
    let d = fixtures::subgraph(&l, &["b"], &[]);
    let r = dilate(&l, &b, &d).unwrap();

    print!("{}", to_pretty(&ground_to_json(l.ground())));
    print!("{}", to_pretty(&se_to_json(&b).unwrap()));
    print!("{}", to_pretty(&subobject_to_json(&l, &r).unwrap()));
    print!("{}", to_dot(&l, &r, Some(&d)).unwrap());

    let h = fixtures::hypergraph(ForgetMode::Vertices);
    print!("{}", to_dot(&h, &fixtures::subhypergraph(&h, &["1", "2"], &["e1"]), None).unwrap());

    print!("{}", to_pretty(&model_to_json(&fixtures::kripke()).unwrap()));
}
