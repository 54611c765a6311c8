// Checking the algebraic laws of erosion and dilation.

use morpholattice::{check_all_laws, check_law, fixtures, ForgetMode, Law, Sampler, StructuringElement};

fn main() {
    let l = fixtures::p4(ForgetMode::Vertices);
    let b = StructuringElement::builtin(&l, "closed-neighborhood").unwrap();
    for r in check_all_laws(&l, &b, Sampler::Exhaustive).unwrap() {
        println!("{:<24} {:?}", r.law, r.status);
    }

    // Same-element duality fails for an asymmetric relation.
    let two = fixtures::powerset(&["0", "1"]);
    let b = StructuringElement::relation(&two, [("0", "0"), ("0", "1"), ("1", "1")]).unwrap();
    let r = check_law(&two, &b, Law::BooleanDuality, Sampler::Exhaustive).unwrap();
    println!("\n{}", serde_json::to_string_pretty(&r).unwrap());

    let s = Sampler::Random { n: 100, seed: 7 };
    let r = check_law(&fixtures::fix_set(), &StructuringElement::builtin(&fixtures::fix_set(), "line").unwrap(), Law::Adjunction, s).unwrap();
    println!("\nadjunction on 100 seeded samples: {:?}", r.status);
}
