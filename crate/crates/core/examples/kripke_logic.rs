// Modal formulas evaluated by erosion and dilation on a Kripke frame and on
// a graph.

use std::collections::BTreeMap;

use morpholattice::logic::{eval, parse_formula, satisfies, validate_axiom_suite, Model, Profile};
use morpholattice::{fixtures, ForgetMode, StructuringElement};

fn main() {
    let m = fixtures::kripke();
    let l = m.lattice();
    for s in ["[]p", "<>p", "<>q", "[]p -> p", "q -> []q", "!<>q | p"] {
        let f = parse_formula(s).unwrap();
        println!("{s:<12} = {:<10} valid: {}", l.show(&eval(&m, &f).unwrap()), satisfies(&m, &f).unwrap());
    }

    for profile in [Profile::IntuitionisticBase, Profile::BooleanClassical] {
        let failing: Vec<_> = validate_axiom_suite(&m, profile)
            .unwrap()
            .into_iter()
            .filter(|r| r.is_falsified())
            .map(|r| r.law)
            .collect();
        println!("{}: falsified {:?}", profile.name(), failing);
    }

    // Subgraphs are a Heyting algebra, not a Boolean one.
    let g = fixtures::p4(ForgetMode::Vertices);
    let b = StructuringElement::builtin(&g, "closed-neighborhood").unwrap();
    let mut val = BTreeMap::new();
    val.insert("p".to_string(), fixtures::subgraph(&g, &["b"], &[]));
    let gm = Model::new(g.clone(), b, val).unwrap();
    let lem = parse_formula("p | !p").unwrap();
    println!("p | !p on P4 = {} (valid: {})", g.show(&eval(&gm, &lem).unwrap()), satisfies(&gm, &lem).unwrap());
}
