// Checking Hilbert-style derivations.

use morpholattice::logic::{bundled, check_derivation, Derivation};

fn main() {
    for (name, d) in bundled::all() {
        let cert = check_derivation(&d).unwrap();
        println!("{name:<20} {:?}: {}", cert.kind, cert.conclusion);
    }

    let text = r#"{
        "premises": [],
        "lines": [
            {"formula": "p -> q -> p", "rule": "axiom", "args": ["k"]},
            {"formula": "[](p -> q -> p)", "rule": "nec", "args": [1]}
        ]
    }"#;
    let d = Derivation::from_json(text).unwrap();
    println!("custom: {}", check_derivation(&d).unwrap().conclusion);

    let bad = text.replace("[](p -> q -> p)", "[](q -> q -> p)");
    let err = check_derivation(&Derivation::from_json(&bad).unwrap()).unwrap_err();
    println!("mutated: {err}");
}
