mod common;

use std::collections::BTreeMap;

use common::{fixture_instances, random_formula};
use morpholattice::logic::{
    bundled, check_derivation, eval, lookup_schema, registry, satisfies, substitute,
    validate_axiom_suite, Certificate, CertificateKind, Consequence, Derivation, Model, Profile,
    Substitution,
};
use morpholattice::{fixtures, LawStatus};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn covered_models(rng: &mut ChaCha8Rng) -> Vec<Model> {
    let mut out = vec![fixtures::kripke()];
    for (_, l, b) in fixture_instances() {
        if !b.is_covered() {
            continue;
        }
        for _ in 0..3 {
            let val: BTreeMap<_, _> = ["p", "q"]
                .iter()
                .map(|p| (p.to_string(), l.random_subobject(rng)))
                .collect();
            out.push(Model::new(l.clone(), b.clone(), val).unwrap());
        }
    }
    out
}

fn holds_under(cert: &Certificate, d: &Derivation, m: &Model) -> bool {
    let premises = cert.premises(d);
    match cert.kind {
        CertificateKind::Theorem => satisfies(m, &cert.conclusion).unwrap(),
        CertificateKind::GlobalSequent => {
            !premises.iter().all(|p| satisfies(m, p).unwrap()) || satisfies(m, &cert.conclusion).unwrap()
        }
        CertificateKind::LocalSequent => {
            let l = m.lattice();
            let mut meet = l.top();
            for p in premises {
                meet = l.meet(&meet, &eval(m, p).unwrap()).unwrap();
            }
            l.leq(&meet, &eval(m, &cert.conclusion).unwrap()).unwrap()
        }
    }
}

#[test]
fn bundled_proofs_are_sound_on_fixture_models() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let models = covered_models(&mut rng);
    for (name, d) in bundled::all() {
        let cert = check_derivation(&d).unwrap();
        for m in &models {
            // Vary the valuation: the conclusion is schematic in p and q.
            for _ in 0..8 {
                let l = m.lattice();
                let val = ["p", "q"]
                    .iter()
                    .map(|p| (p.to_string(), l.random_subobject(&mut rng)))
                    .collect();
                let m = m.with_valuation(val).unwrap();
                assert!(holds_under(&cert, &d, &m), "{name}");
            }
        }
    }
}

#[test]
fn every_base_schema_instance_is_valid_on_covered_models() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for m in covered_models(&mut rng) {
        for s in Profile::IntuitionisticBase.schemas() {
            for _ in 0..10 {
                let sub: Substitution = s
                    .metavariables()
                    .into_iter()
                    .map(|v| (v, random_formula(&mut rng, 2, &["p", "q"])))
                    .collect();
                let inst = substitute(&s.statement(), &sub);
                assert!(satisfies(&m, &inst).unwrap(), "{} as {inst}", s.id);
            }
        }
    }
}

#[test]
fn axiom_suite_reports() {
    let m = fixtures::kripke();
    for r in validate_axiom_suite(&m, Profile::IntuitionisticBase).unwrap() {
        assert_eq!(r.status, LawStatus::Holds, "{}", r.law);
    }
    let classical = validate_axiom_suite(&m, Profile::BooleanClassical).unwrap();
    let duality = classical.iter().find(|r| r.law == "duality").unwrap();
    assert_eq!(duality.status, LawStatus::Falsified);
    let lem = classical.iter().find(|r| r.law == "lem").unwrap();
    assert_eq!(lem.status, LawStatus::Holds);

    // Reflexive and transitive frames satisfy S4; the fixture is both.
    let s4 = validate_axiom_suite(&m, Profile::S4).unwrap();
    assert!(s4.iter().all(|r| r.status == LawStatus::Holds));
}

#[test]
fn registry_is_consistent() {
    for s in registry() {
        assert_eq!(lookup_schema(s.id).unwrap().id, s.id);
    }
    assert!(lookup_schema("nope").is_err());
}

#[test]
fn local_mode_rejects_necessity_on_premises() {
    let text = r#"{
        "premises": ["p"],
        "lines": [
            {"formula": "p", "rule": "premise", "args": [1]},
            {"formula": "[]p", "rule": "nec", "args": [1]}
        ]
    }"#;
    let mut d = Derivation::from_json(text).unwrap();
    assert!(check_derivation(&d).is_err());
    d.consequence = Consequence::Global;
    let cert = check_derivation(&d).unwrap();
    assert_eq!(cert.kind, CertificateKind::GlobalSequent);
}

#[test]
fn proof_json_round_trips() {
    for (_, d) in bundled::all() {
        assert_eq!(Derivation::from_json(&d.to_json()).unwrap(), d);
    }
    assert!(Derivation::from_json(r#"{"premises": [], "lines": [], "bogus": 1}"#).is_err());
}
