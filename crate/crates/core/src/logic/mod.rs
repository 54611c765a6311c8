//! Modal logic whose box and diamond are erosion and dilation.

pub mod axioms;
pub mod formula;
pub mod model;
pub mod proof;

pub use axioms::{
    lookup_schema, match_axiom, registry, substitute, validate_axiom_suite, Profile, Schema,
    Substitution,
};
pub use formula::{parse_formula, print_formula, Formula};
pub use model::{entails_on_models, eval, kripke_to_model, satisfies, Model};
pub use proof::{
    bundled, check_derivation, Certificate, CertificateKind, Consequence, Derivation, Line, Rule,
};
