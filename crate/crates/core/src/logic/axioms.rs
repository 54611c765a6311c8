//! Axiom schemas, profiles and semantic validation of schemas on models.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lattice::SubStructure;
use crate::logic::formula::{parse_formula, Formula};
use crate::logic::model::{eval, Model};
use crate::morphology::{LawReport, LawStatus};

/// Metavariable bindings.
pub type Substitution = BTreeMap<String, Formula>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Group {
    /// The propositional basis.
    Intuitionistic,
    /// Preservation, commutativity, (anti-)extensivity.
    Modal,
    /// Enabled by a profile.
    Extension,
}

/// What a schema needs from a model to be sound there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Needs {
    Nothing,
    Cover,
    Boolean,
}

#[derive(Clone, Debug)]
pub struct Schema {
    pub id: &'static str,
    /// For equivalences, the left-to-right implication.
    pub pattern: Formula,
    /// `true` when the schema is an equivalence.
    pub iff: bool,
    pub group: Group,
    pub needs: Needs,
}

impl Schema {
    /// Concrete text of the schema, with `<->` for equivalences.
    pub fn display(&self) -> String {
        match (&self.pattern, self.iff) {
            (Formula::Implies(a, b), true) => {
                format!("{} <-> {}", paren_if_imp(a), paren_if_imp(b))
            }
            _ => self.pattern.to_string(),
        }
    }

    /// The formula whose validity the schema asserts: the pattern, or the
    /// conjunction of both implications for equivalences.
    pub fn statement(&self) -> Formula {
        match (&self.pattern, self.iff) {
            (Formula::Implies(a, b), true) => Formula::and(
                Formula::implies((**a).clone(), (**b).clone()),
                Formula::implies((**b).clone(), (**a).clone()),
            ),
            _ => self.pattern.clone(),
        }
    }

    /// Metavariables occurring in the schema.
    pub fn metavariables(&self) -> Vec<String> {
        self.pattern.props().into_iter().map(str::to_string).collect()
    }
}

fn paren_if_imp(f: &Formula) -> String {
    match f {
        Formula::Implies(..) => format!("({f})"),
        _ => f.to_string(),
    }
}

fn schema(id: &'static str, text: &str, iff: bool, group: Group, needs: Needs) -> Schema {
    let pattern = parse_formula(text).expect("registry schemas parse");
    Schema {
        id,
        pattern,
        iff,
        group,
        needs,
    }
}

/// Every schema known to the checker.
pub fn registry() -> &'static [Schema] {
    static REGISTRY: OnceLock<Vec<Schema>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        use Group::*;
        use Needs::*;
        vec![
            schema("k", "A -> B -> A", false, Intuitionistic, Nothing),
            schema("s", "(A -> B -> C) -> (A -> B) -> A -> C", false, Intuitionistic, Nothing),
            schema("and-elim-l", "A & B -> A", false, Intuitionistic, Nothing),
            schema("and-elim-r", "A & B -> B", false, Intuitionistic, Nothing),
            schema("and-intro", "A -> B -> A & B", false, Intuitionistic, Nothing),
            schema("or-intro-l", "A -> A | B", false, Intuitionistic, Nothing),
            schema("or-intro-r", "B -> A | B", false, Intuitionistic, Nothing),
            schema("or-elim", "(A -> C) -> (B -> C) -> A | B -> C", false, Intuitionistic, Nothing),
            schema("ex-falso", "F -> A", false, Intuitionistic, Nothing),
            schema("neg", "!A -> (A -> F)", true, Intuitionistic, Nothing),
            schema("imp-comp", "(A -> B) -> (B -> C) -> A -> C", false, Intuitionistic, Nothing),
            schema("verum", "T", false, Intuitionistic, Nothing),
            schema("diamond-bot", "<>F -> F", true, Modal, Nothing),
            schema("box-top", "[]T -> T", true, Modal, Nothing),
            schema("box-and", "[](A & B) -> []A & []B", true, Modal, Nothing),
            schema("diamond-or", "<>(A | B) -> <>A | <>B", true, Modal, Nothing),
            schema("box-t", "[]A -> A", false, Modal, Cover),
            schema("diamond-box", "<>[]A -> A", false, Modal, Nothing),
            schema("diamond-t", "A -> <>A", false, Modal, Cover),
            schema("box-diamond", "A -> []<>A", false, Modal, Nothing),
            schema("s4", "[]A -> [][]A", false, Extension, Nothing),
            schema("b", "A -> []<>A", false, Extension, Nothing),
            schema("s5", "<>A -> []<>A", false, Extension, Nothing),
            schema("duality", "![]A -> <>!A", true, Extension, Boolean),
            schema("lem", "A | !A", false, Extension, Boolean),
        ]
    })
}

pub fn lookup_schema(id: &str) -> Result<&'static Schema> {
    registry()
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownSchema(id.to_string()))
}

/// Which schemas a derivation or axiom suite may use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Profile {
    #[default]
    IntuitionisticBase,
    BooleanClassical,
    S4,
    B,
    S5,
}

impl Profile {
    pub const ALL: [Profile; 5] = [
        Profile::IntuitionisticBase,
        Profile::BooleanClassical,
        Profile::S4,
        Profile::B,
        Profile::S5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Profile::IntuitionisticBase => "intuitionistic-base",
            Profile::BooleanClassical => "boolean-classical",
            Profile::S4 => "s4",
            Profile::B => "b",
            Profile::S5 => "s5",
        }
    }

    fn extensions(self) -> &'static [&'static str] {
        match self {
            Profile::IntuitionisticBase => &[],
            Profile::BooleanClassical => &["duality", "lem"],
            Profile::S4 => &["s4"],
            Profile::B => &["b"],
            Profile::S5 => &["s5"],
        }
    }

    pub fn allows(self, schema: &Schema) -> bool {
        schema.group != Group::Extension || self.extensions().contains(&schema.id)
    }

    pub fn schemas(self) -> impl Iterator<Item = &'static Schema> {
        registry().iter().filter(move |s| self.allows(s))
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        Profile::ALL
            .iter()
            .copied()
            .find(|p| p.name() == lower)
            .ok_or_else(|| Error::Input(format!("unknown profile `{s}`")))
    }
}

fn unify(pattern: &Formula, target: &Formula, sub: &mut Substitution) -> bool {
    match (pattern, target) {
        (Formula::Prop(v), _) => match sub.get(v) {
            Some(bound) => bound == target,
            None => {
                sub.insert(v.clone(), target.clone());
                true
            }
        },
        (Formula::Top, Formula::Top) | (Formula::Bot, Formula::Bot) => true,
        (Formula::Not(a), Formula::Not(x))
        | (Formula::Box(a), Formula::Box(x))
        | (Formula::Diamond(a), Formula::Diamond(x)) => unify(a, x, sub),
        (Formula::And(a, b), Formula::And(x, y))
        | (Formula::Or(a, b), Formula::Or(x, y))
        | (Formula::Implies(a, b), Formula::Implies(x, y)) => {
            unify(a, x, sub) && unify(b, y, sub)
        }
        _ => false,
    }
}

fn unify_fresh(pattern: &Formula, target: &Formula) -> Option<Substitution> {
    let mut sub = Substitution::new();
    unify(pattern, target, &mut sub).then_some(sub)
}

/// The forms an instance of `schema` may take: the pattern itself, and for
/// equivalences also the converse implication and the conjunction of both.
pub(crate) fn instance_forms(schema: &Schema) -> Vec<Formula> {
    match (&schema.pattern, schema.iff) {
        (Formula::Implies(a, b), true) => vec![
            schema.pattern.clone(),
            Formula::implies((**b).clone(), (**a).clone()),
            schema.statement(),
        ],
        _ => vec![schema.pattern.clone()],
    }
}

/// The most general substitution making `phi` an instance of the schema.
pub fn match_axiom(schema_id: &str, phi: &Formula) -> Result<Option<Substitution>> {
    let schema = lookup_schema(schema_id)?;
    Ok(instance_forms(schema)
        .iter()
        .find_map(|form| unify_fresh(form, phi)))
}

/// Replaces metavariables; unbound ones are left in place.
pub fn substitute(pattern: &Formula, sub: &Substitution) -> Formula {
    match pattern {
        Formula::Prop(v) => sub.get(v).cloned().unwrap_or_else(|| pattern.clone()),
        Formula::Top | Formula::Bot => pattern.clone(),
        Formula::Not(a) => Formula::not(substitute(a, sub)),
        Formula::Box(a) => Formula::boxed(substitute(a, sub)),
        Formula::Diamond(a) => Formula::diamond(substitute(a, sub)),
        Formula::And(a, b) => Formula::and(substitute(a, sub), substitute(b, sub)),
        Formula::Or(a, b) => Formula::or(substitute(a, sub), substitute(b, sub)),
        Formula::Implies(a, b) => Formula::implies(substitute(a, sub), substitute(b, sub)),
    }
}

/// Above this many metavariable assignments the suite samples instead.
pub const EXHAUSTIVE_LIMIT: usize = 1 << 20;
/// Number of sampled assignments when the exhaustive space is too large.
pub const SUITE_SAMPLES: usize = 4096;
const SUITE_SEED: u64 = 0x5eed;

/// Checks every schema of `profile` on the model, with the metavariables
/// ranging over all substructures (or over seeded samples when there are
/// too many assignments).
pub fn validate_axiom_suite(model: &Model, profile: Profile) -> Result<Vec<LawReport>> {
    let lattice = model.lattice();
    let universe = lattice.enumerate_subobjects().ok();
    let boolean = lattice.is_boolean();
    let mut reports = Vec::new();
    for schema in profile.schemas() {
        let vars = schema.metavariables();
        let statement = schema.statement();
        let mut report = LawReport {
            law: schema.id.to_string(),
            instance: format!("{} ({} profile)", schema.display(), profile),
            status: LawStatus::Holds,
            holds: true,
            witness: None,
            samples: 0,
            seed: None,
            note: None,
        };
        let unmet = match schema.needs {
            Needs::Cover if !model.is_covered() => {
                Some("structuring element does not cover the lattice")
            }
            Needs::Boolean if !boolean => Some("lattice is not Boolean"),
            _ => None,
        };
        if let Some(why) = unmet {
            report.status = LawStatus::PreconditionUnmet;
            report.holds = false;
            report.note = Some(why.to_string());
            reports.push(report);
            continue;
        }
        let top = lattice.top();
        let check = |assignment: &[&SubStructure]| -> Result<Option<BTreeMap<String, String>>> {
            let val: BTreeMap<String, SubStructure> = vars
                .iter()
                .cloned()
                .zip(assignment.iter().map(|d| (*d).clone()))
                .collect();
            let m = model.with_valuation(val)?;
            let value = eval(&m, &statement)?;
            if value == top {
                return Ok(None);
            }
            let mut w: BTreeMap<String, String> = vars
                .iter()
                .cloned()
                .zip(assignment.iter().map(|d| lattice.show(d)))
                .collect();
            w.insert("denotation".into(), lattice.show(&value));
            Ok(Some(w))
        };
        let k = vars.len() as u32;
        let exhaustive = universe
            .as_ref()
            .filter(|u| u.len().checked_pow(k).is_some_and(|n| n <= EXHAUSTIVE_LIMIT));
        let mut failure = None;
        if let Some(all) = exhaustive {
            let mut idx = vec![0usize; k as usize];
            loop {
                report.samples += 1;
                let assignment: Vec<&SubStructure> = idx.iter().map(|&i| &all[i]).collect();
                if let Some(w) = check(&assignment)? {
                    failure = Some(w);
                    break;
                }
                // Odometer over all^k.
                let mut pos = 0;
                loop {
                    if pos == idx.len() {
                        break;
                    }
                    idx[pos] += 1;
                    if idx[pos] < all.len() {
                        break;
                    }
                    idx[pos] = 0;
                    pos += 1;
                }
                if pos == idx.len() {
                    break;
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED);
            report.seed = Some(SUITE_SEED);
            report.note = Some(format!(
                "assignment space too large to enumerate; checked {SUITE_SAMPLES} seeded samples"
            ));
            for _ in 0..SUITE_SAMPLES {
                report.samples += 1;
                let owned: Vec<SubStructure> =
                    (0..k).map(|_| lattice.random_subobject(&mut rng)).collect();
                let assignment: Vec<&SubStructure> = owned.iter().collect();
                if let Some(w) = check(&assignment)? {
                    failure = Some(w);
                    break;
                }
            }
        }
        if let Some(w) = failure {
            report.status = LawStatus::Falsified;
            report.holds = false;
            report.witness = Some(w);
        }
        reports.push(report);
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn matching_examples() {
        let sub = match_axiom("box-and", &f("[](p & q) -> []p & []q")).unwrap().unwrap();
        assert_eq!(sub["A"], f("p"));
        assert_eq!(sub["B"], f("q"));
        assert!(match_axiom("box-and", &f("[]p & []q -> [](p & q)")).unwrap().is_some());
        assert!(match_axiom(
            "box-and",
            &f("([](p & q) -> []p & []q) & ([]p & []q -> [](p & q))")
        )
        .unwrap()
        .is_some());
        assert_eq!(match_axiom("box-t", &f("[]p -> q")).unwrap(), None);
        assert_eq!(
            match_axiom("adjunction", &f("p")).unwrap_err(),
            Error::UnknownSchema("adjunction".into())
        );
        let sub = match_axiom("k", &f("(a -> b) -> []c -> a -> b")).unwrap().unwrap();
        assert_eq!(sub["A"], f("a -> b"));
        assert_eq!(sub["B"], f("[]c"));
    }

    #[test]
    fn substitution_round_trip() {
        for s in registry() {
            let mut sub = Substitution::new();
            for (i, v) in s.metavariables().iter().enumerate() {
                sub.insert(v.clone(), f(&format!("<>x{i} & y")));
            }
            for form in instance_forms(s) {
                let inst = substitute(&form, &sub);
                assert!(match_axiom(s.id, &inst).unwrap().is_some(), "{}", s.id);
            }
        }
    }

    #[test]
    fn profiles() {
        let base: Vec<_> = Profile::IntuitionisticBase.schemas().map(|s| s.id).collect();
        assert!(base.contains(&"box-t") && !base.contains(&"s4") && !base.contains(&"lem"));
        let classical: Vec<_> = Profile::BooleanClassical.schemas().map(|s| s.id).collect();
        assert!(classical.contains(&"duality") && classical.contains(&"lem"));
        assert_eq!("S4".parse::<Profile>().unwrap(), Profile::S4);
    }

    #[test]
    fn base_suite_on_kripke_fixture() {
        let m = fixtures::kripke();
        for r in validate_axiom_suite(&m, Profile::IntuitionisticBase).unwrap() {
            assert_eq!(r.status, LawStatus::Holds, "{}", r.law);
        }
    }

    #[test]
    fn classical_profile_on_graph_is_gated() {
        let l = fixtures::p4(crate::lattice::ForgetMode::Vertices);
        let b = crate::structuring::StructuringElement::builtin(&l, "closed-neighborhood").unwrap();
        let m = Model::new(l, b, BTreeMap::new()).unwrap();
        let reports = validate_axiom_suite(&m, Profile::BooleanClassical).unwrap();
        let duality = reports.iter().find(|r| r.law == "duality").unwrap();
        assert_eq!(duality.status, LawStatus::PreconditionUnmet);
    }
}
