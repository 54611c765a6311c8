//! Hilbert-style derivations and their checker.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::logic::axioms::{instance_forms, lookup_schema, match_axiom, substitute, Profile, Substitution};
use crate::logic::formula::{parse_formula, Formula};

/// How a line is justified. Line references are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rule {
    /// An instance of a registered schema, optionally with the intended
    /// substitution spelled out.
    Axiom {
        schema: String,
        substitution: Option<Substitution>,
    },
    /// The k-th premise.
    Premise(usize),
    /// From line `i` = `φ -> ψ` and line `j` = `φ`, conclude `ψ`.
    ModusPonens(usize, usize),
    /// From line `i` = `φ`, conclude `[]φ`.
    Necessity(usize),
    /// From line `i` = `φ -> ψ`, conclude `[]φ -> []ψ` or `<>φ -> <>ψ`.
    Monotony(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub formula: Formula,
    pub rule: Rule,
}

/// How premises may interact with the modal rules.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Consequence {
    /// Modal rules only on premise-free lines: the conclusion follows from
    /// the conjunction of the premises used, in every model.
    #[default]
    Local,
    /// Modal rules on any line: the conclusion holds in every model that
    /// satisfies the premises.
    Global,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub premises: Vec<Formula>,
    pub lines: Vec<Line>,
    /// When present, the last line must be exactly this formula.
    pub goal: Option<Formula>,
    pub consequence: Consequence,
    pub profile: Profile,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    /// No premise was used.
    Theorem,
    /// `Γ ⊢ φ` with modal rules confined to premise-free lines.
    LocalSequent,
    /// `Γ ⊨ φ` over models of `Γ`.
    GlobalSequent,
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertificateKind::Theorem => "theorem",
            CertificateKind::LocalSequent => "local-sequent",
            CertificateKind::GlobalSequent => "global-sequent",
        })
    }
}

/// What an accepted derivation establishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub conclusion: Formula,
    /// 1-based indices into the premise list.
    pub premises_used: Vec<usize>,
    pub kind: CertificateKind,
}

impl Certificate {
    pub fn premises<'a>(&self, d: &'a Derivation) -> Vec<&'a Formula> {
        self.premises_used.iter().map(|&k| &d.premises[k - 1]).collect()
    }
}

fn invalid(line: usize, reason: impl Into<String>) -> Error {
    Error::InvalidStep {
        line,
        reason: reason.into(),
    }
}

fn earlier(line: usize, i: usize) -> Result<usize> {
    if i == 0 || i >= line {
        Err(invalid(line, format!("reference {i} is not an earlier line")))
    } else {
        Ok(i - 1)
    }
}

/// Checks every line and returns what the derivation proves, or the first
/// offending line.
pub fn check_derivation(d: &Derivation) -> Result<Certificate> {
    if d.lines.is_empty() {
        return Err(invalid(0, "derivation has no lines"));
    }
    let mut deps: Vec<BTreeSet<usize>> = Vec::with_capacity(d.lines.len());
    for (idx, line) in d.lines.iter().enumerate() {
        let n = idx + 1;
        let phi = &line.formula;
        let dep = match &line.rule {
            Rule::Axiom {
                schema,
                substitution,
            } => {
                let s = lookup_schema(schema).map_err(|e| invalid(n, e.to_string()))?;
                if !d.profile.allows(s) {
                    return Err(invalid(
                        n,
                        format!("schema `{schema}` is not part of the {} profile", d.profile),
                    ));
                }
                let ok = match substitution {
                    Some(sub) => instance_forms(s).iter().any(|f| &substitute(f, sub) == phi),
                    None => match_axiom(schema, phi)?.is_some(),
                };
                if !ok {
                    return Err(invalid(n, format!("`{phi}` is not an instance of `{schema}`")));
                }
                BTreeSet::new()
            }
            Rule::Premise(k) => {
                let premise = k
                    .checked_sub(1)
                    .and_then(|i| d.premises.get(i))
                    .ok_or_else(|| invalid(n, format!("there is no premise {k}")))?;
                if premise != phi {
                    return Err(invalid(n, format!("premise {k} is `{premise}`, not `{phi}`")));
                }
                BTreeSet::from([*k])
            }
            Rule::ModusPonens(i, j) => {
                let (ii, jj) = (earlier(n, *i)?, earlier(n, *j)?);
                let expected = Formula::implies(d.lines[jj].formula.clone(), phi.clone());
                if d.lines[ii].formula != expected {
                    return Err(invalid(
                        n,
                        format!("line {i} is not `{expected}`"),
                    ));
                }
                deps[ii].union(&deps[jj]).copied().collect()
            }
            Rule::Necessity(i) => {
                let ii = earlier(n, *i)?;
                if *phi != Formula::boxed(d.lines[ii].formula.clone()) {
                    return Err(invalid(n, format!("expected `[]` applied to line {i}")));
                }
                modal_deps(d, n, *i, &deps[ii])?
            }
            Rule::Monotony(i) => {
                let ii = earlier(n, *i)?;
                let Formula::Implies(a, b) = &d.lines[ii].formula else {
                    return Err(invalid(n, format!("line {i} is not an implication")));
                };
                let boxed = Formula::implies(Formula::boxed((**a).clone()), Formula::boxed((**b).clone()));
                let diamond =
                    Formula::implies(Formula::diamond((**a).clone()), Formula::diamond((**b).clone()));
                if *phi != boxed && *phi != diamond {
                    return Err(invalid(
                        n,
                        format!("expected `{boxed}` or `{diamond}`"),
                    ));
                }
                modal_deps(d, n, *i, &deps[ii])?
            }
        };
        deps.push(dep);
    }
    let last = d.lines.len();
    let conclusion = d.lines[last - 1].formula.clone();
    if let Some(goal) = &d.goal {
        if *goal != conclusion {
            return Err(invalid(last, format!("concludes `{conclusion}`, goal is `{goal}`")));
        }
    }
    let used: Vec<usize> = deps[last - 1].iter().copied().collect();
    let kind = match (used.is_empty(), d.consequence) {
        (true, _) => CertificateKind::Theorem,
        (false, Consequence::Local) => CertificateKind::LocalSequent,
        (false, Consequence::Global) => CertificateKind::GlobalSequent,
    };
    Ok(Certificate {
        conclusion,
        premises_used: used,
        kind,
    })
}

fn modal_deps(d: &Derivation, n: usize, i: usize, dep: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
    if d.consequence == Consequence::Local && !dep.is_empty() {
        return Err(invalid(
            n,
            format!("modal rule applied to line {i}, which depends on premises"),
        ));
    }
    Ok(dep.clone())
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProofFile {
    #[serde(default)]
    premises: Vec<String>,
    lines: Vec<LineFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    goal: Option<String>,
    #[serde(default)]
    consequence: Consequence,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    profile: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LineFile {
    formula: String,
    rule: String,
    #[serde(default)]
    args: Vec<Value>,
}

fn parse_at(text: &str, what: &str) -> Result<Formula> {
    parse_formula(text).map_err(|e| Error::Input(format!("{what}: {e}")))
}

fn index_arg(v: &Value, line: usize) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::Input(format!("line {line}: expected a line number, found {v}")))
}

impl Derivation {
    /// Reads the JSON proof format.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: ProofFile =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("proof file: {e}")))?;
        let premises = file
            .premises
            .iter()
            .enumerate()
            .map(|(i, p)| parse_at(p, &format!("premise {}", i + 1)))
            .collect::<Result<_>>()?;
        let mut lines = Vec::with_capacity(file.lines.len());
        for (i, l) in file.lines.iter().enumerate() {
            let n = i + 1;
            let formula = parse_at(&l.formula, &format!("line {n}"))?;
            let arity = |k: usize| -> Result<()> {
                if l.args.len() == k {
                    Ok(())
                } else {
                    Err(Error::Input(format!(
                        "line {n}: rule `{}` takes {k} argument(s)",
                        l.rule
                    )))
                }
            };
            let rule = match l.rule.as_str() {
                "axiom" => {
                    let schema = l
                        .args
                        .first()
                        .and_then(Value::as_str)
                        .ok_or_else(|| Error::Input(format!("line {n}: axiom needs a schema id")))?
                        .to_string();
                    let substitution = match l.args.get(1) {
                        None => None,
                        Some(Value::Object(map)) => Some(
                            map.iter()
                                .map(|(k, v)| {
                                    let text = v.as_str().ok_or_else(|| {
                                        Error::Input(format!("line {n}: substitution values are formulas"))
                                    })?;
                                    Ok((k.clone(), parse_at(text, &format!("line {n}"))?))
                                })
                                .collect::<Result<_>>()?,
                        ),
                        Some(other) => {
                            return Err(Error::Input(format!(
                                "line {n}: unexpected axiom argument {other}"
                            )))
                        }
                    };
                    if l.args.len() > 2 {
                        return Err(Error::Input(format!("line {n}: too many axiom arguments")));
                    }
                    Rule::Axiom {
                        schema,
                        substitution,
                    }
                }
                "premise" => {
                    arity(1)?;
                    Rule::Premise(index_arg(&l.args[0], n)?)
                }
                "mp" => {
                    arity(2)?;
                    Rule::ModusPonens(index_arg(&l.args[0], n)?, index_arg(&l.args[1], n)?)
                }
                "nec" => {
                    arity(1)?;
                    Rule::Necessity(index_arg(&l.args[0], n)?)
                }
                "mono" => {
                    arity(1)?;
                    Rule::Monotony(index_arg(&l.args[0], n)?)
                }
                other => return Err(Error::Input(format!("line {n}: unknown rule `{other}`"))),
            };
            lines.push(Line { formula, rule });
        }
        Ok(Derivation {
            premises,
            lines,
            goal: file.goal.as_deref().map(|g| parse_at(g, "goal")).transpose()?,
            consequence: file.consequence,
            profile: file
                .profile
                .as_deref()
                .map(str::parse)
                .transpose()?
                .unwrap_or_default(),
        })
    }

    /// Writes the JSON proof format.
    pub fn to_json(&self) -> String {
        let file = ProofFile {
            premises: self.premises.iter().map(|p| p.to_string()).collect(),
            lines: self
                .lines
                .iter()
                .map(|l| {
                    let (rule, args): (&str, Vec<Value>) = match &l.rule {
                        Rule::Axiom {
                            schema,
                            substitution,
                        } => {
                            let mut args = vec![Value::from(schema.clone())];
                            if let Some(sub) = substitution {
                                args.push(Value::Object(
                                    sub.iter()
                                        .map(|(k, v)| (k.clone(), Value::from(v.to_string())))
                                        .collect(),
                                ));
                            }
                            ("axiom", args)
                        }
                        Rule::Premise(k) => ("premise", vec![Value::from(*k)]),
                        Rule::ModusPonens(i, j) => ("mp", vec![Value::from(*i), Value::from(*j)]),
                        Rule::Necessity(i) => ("nec", vec![Value::from(*i)]),
                        Rule::Monotony(i) => ("mono", vec![Value::from(*i)]),
                    };
                    LineFile {
                        formula: l.formula.to_string(),
                        rule: rule.to_string(),
                        args,
                    }
                })
                .collect(),
            goal: self.goal.as_ref().map(|g| g.to_string()),
            consequence: self.consequence,
            profile: Some(self.profile.name().to_string()),
        };
        let mut s = serde_json::to_string_pretty(&file).expect("proof serializes");
        s.push('\n');
        s
    }
}

/// Derivations shipped with the library.
pub mod bundled {
    use super::Derivation;

    pub const ADJUNCTION: &str = include_str!("../../proofs/adjunction.json");
    pub const ADJUNCTION_CONVERSE: &str = include_str!("../../proofs/adjunction-converse.json");
    pub const KRIPKE_SCHEMA: &str = include_str!("../../proofs/kripke-schema.json");

    /// `p -> []q` entails `<>p -> q` over its models.
    pub fn adjunction() -> Derivation {
        Derivation::from_json(ADJUNCTION).expect("bundled proof parses")
    }

    /// `<>p -> q` entails `p -> []q` over its models.
    pub fn adjunction_converse() -> Derivation {
        Derivation::from_json(ADJUNCTION_CONVERSE).expect("bundled proof parses")
    }

    /// `[](p -> q) -> []p -> []q` as a theorem.
    pub fn kripke_schema() -> Derivation {
        Derivation::from_json(KRIPKE_SCHEMA).expect("bundled proof parses")
    }

    /// `(name, derivation)` for every bundled proof.
    pub fn all() -> Vec<(&'static str, Derivation)> {
        vec![
            ("adjunction", adjunction()),
            ("adjunction-converse", adjunction_converse()),
            ("kripke-schema", kripke_schema()),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn line(formula: &str, rule: Rule) -> Line {
        Line {
            formula: f(formula),
            rule,
        }
    }

    fn ax(id: &str) -> Rule {
        Rule::Axiom {
            schema: id.into(),
            substitution: None,
        }
    }

    #[test]
    fn bundled_proofs_check() {
        let c = check_derivation(&bundled::adjunction()).unwrap();
        assert_eq!(c.conclusion, f("<>p -> q"));
        assert_eq!(c.kind, CertificateKind::GlobalSequent);
        let c = check_derivation(&bundled::adjunction_converse()).unwrap();
        assert_eq!(c.conclusion, f("p -> []q"));
        let c = check_derivation(&bundled::kripke_schema()).unwrap();
        assert_eq!(c.conclusion, f("[](p -> q) -> []p -> []q"));
        assert_eq!(c.kind, CertificateKind::Theorem);
    }

    #[test]
    fn local_mode_blocks_necessity_on_premises() {
        let d = Derivation {
            premises: vec![f("p")],
            lines: vec![line("p", Rule::Premise(1)), line("[]p", Rule::Necessity(1))],
            goal: None,
            consequence: Consequence::Local,
            profile: Profile::IntuitionisticBase,
        };
        assert!(matches!(
            check_derivation(&d),
            Err(Error::InvalidStep { line: 2, .. })
        ));
        let global = Derivation {
            consequence: Consequence::Global,
            ..d
        };
        assert_eq!(check_derivation(&global).unwrap().kind, CertificateKind::GlobalSequent);
    }

    #[test]
    fn profile_gates_extensions() {
        let mut d = Derivation {
            premises: vec![],
            lines: vec![line("[]p -> [][]p", ax("s4"))],
            goal: None,
            consequence: Consequence::Local,
            profile: Profile::IntuitionisticBase,
        };
        assert!(check_derivation(&d).is_err());
        d.profile = Profile::S4;
        assert!(check_derivation(&d).is_ok());
    }

    #[test]
    fn explicit_substitution_must_match() {
        let mut sub = Substitution::new();
        sub.insert("A".into(), f("p"));
        let d = Derivation {
            premises: vec![],
            lines: vec![line(
                "[]q -> q",
                Rule::Axiom {
                    schema: "box-t".into(),
                    substitution: Some(sub),
                },
            )],
            goal: None,
            consequence: Consequence::Local,
            profile: Profile::IntuitionisticBase,
        };
        assert!(check_derivation(&d).is_err());
    }

    #[test]
    fn json_round_trip() {
        for (_, d) in bundled::all() {
            assert_eq!(Derivation::from_json(&d.to_json()).unwrap(), d);
        }
        assert!(Derivation::from_json(r#"{"lines":[],"extra":1}"#).is_err());
    }
}
