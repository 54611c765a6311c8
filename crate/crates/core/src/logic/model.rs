use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lattice::{ElementId, ForgetMode, Lattice, SubStructure};
use crate::logic::formula::Formula;
use crate::morphology::{dilate, erode};
use crate::structures::{make_lattice, GroundSet};
use crate::structuring::StructuringElement;

/// A lattice, a structuring element on it, and a valuation of propositions.
#[derive(Clone, Debug)]
pub struct Model {
    lattice: Lattice,
    se: StructuringElement,
    valuation: BTreeMap<String, SubStructure>,
    covered: bool,
}

impl Model {
    /// Builds a model, rejecting structuring elements that do not cover
    /// the lattice.
    pub fn new(
        lattice: Lattice,
        se: StructuringElement,
        valuation: BTreeMap<String, SubStructure>,
    ) -> Result<Self> {
        let m = Self::new_unchecked(lattice, se, valuation)?;
        if let Some(w) = m.se.cover_witness() {
            return Err(Error::NotCovered(m.lattice.show(&w)));
        }
        Ok(m)
    }

    /// Builds a model without requiring cover. Evaluation still works;
    /// axioms that rely on cover are then not expected to hold.
    pub fn new_unchecked(
        lattice: Lattice,
        se: StructuringElement,
        valuation: BTreeMap<String, SubStructure>,
    ) -> Result<Self> {
        if !lattice.same_lattice(se.lattice()) {
            return Err(Error::GroundMismatch);
        }
        for d in valuation.values() {
            lattice.check(d)?;
        }
        let covered = se.is_covered();
        Ok(Model {
            lattice,
            se,
            valuation,
            covered,
        })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn se(&self) -> &StructuringElement {
        &self.se
    }

    pub fn valuation(&self) -> &BTreeMap<String, SubStructure> {
        &self.valuation
    }

    pub fn is_covered(&self) -> bool {
        self.covered
    }

    /// Same lattice and structuring element, different valuation.
    pub fn with_valuation(&self, valuation: BTreeMap<String, SubStructure>) -> Result<Self> {
        for d in valuation.values() {
            self.lattice.check(d)?;
        }
        Ok(Model {
            valuation,
            ..self.clone()
        })
    }
}

/// The denotation of `phi`: `□` is erosion, `◇` dilation, `⇒` the Heyting
/// exponential and `¬` the pseudo-complement.
pub fn eval(model: &Model, phi: &Formula) -> Result<SubStructure> {
    let l = &model.lattice;
    Ok(match phi {
        Formula::Top => l.top(),
        Formula::Bot => l.bottom(),
        Formula::Prop(p) => model
            .valuation
            .get(p)
            .cloned()
            .ok_or_else(|| Error::UnknownProposition(p.clone()))?,
        Formula::Not(a) => l.complement(&eval(model, a)?)?,
        Formula::And(a, b) => l.meet(&eval(model, a)?, &eval(model, b)?)?,
        Formula::Or(a, b) => l.join(&eval(model, a)?, &eval(model, b)?)?,
        Formula::Implies(a, b) => l.exponential(&eval(model, b)?, &eval(model, a)?)?,
        Formula::Box(a) => erode(l, &model.se, &eval(model, a)?)?,
        Formula::Diamond(a) => dilate(l, &model.se, &eval(model, a)?)?,
    })
}

pub fn satisfies(model: &Model, phi: &Formula) -> Result<bool> {
    Ok(eval(model, phi)? == model.lattice.top())
}

/// Every model satisfying all of `premises` satisfies `phi`.
pub fn entails_on_models(models: &[Model], premises: &[Formula], phi: &Formula) -> Result<bool> {
    for m in models {
        let mut applies = true;
        for g in premises {
            if !satisfies(m, g)? {
                applies = false;
                break;
            }
        }
        if applies && !satisfies(m, phi)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The powerset model of a Kripke frame: `b(q) = {q′ | (q, q′) ∈ R}`.
/// Non-reflexive relations do not cover the powerset and are rejected
/// unless `unchecked` is set.
pub fn kripke_to_model<W, P, V>(
    worlds: &[W],
    relation: &[(W, W)],
    valuation: &[(P, V)],
    unchecked: bool,
) -> Result<Model>
where
    W: AsRef<str>,
    P: AsRef<str>,
    V: AsRef<[W]>,
{
    let lattice = make_lattice(
        GroundSet::new(worlds.iter().map(|w| w.as_ref().to_string()))?,
        ForgetMode::Elements,
    )?;
    let world = |w: &W| -> Result<ElementId> {
        lattice
            .element(w.as_ref())
            .map_err(|_| Error::UnknownWorld(w.as_ref().to_string()))
    };
    let mut pairs = Vec::with_capacity(relation.len());
    for (q, r) in relation {
        world(q)?;
        world(r)?;
        pairs.push((q.as_ref().to_string(), r.as_ref().to_string()));
    }
    let se = StructuringElement::relation(&lattice, pairs)?;
    let mut val = BTreeMap::new();
    for (p, ws) in valuation {
        let atoms = ws
            .as_ref()
            .iter()
            .map(|w| lattice.atom_of(&world(w)?))
            .collect::<Result<Vec<_>>>()?;
        val.insert(p.as_ref().to_string(), lattice.sup(&atoms)?);
    }
    if unchecked {
        Model::new_unchecked(lattice, se, val)
    } else {
        Model::new(lattice, se, val)
    }
}
