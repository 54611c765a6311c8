//! Structuring elements: total maps from carrier elements of the top
//! object to substructures, with their pointwise lattice, the `⋆` monoid
//! and cover checking.

use rand::Rng;

use crate::error::{Error, Result};
use crate::lattice::{ElementId, Lattice, SubStructure};
use crate::structures::{builtin_se, Builtin, Ground};

#[derive(Clone, Debug)]
pub struct StructuringElement {
    lattice: Lattice,
    table: Vec<SubStructure>,
    origin: Option<Builtin>,
    claims_cover: bool,
}

impl PartialEq for StructuringElement {
    fn eq(&self, other: &Self) -> bool {
        self.lattice.same_lattice(&other.lattice) && self.table == other.table
    }
}

impl Eq for StructuringElement {}

impl StructuringElement {
    pub(crate) fn from_parts(
        lattice: Lattice,
        table: Vec<SubStructure>,
        origin: Option<Builtin>,
    ) -> Result<Self> {
        if table.len() != lattice.domain_len() {
            return Err(Error::Input(format!(
                "structuring element has {} images for {} carrier elements",
                table.len(),
                lattice.domain_len()
            )));
        }
        for d in &table {
            lattice.check(d)?;
        }
        Ok(StructuringElement {
            lattice,
            table,
            origin,
            claims_cover: false,
        })
    }

    /// Builds a structuring element from explicit images. Every carrier
    /// element of the top object must receive exactly one image.
    pub fn from_table<I>(lattice: &Lattice, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ElementId, SubStructure)>,
    {
        let mut slots: Vec<Option<SubStructure>> = vec![None; lattice.domain_len()];
        for (x, d) in entries {
            let p = lattice.position_of(&x)?;
            lattice.check(&d)?;
            if slots[p].replace(d).is_some() {
                return Err(Error::Input(format!("`{x}` is mapped twice")));
            }
        }
        let table = slots
            .into_iter()
            .enumerate()
            .map(|(p, d)| {
                d.ok_or_else(|| {
                    Error::Input(format!(
                        "structuring element is not defined on `{}`",
                        lattice.domain_element(p)
                    ))
                })
            })
            .collect::<Result<_>>()?;
        Self::from_parts(lattice.clone(), table, None)
    }

    pub fn from_fn<F>(lattice: &Lattice, mut f: F) -> Result<Self>
    where
        F: FnMut(&ElementId) -> SubStructure,
    {
        let table = lattice.domain().iter().map(&mut f).collect();
        Self::from_parts(lattice.clone(), table, None)
    }

    /// Powerset structuring element with `y ∈ b(x)` for every pair `(x, y)`.
    pub fn relation<I, S, T>(lattice: &Lattice, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, T)>,
        S: Into<String>,
        T: Into<String>,
    {
        let pairs = pairs
            .into_iter()
            .map(|(x, y)| (x.into(), y.into()))
            .collect();
        builtin_se(lattice, &Builtin::Relation(pairs))
    }

    pub fn builtin(lattice: &Lattice, name: &str) -> Result<Self> {
        builtin_se(lattice, &Builtin::from_name(name)?)
    }

    /// `sgt : x ↦ c_x`.
    pub fn identity(lattice: &Lattice) -> Result<Self> {
        builtin_se(lattice, &Builtin::Identity)
    }

    pub fn full(lattice: &Lattice) -> Self {
        builtin_se(lattice, &Builtin::Full).expect("full is defined everywhere")
    }

    pub fn empty(lattice: &Lattice) -> Self {
        builtin_se(lattice, &Builtin::Empty).expect("empty is defined everywhere")
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn origin(&self) -> Option<&Builtin> {
        self.origin.as_ref()
    }

    /// Marks the element as claimed to cover its lattice. The claim is
    /// advisory; [`StructuringElement::is_covered`] always recomputes.
    pub fn with_claims_cover(mut self, claims: bool) -> Self {
        self.claims_cover = claims;
        self
    }

    pub fn claims_cover(&self) -> bool {
        self.claims_cover
    }

    pub fn apply(&self, x: &ElementId) -> Result<&SubStructure> {
        Ok(&self.table[self.lattice.position_of(x)?])
    }

    pub(crate) fn at(&self, pos: usize) -> &SubStructure {
        &self.table[pos]
    }

    /// `(x, b(x))` in canonical carrier order.
    pub fn entries(&self) -> impl Iterator<Item = (ElementId, &SubStructure)> + '_ {
        self.lattice.domain().into_iter().zip(self.table.iter())
    }

    fn same(&self, other: &Self) -> Result<()> {
        if self.lattice.same_lattice(&other.lattice) {
            Ok(())
        } else {
            Err(Error::GroundMismatch)
        }
    }

    /// Pointwise order `b ⪯ b′`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.same(other)?;
        Ok(self
            .table
            .iter()
            .zip(&other.table)
            .all(|(a, b)| self.lattice.leq_unchecked(a, b)))
    }

    /// Pointwise supremum; the empty family gives `emp`.
    pub fn sup(lattice: &Lattice, family: &[&StructuringElement]) -> Result<Self> {
        let mut out = Self::empty(lattice);
        for b in family {
            out.same(b)?;
            for (slot, img) in out.table.iter_mut().zip(&b.table) {
                *slot = lattice.join(slot, img)?;
            }
        }
        Ok(out)
    }

    /// Pointwise infimum; the empty family gives `full`.
    pub fn inf(lattice: &Lattice, family: &[&StructuringElement]) -> Result<Self> {
        let mut out = Self::full(lattice);
        for b in family {
            out.same(b)?;
            for (slot, img) in out.table.iter_mut().zip(&b.table) {
                *slot = lattice.meet(slot, img)?;
            }
        }
        Ok(out)
    }

    /// `(b ⋆ b′)(x) = ⋁{b′(y) | y ∈ U(b(x))}`.
    pub fn compose(&self, then: &Self) -> Result<Self> {
        self.same(then)?;
        let l = &self.lattice;
        let table = self
            .table
            .iter()
            .map(|bx| l.sup(l.carrier_positions(bx).map(|p| then.at(p))))
            .collect::<Result<_>>()?;
        Self::from_parts(l.clone(), table, None)
    }

    /// Powerset transpose `b̌(x) = {y | x ∈ b(y)}`.
    pub fn transpose(&self) -> Result<Self> {
        if !matches!(self.lattice.ground(), Ground::Set(_)) {
            return Err(Error::UnsupportedStructure("powerset lattices".into()));
        }
        let l = &self.lattice;
        let n = l.domain_len();
        let mut images: Vec<Vec<usize>> = vec![Vec::new(); n];
        for y in 0..n {
            for x in l.carrier_positions(&self.table[y]) {
                images[x].push(l.domain_component(y));
            }
        }
        let table = images.into_iter().map(|cs| l.closure_of(cs)).collect();
        Self::from_parts(l.clone(), table, None)
    }

    /// Whether `d ≤ ⋁{b(v) | v ∈ U(d)}`.
    pub fn covers(&self, d: &SubStructure) -> Result<bool> {
        self.lattice.check(d)?;
        Ok(self.lattice.leq_unchecked(d, &self.spread(d)))
    }

    fn spread(&self, d: &SubStructure) -> SubStructure {
        self.lattice
            .sup(self.lattice.carrier_positions(d).map(|p| self.at(p)))
            .expect("images share the ground")
    }

    /// Whether every substructure is covered. It suffices to test the
    /// principal substructures (a component with everything it requires):
    /// any `d` is the union of those, and each one's carrier lies in `U(d)`.
    pub fn is_covered(&self) -> bool {
        self.cover_witness().is_none()
    }

    /// A substructure that is not covered, if any.
    pub fn cover_witness(&self) -> Option<SubStructure> {
        let l = &self.lattice;
        (0..l.components().len())
            .map(|c| l.closure_of([c]))
            .find(|d| !l.leq_unchecked(d, &self.spread(d)))
    }

    /// Random images drawn per carrier element.
    pub fn random<R: Rng + ?Sized>(lattice: &Lattice, rng: &mut R) -> Self {
        let table = (0..lattice.domain_len())
            .map(|_| lattice.random_subobject(rng))
            .collect();
        Self::from_parts(lattice.clone(), table, None).expect("images share the ground")
    }

    /// Random powerset relation; with `reflexive` every `x ∈ b(x)`.
    pub fn random_relation<R: Rng + ?Sized>(
        lattice: &Lattice,
        rng: &mut R,
        reflexive: bool,
    ) -> Result<Self> {
        if !matches!(lattice.ground(), Ground::Set(_)) {
            return Err(Error::UnsupportedStructure("powerset lattices".into()));
        }
        let dom = lattice.domain();
        let mut pairs = Vec::new();
        for x in &dom {
            for y in &dom {
                if (reflexive && x == y) || rng.gen_bool(0.5) {
                    pairs.push((x.id.clone(), y.id.clone()));
                }
            }
        }
        builtin_se(lattice, &Builtin::Relation(pairs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::lattice::ForgetMode;

    #[test]
    fn apply_examples() {
        let s = fixtures::fix_set();
        let line = StructuringElement::builtin(&s, "line").unwrap();
        let zero = ElementId::element("0");
        assert_eq!(s.show(line.apply(&zero).unwrap()), "{0,1}");
        assert_eq!(StructuringElement::full(&s).apply(&zero).unwrap(), &s.top());
        assert_eq!(StructuringElement::empty(&s).apply(&zero).unwrap(), &s.bottom());
        assert!(matches!(
            line.apply(&ElementId::element("7")),
            Err(Error::UnknownElement(_))
        ));
    }

    #[test]
    fn algebra_examples() {
        let s = fixtures::fix_set();
        let line = StructuringElement::builtin(&s, "line").unwrap();
        let sgt = StructuringElement::identity(&s).unwrap();
        let emp = StructuringElement::empty(&s);
        let full = StructuringElement::full(&s);
        assert!(emp.leq(&line).unwrap() && line.leq(&full).unwrap());
        assert_eq!(StructuringElement::sup(&s, &[&sgt, &emp]).unwrap(), sgt);
        assert_eq!(StructuringElement::inf(&s, &[&line, &sgt]).unwrap(), sgt);
        let twice = line.compose(&line).unwrap();
        assert_eq!(s.show(twice.apply(&ElementId::element("2")).unwrap()), "{0,1,2,3,4}");
        assert_eq!(line.compose(&sgt).unwrap(), line);
        assert_eq!(sgt.compose(&line).unwrap(), line);
    }

    #[test]
    fn identity_needs_atoms() {
        let le = fixtures::p4(ForgetMode::Edges);
        let sgt = StructuringElement::identity(&le).unwrap();
        assert_eq!(
            sgt.apply(&ElementId::edge("a-b")).unwrap(),
            &fixtures::subgraph(&le, &["a", "b"], &[("a", "b")])
        );
    }

    #[test]
    fn cover_examples() {
        let s = fixtures::fix_set();
        assert!(StructuringElement::builtin(&s, "line").unwrap().is_covered());
        let two = fixtures::powerset(&["0", "1"]);
        let swap = StructuringElement::relation(&two, [("0", "1"), ("1", "0")]).unwrap();
        assert!(!swap.is_covered());
        let p4 = fixtures::p4(ForgetMode::Vertices);
        assert!(StructuringElement::builtin(&p4, "closed-neighborhood").unwrap().is_covered());
        let le = fixtures::p4(ForgetMode::Edges);
        assert!(!StructuringElement::builtin(&le, "edge-neighborhood").unwrap().is_covered());
    }

    #[test]
    fn transpose_examples() {
        let two = fixtures::powerset(&["0", "1"]);
        let b = StructuringElement::relation(&two, [("0", "0"), ("0", "1"), ("1", "1")]).unwrap();
        let t = b.transpose().unwrap();
        assert_eq!(two.show(t.apply(&ElementId::element("0")).unwrap()), "{0}");
        assert_eq!(two.show(t.apply(&ElementId::element("1")).unwrap()), "{0,1}");
        let s = fixtures::fix_set();
        let line = StructuringElement::builtin(&s, "line").unwrap();
        assert_eq!(line.transpose().unwrap(), line);
        let p4 = fixtures::p4(ForgetMode::Vertices);
        assert!(matches!(
            StructuringElement::full(&p4).transpose(),
            Err(Error::UnsupportedStructure(_))
        ));
    }

    #[test]
    fn table_must_be_total() {
        let two = fixtures::powerset(&["0", "1"]);
        let err = StructuringElement::from_table(&two, [(ElementId::element("0"), two.top())]);
        assert!(matches!(err, Err(Error::Input(_))));
    }
}
