//! Finite lattices of substructures.
//!
//! Every ground object (set, graph, hypergraph, simplicial complex) is
//! compiled into a finite poset of *components*: an edge sits above its
//! endpoints, a hyperedge above its members, a face above its facets. A
//! substructure is then exactly a down-closed set of components, so the
//! lattice operations are plain union and intersection and the Heyting
//! implication has a direct description in terms of principal down-sets.
//!
//! The forget mode selects which component kind the carrier functor
//! extracts; the lattice itself does not depend on it.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::structures::{Ground, SubView};

/// Default cap on the number of subobjects an enumeration may produce.
pub const DEFAULT_ENUMERATION_BOUND: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementKind {
    Element,
    Vertex,
    Edge,
    Hyperedge,
    Face,
}

impl fmt::Display for ElementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ElementKind::Element => "element",
            ElementKind::Vertex => "vertex",
            ElementKind::Edge => "edge",
            ElementKind::Hyperedge => "hyperedge",
            ElementKind::Face => "face",
        };
        f.write_str(s)
    }
}

/// Compares ids numerically when both parse as integers, otherwise
/// lexicographically; integers sort before other ids.
pub fn id_cmp(a: &str, b: &str) -> Ordering {
    match (a.parse::<i64>(), b.parse::<i64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        (Err(_), Err(_)) => a.cmp(b),
    }
}

/// An element of some carrier: a set element, vertex, edge, hyperedge or face.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ElementId {
    pub kind: ElementKind,
    pub id: String,
}

impl ElementId {
    pub fn new(kind: ElementKind, id: impl Into<String>) -> Self {
        ElementId { kind, id: id.into() }
    }

    pub fn element(id: impl Into<String>) -> Self {
        Self::new(ElementKind::Element, id)
    }

    pub fn vertex(id: impl Into<String>) -> Self {
        Self::new(ElementKind::Vertex, id)
    }

    pub fn edge(id: impl Into<String>) -> Self {
        Self::new(ElementKind::Edge, id)
    }

    pub fn hyperedge(id: impl Into<String>) -> Self {
        Self::new(ElementKind::Hyperedge, id)
    }
}

impl Ord for ElementId {
    fn cmp(&self, other: &Self) -> Ordering {
        self.kind
            .cmp(&other.kind)
            .then_with(|| id_cmp(&self.id, &other.id))
    }
}

impl PartialOrd for ElementId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id)
    }
}

/// Which carrier the forgetful functor extracts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ForgetMode {
    Elements,
    Vertices,
    Edges,
    Hyperedges,
}

impl ForgetMode {
    pub fn carrier_kind(self) -> ElementKind {
        match self {
            ForgetMode::Elements => ElementKind::Element,
            ForgetMode::Vertices => ElementKind::Vertex,
            ForgetMode::Edges => ElementKind::Edge,
            ForgetMode::Hyperedges => ElementKind::Hyperedge,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ForgetMode::Elements => "elements",
            ForgetMode::Vertices => "vertices",
            ForgetMode::Edges => "edges",
            ForgetMode::Hyperedges => "hyperedges",
        }
    }
}

impl std::str::FromStr for ForgetMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "elements" | "element" => Ok(ForgetMode::Elements),
            "vertices" | "vertex" => Ok(ForgetMode::Vertices),
            "edges" | "edge" => Ok(ForgetMode::Edges),
            "hyperedges" | "hyperedge" => Ok(ForgetMode::Hyperedges),
            other => Err(Error::Input(format!("unknown forget mode `{other}`"))),
        }
    }
}

impl fmt::Display for ForgetMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The image of a substructure under the forgetful functor.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Carrier(pub BTreeSet<ElementId>);

impl Carrier {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: &ElementId) -> bool {
        self.0.contains(x)
    }

    pub fn is_subset(&self, other: &Carrier) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = &ElementId> {
        self.0.iter()
    }

    pub fn ids(&self) -> Vec<&str> {
        self.0.iter().map(|e| e.id.as_str()).collect()
    }
}

impl FromIterator<ElementId> for Carrier {
    fn from_iter<T: IntoIterator<Item = ElementId>>(iter: T) -> Self {
        Carrier(iter.into_iter().collect())
    }
}

/// A substructure of a fixed ground object. Immutable; equality is
/// structural and includes the identity of the ground.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubStructure {
    ground: u64,
    bits: FixedBitSet,
}

impl SubStructure {
    pub fn ground_id(&self) -> u64 {
        self.ground
    }

    /// Number of components (vertices, edges, faces, ...) present.
    pub fn size(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub(crate) fn bits(&self) -> &FixedBitSet {
        &self.bits
    }
}

/// Compiled component poset of a ground object.
#[derive(Debug)]
pub(crate) struct GroundData {
    pub(crate) id: u64,
    pub(crate) ground: Ground,
    pub(crate) elements: Vec<ElementId>,
    /// Direct requirements; always indices smaller than the component's own.
    pub(crate) requires: Vec<Vec<usize>>,
    /// Principal down-set of each component, itself included.
    pub(crate) down: Vec<FixedBitSet>,
    /// Direct dependents (inverse of `requires`).
    pub(crate) dependents: Vec<Vec<usize>>,
    pub(crate) index: HashMap<ElementId, usize>,
}

impl GroundData {
    pub(crate) fn new(
        id: u64,
        ground: Ground,
        elements: Vec<ElementId>,
        requires: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = elements.len();
        let mut index = HashMap::with_capacity(n);
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(Error::InvalidGround(format!(
                    "duplicate {} id `{}`",
                    e.kind, e.id
                )));
            }
        }
        let mut down: Vec<FixedBitSet> = Vec::with_capacity(n);
        let mut dependents = vec![Vec::new(); n];
        for (i, reqs) in requires.iter().enumerate() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(i);
            for &r in reqs {
                debug_assert!(r < i, "requirements must precede dependents");
                set.union_with(&down[r]);
                dependents[r].push(i);
            }
            down.push(set);
        }
        Ok(GroundData {
            id,
            ground,
            elements,
            requires,
            down,
            dependents,
            index,
        })
    }

    pub(crate) fn len(&self) -> usize {
        self.elements.len()
    }
}

#[derive(Debug)]
struct CarrierView {
    forget: ForgetMode,
    /// Component indices of the carrier kind, in canonical order.
    domain: Vec<usize>,
    mask: FixedBitSet,
    /// Component index -> position in `domain`.
    position: Vec<Option<usize>>,
}

/// A finite complete lattice of substructures of one ground object,
/// together with the carrier extraction selected by its forget mode.
#[derive(Clone, Debug)]
pub struct Lattice {
    data: Arc<GroundData>,
    view: Arc<CarrierView>,
    bound: usize,
}

impl Lattice {
    pub(crate) fn from_parts(data: GroundData, forget: ForgetMode) -> Self {
        let kind = forget.carrier_kind();
        let n = data.len();
        let mut mask = FixedBitSet::with_capacity(n);
        let mut position = vec![None; n];
        let mut domain = Vec::new();
        for (i, e) in data.elements.iter().enumerate() {
            if e.kind == kind {
                position[i] = Some(domain.len());
                domain.push(i);
                mask.insert(i);
            }
        }
        Lattice {
            data: Arc::new(data),
            view: Arc::new(CarrierView {
                forget,
                domain,
                mask,
                position,
            }),
            bound: DEFAULT_ENUMERATION_BOUND,
        }
    }

    /// Same ground and substructures, different carrier functor.
    pub(crate) fn reforget(&self, forget: ForgetMode) -> Self {
        let kind = forget.carrier_kind();
        let n = self.data.len();
        let mut mask = FixedBitSet::with_capacity(n);
        let mut position = vec![None; n];
        let mut domain = Vec::new();
        for (i, e) in self.data.elements.iter().enumerate() {
            if e.kind == kind {
                position[i] = Some(domain.len());
                domain.push(i);
                mask.insert(i);
            }
        }
        Lattice {
            data: Arc::clone(&self.data),
            view: Arc::new(CarrierView {
                forget,
                domain,
                mask,
                position,
            }),
            bound: self.bound,
        }
    }

    /// Overrides the enumeration bound (default 2^20 subobjects).
    pub fn with_bound(mut self, bound: usize) -> Self {
        self.bound = bound;
        self
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn ground(&self) -> &Ground {
        &self.data.ground
    }

    pub fn ground_id(&self) -> u64 {
        self.data.id
    }

    pub fn forget_mode(&self) -> ForgetMode {
        self.view.forget
    }

    /// All components of the ground in canonical order.
    pub fn components(&self) -> &[ElementId] {
        &self.data.elements
    }

    pub(crate) fn data(&self) -> &GroundData {
        &self.data
    }

    pub(crate) fn same_lattice(&self, other: &Lattice) -> bool {
        self.data.id == other.data.id && self.view.forget == other.view.forget
    }

    pub(crate) fn make(&self, bits: FixedBitSet) -> SubStructure {
        SubStructure {
            ground: self.data.id,
            bits,
        }
    }

    fn empty_bits(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.data.len())
    }

    pub fn check(&self, d: &SubStructure) -> Result<()> {
        if d.ground != self.data.id || d.bits.len() != self.data.len() {
            return Err(Error::GroundMismatch);
        }
        Ok(())
    }

    pub fn top(&self) -> SubStructure {
        let mut bits = self.empty_bits();
        bits.insert_range(..);
        self.make(bits)
    }

    pub fn bottom(&self) -> SubStructure {
        self.make(self.empty_bits())
    }

    /// Componentwise inclusion.
    pub fn leq(&self, a: &SubStructure, b: &SubStructure) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        Ok(a.bits.is_subset(&b.bits))
    }

    pub(crate) fn leq_unchecked(&self, a: &SubStructure, b: &SubStructure) -> bool {
        a.bits.is_subset(&b.bits)
    }

    /// Least upper bound; the empty family yields the bottom element.
    pub fn sup<'a, I>(&self, family: I) -> Result<SubStructure>
    where
        I: IntoIterator<Item = &'a SubStructure>,
    {
        let mut bits = self.empty_bits();
        for d in family {
            self.check(d)?;
            bits.union_with(&d.bits);
        }
        Ok(self.make(bits))
    }

    /// Greatest lower bound; the empty family yields the top element.
    pub fn inf<'a, I>(&self, family: I) -> Result<SubStructure>
    where
        I: IntoIterator<Item = &'a SubStructure>,
    {
        let mut bits = self.empty_bits();
        bits.insert_range(..);
        for d in family {
            self.check(d)?;
            bits.intersect_with(&d.bits);
        }
        Ok(self.make(bits))
    }

    pub fn join(&self, a: &SubStructure, b: &SubStructure) -> Result<SubStructure> {
        self.sup([a, b])
    }

    pub fn meet(&self, a: &SubStructure, b: &SubStructure) -> Result<SubStructure> {
        self.inf([a, b])
    }

    /// Carrier elements of `d` for the lattice's forget mode.
    pub fn carrier(&self, d: &SubStructure) -> Result<Carrier> {
        self.check(d)?;
        Ok(self
            .carrier_positions(d)
            .map(|p| self.data.elements[self.view.domain[p]].clone())
            .collect())
    }

    /// Positions (into [`Lattice::domain`]) of the carrier elements of `d`.
    pub(crate) fn carrier_positions<'a>(
        &'a self,
        d: &'a SubStructure,
    ) -> impl Iterator<Item = usize> + 'a {
        d.bits
            .ones()
            .filter_map(move |i| self.view.position[i])
    }

    /// The carrier of the top element, in canonical order. Structuring
    /// elements are total maps over this list.
    pub fn domain(&self) -> Vec<ElementId> {
        self.view
            .domain
            .iter()
            .map(|&i| self.data.elements[i].clone())
            .collect()
    }

    pub fn domain_len(&self) -> usize {
        self.view.domain.len()
    }

    pub(crate) fn domain_component(&self, pos: usize) -> usize {
        self.view.domain[pos]
    }

    pub(crate) fn domain_element(&self, pos: usize) -> &ElementId {
        &self.data.elements[self.view.domain[pos]]
    }

    pub fn position_of(&self, x: &ElementId) -> Result<usize> {
        self.data
            .index
            .get(x)
            .and_then(|&i| self.view.position[i])
            .ok_or_else(|| Error::UnknownElement(x.id.clone()))
    }

    /// Looks up a carrier element by its id alone.
    pub fn element(&self, id: &str) -> Result<ElementId> {
        let x = ElementId::new(self.view.forget.carrier_kind(), id);
        self.position_of(&x).map(|_| x)
    }

    pub fn contains(&self, d: &SubStructure, x: &ElementId) -> Result<bool> {
        self.check(d)?;
        Ok(self
            .data
            .index
            .get(x)
            .is_some_and(|&i| d.bits.contains(i)))
    }

    /// Heyting implication `c => d`: the largest substructure `e` with
    /// `e ∧ c ≤ d`. On down-set lattices this is the set of components
    /// whose principal down-set meets `c` only inside `d`.
    pub fn exponential(&self, d: &SubStructure, c: &SubStructure) -> Result<SubStructure> {
        self.check(d)?;
        self.check(c)?;
        let mut bits = self.empty_bits();
        for (i, down) in self.data.down.iter().enumerate() {
            let escapes = down
                .intersection(&c.bits)
                .any(|j| !d.bits.contains(j));
            if !escapes {
                bits.insert(i);
            }
        }
        Ok(self.make(bits))
    }

    /// Pseudo-complement `∅^d`.
    pub fn complement(&self, d: &SubStructure) -> Result<SubStructure> {
        self.exponential(&self.bottom(), d)
    }

    /// A down-set lattice is Boolean exactly when its component poset is
    /// an antichain.
    pub fn is_boolean(&self) -> bool {
        self.boolean_witness().is_none()
    }

    /// Some `d` with `d ∨ ¬d ≠ t`, if one exists.
    pub fn boolean_witness(&self) -> Option<SubStructure> {
        self.data
            .requires
            .iter()
            .position(|r| !r.is_empty())
            .map(|i| {
                let lowest = self.data.down[i].ones().next().expect("nonempty down-set");
                self.make(self.data.down[lowest].clone())
            })
    }

    /// The least substructure whose carrier is exactly `{x}`.
    pub fn atom_of(&self, x: &ElementId) -> Result<SubStructure> {
        let pos = self.position_of(x)?;
        self.atom_at(pos)
    }

    pub(crate) fn atom_at(&self, pos: usize) -> Result<SubStructure> {
        let comp = self.view.domain[pos];
        let down = &self.data.down[comp];
        if down.intersection(&self.view.mask).count() != 1 {
            return Err(Error::NoAtoms(format!(
                "the down-closure of `{}` carries more than one element",
                self.data.elements[comp]
            )));
        }
        Ok(self.make(down.clone()))
    }

    /// True when every carrier element has an atom.
    pub fn has_atoms(&self) -> bool {
        (0..self.domain_len()).all(|p| self.atom_at(p).is_ok())
    }

    /// The largest substructure whose carrier positions all satisfy `keep`.
    pub(crate) fn greatest_with_carrier(&self, keep: &FixedBitSet) -> SubStructure {
        let mut bits = self.empty_bits();
        for (i, down) in self.data.down.iter().enumerate() {
            let ok = down
                .intersection(&self.view.mask)
                .all(|j| keep.contains(self.view.position[j].expect("carrier component")));
            if ok {
                bits.insert(i);
            }
        }
        self.make(bits)
    }

    /// The down-closure of an arbitrary set of components.
    pub(crate) fn closure_of(&self, comps: impl IntoIterator<Item = usize>) -> SubStructure {
        let mut bits = self.empty_bits();
        for c in comps {
            bits.union_with(&self.data.down[c]);
        }
        self.make(bits)
    }

    /// Builds a substructure from components, failing if the set is not
    /// down-closed.
    pub(crate) fn downset_of_components(&self, comps: &[usize]) -> Result<SubStructure> {
        let mut bits = self.empty_bits();
        for &c in comps {
            bits.insert(c);
        }
        for c in bits.ones() {
            if let Some(&missing) = self.data.requires[c].iter().find(|&&r| !bits.contains(r)) {
                return Err(Error::NotASubobject(format!(
                    "{} `{}` requires {} `{}`",
                    self.data.elements[c].kind,
                    self.data.elements[c].id,
                    self.data.elements[missing].kind,
                    self.data.elements[missing].id
                )));
            }
        }
        Ok(self.make(bits))
    }

    pub(crate) fn component_index(&self, x: &ElementId) -> Option<usize> {
        self.data.index.get(x).copied()
    }

    /// Every substructure exactly once. The order is binary counting over
    /// the canonical component order (component 0 is the low bit), so for a
    /// powerset over `{0,1}` it is `∅, {0}, {1}, {0,1}`.
    pub fn enumerate_subobjects(&self) -> Result<Vec<SubStructure>> {
        let n = self.data.len();
        let mut out = Vec::new();
        let mut current = self.empty_bits();
        // `forced[i]` counts included components that require i.
        let mut forced = vec![0usize; n];
        self.enumerate_rec(n, &mut current, &mut forced, &mut out)?;
        Ok(out)
    }

    fn enumerate_rec(
        &self,
        remaining: usize,
        current: &mut FixedBitSet,
        forced: &mut Vec<usize>,
        out: &mut Vec<SubStructure>,
    ) -> Result<()> {
        if remaining == 0 {
            if out.len() >= self.bound {
                return Err(Error::TooLarge { bound: self.bound });
            }
            out.push(self.make(current.clone()));
            return Ok(());
        }
        let c = remaining - 1;
        if forced[c] == 0 {
            self.enumerate_rec(c, current, forced, out)?;
        }
        current.insert(c);
        for &r in &self.data.requires[c] {
            forced[r] += 1;
        }
        let result = self.enumerate_rec(c, current, forced, out);
        for &r in &self.data.requires[c] {
            forced[r] -= 1;
        }
        current.set(c, false);
        result
    }

    /// Draws a substructure by independent fair coin flips per component,
    /// dropping any component whose requirements were not drawn.
    pub fn random_subobject<R: Rng + ?Sized>(&self, rng: &mut R) -> SubStructure {
        let n = self.data.len();
        let mut bits = self.empty_bits();
        for c in 0..n {
            if rng.gen_bool(0.5) && self.data.requires[c].iter().all(|&r| bits.contains(r)) {
                bits.insert(c);
            }
        }
        self.make(bits)
    }

    /// Structured view of a substructure (vertex and edge lists, ...).
    pub fn describe(&self, d: &SubStructure) -> Result<SubView> {
        self.check(d)?;
        Ok(crate::structures::describe(self, d))
    }

    /// Compact human-readable rendering, e.g. `({a,b},{a-b})`.
    pub fn show(&self, d: &SubStructure) -> String {
        match self.describe(d) {
            Ok(view) => view.to_string(),
            Err(_) => "<foreign substructure>".to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn id_order_is_numeric_first() {
        let mut ids = vec!["10", "b", "2", "a", "-1"];
        ids.sort_by(|a, b| id_cmp(a, b));
        assert_eq!(ids, vec!["-1", "2", "10", "a", "b"]);
    }

    #[test]
    fn bounds_of_empty_families() {
        let l = fixtures::fix_set();
        assert_eq!(l.sup([]).unwrap(), l.bottom());
        assert_eq!(l.inf([]).unwrap(), l.top());
    }

    #[test]
    fn powerset_enumeration_order() {
        let l = fixtures::powerset(&["0", "1"]);
        let shown: Vec<String> = l
            .enumerate_subobjects()
            .unwrap()
            .iter()
            .map(|d| l.show(d))
            .collect();
        assert_eq!(shown, vec!["{}", "{0}", "{1}", "{0,1}"]);
    }

    #[test]
    fn enumeration_respects_bound() {
        let l = fixtures::fix_set().with_bound(31);
        assert_eq!(
            l.enumerate_subobjects().unwrap_err(),
            Error::TooLarge { bound: 31 }
        );
        let l = fixtures::fix_set().with_bound(32);
        assert_eq!(l.enumerate_subobjects().unwrap().len(), 32);
    }

    #[test]
    fn order_rejects_foreign_ground() {
        let a = fixtures::fix_set();
        let b = fixtures::p4(ForgetMode::Vertices);
        assert_eq!(a.leq(&a.top(), &b.top()), Err(Error::GroundMismatch));
        assert_eq!(a.sup([&b.bottom()]), Err(Error::GroundMismatch));
    }

    #[test]
    fn graph_order_is_componentwise() {
        let l = fixtures::p4(ForgetMode::Vertices);
        let with_edge = fixtures::subgraph(&l, &["a", "b"], &[("a", "b")]);
        let without = fixtures::subgraph(&l, &["a", "b"], &[]);
        assert!(!l.leq(&with_edge, &without).unwrap());
        assert!(l.leq(&without, &with_edge).unwrap());
        assert!(l.leq(&with_edge, &with_edge).unwrap());
    }

    #[test]
    fn carriers_follow_forget_mode() {
        let lv = fixtures::p4(ForgetMode::Vertices);
        let le = fixtures::p4(ForgetMode::Edges);
        let g = fixtures::subgraph(&lv, &["a", "b"], &[("a", "b")]);
        assert_eq!(lv.carrier(&g).unwrap().ids(), vec!["a", "b"]);
        assert_eq!(le.carrier(&g).unwrap().ids(), vec!["a-b"]);
        let lone = fixtures::subgraph(&le, &["a"], &[]);
        assert!(le.carrier(&lone).unwrap().is_empty());
    }

    #[test]
    fn exponential_examples() {
        let l = fixtures::powerset(&["0", "1", "2"]);
        let d = fixtures::set(&l, &["1"]);
        let c = fixtures::set(&l, &["0", "1"]);
        assert_eq!(l.show(&l.exponential(&d, &c).unwrap()), "{1,2}");
        assert_eq!(l.exponential(&d, &l.bottom()).unwrap(), l.top());
        assert_eq!(l.show(&l.complement(&fixtures::set(&l, &["0"])).unwrap()), "{1,2}");
        assert_eq!(l.complement(&l.top()).unwrap(), l.bottom());

        let g = fixtures::p4(ForgetMode::Vertices);
        let b = fixtures::subgraph(&g, &["b"], &[]);
        let expected = fixtures::subgraph(&g, &["a", "c", "d"], &[("c", "d")]);
        assert_eq!(g.exponential(&g.bottom(), &b).unwrap(), expected);
        assert_eq!(g.complement(&b).unwrap(), expected);
    }

    #[test]
    fn boolean_detection() {
        assert!(fixtures::fix_set().is_boolean());
        assert!(fixtures::powerset(&[]).is_boolean());
        let g = fixtures::p4(ForgetMode::Vertices);
        assert!(!g.is_boolean());
        let w = g.boolean_witness().unwrap();
        let joined = g.join(&w, &g.complement(&w).unwrap()).unwrap();
        assert_ne!(joined, g.top());
    }

    #[test]
    fn atoms_per_forget_mode() {
        let l = fixtures::fix_set();
        assert_eq!(l.show(&l.atom_of(&ElementId::element("2")).unwrap()), "{2}");
        let lv = fixtures::p4(ForgetMode::Vertices);
        assert_eq!(
            lv.atom_of(&ElementId::vertex("b")).unwrap(),
            fixtures::subgraph(&lv, &["b"], &[])
        );
        let le = fixtures::p4(ForgetMode::Edges);
        assert_eq!(
            le.atom_of(&ElementId::edge("a-b")).unwrap(),
            fixtures::subgraph(&le, &["a", "b"], &[("a", "b")])
        );
        assert!(matches!(
            lv.atom_of(&ElementId::vertex("zz")),
            Err(Error::UnknownElement(_))
        ));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(fixtures::fix_set().enumerate_subobjects().unwrap().len(), 32);
        let p4 = fixtures::p4(ForgetMode::Vertices);
        assert_eq!(p4.enumerate_subobjects().unwrap().len(), 34);
        let all: std::collections::HashSet<_> =
            p4.enumerate_subobjects().unwrap().into_iter().collect();
        assert_eq!(all.len(), 34);
    }
}
