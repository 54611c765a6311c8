//! Erosion, dilation and their composites, the law harness, and the
//! comparison of alternative erosion/dilation methods.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{Lattice, SubStructure};
use crate::structures::{dilate_closed_form, erode_closed_form, Ground};
use crate::structuring::StructuringElement;

fn same(lattice: &Lattice, b: &StructuringElement) -> Result<()> {
    if lattice.same_lattice(b.lattice()) {
        Ok(())
    } else {
        Err(Error::GroundMismatch)
    }
}

/// `δ[b](d) = ⋁{b(v) | v ∈ U(d)}`.
pub fn dilate(lattice: &Lattice, b: &StructuringElement, d: &SubStructure) -> Result<SubStructure> {
    same(lattice, b)?;
    lattice.check(d)?;
    lattice.sup(lattice.carrier_positions(d).map(|p| b.at(p)))
}

/// `ε[b](d) = ⋁{e | ∀v ∈ U(e), b(v) ≤ d}`, computed without enumeration:
/// the result is the largest substructure whose carrier stays inside
/// `{v | b(v) ≤ d}`.
pub fn erode(lattice: &Lattice, b: &StructuringElement, d: &SubStructure) -> Result<SubStructure> {
    same(lattice, b)?;
    lattice.check(d)?;
    let mut keep = fixedbitset::FixedBitSet::with_capacity(lattice.domain_len());
    for p in 0..lattice.domain_len() {
        if lattice.leq_unchecked(b.at(p), d) {
            keep.insert(p);
        }
    }
    Ok(lattice.greatest_with_carrier(&keep))
}

/// The erosion procedure stated for covered lattices with atoms, run as
/// written: atoms of `S = {v ∈ U(d) | b(v) ≤ d}`, joined with `b(v)` for
/// each `v ∈ S` whose whole neighbourhood also passes the test.
pub fn erode_paper_algorithm(
    lattice: &Lattice,
    b: &StructuringElement,
    d: &SubStructure,
) -> Result<SubStructure> {
    same(lattice, b)?;
    lattice.check(d)?;
    let passes = |p: usize| lattice.leq_unchecked(b.at(p), d);
    let s: Vec<usize> = lattice.carrier_positions(d).filter(|&p| passes(p)).collect();
    let atoms = s.iter().map(|&p| lattice.atom_at(p)).collect::<Result<Vec<_>>>()?;
    let mut c = lattice.sup(&atoms)?;
    for &v in &s {
        if lattice.carrier_positions(b.at(v)).all(passes) {
            c = lattice.join(&c, b.at(v))?;
        }
    }
    Ok(c)
}

/// `δ ∘ ε`.
pub fn opening(lattice: &Lattice, b: &StructuringElement, d: &SubStructure) -> Result<SubStructure> {
    dilate(lattice, b, &erode(lattice, b, d)?)
}

/// `ε ∘ δ`.
pub fn closing(lattice: &Lattice, b: &StructuringElement, d: &SubStructure) -> Result<SubStructure> {
    erode(lattice, b, &dilate(lattice, b, d)?)
}

/// How an erosion or dilation is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// The definitions: sup of the erosion diagram, sup of neighbourhoods.
    Generic,
    /// The structure-specific closed forms.
    ClosedForm,
    /// The erosion procedure for covered lattices with atoms.
    PaperAlgorithm,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Generic => "generic",
            Method::ClosedForm => "closed-form",
            Method::PaperAlgorithm => "paper-algorithm",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "generic" => Ok(Method::Generic),
            "fast" | "closed-form" => Ok(Method::ClosedForm),
            "paper-algorithm" => Ok(Method::PaperAlgorithm),
            other => Err(Error::Input(format!("unknown method `{other}`"))),
        }
    }
}

pub fn erode_with(
    method: Method,
    lattice: &Lattice,
    b: &StructuringElement,
    d: &SubStructure,
) -> Result<SubStructure> {
    match method {
        Method::Generic => erode(lattice, b, d),
        Method::ClosedForm => erode_closed_form(lattice, b, d),
        Method::PaperAlgorithm => erode_paper_algorithm(lattice, b, d),
    }
}

/// Dilation by `method`. The procedure only concerns erosion, so
/// `PaperAlgorithm` dilates by the neighbourhood decomposition.
pub fn dilate_with(
    method: Method,
    lattice: &Lattice,
    b: &StructuringElement,
    d: &SubStructure,
) -> Result<SubStructure> {
    match method {
        Method::Generic | Method::PaperAlgorithm => dilate(lattice, b, d),
        Method::ClosedForm => dilate_closed_form(lattice, b, d),
    }
}

/// The laws of erosion and dilation that the harness can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Law {
    Adjunction,
    Monotone,
    CommuteInf,
    CommuteSup,
    Preserve,
    ClosingExtensive,
    OpeningAntiextensive,
    EpsDeltaEps,
    DeltaEpsDelta,
    Idempotent,
    CoverAntiextensive,
    CoverExtensive,
    BooleanDuality,
    ClassicalDuality,
}

impl Law {
    pub const ALL: [Law; 14] = [
        Law::Adjunction,
        Law::Monotone,
        Law::CommuteInf,
        Law::CommuteSup,
        Law::Preserve,
        Law::ClosingExtensive,
        Law::OpeningAntiextensive,
        Law::EpsDeltaEps,
        Law::DeltaEpsDelta,
        Law::Idempotent,
        Law::CoverAntiextensive,
        Law::CoverExtensive,
        Law::BooleanDuality,
        Law::ClassicalDuality,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Law::Adjunction => "adjunction",
            Law::Monotone => "monotone",
            Law::CommuteInf => "commute-inf",
            Law::CommuteSup => "commute-sup",
            Law::Preserve => "preserve",
            Law::ClosingExtensive => "closing-extensive",
            Law::OpeningAntiextensive => "opening-antiextensive",
            Law::EpsDeltaEps => "eps-delta-eps",
            Law::DeltaEpsDelta => "delta-eps-delta",
            Law::Idempotent => "idempotent",
            Law::CoverAntiextensive => "cover-antiextensive",
            Law::CoverExtensive => "cover-extensive",
            Law::BooleanDuality => "boolean-duality",
            Law::ClassicalDuality => "classical-duality",
        }
    }

    fn shape(self) -> Shape {
        match self {
            Law::Adjunction | Law::Monotone => Shape::Pair,
            Law::CommuteInf | Law::CommuteSup => Shape::Family,
            Law::Preserve => Shape::Constant,
            _ => Shape::Single,
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl std::str::FromStr for Law {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Law::ALL
            .iter()
            .copied()
            .find(|l| l.id() == s)
            .ok_or_else(|| Error::Input(format!("unknown law `{s}`")))
    }
}

#[derive(Clone, Copy)]
enum Shape {
    Constant,
    Single,
    Pair,
    Family,
}

/// Which instances a law is checked on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sampler {
    /// Every substructure, every pair, every family of at most two members.
    Exhaustive,
    /// `n` seeded random instances; families have at most four members.
    Random { n: usize, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LawStatus {
    Holds,
    Falsified,
    PreconditionUnmet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub instance: String,
    pub status: LawStatus,
    pub holds: bool,
    /// Named substructures exhibiting the failure, rendered compactly.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<BTreeMap<String, String>>,
    pub samples: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl LawReport {
    pub fn is_falsified(&self) -> bool {
        self.status == LawStatus::Falsified
    }
}

/// A short description of a lattice and structuring element.
pub fn instance_descriptor(lattice: &Lattice, b: &StructuringElement) -> String {
    let ground = lattice.ground();
    let size = match ground {
        Ground::Set(s) => format!("{} elements", s.elements().len()),
        Ground::Graph(g) => format!("{} vertices, {} edges", g.vertices().len(), g.edges().len()),
        Ground::Hypergraph(h) => format!(
            "{} vertices, {} hyperedges",
            h.vertices().len(),
            h.hyperedges().len()
        ),
        Ground::Complex(k) => format!("{} vertices, {} faces", k.vertices().len(), k.faces().len()),
    };
    format!(
        "{} ({}), {} forget, {} structuring element",
        ground.kind_name(),
        size,
        lattice.forget_mode(),
        b.origin().map_or("custom", |o| o.name())
    )
}

type Outcome = Option<Vec<(&'static str, SubStructure)>>;

struct Ops<'a> {
    l: &'a Lattice,
    b: &'a StructuringElement,
    transpose: Option<StructuringElement>,
}

impl Ops<'_> {
    fn eps(&self, d: &SubStructure) -> SubStructure {
        erode(self.l, self.b, d).expect("checked ground")
    }

    fn delta(&self, d: &SubStructure) -> SubStructure {
        dilate(self.l, self.b, d).expect("checked ground")
    }

    fn leq(&self, a: &SubStructure, b: &SubStructure) -> bool {
        self.l.leq_unchecked(a, b)
    }

    fn not(&self, d: &SubStructure) -> SubStructure {
        self.l.complement(d).expect("checked ground")
    }

    fn single(&self, law: Law, d: &SubStructure) -> Outcome {
        let fail = |extra: Vec<(&'static str, SubStructure)>| {
            let mut w = vec![("d", d.clone())];
            w.extend(extra);
            Some(w)
        };
        match law {
            Law::ClosingExtensive => {
                let c = self.eps(&self.delta(d));
                (!self.leq(d, &c)).then(|| fail(vec![("closing", c)]))?
            }
            Law::OpeningAntiextensive => {
                let o = self.delta(&self.eps(d));
                (!self.leq(&o, d)).then(|| fail(vec![("opening", o)]))?
            }
            Law::EpsDeltaEps => {
                let e = self.eps(d);
                let ede = self.eps(&self.delta(&e));
                (ede != e).then(|| fail(vec![("erosion", e), ("eps-delta-eps", ede)]))?
            }
            Law::DeltaEpsDelta => {
                let e = self.delta(d);
                let ded = self.delta(&self.eps(&e));
                (ded != e).then(|| fail(vec![("dilation", e), ("delta-eps-delta", ded)]))?
            }
            Law::Idempotent => {
                let o = self.delta(&self.eps(d));
                let oo = self.delta(&self.eps(&o));
                if o != oo {
                    return fail(vec![("opening", o), ("opening-twice", oo)]);
                }
                let c = self.eps(&self.delta(d));
                let cc = self.eps(&self.delta(&c));
                (c != cc).then(|| fail(vec![("closing", c), ("closing-twice", cc)]))?
            }
            Law::CoverAntiextensive => {
                let e = self.eps(d);
                (!self.leq(&e, d)).then(|| fail(vec![("erosion", e)]))?
            }
            Law::CoverExtensive => {
                let e = self.delta(d);
                (!self.leq(d, &e)).then(|| fail(vec![("dilation", e)]))?
            }
            Law::BooleanDuality => {
                let lhs = self.eps(&self.not(d));
                let rhs = self.not(&self.delta(d));
                (lhs != rhs).then(|| {
                    fail(vec![("erosion-of-complement", lhs), ("complement-of-dilation", rhs)])
                })?
            }
            Law::ClassicalDuality => {
                let t = self.transpose.as_ref().expect("transpose prepared");
                let lhs = self.eps(&self.not(d));
                let rhs = self.not(&dilate(self.l, t, d).expect("checked ground"));
                (lhs != rhs).then(|| {
                    fail(vec![
                        ("erosion-of-complement", lhs),
                        ("complement-of-transpose-dilation", rhs),
                    ])
                })?
            }
            _ => unreachable!("not a single-object law"),
        }
    }

    fn pair(&self, law: Law, d: &SubStructure, e: &SubStructure) -> Outcome {
        match law {
            Law::Adjunction => {
                let left = self.leq(d, &self.eps(e));
                let right = self.leq(&self.delta(d), e);
                (left != right).then(|| vec![("d", d.clone()), ("e", e.clone())])
            }
            Law::Monotone => {
                let upper = self.l.join(d, e).expect("checked ground");
                let ok = self.leq(&self.eps(d), &self.eps(&upper))
                    && self.leq(&self.delta(d), &self.delta(&upper));
                (!ok).then(|| vec![("d", d.clone()), ("upper", upper)])
            }
            _ => unreachable!("not a pair law"),
        }
    }

    fn family(&self, law: Law, family: &[SubStructure]) -> Outcome {
        let (lhs, rhs) = match law {
            Law::CommuteInf => {
                let lhs = self.eps(&self.l.inf(family).expect("checked ground"));
                let images: Vec<_> = family.iter().map(|d| self.eps(d)).collect();
                (lhs, self.l.inf(&images).expect("checked ground"))
            }
            Law::CommuteSup => {
                let lhs = self.delta(&self.l.sup(family).expect("checked ground"));
                let images: Vec<_> = family.iter().map(|d| self.delta(d)).collect();
                (lhs, self.l.sup(&images).expect("checked ground"))
            }
            _ => unreachable!("not a family law"),
        };
        (lhs != rhs).then(|| {
            let mut w: Vec<(&'static str, SubStructure)> = Vec::new();
            const NAMES: [&str; 4] = ["f1", "f2", "f3", "f4"];
            for (name, d) in NAMES.iter().zip(family) {
                w.push((name, d.clone()));
            }
            w.push(("operator-of-bound", lhs));
            w.push(("bound-of-operator", rhs));
            w
        })
    }

    fn constant(&self) -> Outcome {
        let t = self.l.top();
        let et = self.eps(&t);
        if et != t {
            return Some(vec![("erosion-of-top", et)]);
        }
        let db = self.delta(&self.l.bottom());
        (db != self.l.bottom()).then(|| vec![("dilation-of-bottom", db)])
    }
}

fn precondition(lattice: &Lattice, b: &StructuringElement, law: Law) -> Option<String> {
    let covered = || b.is_covered();
    match law {
        Law::CoverAntiextensive | Law::CoverExtensive if !covered() => {
            Some("structuring element does not cover the lattice".into())
        }
        Law::BooleanDuality if !lattice.is_boolean() => Some("lattice is not Boolean".into()),
        Law::BooleanDuality if !covered() => {
            Some("structuring element does not cover the lattice".into())
        }
        Law::ClassicalDuality if !matches!(lattice.ground(), Ground::Set(_)) => {
            Some("transpose exists on powerset lattices only".into())
        }
        _ => None,
    }
}

/// Draws a family of zero to four substructures.
pub fn random_family<R: Rng + ?Sized>(lattice: &Lattice, rng: &mut R) -> Vec<SubStructure> {
    let k = rng.gen_range(0..=4);
    (0..k).map(|_| lattice.random_subobject(rng)).collect()
}

/// Checks one law on `(lattice, b)` and reports the first counterexample.
pub fn check_law(
    lattice: &Lattice,
    b: &StructuringElement,
    law: Law,
    sampler: Sampler,
) -> Result<LawReport> {
    same(lattice, b)?;
    let seed = match sampler {
        Sampler::Exhaustive => None,
        Sampler::Random { seed, .. } => Some(seed),
    };
    let mut report = LawReport {
        law: law.id().to_string(),
        instance: instance_descriptor(lattice, b),
        status: LawStatus::Holds,
        holds: true,
        witness: None,
        samples: 0,
        seed,
        note: None,
    };
    if let Some(why) = precondition(lattice, b, law) {
        report.status = LawStatus::PreconditionUnmet;
        report.holds = false;
        report.note = Some(why);
        return Ok(report);
    }
    let ops = Ops {
        l: lattice,
        b,
        transpose: if law == Law::ClassicalDuality {
            Some(b.transpose()?)
        } else {
            None
        },
    };
    let mut samples = 0usize;
    let mut found: Outcome = None;
    match (law.shape(), sampler) {
        (Shape::Constant, _) => {
            samples = 1;
            found = ops.constant();
        }
        (Shape::Single, Sampler::Exhaustive) => {
            for d in lattice.enumerate_subobjects()? {
                samples += 1;
                found = ops.single(law, &d);
                if found.is_some() {
                    break;
                }
            }
        }
        (Shape::Pair, Sampler::Exhaustive) => {
            let all = lattice.enumerate_subobjects()?;
            'outer: for d in &all {
                for e in &all {
                    samples += 1;
                    found = ops.pair(law, d, e);
                    if found.is_some() {
                        break 'outer;
                    }
                }
            }
        }
        (Shape::Family, Sampler::Exhaustive) => {
            let all = lattice.enumerate_subobjects()?;
            samples += 1;
            found = ops.family(law, &[]);
            'outer: for (i, d) in all.iter().enumerate() {
                if found.is_some() {
                    break;
                }
                samples += 1;
                found = ops.family(law, std::slice::from_ref(d));
                for e in &all[i + 1..] {
                    if found.is_some() {
                        break 'outer;
                    }
                    samples += 1;
                    found = ops.family(law, &[d.clone(), e.clone()]);
                }
            }
        }
        (shape, Sampler::Random { n, seed }) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..n {
                samples += 1;
                found = match shape {
                    Shape::Single => {
                        let d = lattice.random_subobject(&mut rng);
                        ops.single(law, &d)
                    }
                    Shape::Pair => {
                        let d = lattice.random_subobject(&mut rng);
                        let e = lattice.random_subobject(&mut rng);
                        ops.pair(law, &d, &e)
                    }
                    Shape::Family => ops.family(law, &random_family(lattice, &mut rng)),
                    Shape::Constant => unreachable!(),
                };
                if found.is_some() {
                    break;
                }
            }
        }
    }
    report.samples = samples;
    if let Some(w) = found {
        report.status = LawStatus::Falsified;
        report.holds = false;
        report.witness = Some(
            w.into_iter()
                .map(|(k, v)| (k.to_string(), lattice.show(&v)))
                .collect(),
        );
    }
    Ok(report)
}

/// Every law in [`Law::ALL`] order.
pub fn check_all_laws(
    lattice: &Lattice,
    b: &StructuringElement,
    sampler: Sampler,
) -> Result<Vec<LawReport>> {
    Law::ALL
        .iter()
        .map(|&law| check_law(lattice, b, law, sampler))
        .collect()
}

/// Outcome of one method on one object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MethodResult {
    pub method: Method,
    /// `None` when the method does not apply; see `note`.
    pub result: Option<SubStructure>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MethodComparison {
    pub object: SubStructure,
    pub erosion: Vec<MethodResult>,
    pub dilation: Vec<MethodResult>,
}

impl MethodComparison {
    fn result(list: &[MethodResult], m: Method) -> Option<&SubStructure> {
        list.iter().find(|r| r.method == m).and_then(|r| r.result.as_ref())
    }

    pub fn erosion_by(&self, m: Method) -> Option<&SubStructure> {
        Self::result(&self.erosion, m)
    }

    pub fn dilation_by(&self, m: Method) -> Option<&SubStructure> {
        Self::result(&self.dilation, m)
    }

    /// Pairwise equality; `None` where either side is not applicable.
    pub fn matrix(list: &[MethodResult]) -> Vec<Vec<Option<bool>>> {
        list.iter()
            .map(|a| {
                list.iter()
                    .map(|b| match (&a.result, &b.result) {
                        (Some(x), Some(y)) => Some(x == y),
                        _ => None,
                    })
                    .collect()
            })
            .collect()
    }

    /// `(operation, method)` pairs whose result differs from the generic one.
    pub fn divergences(&self) -> Vec<(&'static str, Method)> {
        let mut out = Vec::new();
        for (op, list) in [("erode", &self.erosion), ("dilate", &self.dilation)] {
            let generic = Self::result(list, Method::Generic);
            for r in list.iter().filter(|r| r.method != Method::Generic) {
                if let (Some(g), Some(x)) = (generic, &r.result) {
                    if g != x {
                        out.push((op, r.method));
                    }
                }
            }
        }
        out
    }

    pub fn agrees(&self) -> bool {
        self.divergences().is_empty()
    }
}

fn run(method: Method, f: impl FnOnce() -> Result<SubStructure>) -> Result<MethodResult> {
    match f() {
        Ok(d) => Ok(MethodResult {
            method,
            result: Some(d),
            note: None,
        }),
        Err(e) if e.is_capability_limit() => Ok(MethodResult {
            method,
            result: None,
            note: Some(e.to_string()),
        }),
        Err(e) => Err(e),
    }
}

/// Evaluates every applicable erosion and dilation method on `d`. The
/// erosion procedure is only run when `b` covers the lattice, which is the
/// setting it is stated for.
pub fn compare_methods(
    lattice: &Lattice,
    b: &StructuringElement,
    d: &SubStructure,
) -> Result<MethodComparison> {
    same(lattice, b)?;
    lattice.check(d)?;
    let covered = b.is_covered();
    let erosion = vec![
        run(Method::Generic, || erode(lattice, b, d))?,
        run(Method::ClosedForm, || erode_closed_form(lattice, b, d))?,
        if covered {
            run(Method::PaperAlgorithm, || erode_paper_algorithm(lattice, b, d))?
        } else {
            MethodResult {
                method: Method::PaperAlgorithm,
                result: None,
                note: Some("structuring element does not cover the lattice".into()),
            }
        },
    ];
    let dilation = vec![
        run(Method::Generic, || dilate(lattice, b, d))?,
        run(Method::ClosedForm, || dilate_closed_form(lattice, b, d))?,
    ];
    Ok(MethodComparison {
        object: d.clone(),
        erosion,
        dilation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::lattice::ForgetMode;

    #[test]
    fn set_examples() {
        let s = fixtures::fix_set();
        let b = StructuringElement::builtin(&s, "line").unwrap();
        let a = fixtures::set(&s, &["1", "2", "3"]);
        assert_eq!(s.show(&erode(&s, &b, &a).unwrap()), "{2}");
        assert_eq!(s.show(&erode_paper_algorithm(&s, &b, &a).unwrap()), "{2}");
        assert_eq!(s.show(&dilate(&s, &b, &fixtures::set(&s, &["2"])).unwrap()), "{1,2,3}");
        assert_eq!(s.show(&opening(&s, &b, &a).unwrap()), "{1,2,3}");
        let ends = fixtures::set(&s, &["0", "4"]);
        assert_eq!(s.show(&closing(&s, &b, &ends).unwrap()), "{0,4}");
        assert_eq!(erode(&s, &b, &s.top()).unwrap(), s.top());
        assert_eq!(dilate(&s, &b, &s.bottom()).unwrap(), s.bottom());
        assert_eq!(opening(&s, &b, &s.bottom()).unwrap(), s.bottom());
    }

    #[test]
    fn graph_examples() {
        let l = fixtures::p4(ForgetMode::Vertices);
        let b = StructuringElement::builtin(&l, "closed-neighborhood").unwrap();
        let g = fixtures::subgraph(&l, &["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let ab = fixtures::subgraph(&l, &["a", "b"], &[("a", "b")]);
        assert_eq!(erode_paper_algorithm(&l, &b, &g).unwrap(), ab);
        assert_eq!(erode(&l, &b, &g).unwrap(), ab);
        assert_eq!(dilate(&l, &b, &fixtures::subgraph(&l, &["b"], &[])).unwrap(), g);

        let le = fixtures::p4(ForgetMode::Edges);
        let b = StructuringElement::builtin(&le, "edge-neighborhood").unwrap();
        let d = fixtures::subgraph(&le, &["a", "b", "c", "d"], &[("a", "b"), ("b", "c")]);
        assert_eq!(
            erode(&le, &b, &d).unwrap(),
            fixtures::subgraph(&le, &["a", "b", "c", "d"], &[("a", "b")])
        );
    }

    #[test]
    fn p6_procedure_differs() {
        let l = fixtures::p6();
        let b = StructuringElement::builtin(&l, "closed-neighborhood").unwrap();
        let d = fixtures::induced(&l, &["z", "x", "y", "w"]);
        assert_eq!(
            erode_paper_algorithm(&l, &b, &d).unwrap(),
            fixtures::subgraph(&l, &["x", "y"], &[])
        );
        assert_eq!(
            erode(&l, &b, &d).unwrap(),
            fixtures::subgraph(&l, &["x", "y"], &[("x", "y")])
        );
        let cmp = compare_methods(&l, &b, &d).unwrap();
        assert_eq!(cmp.divergences(), vec![("erode", Method::PaperAlgorithm)]);
    }

    #[test]
    fn procedure_needs_atoms() {
        let k = fixtures::hypergraph(ForgetMode::Hyperedges);
        let b = StructuringElement::builtin(&k, "hyperedge-overlap").unwrap();
        let d = k.top();
        // Every hyperedge here has two vertices, so its down-closure is the atom.
        assert!(erode_paper_algorithm(&k, &b, &d).is_ok());
    }

    #[test]
    fn law_reports() {
        let s = fixtures::fix_set();
        let b = StructuringElement::builtin(&s, "line").unwrap();
        for r in check_all_laws(&s, &b, Sampler::Exhaustive).unwrap() {
            assert_eq!(r.status, LawStatus::Holds, "{}", r.law);
            assert!(r.witness.is_none());
        }
        let two = fixtures::powerset(&["0", "1"]);
        let b = StructuringElement::relation(&two, [("0", "0"), ("0", "1"), ("1", "1")]).unwrap();
        let r = check_law(&two, &b, Law::BooleanDuality, Sampler::Exhaustive).unwrap();
        assert_eq!(r.status, LawStatus::Falsified);
        let w = r.witness.unwrap();
        assert_eq!(w["d"], "{0}");
        assert_eq!(w["erosion-of-complement"], "{1}");
        assert_eq!(w["complement-of-dilation"], "{}");
    }

    #[test]
    fn preconditions_are_reported() {
        let le = fixtures::p4(ForgetMode::Edges);
        let b = StructuringElement::builtin(&le, "edge-neighborhood").unwrap();
        let r = check_law(&le, &b, Law::CoverExtensive, Sampler::Exhaustive).unwrap();
        assert_eq!(r.status, LawStatus::PreconditionUnmet);
        assert!(r.witness.is_none());
        let r = check_law(&le, &b, Law::ClassicalDuality, Sampler::Exhaustive).unwrap();
        assert_eq!(r.status, LawStatus::PreconditionUnmet);
    }

    #[test]
    fn random_reports_are_reproducible() {
        let l = fixtures::p4(ForgetMode::Vertices);
        let b = StructuringElement::builtin(&l, "closed-neighborhood").unwrap();
        let s = Sampler::Random { n: 50, seed: 7 };
        assert_eq!(
            check_all_laws(&l, &b, s).unwrap(),
            check_all_laws(&l, &b, s).unwrap()
        );
    }
}
