//! Brute-force oracles shared by the integration tests and the acceptance
//! harness. They only use the public API and recompute everything from
//! component sets.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use morpholattice::logic::{kripke_to_model, Formula, Model};
use morpholattice::{
    validate_subobject, ElementId, ForgetMode, Lattice, StructuringElement, SubStructure, SubView,
};
use rand::Rng;

/// A substructure as a set of tagged component names.
pub type Tokens = BTreeSet<String>;

pub fn tokens(lattice: &Lattice, d: &SubStructure) -> Tokens {
    let mut out = Tokens::new();
    match lattice.describe(d).unwrap() {
        SubView::Set { elements } => out.extend(elements.into_iter().map(|x| format!("x:{x}"))),
        SubView::Graph { vertices, edges } => {
            out.extend(vertices.into_iter().map(|v| format!("v:{v}")));
            out.extend(edges.into_iter().map(|(u, v)| format!("e:{u}\u{1}{v}")));
        }
        SubView::Hypergraph {
            vertices,
            hyperedges,
        } => {
            out.extend(vertices.into_iter().map(|v| format!("v:{v}")));
            out.extend(hyperedges.into_iter().map(|h| format!("h:{h}")));
        }
        SubView::Complex { vertices, faces } => {
            out.extend(vertices.into_iter().map(|v| format!("v:{v}")));
            out.extend(faces.into_iter().map(|f| format!("f:{}", f.join("\u{1}"))));
        }
    }
    out
}

fn view_of(lattice: &Lattice, toks: &Tokens) -> SubView {
    let strip = |prefix: &str| -> Vec<String> {
        toks.iter()
            .filter_map(|t| t.strip_prefix(prefix).map(str::to_string))
            .collect()
    };
    let split = |s: String| -> Vec<String> { s.split('\u{1}').map(str::to_string).collect() };
    match lattice.describe(&lattice.top()).unwrap() {
        SubView::Set { .. } => SubView::Set {
            elements: strip("x:"),
        },
        SubView::Graph { .. } => SubView::Graph {
            vertices: strip("v:"),
            edges: strip("e:")
                .into_iter()
                .map(|e| {
                    let p = split(e);
                    (p[0].clone(), p[1].clone())
                })
                .collect(),
        },
        SubView::Hypergraph { .. } => SubView::Hypergraph {
            vertices: strip("v:"),
            hyperedges: strip("h:"),
        },
        SubView::Complex { .. } => SubView::Complex {
            vertices: strip("v:"),
            faces: strip("f:").into_iter().map(split).collect(),
        },
    }
}

/// Converts tokens back to a substructure; `None` when not closed.
pub fn from_tokens(lattice: &Lattice, toks: &Tokens) -> Option<SubStructure> {
    validate_subobject(lattice, &view_of(lattice, toks)).ok()
}

/// Every subset of components that validates, found by trying all of them.
pub fn brute_subobjects(lattice: &Lattice) -> Vec<Tokens> {
    let all: Vec<String> = tokens(lattice, &lattice.top()).into_iter().collect();
    assert!(all.len() <= 20, "brute force is limited to 20 components");
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << all.len()) {
        let toks: Tokens = all
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, t)| t.clone())
            .collect();
        if from_tokens(lattice, &toks).is_some() {
            out.push(toks);
        }
    }
    out
}

pub fn union<'a>(family: impl IntoIterator<Item = &'a Tokens>) -> Tokens {
    family.into_iter().flatten().cloned().collect()
}

pub fn intersection<'a>(top: &Tokens, family: impl IntoIterator<Item = &'a Tokens>) -> Tokens {
    let mut acc = top.clone();
    for t in family {
        acc = acc.intersection(t).cloned().collect();
    }
    acc
}

/// Carrier elements of `d`, read off its tokens.
pub fn carrier_of(lattice: &Lattice, d: &Tokens) -> Vec<ElementId> {
    let s = from_tokens(lattice, d).expect("closed");
    lattice.carrier(&s).unwrap().iter().cloned().collect()
}

/// Tables of the oracle lattice: every substructure, the images of the
/// structuring element, and the brute-force dilation of each substructure.
pub struct Oracle {
    pub lattice: Lattice,
    pub top: Tokens,
    pub all: Vec<Tokens>,
    pub images: BTreeMap<ElementId, Tokens>,
    pub dilations: Vec<Tokens>,
}

impl Oracle {
    pub fn new(lattice: &Lattice, b: &StructuringElement) -> Self {
        let all = brute_subobjects(lattice);
        let top = tokens(lattice, &lattice.top());
        let images: BTreeMap<ElementId, Tokens> = b
            .entries()
            .map(|(x, img)| (x, tokens(lattice, img)))
            .collect();
        let mut o = Oracle {
            lattice: lattice.clone(),
            top,
            all,
            images,
            dilations: Vec::new(),
        };
        o.dilations = o.all.iter().map(|d| o.dilate(d)).collect();
        o
    }

    /// `inf{e | b(x) ≤ e for every x ∈ U(d)}` over all substructures.
    pub fn dilate(&self, d: &Tokens) -> Tokens {
        let carrier = carrier_of(&self.lattice, d);
        let bounds = self
            .all
            .iter()
            .filter(|e| carrier.iter().all(|x| self.images[x].is_subset(e)));
        intersection(&self.top, bounds)
    }

    /// `sup{d | δ(d) ≤ e}` over all substructures.
    pub fn erode(&self, e: &Tokens) -> Tokens {
        union(
            self.all
                .iter()
                .zip(&self.dilations)
                .filter(|(_, dd)| dd.is_subset(e))
                .map(|(d, _)| d),
        )
    }

    /// `sup{e | e ∧ c ≤ d}`.
    pub fn exponential(&self, d: &Tokens, c: &Tokens) -> Tokens {
        union(self.all.iter().filter(|e| {
            let meet: Tokens = e.intersection(c).cloned().collect();
            meet.is_subset(d)
        }))
    }

    /// Every substructure lies below the sup of the images of its carrier.
    pub fn covered(&self) -> bool {
        self.all.iter().all(|d| {
            let carrier = carrier_of(&self.lattice, d);
            let spread = union(carrier.iter().map(|x| &self.images[x]));
            d.is_subset(&spread)
        })
    }

    pub fn structure(&self, t: &Tokens) -> SubStructure {
        from_tokens(&self.lattice, t).expect("oracle results are closed")
    }
}

/// A Kripke model evaluated the textbook way on sets of worlds. The
/// diamond looks backwards along the relation, matching dilation by
/// `b(q) = {q′ | q R q′}`.
#[derive(Clone, Debug)]
pub struct Kripke {
    pub worlds: Vec<String>,
    pub relation: Vec<(usize, usize)>,
    pub valuation: BTreeMap<String, BTreeSet<usize>>,
}

impl Kripke {
    pub fn random<R: Rng>(rng: &mut R, max_worlds: usize, atoms: &[&str]) -> Self {
        let n = rng.gen_range(1..=max_worlds);
        let worlds = (0..n).map(|i| format!("w{i}")).collect();
        let mut relation = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || rng.gen_bool(0.35) {
                    relation.push((i, j));
                }
            }
        }
        let valuation = atoms
            .iter()
            .map(|p| {
                let ws = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
                (p.to_string(), ws)
            })
            .collect();
        Kripke {
            worlds,
            relation,
            valuation,
        }
    }

    pub fn model(&self) -> Model {
        let rel: Vec<(String, String)> = self
            .relation
            .iter()
            .map(|&(i, j)| (self.worlds[i].clone(), self.worlds[j].clone()))
            .collect();
        let val: Vec<(String, Vec<String>)> = self
            .valuation
            .iter()
            .map(|(p, ws)| (p.clone(), ws.iter().map(|&w| self.worlds[w].clone()).collect()))
            .collect();
        kripke_to_model(&self.worlds, &rel, &val, false).unwrap()
    }

    pub fn eval(&self, phi: &Formula) -> BTreeSet<usize> {
        let all: BTreeSet<usize> = (0..self.worlds.len()).collect();
        match phi {
            Formula::Top => all,
            Formula::Bot => BTreeSet::new(),
            Formula::Prop(p) => self.valuation[p].clone(),
            Formula::Not(a) => all.difference(&self.eval(a)).cloned().collect(),
            Formula::And(a, b) => self.eval(a).intersection(&self.eval(b)).cloned().collect(),
            Formula::Or(a, b) => self.eval(a).union(&self.eval(b)).cloned().collect(),
            Formula::Implies(a, b) => {
                let (x, y) = (self.eval(a), self.eval(b));
                all.into_iter()
                    .filter(|w| !x.contains(w) || y.contains(w))
                    .collect()
            }
            Formula::Box(a) => {
                let x = self.eval(a);
                all.into_iter()
                    .filter(|&w| {
                        self.relation
                            .iter()
                            .filter(|(u, _)| *u == w)
                            .all(|(_, v)| x.contains(v))
                    })
                    .collect()
            }
            Formula::Diamond(a) => {
                let x = self.eval(a);
                all.into_iter()
                    .filter(|&w| {
                        self.relation
                            .iter()
                            .any(|&(u, v)| v == w && x.contains(&u))
                    })
                    .collect()
            }
        }
    }

    pub fn names(&self, ws: &BTreeSet<usize>) -> BTreeSet<String> {
        ws.iter().map(|&w| self.worlds[w].clone()).collect()
    }
}

pub fn random_formula<R: Rng>(rng: &mut R, depth: usize, atoms: &[&str]) -> Formula {
    if depth == 0 || rng.gen_bool(0.2) {
        return match rng.gen_range(0..10) {
            0 => Formula::Top,
            1 => Formula::Bot,
            _ => Formula::prop(atoms[rng.gen_range(0..atoms.len())]),
        };
    }
    let d = depth - 1;
    match rng.gen_range(0..6) {
        0 => Formula::not(random_formula(rng, d, atoms)),
        1 => Formula::boxed(random_formula(rng, d, atoms)),
        2 => Formula::diamond(random_formula(rng, d, atoms)),
        3 => Formula::and(random_formula(rng, d, atoms), random_formula(rng, d, atoms)),
        4 => Formula::or(random_formula(rng, d, atoms), random_formula(rng, d, atoms)),
        _ => Formula::implies(random_formula(rng, d, atoms), random_formula(rng, d, atoms)),
    }
}

/// The fixtures paired with their natural structuring element.
pub fn fixture_instances() -> Vec<(&'static str, Lattice, StructuringElement)> {
    use morpholattice::fixtures;
    let mk = |l: Lattice, name: &str| {
        let b = StructuringElement::builtin(&l, name).unwrap();
        (l, b)
    };
    let cases = [
        ("set/line", mk(fixtures::fix_set(), "line")),
        (
            "p4/closed-neighborhood",
            mk(fixtures::p4(ForgetMode::Vertices), "closed-neighborhood"),
        ),
        (
            "p4/edge-neighborhood",
            mk(fixtures::p4(ForgetMode::Edges), "edge-neighborhood"),
        ),
        (
            "hypergraph/hyperedge-star",
            mk(fixtures::hypergraph(ForgetMode::Vertices), "hyperedge-star"),
        ),
        (
            "hypergraph/hyperedge-overlap",
            mk(fixtures::hypergraph(ForgetMode::Hyperedges), "hyperedge-overlap"),
        ),
        (
            "complex/star-closure",
            mk(fixtures::triangle_complex(), "star-closure"),
        ),
    ];
    cases.into_iter().map(|(n, (l, b))| (n, l, b)).collect()
}
