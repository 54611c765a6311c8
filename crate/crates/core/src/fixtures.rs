//! Small ground objects used throughout the examples and tests.
//!
//! The helpers here panic on invalid input; they are meant for literals.

use crate::lattice::{ForgetMode, Lattice, SubStructure};
use crate::logic::{kripke_to_model, Model};
use crate::structures::{
    make_lattice, validate_subobject, Graph, GroundSet, Hypergraph, SimplicialComplex, SubView,
};

fn strings(ids: &[&str]) -> Vec<String> {
    ids.iter().map(|s| s.to_string()).collect()
}

/// Powerset lattice over `{0,1,2,3,4}`.
pub fn fix_set() -> Lattice {
    make_lattice(GroundSet::range(5), ForgetMode::Elements).unwrap()
}

pub fn powerset(elements: &[&str]) -> Lattice {
    make_lattice(GroundSet::new(elements.iter().copied()).unwrap(), ForgetMode::Elements).unwrap()
}

/// The path `a – b – c – d`.
pub fn p4(forget: ForgetMode) -> Lattice {
    make_lattice(Graph::path(&["a", "b", "c", "d"]).unwrap(), forget).unwrap()
}

/// The path `u – z – x – y – w – s`, vertex carrier.
pub fn p6() -> Lattice {
    make_lattice(
        Graph::path(&["u", "z", "x", "y", "w", "s"]).unwrap(),
        ForgetMode::Vertices,
    )
    .unwrap()
}

/// Vertices `1..4` with `e1 = {1,2}`, `e2 = {2,3}`, `e3 = {3,4}`.
pub fn hypergraph(forget: ForgetMode) -> Lattice {
    let h = Hypergraph::new(
        ["1", "2", "3", "4"],
        [("e1", ["1", "2"]), ("e2", ["2", "3"]), ("e3", ["3", "4"])],
    )
    .unwrap();
    make_lattice(h, forget).unwrap()
}

/// A filled triangle on `a, b, c` with all of its faces.
pub fn triangle_complex() -> Lattice {
    let k = SimplicialComplex::closure(["a", "b", "c"], [vec!["a", "b", "c"]]).unwrap();
    make_lattice(k, ForgetMode::Vertices).unwrap()
}

pub fn set(lattice: &Lattice, elements: &[&str]) -> SubStructure {
    validate_subobject(
        lattice,
        &SubView::Set {
            elements: strings(elements),
        },
    )
    .unwrap()
}

pub fn subgraph(lattice: &Lattice, vertices: &[&str], edges: &[(&str, &str)]) -> SubStructure {
    validate_subobject(
        lattice,
        &SubView::Graph {
            vertices: strings(vertices),
            edges: edges
                .iter()
                .map(|(u, v)| (u.to_string(), v.to_string()))
                .collect(),
        },
    )
    .unwrap()
}

/// The subgraph induced by `vertices`.
pub fn induced(lattice: &Lattice, vertices: &[&str]) -> SubStructure {
    let crate::structures::Ground::Graph(g) = lattice.ground() else {
        panic!("induced subgraphs need a graph ground");
    };
    let edges: Vec<(&str, &str)> = g
        .edges()
        .iter()
        .filter(|(u, v)| vertices.contains(&u.as_str()) && vertices.contains(&v.as_str()))
        .map(|(u, v)| (u.as_str(), v.as_str()))
        .collect();
    subgraph(lattice, vertices, &edges)
}

pub fn subhypergraph(lattice: &Lattice, vertices: &[&str], hyperedges: &[&str]) -> SubStructure {
    validate_subobject(
        lattice,
        &SubView::Hypergraph {
            vertices: strings(vertices),
            hyperedges: strings(hyperedges),
        },
    )
    .unwrap()
}

pub fn subcomplex(lattice: &Lattice, vertices: &[&str], faces: &[&[&str]]) -> SubStructure {
    validate_subobject(
        lattice,
        &SubView::Complex {
            vertices: strings(vertices),
            faces: faces.iter().map(|f| strings(f)).collect(),
        },
    )
    .unwrap()
}

/// Worlds `q0, q1`, relation `{(q0,q0), (q0,q1), (q1,q1)}`,
/// `p` true at `q1` and `q` true at `q0`.
pub fn kripke() -> Model {
    kripke_to_model(
        &["q0", "q1"],
        &[("q0", "q0"), ("q0", "q1"), ("q1", "q1")],
        &[("p", &["q1"][..]), ("q", &["q0"][..])],
        false,
    )
    .unwrap()
}
