//! Concrete ground objects, their substructure lattices, the built-in
//! structuring elements and the closed-form operators for them.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::lattice::{id_cmp, ElementId, ElementKind, ForgetMode, GroundData, Lattice, SubStructure};
use crate::structuring::StructuringElement;

fn sort_ids(ids: &mut [String]) {
    ids.sort_by(|a, b| id_cmp(a, b));
}

fn distinct_sorted<I, S>(what: &str, ids: I) -> Result<Vec<String>>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let mut out: Vec<String> = ids.into_iter().map(Into::into).collect();
    sort_ids(&mut out);
    if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::InvalidGround(format!("duplicate {what} `{}`", w[0])));
    }
    Ok(out)
}

fn require_known(vertices: &[String], v: &str, context: &str) -> Result<()> {
    if vertices.iter().any(|x| x == v) {
        Ok(())
    } else {
        Err(Error::InvalidGround(format!(
            "{context} refers to unknown vertex `{v}`"
        )))
    }
}

/// A finite set of elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroundSet {
    elements: Vec<String>,
}

impl GroundSet {
    pub fn new<I, S>(elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Ok(GroundSet {
            elements: distinct_sorted("element", elements)?,
        })
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn range(n: usize) -> Self {
        GroundSet {
            elements: (0..n).map(|i| i.to_string()).collect(),
        }
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }
}

/// A finite simple graph, undirected or directed. Undirected edges are
/// stored with sorted endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    directed: bool,
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

impl Graph {
    pub fn undirected<V, S, E, T>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (T, T)>,
        T: Into<String>,
    {
        Self::build(false, vertices, edges)
    }

    pub fn directed<V, S, E, T>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (T, T)>,
        T: Into<String>,
    {
        Self::build(true, vertices, edges)
    }

    /// Undirected path through the given vertices in order.
    pub fn path(names: &[&str]) -> Result<Self> {
        let edges: Vec<(&str, &str)> = names.windows(2).map(|w| (w[0], w[1])).collect();
        Self::undirected(names.iter().copied(), edges)
    }

    fn build<V, S, E, T>(directed: bool, vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (T, T)>,
        T: Into<String>,
    {
        let vertices = distinct_sorted("vertex", vertices)?;
        let mut out = Vec::new();
        for (u, v) in edges {
            let (mut u, mut v): (String, String) = (u.into(), v.into());
            require_known(&vertices, &u, "edge")?;
            require_known(&vertices, &v, "edge")?;
            if u == v {
                return Err(Error::InvalidGround(format!("self-loop on `{u}`")));
            }
            if !directed && id_cmp(&u, &v).is_gt() {
                std::mem::swap(&mut u, &mut v);
            }
            out.push((u, v));
        }
        out.sort_by(|a, b| id_cmp(&a.0, &b.0).then_with(|| id_cmp(&a.1, &b.1)));
        if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGround(format!(
                "duplicate edge `{}`",
                edge_id(directed, &w[0].0, &w[0].1)
            )));
        }
        Ok(Graph {
            directed,
            vertices,
            edges: out,
        })
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(String, String)] {
        &self.edges
    }

    /// Canonical id of the edge between `u` and `v`.
    pub fn edge_id(&self, u: &str, v: &str) -> String {
        if !self.directed && id_cmp(u, v).is_gt() {
            edge_id(false, v, u)
        } else {
            edge_id(self.directed, u, v)
        }
    }
}

fn edge_id(directed: bool, u: &str, v: &str) -> String {
    if directed {
        format!("{u}->{v}")
    } else {
        format!("{u}-{v}")
    }
}

fn face_id(vertices: &[String]) -> String {
    vertices.join("-")
}

/// A hypergraph with named hyperedges, each a nonempty set of vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    vertices: Vec<String>,
    hyperedges: Vec<(String, Vec<String>)>,
}

impl Hypergraph {
    pub fn new<V, S, E, N, M, T>(vertices: V, hyperedges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (N, M)>,
        N: Into<String>,
        M: IntoIterator<Item = T>,
        T: Into<String>,
    {
        let vertices = distinct_sorted("vertex", vertices)?;
        let mut out: Vec<(String, Vec<String>)> = Vec::new();
        for (name, members) in hyperedges {
            let name = name.into();
            let mut members: Vec<String> = members.into_iter().map(Into::into).collect();
            sort_ids(&mut members);
            members.dedup();
            if members.is_empty() {
                return Err(Error::InvalidGround(format!("hyperedge `{name}` is empty")));
            }
            for m in &members {
                require_known(&vertices, m, &format!("hyperedge `{name}`"))?;
            }
            out.push((name, members));
        }
        out.sort_by(|a, b| id_cmp(&a.0, &b.0));
        if let Some(w) = out.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidGround(format!("duplicate hyperedge `{}`", w[0].0)));
        }
        Ok(Hypergraph {
            vertices,
            hyperedges: out,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn hyperedges(&self) -> &[(String, Vec<String>)] {
        &self.hyperedges
    }
}

/// An abstract simplicial complex. Faces of dimension at least one are
/// stored explicitly; every vertex is implicitly a face.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    faces: Vec<Vec<String>>,
}

impl SimplicialComplex {
    /// Strict constructor: the face family must already be closed under
    /// nonempty subsets.
    pub fn new<V, S, F, M, T>(vertices: V, faces: F) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        F: IntoIterator<Item = M>,
        M: IntoIterator<Item = T>,
        T: Into<String>,
    {
        Self::build(vertices, faces, false)
    }

    /// Adds every missing nonempty subset of the given faces.
    pub fn closure<V, S, F, M, T>(vertices: V, faces: F) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        F: IntoIterator<Item = M>,
        M: IntoIterator<Item = T>,
        T: Into<String>,
    {
        Self::build(vertices, faces, true)
    }

    fn build<V, S, F, M, T>(vertices: V, faces: F, auto_close: bool) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        F: IntoIterator<Item = M>,
        M: IntoIterator<Item = T>,
        T: Into<String>,
    {
        let vertices = distinct_sorted("vertex", vertices)?;
        let mut given: BTreeSet<Vec<String>> = BTreeSet::new();
        for face in faces {
            let mut f: Vec<String> = face.into_iter().map(Into::into).collect();
            sort_ids(&mut f);
            f.dedup();
            if f.is_empty() {
                return Err(Error::InvalidGround("empty face".into()));
            }
            for v in &f {
                require_known(&vertices, v, "face")?;
            }
            if f.len() > 1 {
                given.insert(f);
            }
        }
        let mut all = given.clone();
        if auto_close {
            for f in &given {
                if f.len() > 20 {
                    return Err(Error::InvalidGround(format!(
                        "face `{}` is too large to close",
                        face_id(f)
                    )));
                }
                for mask in 1u32..(1 << f.len()) {
                    if mask.count_ones() >= 2 {
                        let sub: Vec<String> = f
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| mask & (1 << i) != 0)
                            .map(|(_, v)| v.clone())
                            .collect();
                        all.insert(sub);
                    }
                }
            }
        } else {
            for f in &given {
                if f.len() > 2 {
                    for skip in 0..f.len() {
                        let mut sub = f.clone();
                        sub.remove(skip);
                        if !given.contains(&sub) {
                            return Err(Error::InvalidGround(format!(
                                "face `{}` is present but its subface `{}` is not",
                                face_id(f),
                                face_id(&sub)
                            )));
                        }
                    }
                }
            }
        }
        let mut faces: Vec<Vec<String>> = all.into_iter().collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| cmp_lists(a, b)));
        Ok(SimplicialComplex { vertices, faces })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    /// Faces with at least two vertices, by dimension then lexicographically.
    pub fn faces(&self) -> &[Vec<String>] {
        &self.faces
    }
}

fn cmp_lists(a: &[String], b: &[String]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        let c = id_cmp(x, y);
        if c.is_ne() {
            return c;
        }
    }
    a.len().cmp(&b.len())
}

/// Any of the supported ground objects.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ground {
    Set(GroundSet),
    Graph(Graph),
    Hypergraph(Hypergraph),
    Complex(SimplicialComplex),
}

impl Ground {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Ground::Set(_) => "set",
            Ground::Graph(_) => "graph",
            Ground::Hypergraph(_) => "hypergraph",
            Ground::Complex(_) => "complex",
        }
    }

    /// Forget modes the structure supports, default first.
    pub fn forget_modes(&self) -> &'static [ForgetMode] {
        match self {
            Ground::Set(_) => &[ForgetMode::Elements],
            Ground::Graph(_) => &[ForgetMode::Vertices, ForgetMode::Edges],
            Ground::Hypergraph(_) => &[ForgetMode::Vertices, ForgetMode::Hyperedges],
            Ground::Complex(_) => &[ForgetMode::Vertices],
        }
    }

    pub fn default_forget(&self) -> ForgetMode {
        self.forget_modes()[0]
    }

    fn identity(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.hash(&mut h);
        h.finish()
    }

    fn compile(self) -> Result<GroundData> {
        let mut elements = Vec::new();
        let mut requires = Vec::new();
        match &self {
            Ground::Set(s) => {
                for e in &s.elements {
                    elements.push(ElementId::element(e.clone()));
                    requires.push(Vec::new());
                }
            }
            Ground::Graph(g) => {
                let pos = push_vertices(&g.vertices, &mut elements, &mut requires);
                for (u, v) in &g.edges {
                    elements.push(ElementId::edge(edge_id(g.directed, u, v)));
                    requires.push(vec![pos[u.as_str()], pos[v.as_str()]]);
                }
            }
            Ground::Hypergraph(h) => {
                let pos = push_vertices(&h.vertices, &mut elements, &mut requires);
                for (name, members) in &h.hyperedges {
                    elements.push(ElementId::hyperedge(name.clone()));
                    requires.push(members.iter().map(|m| pos[m.as_str()]).collect());
                }
            }
            Ground::Complex(k) => {
                let pos = push_vertices(&k.vertices, &mut elements, &mut requires);
                let mut face_pos: HashMap<&[String], usize> = HashMap::new();
                for f in &k.faces {
                    let reqs = if f.len() == 2 {
                        vec![pos[f[0].as_str()], pos[f[1].as_str()]]
                    } else {
                        (0..f.len())
                            .map(|skip| {
                                let sub: Vec<String> = f
                                    .iter()
                                    .enumerate()
                                    .filter(|(i, _)| *i != skip)
                                    .map(|(_, v)| v.clone())
                                    .collect();
                                face_pos[sub.as_slice()]
                            })
                            .collect()
                    };
                    face_pos.insert(f.as_slice(), elements.len());
                    elements.push(ElementId::new(ElementKind::Face, face_id(f)));
                    requires.push(reqs);
                }
            }
        }
        GroundData::new(self.identity(), self, elements, requires)
    }
}

fn push_vertices<'a>(
    vertices: &'a [String],
    elements: &mut Vec<ElementId>,
    requires: &mut Vec<Vec<usize>>,
) -> HashMap<&'a str, usize> {
    let mut pos = HashMap::new();
    for v in vertices {
        pos.insert(v.as_str(), elements.len());
        elements.push(ElementId::vertex(v.clone()));
        requires.push(Vec::new());
    }
    pos
}

impl From<GroundSet> for Ground {
    fn from(s: GroundSet) -> Self {
        Ground::Set(s)
    }
}

impl From<Graph> for Ground {
    fn from(g: Graph) -> Self {
        Ground::Graph(g)
    }
}

impl From<Hypergraph> for Ground {
    fn from(h: Hypergraph) -> Self {
        Ground::Hypergraph(h)
    }
}

impl From<SimplicialComplex> for Ground {
    fn from(k: SimplicialComplex) -> Self {
        Ground::Complex(k)
    }
}

/// Builds the substructure lattice of `ground` with the given carrier.
pub fn make_lattice(ground: impl Into<Ground>, forget: ForgetMode) -> Result<Lattice> {
    let ground = ground.into();
    if !ground.forget_modes().contains(&forget) {
        return Err(Error::UnsupportedForgetMode {
            mode: forget.to_string(),
            structure: format!("{}s", ground.kind_name()),
        });
    }
    Ok(Lattice::from_parts(ground.compile()?, forget))
}

/// Switches the carrier of an existing lattice. Substructures of the
/// original lattice remain valid in the result.
pub fn with_forget_mode(lattice: &Lattice, forget: ForgetMode) -> Result<Lattice> {
    if !lattice.ground().forget_modes().contains(&forget) {
        return Err(Error::UnsupportedForgetMode {
            mode: forget.to_string(),
            structure: format!("{}s", lattice.ground().kind_name()),
        });
    }
    Ok(lattice.reforget(forget))
}

/// Structured, id-level view of a substructure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubView {
    Set {
        elements: Vec<String>,
    },
    Graph {
        vertices: Vec<String>,
        edges: Vec<(String, String)>,
    },
    Hypergraph {
        vertices: Vec<String>,
        hyperedges: Vec<String>,
    },
    Complex {
        vertices: Vec<String>,
        faces: Vec<Vec<String>>,
    },
}

impl fmt::Display for SubView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list<T: AsRef<str>>(items: impl IntoIterator<Item = T>) -> String {
            let parts: Vec<String> = items.into_iter().map(|s| s.as_ref().to_string()).collect();
            format!("{{{}}}", parts.join(","))
        }
        match self {
            SubView::Set { elements } => f.write_str(&list(elements)),
            SubView::Graph { vertices, edges } => {
                // Direction is not recoverable here; the undirected spelling is used.
                let es = edges.iter().map(|(u, v)| format!("{u}-{v}"));
                write!(f, "({},{})", list(vertices), list(es))
            }
            SubView::Hypergraph {
                vertices,
                hyperedges,
            } => write!(f, "({},{})", list(vertices), list(hyperedges)),
            SubView::Complex { vertices, faces } => {
                let fs = faces.iter().map(|x| face_id(x));
                write!(f, "({},{})", list(vertices), list(fs))
            }
        }
    }
}

pub(crate) fn describe(lattice: &Lattice, d: &SubStructure) -> SubView {
    let data = lattice.data();
    let present: Vec<usize> = d.bits().ones().collect();
    let ids_of = |kind: ElementKind| -> Vec<String> {
        present
            .iter()
            .filter(|&&i| data.elements[i].kind == kind)
            .map(|&i| data.elements[i].id.clone())
            .collect()
    };
    let endpoint_ids = |i: usize| -> Vec<String> {
        data.requires[i]
            .iter()
            .map(|&r| data.elements[r].id.clone())
            .collect()
    };
    match &data.ground {
        Ground::Set(_) => SubView::Set {
            elements: ids_of(ElementKind::Element),
        },
        Ground::Graph(_) => SubView::Graph {
            vertices: ids_of(ElementKind::Vertex),
            edges: present
                .iter()
                .filter(|&&i| data.elements[i].kind == ElementKind::Edge)
                .map(|&i| {
                    let e = endpoint_ids(i);
                    (e[0].clone(), e[1].clone())
                })
                .collect(),
        },
        Ground::Hypergraph(_) => SubView::Hypergraph {
            vertices: ids_of(ElementKind::Vertex),
            hyperedges: ids_of(ElementKind::Hyperedge),
        },
        Ground::Complex(_) => SubView::Complex {
            vertices: ids_of(ElementKind::Vertex),
            faces: present
                .iter()
                .filter(|&&i| data.elements[i].kind == ElementKind::Face)
                .map(|&i| vertex_ids(lattice, i))
                .collect(),
        },
    }
}

fn vertex_ids(lattice: &Lattice, comp: usize) -> Vec<String> {
    let data = lattice.data();
    data.down[comp]
        .ones()
        .filter(|&j| data.elements[j].kind == ElementKind::Vertex)
        .map(|j| data.elements[j].id.clone())
        .collect()
}

/// Checks a raw id-level description against the ground and returns the
/// canonical substructure.
pub fn validate_subobject(lattice: &Lattice, raw: &SubView) -> Result<SubStructure> {
    let ground = lattice.ground();
    let lookup = |x: ElementId| -> Result<usize> {
        lattice.component_index(&x).ok_or_else(|| {
            Error::NotASubobject(format!("{} `{}` is not part of the ground", x.kind, x.id))
        })
    };
    let mut comps = Vec::new();
    match (ground, raw) {
        (Ground::Set(_), SubView::Set { elements }) => {
            for e in elements {
                comps.push(lookup(ElementId::element(e.clone()))?);
            }
        }
        (Ground::Graph(g), SubView::Graph { vertices, edges }) => {
            for v in vertices {
                comps.push(lookup(ElementId::vertex(v.clone()))?);
            }
            for (u, v) in edges {
                comps.push(lookup(ElementId::edge(g.edge_id(u, v)))?);
            }
        }
        (Ground::Hypergraph(_), SubView::Hypergraph { vertices, hyperedges }) => {
            for v in vertices {
                comps.push(lookup(ElementId::vertex(v.clone()))?);
            }
            for h in hyperedges {
                comps.push(lookup(ElementId::hyperedge(h.clone()))?);
            }
        }
        (Ground::Complex(_), SubView::Complex { vertices, faces }) => {
            for v in vertices {
                comps.push(lookup(ElementId::vertex(v.clone()))?);
            }
            for f in faces {
                let mut f = f.clone();
                sort_ids(&mut f);
                f.dedup();
                match f.len() {
                    0 => return Err(Error::NotASubobject("empty face".into())),
                    1 => comps.push(lookup(ElementId::vertex(f[0].clone()))?),
                    _ => comps.push(lookup(ElementId::new(ElementKind::Face, face_id(&f)))?),
                }
            }
        }
        _ => {
            return Err(Error::NotASubobject(format!(
                "expected a substructure of a {}",
                ground.kind_name()
            )))
        }
    }
    lattice.downset_of_components(&comps)
}

/// The structuring elements shipped with the library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Builtin {
    /// Sets of integers: `b(x) = {x-1, x, x+1} ∩ S`.
    Line,
    /// Sets: `y ∈ b(x)` for every pair `(x, y)`.
    Relation(Vec<(String, String)>),
    /// Graphs, vertex carrier: the vertex, its incident edges and their endpoints.
    ClosedNeighborhood,
    /// Graphs, edge carrier: every edge sharing an endpoint with `{x,y}`.
    EdgeNeighborhood,
    /// Hypergraphs, vertex carrier: every hyperedge containing the vertex.
    HyperedgeStar,
    /// Hypergraphs, hyperedge carrier: every hyperedge meeting `E_i`.
    HyperedgeOverlap,
    /// Complexes, vertex carrier: the closed star of the vertex.
    StarClosure,
    /// `x ↦ c_x`.
    Identity,
    Full,
    Empty,
}

impl Builtin {
    /// Parameter-free builtins by name.
    pub fn from_name(name: &str) -> Result<Self> {
        Ok(match name {
            "line" => Builtin::Line,
            "closed-neighborhood" => Builtin::ClosedNeighborhood,
            "edge-neighborhood" => Builtin::EdgeNeighborhood,
            "hyperedge-star" => Builtin::HyperedgeStar,
            "hyperedge-overlap" => Builtin::HyperedgeOverlap,
            "star-closure" => Builtin::StarClosure,
            "identity" | "sgt" => Builtin::Identity,
            "full" => Builtin::Full,
            "empty" | "emp" => Builtin::Empty,
            other => return Err(Error::UnknownName(other.to_string())),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Builtin::Line => "line",
            Builtin::Relation(_) => "relation",
            Builtin::ClosedNeighborhood => "closed-neighborhood",
            Builtin::EdgeNeighborhood => "edge-neighborhood",
            Builtin::HyperedgeStar => "hyperedge-star",
            Builtin::HyperedgeOverlap => "hyperedge-overlap",
            Builtin::StarClosure => "star-closure",
            Builtin::Identity => "identity",
            Builtin::Full => "full",
            Builtin::Empty => "empty",
        }
    }

    fn home(&self) -> Option<(&'static str, ForgetMode)> {
        match self {
            Builtin::Line | Builtin::Relation(_) => Some(("set", ForgetMode::Elements)),
            Builtin::ClosedNeighborhood => Some(("graph", ForgetMode::Vertices)),
            Builtin::EdgeNeighborhood => Some(("graph", ForgetMode::Edges)),
            Builtin::HyperedgeStar => Some(("hypergraph", ForgetMode::Vertices)),
            Builtin::HyperedgeOverlap => Some(("hypergraph", ForgetMode::Hyperedges)),
            Builtin::StarClosure => Some(("complex", ForgetMode::Vertices)),
            Builtin::Identity | Builtin::Full | Builtin::Empty => None,
        }
    }
}

/// Instantiates a builtin structuring element on `lattice`.
pub fn builtin_se(lattice: &Lattice, which: &Builtin) -> Result<StructuringElement> {
    if let Some((structure, mode)) = which.home() {
        if lattice.ground().kind_name() != structure || lattice.forget_mode() != mode {
            return Err(Error::IncompatibleMode {
                name: which.name().to_string(),
                context: format!(
                    "{}s with {} forget",
                    lattice.ground().kind_name(),
                    lattice.forget_mode()
                ),
            });
        }
    }
    let data = lattice.data();
    let n = lattice.domain_len();
    let incident = |x: usize| -> Vec<usize> {
        data.dependents[x].clone()
    };
    let table: Vec<SubStructure> = match which {
        Builtin::Full => vec![lattice.top(); n],
        Builtin::Empty => vec![lattice.bottom(); n],
        Builtin::Identity => (0..n).map(|p| lattice.atom_at(p)).collect::<Result<_>>()?,
        Builtin::Line => {
            let values: Vec<i64> = lattice
                .domain()
                .iter()
                .map(|x| {
                    x.id.parse::<i64>().map_err(|_| Error::IncompatibleMode {
                        name: "line".into(),
                        context: format!("non-integer element `{}`", x.id),
                    })
                })
                .collect::<Result<_>>()?;
            let at: HashMap<i64, usize> = values
                .iter()
                .enumerate()
                .map(|(p, &v)| (v, lattice.domain_component(p)))
                .collect();
            values
                .iter()
                .map(|&v| {
                    lattice.closure_of(
                        [v - 1, v, v + 1]
                            .iter()
                            .filter_map(|w| at.get(w).copied()),
                    )
                })
                .collect()
        }
        Builtin::Relation(pairs) => {
            let mut images: Vec<Vec<usize>> = vec![Vec::new(); n];
            for (x, y) in pairs {
                let px = lattice.position_of(&ElementId::element(x.clone()))?;
                let py = lattice.position_of(&ElementId::element(y.clone()))?;
                images[px].push(lattice.domain_component(py));
            }
            images
                .into_iter()
                .map(|cs| lattice.closure_of(cs))
                .collect()
        }
        Builtin::ClosedNeighborhood => (0..n)
            .map(|p| {
                let x = lattice.domain_component(p);
                lattice.closure_of(std::iter::once(x).chain(incident(x)))
            })
            .collect(),
        Builtin::EdgeNeighborhood => (0..n)
            .map(|p| {
                let e = lattice.domain_component(p);
                let touching = data.requires[e].iter().flat_map(|&v| incident(v));
                lattice.closure_of(touching)
            })
            .collect(),
        Builtin::HyperedgeStar => (0..n)
            .map(|p| lattice.closure_of(incident(lattice.domain_component(p))))
            .collect(),
        Builtin::HyperedgeOverlap => (0..n)
            .map(|p| {
                let e = lattice.domain_component(p);
                let meeting = data.requires[e].iter().flat_map(|&v| incident(v));
                lattice.closure_of(meeting)
            })
            .collect(),
        Builtin::StarClosure => {
            let vertex_count = data
                .elements
                .iter()
                .filter(|e| e.kind == ElementKind::Vertex)
                .count();
            (0..n)
                .map(|p| {
                    let x = lattice.domain_component(p);
                    let star = (0..data.len()).filter(|&c| data.down[c].contains(x));
                    debug_assert!(x < vertex_count);
                    lattice.closure_of(star)
                })
                .collect()
        }
    };
    StructuringElement::from_parts(lattice.clone(), table, Some(which.clone()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ClosedForm {
    Set,
    GraphVertices,
    GraphEdges,
    HypergraphVertices,
    HypergraphHyperedges,
    ComplexVertices,
}

fn closed_form_for(lattice: &Lattice, se: &StructuringElement) -> Result<ClosedForm> {
    se.lattice().check(&lattice.top())?;
    if !se.lattice().same_lattice(lattice) {
        return Err(Error::GroundMismatch);
    }
    let origin = se.origin();
    let found = match (lattice.ground(), lattice.forget_mode(), origin) {
        (Ground::Set(_), _, _) => Some(ClosedForm::Set),
        (Ground::Graph(_), ForgetMode::Vertices, Some(Builtin::ClosedNeighborhood)) => {
            Some(ClosedForm::GraphVertices)
        }
        (Ground::Graph(_), ForgetMode::Edges, Some(Builtin::EdgeNeighborhood)) => {
            Some(ClosedForm::GraphEdges)
        }
        (Ground::Hypergraph(_), ForgetMode::Vertices, Some(Builtin::HyperedgeStar)) => {
            Some(ClosedForm::HypergraphVertices)
        }
        (Ground::Hypergraph(_), ForgetMode::Hyperedges, Some(Builtin::HyperedgeOverlap)) => {
            Some(ClosedForm::HypergraphHyperedges)
        }
        (Ground::Complex(_), ForgetMode::Vertices, Some(Builtin::StarClosure)) => {
            Some(ClosedForm::ComplexVertices)
        }
        _ => None,
    };
    found.ok_or_else(|| {
        Error::NoClosedForm(format!(
            "{}s with {} forget and {} structuring element",
            lattice.ground().kind_name(),
            lattice.forget_mode(),
            origin.map_or("a custom", |b| b.name())
        ))
    })
}

/// Vertex components (as a bitset over all components) lying under `comp`.
fn vertices_under(lattice: &Lattice, comp: usize) -> impl Iterator<Item = usize> + '_ {
    let data = lattice.data();
    data.down[comp]
        .ones()
        .filter(move |&j| data.elements[j].kind == ElementKind::Vertex)
}

/// Vertices in `vbar` together with every ground component whose vertices
/// all lie in `vbar` (edges between kept vertices, hyperedges or faces
/// contained in them).
fn complete_over(lattice: &Lattice, vbar: &FixedBitSet) -> SubStructure {
    let data = lattice.data();
    let comps = (0..data.len()).filter(|&c| vertices_under(lattice, c).all(|v| vbar.contains(v)));
    lattice.closure_of(comps.collect::<Vec<_>>())
}

/// Erosion by the printed closed form for the structure's builtin
/// structuring element (any structuring element on sets).
pub fn erode_closed_form(
    lattice: &Lattice,
    se: &StructuringElement,
    d: &SubStructure,
) -> Result<SubStructure> {
    let form = closed_form_for(lattice, se)?;
    lattice.check(d)?;
    let data = lattice.data();
    let n = data.len();
    let fits = |p: usize| lattice.leq_unchecked(se.at(p), d);
    match form {
        ClosedForm::Set => Ok(lattice.closure_of(
            (0..lattice.domain_len())
                .filter(|&p| fits(p))
                .map(|p| lattice.domain_component(p))
                .collect::<Vec<_>>(),
        )),
        ClosedForm::GraphVertices
        | ClosedForm::HypergraphVertices
        | ClosedForm::ComplexVertices => {
            let mut vbar = FixedBitSet::with_capacity(n);
            for p in (0..lattice.domain_len()).filter(|&p| fits(p)) {
                vbar.insert(lattice.domain_component(p));
            }
            Ok(complete_over(lattice, &vbar))
        }
        ClosedForm::GraphEdges | ClosedForm::HypergraphHyperedges => {
            // V̄: vertices lying on some carrier element of d, all of whose
            // carrier elements in d have their neighbourhood inside d.
            let mut vbar = FixedBitSet::with_capacity(n);
            for v in (0..n).filter(|&v| data.elements[v].kind == ElementKind::Vertex) {
                let mut on_some = false;
                let mut all_fit = true;
                for &e in &data.dependents[v] {
                    if d.bits().contains(e) {
                        on_some = true;
                        let p = lattice.position_of(&data.elements[e]).expect("carrier element");
                        all_fit &= fits(p);
                    }
                }
                if on_some && all_fit {
                    vbar.insert(v);
                }
            }
            let mut comps: Vec<usize> = vbar.ones().collect();
            comps.extend(
                d.bits()
                    .ones()
                    .filter(|&e| data.elements[e].kind != ElementKind::Vertex)
                    .filter(|&e| data.requires[e].iter().all(|&v| vbar.contains(v))),
            );
            Ok(lattice.closure_of(comps))
        }
    }
}

/// Dilation by the printed closed form for the structure's builtin
/// structuring element (any structuring element on sets).
pub fn dilate_closed_form(
    lattice: &Lattice,
    se: &StructuringElement,
    d: &SubStructure,
) -> Result<SubStructure> {
    let form = closed_form_for(lattice, se)?;
    lattice.check(d)?;
    let data = lattice.data();
    let n = data.len();
    let in_d_vertex = |v: usize| d.bits().contains(v);
    match form {
        ClosedForm::Set => lattice.sup(lattice.carrier_positions(d).map(|p| se.at(p))),
        ClosedForm::GraphVertices
        | ClosedForm::HypergraphVertices
        | ClosedForm::ComplexVertices => {
            // V̄ = {x | V_x ∩ V' ≠ ∅}, V_x the vertex set of b(x).
            let mut vbar = FixedBitSet::with_capacity(n);
            for p in 0..lattice.domain_len() {
                let meets = se
                    .at(p)
                    .bits()
                    .ones()
                    .any(|j| data.elements[j].kind == ElementKind::Vertex && in_d_vertex(j));
                if meets {
                    vbar.insert(lattice.domain_component(p));
                }
            }
            Ok(complete_over(lattice, &vbar))
        }
        ClosedForm::GraphEdges => {
            // V̄ = {z | ∃e ∈ E, S_e ∩ V' ≠ ∅ and z ∈ V_e}.
            let mut vbar = FixedBitSet::with_capacity(n);
            for p in 0..lattice.domain_len() {
                let e = lattice.domain_component(p);
                if data.requires[e].iter().any(|&v| in_d_vertex(v)) {
                    for z in vertices_under_sub(lattice, se.at(p)) {
                        vbar.insert(z);
                    }
                }
            }
            Ok(complete_over(lattice, &vbar))
        }
        ClosedForm::HypergraphHyperedges => {
            // V̄ = {z | ∃E_i ∈ E, E_i ∩ V' ≠ ∅ and z ∈ E_i}.
            let mut vbar = FixedBitSet::with_capacity(n);
            for p in 0..lattice.domain_len() {
                let e = lattice.domain_component(p);
                if data.requires[e].iter().any(|&v| in_d_vertex(v)) {
                    for &z in &data.requires[e] {
                        vbar.insert(z);
                    }
                }
            }
            Ok(complete_over(lattice, &vbar))
        }
    }
}

fn vertices_under_sub<'a>(lattice: &'a Lattice, d: &'a SubStructure) -> impl Iterator<Item = usize> + 'a {
    let data = lattice.data();
    d.bits()
        .ones()
        .filter(move |&j| data.elements[j].kind == ElementKind::Vertex)
}

/// Convenience: a map from hyperedge name to members, as stored.
pub fn hyperedge_table(h: &Hypergraph) -> BTreeMap<String, Vec<String>> {
    h.hyperedges.iter().cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn graph_validation() {
        assert!(matches!(
            Graph::undirected(["a", "b"], [("a", "c")]),
            Err(Error::InvalidGround(_))
        ));
        assert!(matches!(
            Graph::undirected(["a", "b"], [("a", "b"), ("b", "a")]),
            Err(Error::InvalidGround(_))
        ));
        assert!(matches!(
            Graph::undirected(["a"], [("a", "a")]),
            Err(Error::InvalidGround(_))
        ));
        let g = Graph::directed(["a", "b"], [("a", "b"), ("b", "a")]).unwrap();
        assert_eq!(g.edges().len(), 2);
        assert_eq!(g.edge_id("b", "a"), "b->a");
    }

    #[test]
    fn complex_validation() {
        let strict = SimplicialComplex::new(["a", "b", "c"], [vec!["a", "b", "c"]]);
        assert!(matches!(strict, Err(Error::InvalidGround(_))));
        let closed = SimplicialComplex::closure(["a", "b", "c"], [vec!["a", "b", "c"]]).unwrap();
        assert_eq!(closed.faces().len(), 4);
        let again = SimplicialComplex::new(["a", "b", "c"], closed.faces().to_vec()).unwrap();
        assert_eq!(again, closed);
    }

    #[test]
    fn forget_modes_are_checked() {
        let err = make_lattice(GroundSet::range(2), ForgetMode::Edges).unwrap_err();
        assert!(matches!(err, Error::UnsupportedForgetMode { .. }));
        let k = fixtures::triangle_complex();
        assert!(with_forget_mode(&k, ForgetMode::Edges).is_err());
    }

    #[test]
    fn triangle_subcomplex_count() {
        let k = fixtures::triangle_complex();
        assert_eq!(k.enumerate_subobjects().unwrap().len(), 19);
    }

    #[test]
    fn hypergraph_lattice_modes_share_objects() {
        let hv = fixtures::hypergraph(ForgetMode::Vertices);
        let he = with_forget_mode(&hv, ForgetMode::Hyperedges).unwrap();
        let d = fixtures::subhypergraph(&hv, &["1", "2"], &["e1"]);
        assert!(he.check(&d).is_ok());
        assert_eq!(he.carrier(&d).unwrap().ids(), vec!["e1"]);
    }

    #[test]
    fn validation_examples() {
        let l = fixtures::p4(ForgetMode::Vertices);
        let ok = SubView::Graph {
            vertices: vec!["a".into(), "b".into()],
            edges: vec![("b".into(), "a".into())],
        };
        assert!(validate_subobject(&l, &ok).is_ok());
        let bad = SubView::Graph {
            vertices: vec!["a".into()],
            edges: vec![("a".into(), "b".into())],
        };
        assert!(matches!(validate_subobject(&l, &bad), Err(Error::NotASubobject(_))));
        let h = fixtures::hypergraph(ForgetMode::Vertices);
        let bad = SubView::Hypergraph {
            vertices: vec!["1".into()],
            hyperedges: vec!["e1".into()],
        };
        assert!(matches!(validate_subobject(&h, &bad), Err(Error::NotASubobject(_))));
        let stray = SubView::Set {
            elements: vec!["9".into()],
        };
        assert!(matches!(
            validate_subobject(&fixtures::fix_set(), &stray),
            Err(Error::NotASubobject(_))
        ));
    }

    #[test]
    fn builtin_images() {
        let l = fixtures::p4(ForgetMode::Vertices);
        let b = builtin_se(&l, &Builtin::ClosedNeighborhood).unwrap();
        assert_eq!(
            b.apply(&ElementId::vertex("b")).unwrap(),
            &fixtures::subgraph(&l, &["a", "b", "c"], &[("a", "b"), ("b", "c")])
        );
        let le = fixtures::p4(ForgetMode::Edges);
        let b = builtin_se(&le, &Builtin::EdgeNeighborhood).unwrap();
        assert_eq!(b.apply(&ElementId::edge("b-c")).unwrap(), &le.top());
        let h = fixtures::hypergraph(ForgetMode::Vertices);
        let b = builtin_se(&h, &Builtin::HyperedgeStar).unwrap();
        assert_eq!(
            b.apply(&ElementId::vertex("2")).unwrap(),
            &fixtures::subhypergraph(&h, &["1", "2", "3"], &["e1", "e2"])
        );
        assert!(matches!(
            builtin_se(&le, &Builtin::ClosedNeighborhood),
            Err(Error::IncompatibleMode { .. })
        ));
        assert!(matches!(Builtin::from_name("disk"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn neighborhoods_are_symmetric() {
        let cases = [
            (fixtures::p4(ForgetMode::Vertices), Builtin::ClosedNeighborhood),
            (fixtures::p6(), Builtin::ClosedNeighborhood),
            (fixtures::hypergraph(ForgetMode::Vertices), Builtin::HyperedgeStar),
        ];
        for (l, which) in cases {
            let b = builtin_se(&l, &which).unwrap();
            for x in l.domain() {
                for y in l.domain() {
                    let xy = l.carrier(b.apply(&x).unwrap()).unwrap().contains(&y);
                    let yx = l.carrier(b.apply(&y).unwrap()).unwrap().contains(&x);
                    assert_eq!(xy, yx, "{x} {y}");
                }
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        let s = fixtures::fix_set();
        let line = builtin_se(&s, &Builtin::Line).unwrap();
        let a = fixtures::set(&s, &["1", "2", "3"]);
        assert_eq!(s.show(&erode_closed_form(&s, &line, &a).unwrap()), "{2}");

        let l = fixtures::p4(ForgetMode::Vertices);
        let b = builtin_se(&l, &Builtin::ClosedNeighborhood).unwrap();
        let g = fixtures::subgraph(&l, &["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        assert_eq!(
            erode_closed_form(&l, &b, &g).unwrap(),
            fixtures::subgraph(&l, &["a", "b"], &[("a", "b")])
        );
        let only_b = fixtures::subgraph(&l, &["b"], &[]);
        assert_eq!(dilate_closed_form(&l, &b, &only_b).unwrap(), g);

        let h = fixtures::hypergraph(ForgetMode::Vertices);
        let b = builtin_se(&h, &Builtin::HyperedgeStar).unwrap();
        let d = fixtures::subhypergraph(&h, &["1", "2", "3"], &["e1", "e2"]);
        assert_eq!(
            erode_closed_form(&h, &b, &d).unwrap(),
            fixtures::subhypergraph(&h, &["1", "2"], &["e1"])
        );
        let v2 = fixtures::subhypergraph(&h, &["2"], &[]);
        assert_eq!(dilate_closed_form(&h, &b, &v2).unwrap(), d);
        let v14 = fixtures::subhypergraph(&h, &["1", "4"], &[]);
        assert_eq!(dilate_closed_form(&h, &b, &v14).unwrap(), h.top());
    }

    #[test]
    fn closed_form_requires_builtin() {
        let l = fixtures::p4(ForgetMode::Vertices);
        let full = builtin_se(&l, &Builtin::Full).unwrap();
        assert!(matches!(
            erode_closed_form(&l, &full, &l.top()),
            Err(Error::NoClosedForm(_))
        ));
    }
}
