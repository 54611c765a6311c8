//! JSON documents for grounds, substructures, structuring elements and
//! models, plus DOT rendering.
//!
//! Ids may be written as JSON strings or integers; they are always read
//! back as strings. Unknown fields are rejected everywhere.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::lattice::{ElementKind, ForgetMode, Lattice, SubStructure};
use crate::logic::{kripke_to_model, Model};
use crate::structures::{
    builtin_se, hyperedge_table, make_lattice, validate_subobject, Builtin, Graph, Ground,
    GroundSet, Hypergraph, SimplicialComplex, SubView,
};
use crate::structuring::StructuringElement;

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum RawId {
    Str(String),
    Int(i64),
}

impl RawId {
    fn into_string(self) -> String {
        match self {
            RawId::Str(s) => s,
            RawId::Int(i) => i.to_string(),
        }
    }
}

fn ids(v: Vec<RawId>) -> Vec<String> {
    v.into_iter().map(RawId::into_string).collect()
}

fn pairs(v: Vec<(RawId, RawId)>) -> Vec<(String, String)> {
    v.into_iter()
        .map(|(a, b)| (a.into_string(), b.into_string()))
        .collect()
}

fn from_value<T: DeserializeOwned>(v: Value, what: &str) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Input(format!("{what}: {e}")))
}

/// Parses JSON text into a value, mapping syntax errors to input errors.
pub fn parse_json(text: &str, what: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("{what}: {e}")))
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Splits a `{"<tag>": "...", ...}` object into the tag and the remaining
/// fields.
fn take_tag(v: Value, tag: &str, what: &str) -> Result<(String, Value)> {
    let Value::Object(mut map) = v else {
        return Err(Error::Input(format!("{what}: expected a JSON object")));
    };
    let kind = match map.remove(tag) {
        Some(Value::String(s)) => s,
        _ => return Err(Error::Input(format!("{what}: missing string field `{tag}`"))),
    };
    Ok((kind, Value::Object(map)))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SetFile {
    elements: Vec<RawId>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    #[serde(default)]
    directed: bool,
    vertices: Vec<RawId>,
    #[serde(default)]
    edges: Vec<(RawId, RawId)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HypergraphFile {
    vertices: Vec<RawId>,
    #[serde(default)]
    hyperedges: BTreeMap<String, Vec<RawId>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexFile {
    vertices: Vec<RawId>,
    #[serde(default)]
    faces: Vec<Vec<RawId>>,
    #[serde(default)]
    auto_close: bool,
}

/// Reads a ground document: `{"type": "set" | "graph" | "hypergraph" | "complex", ...}`.
pub fn ground_from_json(v: &Value) -> Result<Ground> {
    let (kind, rest) = take_tag(v.clone(), "type", "ground")?;
    Ok(match kind.as_str() {
        "set" => {
            let f: SetFile = from_value(rest, "set ground")?;
            Ground::Set(GroundSet::new(ids(f.elements))?)
        }
        "graph" => {
            let f: GraphFile = from_value(rest, "graph ground")?;
            let (vs, es) = (ids(f.vertices), pairs(f.edges));
            Ground::Graph(if f.directed {
                Graph::directed(vs, es)?
            } else {
                Graph::undirected(vs, es)?
            })
        }
        "hypergraph" => {
            let f: HypergraphFile = from_value(rest, "hypergraph ground")?;
            let edges = f.hyperedges.into_iter().map(|(k, v)| (k, ids(v)));
            Ground::Hypergraph(Hypergraph::new(ids(f.vertices), edges)?)
        }
        "complex" => {
            let f: ComplexFile = from_value(rest, "complex ground")?;
            let faces = f.faces.into_iter().map(ids);
            Ground::Complex(if f.auto_close {
                SimplicialComplex::closure(ids(f.vertices), faces)?
            } else {
                SimplicialComplex::new(ids(f.vertices), faces)?
            })
        }
        other => return Err(Error::Input(format!("unknown ground type `{other}`"))),
    })
}

pub fn ground_to_json(g: &Ground) -> Value {
    match g {
        Ground::Set(s) => json!({"type": "set", "elements": s.elements()}),
        Ground::Graph(g) => json!({
            "type": "graph",
            "directed": g.is_directed(),
            "vertices": g.vertices(),
            "edges": g.edges().iter().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
        }),
        Ground::Hypergraph(h) => json!({
            "type": "hypergraph",
            "vertices": h.vertices(),
            "hyperedges": hyperedge_table(h),
        }),
        Ground::Complex(k) => json!({
            "type": "complex",
            "vertices": k.vertices(),
            "faces": k.faces(),
        }),
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum HyperedgeRef {
    Names(Vec<String>),
    Contents(BTreeMap<String, Vec<RawId>>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSubobject {
    elements: Option<Vec<RawId>>,
    vertices: Option<Vec<RawId>>,
    edges: Option<Vec<(RawId, RawId)>>,
    hyperedges: Option<HyperedgeRef>,
    faces: Option<Vec<Vec<RawId>>>,
}

/// Reads a substructure document shaped like its ground (without `type`).
pub fn subobject_from_json(lattice: &Lattice, v: &Value) -> Result<SubStructure> {
    let raw: RawSubobject = from_value(v.clone(), "substructure")?;
    let stray = |field: &str, present: bool| -> Result<()> {
        if present {
            Err(Error::NotASubobject(format!(
                "field `{field}` does not apply to a {} substructure",
                lattice.ground().kind_name()
            )))
        } else {
            Ok(())
        }
    };
    let view = match lattice.ground() {
        Ground::Set(_) => {
            stray("vertices", raw.vertices.is_some())?;
            stray("edges", raw.edges.is_some())?;
            stray("hyperedges", raw.hyperedges.is_some())?;
            stray("faces", raw.faces.is_some())?;
            SubView::Set {
                elements: ids(raw.elements.unwrap_or_default()),
            }
        }
        Ground::Graph(_) => {
            stray("elements", raw.elements.is_some())?;
            stray("hyperedges", raw.hyperedges.is_some())?;
            stray("faces", raw.faces.is_some())?;
            SubView::Graph {
                vertices: ids(raw.vertices.unwrap_or_default()),
                edges: pairs(raw.edges.unwrap_or_default()),
            }
        }
        Ground::Hypergraph(h) => {
            stray("elements", raw.elements.is_some())?;
            stray("edges", raw.edges.is_some())?;
            stray("faces", raw.faces.is_some())?;
            let table = hyperedge_table(h);
            let names = match raw.hyperedges {
                None => Vec::new(),
                Some(HyperedgeRef::Names(n)) => n,
                Some(HyperedgeRef::Contents(map)) => {
                    let mut names = Vec::new();
                    for (name, members) in map {
                        let mut given: Vec<String> = ids(members);
                        given.sort();
                        given.dedup();
                        let mut actual = table.get(&name).cloned().unwrap_or_default();
                        actual.sort();
                        if table.contains_key(&name) && given != actual {
                            return Err(Error::NotASubobject(format!(
                                "hyperedge `{name}` must be kept whole"
                            )));
                        }
                        names.push(name);
                    }
                    names
                }
            };
            SubView::Hypergraph {
                vertices: ids(raw.vertices.unwrap_or_default()),
                hyperedges: names,
            }
        }
        Ground::Complex(_) => {
            stray("elements", raw.elements.is_some())?;
            stray("edges", raw.edges.is_some())?;
            stray("hyperedges", raw.hyperedges.is_some())?;
            SubView::Complex {
                vertices: ids(raw.vertices.unwrap_or_default()),
                faces: raw.faces.unwrap_or_default().into_iter().map(ids).collect(),
            }
        }
    };
    validate_subobject(lattice, &view)
}

pub fn subobject_to_json(lattice: &Lattice, d: &SubStructure) -> Result<Value> {
    Ok(match lattice.describe(d)? {
        SubView::Set { elements } => json!({ "elements": elements }),
        SubView::Graph { vertices, edges } => json!({
            "vertices": vertices,
            "edges": edges.iter().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
        }),
        SubView::Hypergraph {
            vertices,
            hyperedges,
        } => json!({ "vertices": vertices, "hyperedges": hyperedges }),
        SubView::Complex { vertices, faces } => json!({ "vertices": vertices, "faces": faces }),
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BuiltinFile {
    name: String,
    #[serde(default)]
    claims_cover: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableFile {
    map: BTreeMap<String, Value>,
    #[serde(default)]
    claims_cover: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RelationFile {
    pairs: Vec<(RawId, RawId)>,
    #[serde(default)]
    claims_cover: bool,
}

/// Reads `{"kind": "builtin" | "table" | "relation", ...}`.
pub fn se_from_json(lattice: &Lattice, v: &Value) -> Result<StructuringElement> {
    let (kind, rest) = take_tag(v.clone(), "kind", "structuring element")?;
    match kind.as_str() {
        "builtin" => {
            let f: BuiltinFile = from_value(rest, "builtin structuring element")?;
            Ok(builtin_se(lattice, &Builtin::from_name(&f.name)?)?.with_claims_cover(f.claims_cover))
        }
        "relation" => {
            let f: RelationFile = from_value(rest, "relation structuring element")?;
            Ok(builtin_se(lattice, &Builtin::Relation(pairs(f.pairs)))?
                .with_claims_cover(f.claims_cover))
        }
        "table" => {
            let f: TableFile = from_value(rest, "table structuring element")?;
            let kind = lattice.forget_mode().carrier_kind();
            let entries = f
                .map
                .into_iter()
                .map(|(id, img)| {
                    Ok((
                        crate::lattice::ElementId::new(kind, id),
                        subobject_from_json(lattice, &img)?,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(StructuringElement::from_table(lattice, entries)?.with_claims_cover(f.claims_cover))
        }
        other => Err(Error::Input(format!(
            "unknown structuring element kind `{other}`"
        ))),
    }
}

pub fn se_to_json(se: &StructuringElement) -> Result<Value> {
    let mut doc = match se.origin() {
        Some(Builtin::Relation(ps)) => json!({
            "kind": "relation",
            "pairs": ps.iter().map(|(x, y)| [x, y]).collect::<Vec<_>>(),
        }),
        Some(b) => json!({ "kind": "builtin", "name": b.name() }),
        None => {
            let mut map = Map::new();
            for (x, img) in se.entries() {
                map.insert(x.id.clone(), subobject_to_json(se.lattice(), img)?);
            }
            json!({ "kind": "table", "map": map })
        }
    };
    if se.claims_cover() {
        doc["claims_cover"] = Value::Bool(true);
    }
    Ok(doc)
}

/// Parses a forget mode, defaulting to the structure's first mode.
pub fn forget_or_default(ground: &Ground, forget: Option<&str>) -> Result<ForgetMode> {
    match forget {
        Some(s) => s.parse(),
        None => Ok(ground.default_forget()),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct KripkeFile {
    worlds: Vec<RawId>,
    #[serde(default)]
    relation: Vec<(RawId, RawId)>,
    #[serde(default)]
    valuation: BTreeMap<String, Vec<RawId>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelFile {
    kripke: Option<KripkeFile>,
    ground: Option<Value>,
    forget: Option<String>,
    se: Option<Value>,
    #[serde(default)]
    valuation: BTreeMap<String, Value>,
    #[serde(default)]
    unchecked: bool,
}

/// Reads `{"kripke": {...}}` or `{"ground": ..., "forget": ..., "se": ..., "valuation": ...}`.
pub fn model_from_json(v: &Value) -> Result<Model> {
    let f: ModelFile = from_value(v.clone(), "model")?;
    if let Some(k) = f.kripke {
        if f.ground.is_some() || f.se.is_some() || f.forget.is_some() || !f.valuation.is_empty() {
            return Err(Error::Input(
                "model: `kripke` excludes `ground`, `forget`, `se` and `valuation`".into(),
            ));
        }
        let worlds = ids(k.worlds);
        let relation = pairs(k.relation);
        let valuation: Vec<(String, Vec<String>)> =
            k.valuation.into_iter().map(|(p, ws)| (p, ids(ws))).collect();
        return kripke_to_model(&worlds, &relation, &valuation, f.unchecked);
    }
    let ground = ground_from_json(
        f.ground
            .as_ref()
            .ok_or_else(|| Error::Input("model: missing `ground` or `kripke`".into()))?,
    )?;
    let forget = forget_or_default(&ground, f.forget.as_deref())?;
    let lattice = make_lattice(ground, forget)?;
    let se = se_from_json(
        &lattice,
        f.se
            .as_ref()
            .ok_or_else(|| Error::Input("model: missing `se`".into()))?,
    )?;
    let valuation = f
        .valuation
        .iter()
        .map(|(p, d)| Ok((p.clone(), subobject_from_json(&lattice, d)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    if f.unchecked {
        Model::new_unchecked(lattice, se, valuation)
    } else {
        Model::new(lattice, se, valuation)
    }
}

pub fn model_to_json(m: &Model) -> Result<Value> {
    let l = m.lattice();
    let mut valuation = Map::new();
    for (p, d) in m.valuation() {
        valuation.insert(p.clone(), subobject_to_json(l, d)?);
    }
    let mut doc = json!({
        "ground": ground_to_json(l.ground()),
        "forget": l.forget_mode().name(),
        "se": se_to_json(m.se())?,
        "valuation": valuation,
    });
    if !m.is_covered() {
        doc["unchecked"] = Value::Bool(true);
    }
    Ok(doc)
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz rendering of `d` inside its ground. Without a baseline, ground
/// components outside `d` are drawn dotted and grey. With a baseline,
/// components kept from it are solid, removed ones dashed, added ones bold.
pub fn to_dot(lattice: &Lattice, d: &SubStructure, baseline: Option<&SubStructure>) -> Result<String> {
    lattice.check(d)?;
    if let Some(b) = baseline {
        lattice.check(b)?;
    }
    let present = |x: usize| d.bits().contains(x);
    let style = |x: usize| -> Option<&'static str> {
        match baseline {
            None if present(x) => Some("solid"),
            None => Some("dotted, color=grey"),
            Some(b) => match (b.bits().contains(x), present(x)) {
                (true, true) => Some("solid"),
                (true, false) => Some("dashed"),
                (false, true) => Some("bold"),
                (false, false) => None,
            },
        }
    };
    let comps = lattice.components();
    let directed = matches!(lattice.ground(), Ground::Graph(g) if g.is_directed());
    let (header, arrow) = if directed {
        ("digraph", "->")
    } else {
        ("graph", "--")
    };
    let mut out = String::new();
    writeln!(out, "{header} substructure {{").unwrap();
    let data = lattice.data();
    for (i, c) in comps.iter().enumerate() {
        if !matches!(c.kind, ElementKind::Vertex | ElementKind::Element) {
            continue;
        }
        if let Some(s) = style(i) {
            writeln!(out, "  {} [style=\"{}\"];", quote(&c.id), s.replace(", color=grey", "\", color=\"grey")).unwrap();
        }
    }
    let mut clusters = 0usize;
    for (i, c) in comps.iter().enumerate() {
        let Some(s) = style(i) else { continue };
        let s = s.replace(", color=grey", "\", color=\"grey");
        let members: Vec<&str> = data.down[i]
            .ones()
            .filter(|&j| comps[j].kind == ElementKind::Vertex)
            .map(|j| comps[j].id.as_str())
            .collect();
        match c.kind {
            ElementKind::Edge | ElementKind::Face if members.len() == 2 => {
                let (u, v) = if c.kind == ElementKind::Edge {
                    let r = &data.requires[i];
                    (comps[r[0]].id.as_str(), comps[r[1]].id.as_str())
                } else {
                    (members[0], members[1])
                };
                writeln!(
                    out,
                    "  {} {arrow} {} [style=\"{s}\"];",
                    quote(u),
                    quote(v)
                )
                .unwrap();
            }
            ElementKind::Hyperedge | ElementKind::Face => {
                writeln!(out, "  subgraph cluster_{clusters} {{").unwrap();
                writeln!(out, "    label={};", quote(&c.id)).unwrap();
                writeln!(out, "    style=\"{s}\";").unwrap();
                for m in &members {
                    writeln!(out, "    {};", quote(m)).unwrap();
                }
                writeln!(out, "  }}").unwrap();
                clusters += 1;
            }
            _ => {}
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// Ids of the components present in `d`, grouped by kind. Used in reports.
pub fn component_summary(lattice: &Lattice, d: &SubStructure) -> BTreeMap<String, BTreeSet<String>> {
    let mut out: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for i in d.bits().ones() {
        let c = &lattice.components()[i];
        out.entry(c.kind.to_string()).or_default().insert(c.id.clone());
    }
    out
}
