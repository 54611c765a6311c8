//! Morphology over finite lattices of substructures.
//!
//! A ground object (set, graph, hypergraph or simplicial complex) gives a
//! lattice of its substructures. A structuring element assigns a
//! substructure to each element of the carrier selected by a forget mode;
//! dilation and erosion follow, along with a law harness and a modal logic
//! interpreting `[]` as erosion and `<>` as dilation.

pub mod cli;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod lattice;
pub mod logic;
pub mod morphology;
pub mod structures;
pub mod structuring;

pub use error::{Error, Result};
pub use lattice::{
    Carrier, ElementId, ElementKind, ForgetMode, Lattice, SubStructure,
    DEFAULT_ENUMERATION_BOUND,
};
pub use morphology::{
    check_all_laws, check_law, closing, compare_methods, dilate, dilate_with, erode,
    erode_paper_algorithm, erode_with, opening, Law, LawReport, LawStatus, Method, Sampler,
};
pub use structures::{
    builtin_se, make_lattice, validate_subobject, with_forget_mode, Builtin, Graph, Ground,
    GroundSet, Hypergraph, SimplicialComplex, SubView,
};
pub use structuring::StructuringElement;
