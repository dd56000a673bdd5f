//! The class lattice of orbit points, the direct difference-vector graph,
//! and horoball checks for parabolic isometries.

pub mod graph;
pub mod lattice;
pub mod parabolic;

pub use graph::{build_graph_direct, DirectGraph, GraphVertex, Side, SignedEdge, SignedGraph};
pub use lattice::{build_class_lattice, inner_product, BasisLabel, ClassLattice, LorentzianVector};
pub use parabolic::{
    parabolic_form_check, point_on_sheet, uniqueness_check, within_horoball, ParabolicReport, ParabolicSpec,
    UniquenessReport,
};
