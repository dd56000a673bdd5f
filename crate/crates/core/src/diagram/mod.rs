//! Coxeter–Dynkin diagrams of special quadratic maps and their bipartite
//! adjacency data.

pub mod adjacency;
pub mod shape;

pub use adjacency::{adjacency, adjacency_of_graph, cross_validate, signed_isomorphic, AdjacencyData};
pub use shape::{build_diagram, Arm, Diagram, Shape};
