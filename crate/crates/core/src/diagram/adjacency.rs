//! Bipartite adjacency matrices of diagrams and the consistency check
//! against the directly constructed graph.

use num_bigint::BigInt;
use petgraph::algo::is_isomorphic_matching;
use petgraph::graph::UnGraph;
use serde::{Deserialize, Serialize};

use crate::diagram::shape::Diagram;
use crate::exact::matrix::IntegerMatrix;
use crate::picard::graph::{build_graph_direct, Side, SignedGraph};
use crate::picard::lattice::ClassLattice;

/// Signed adjacency in block form [[0, ᵀC], [C, 0]] with the σ-side vertices
/// first (v₀ at index 0), then the α-side vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacencyData {
    pub matrix: IntegerMatrix,
    /// C: rows indexed by α-side vertices, columns by σ-side vertices.
    pub c: IntegerMatrix,
    /// `order[i]` is the graph vertex placed at row i.
    pub order: Vec<usize>,
    pub sigma_count: usize,
    pub alpha_count: usize,
}

/// Adjacency data of any signed bipartite graph, σ-side first.
pub fn adjacency_of_graph(g: &SignedGraph) -> AdjacencyData {
    let mut order: Vec<usize> = Vec::with_capacity(g.len());
    if let Some(v0) = g.v0_index() {
        order.push(v0);
    }
    for side in [Side::Sigma, Side::Alpha] {
        order.extend((0..g.len()).filter(|&v| g.vertices[v].side == side && !g.vertices[v].is_v0));
    }
    let sigma_count = order.iter().filter(|&&v| g.vertices[v].side == Side::Sigma).count();
    let n = order.len();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut matrix = IntegerMatrix::zeros(n, n);
    for e in &g.edges {
        let (i, j) = (pos[e.a], pos[e.b]);
        matrix.set(i, j, matrix.get(i, j) + BigInt::from(e.weight));
        matrix.set(j, i, matrix.get(j, i) + BigInt::from(e.weight));
    }
    let alpha_count = n - sigma_count;
    let mut c = IntegerMatrix::zeros(alpha_count, sigma_count);
    for i in 0..alpha_count {
        for j in 0..sigma_count {
            c.set(i, j, matrix.get(sigma_count + i, j).clone());
        }
    }
    AdjacencyData { matrix, c, order, sigma_count, alpha_count }
}

/// Adjacency data of a classified diagram (arms known from below are built
/// at their bound); `None` for unclassified diagrams.
pub fn adjacency(diagram: &Diagram) -> Option<AdjacencyData> {
    diagram.materialize().map(|g| adjacency_of_graph(&g))
}

impl AdjacencyData {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Every row and column of C has at most three nonzero entries, each ±1.
    pub fn sparsity_ok(&self) -> bool {
        let unit = |x: &BigInt| x.magnitude() <= &1u32.into();
        let rows_ok = (0..self.c.rows()).all(|i| {
            let row = self.c.row(i);
            row.iter().all(unit) && row.iter().filter(|x| x.sign() != num_bigint::Sign::NoSign).count() <= 3
        });
        let cols_ok = (0..self.c.cols()).all(|j| {
            let col: Vec<&BigInt> = (0..self.c.rows()).map(|i| self.c.get(i, j)).collect();
            col.iter().filter(|x| x.sign() != num_bigint::Sign::NoSign).count() <= 3
        });
        rows_ok && cols_ok
    }
}

fn to_petgraph(g: &SignedGraph) -> UnGraph<(bool, Side), i64> {
    let mut pg = UnGraph::new_undirected();
    let nodes: Vec<_> = g.vertices.iter().map(|v| pg.add_node((v.is_v0, v.side))).collect();
    for e in &g.edges {
        pg.add_edge(nodes[e.a], nodes[e.b], e.weight);
    }
    pg
}

/// Signed isomorphism of two graphs, matching v₀ to v₀ and sides to sides.
pub fn signed_isomorphic(a: &SignedGraph, b: &SignedGraph) -> bool {
    a.len() == b.len()
        && a.edges.len() == b.edges.len()
        && is_isomorphic_matching(&to_petgraph(a), &to_petgraph(b), |x, y| x == y, |x, y| x == y)
}

/// True iff the sign-normalized component of v₀ in the directly built graph
/// is isomorphic, with signs, to the diagram.
pub fn cross_validate(diagram: &Diagram, lat: &ClassLattice) -> bool {
    if !diagram.is_exact() {
        return false;
    }
    let (Some(expected), Ok(direct)) = (diagram.materialize(), build_graph_direct(lat)) else {
        return false;
    };
    signed_isomorphic(&expected, &direct.h)
}
